"""
propus command line.

    python -m app.cli [-v] <command> [options]

Exit codes: 0 success, 1 nothing found, 2 verification failed, 3 usage error.
"""
from __future__ import annotations

import sys
from typing import List, Optional

from app.cli.context import (
    EXIT_NOT_FOUND,
    EXIT_USAGE,
    EXIT_VERIFY_FAILED,
    CommandContext,
    UsageError,
)
from app.core.errors import (
    CatalogFormatError,
    CatalogVerificationError,
    ConditionsFailed,
    NotHadamard,
    PropusError,
)
from app.core.logger import set_level


def _commands():
    from app.cli import construct, render, report, search, verify
    return {c.COMMAND.name: c.COMMAND for c in (construct, search, verify, render, report)}


def _usage(commands) -> str:
    lines = ["usage: propus [-v] <command> [options]", "", "commands:"]
    lines += [f"  {name:<10} {cmd.help}" for name, cmd in commands.items()]
    return "\n".join(lines)


def main(argv: Optional[List[str]] = None) -> int:
    args = list(sys.argv[1:] if argv is None else argv)
    commands = _commands()

    verbose = False
    while args and args[0] in ("-v", "--verbose"):
        verbose = True
        args.pop(0)
    if args and args[0] in ("-h", "--help"):
        print(_usage(commands))
        return 0
    if not args or args[0] not in commands:
        print(_usage(commands), file=sys.stderr)
        if args:
            print(f"\nunknown command: {args[0]}", file=sys.stderr)
        return EXIT_USAGE

    cmd = commands[args[0]]
    try:
        ns = cmd.build_parser(f"propus {cmd.name}").parse_args(args[1:])
    except UsageError as e:
        print(f"[usage] {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return int(e.code or 0)

    if verbose:
        set_level("DEBUG")
    ctx = CommandContext(command=cmd.name, verbose=verbose, budget=getattr(ns, "budget", None))

    try:
        return cmd.run(ctx, ns)
    except (NotHadamard, ConditionsFailed, CatalogVerificationError, CatalogFormatError) as e:
        print(f"[verify] {e}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except PropusError as e:
        print(f"[not found] {e}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except (OSError, ValueError) as e:
        print(f"[usage] {e}", file=sys.stderr)
        return EXIT_USAGE
