"""Search command module."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from app.cli.context import EXIT_NOT_FOUND, EXIT_OK, CliParser, CommandContext, positive_int
from app.models.schemas import SearchSpec
from app.services.catalog import entry_from_rows, serialize
from app.services.search import search_rows


def build_parser(prog: str) -> argparse.ArgumentParser:
    p = CliParser(prog=prog, description="Exhaustive first-row search; prints catalog lines")
    p.add_argument("--kind", choices=("propus", "turyn", "conference", "doptimal"), required=True)
    p.add_argument("--n", type=positive_int, required=True, help="Block order")
    p.add_argument("--limit", type=positive_int, help="Stop after this many results")
    p.add_argument("--budget", type=positive_int, help="Refuse searches needing more nodes")
    p.add_argument("--canonical", action="store_true", help="One representative per equivalence orbit")
    return p


def run(ctx: CommandContext, ns: argparse.Namespace) -> int:
    spec = SearchSpec(
        kind=ns.kind, n=ns.n, limit=ns.limit, budget=ctx.budget, canonical_only=ns.canonical,
    )
    found = search_rows(spec)
    for rows in found:
        print(serialize(entry_from_rows(ns.kind, rows, "search")))
    if ctx.verbose:
        print(f"[debug] {len(found)} result(s)")
    return EXIT_OK if found else EXIT_NOT_FOUND


@dataclass
class _Command:
    name: str = "search"
    help: str = "Search first rows of propus triples and circulant pairs"
    build_parser = staticmethod(build_parser)
    run = staticmethod(run)


COMMAND = _Command()
