"""Construct command module."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from app.cli.context import EXIT_OK, EXIT_VERIFY_FAILED, CliParser, CommandContext, positive_int
from app.services.catalog import serialize
from app.services.matrix_core import check_properties
from app.services.routes import METHODS, construct
from app.utils.matrix_text import matrix_to_text


def build_parser(prog: str) -> argparse.ArgumentParser:
    p = CliParser(prog=prog, description="Build a symmetric propus-Hadamard matrix of a given order")
    p.add_argument("--order", type=positive_int, required=True, help="Matrix order (a multiple of 4)")
    p.add_argument("--method", choices=("auto",) + METHODS, default="auto")
    p.add_argument("--out", help="Write to this file instead of stdout")
    p.add_argument(
        "--format", choices=("matrix", "catalog"), default="matrix",
        help="Full matrix rows, or catalog lines of the ingredients used",
    )
    p.add_argument("--budget", type=positive_int, help="Node budget for any ingredient search")
    return p


def run(ctx: CommandContext, ns: argparse.Namespace) -> int:
    result = construct(ns.order, ns.method, ctx.budget)
    props = check_properties(result.matrix)
    if not (props.is_hadamard and props.is_symmetric):
        print(f"[verify] order {ns.order} via {result.method} failed verification", file=sys.stderr)
        return EXIT_VERIFY_FAILED

    if ns.format == "catalog":
        lines = [f"# order {result.order} via {result.method}"]
        lines += [serialize(e) for e in result.ingredients]
        text = "\n".join(lines) + "\n"
    else:
        comments = [f"symmetric Hadamard matrix of order {result.order}", f"method {result.method}"]
        comments += [f"ingredient {serialize(e)}" for e in result.ingredients]
        text = matrix_to_text(result.matrix, comments)

    if ns.out:
        with open(ns.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)

    if ctx.verbose:
        print(f"[debug] order {result.order} via {result.method}: HH^T = nI, H = H^T", file=sys.stderr)
    return EXIT_OK


@dataclass
class _Command:
    name: str = "construct"
    help: str = "Build a symmetric Hadamard matrix by route"
    build_parser = staticmethod(build_parser)
    run = staticmethod(run)


COMMAND = _Command()
