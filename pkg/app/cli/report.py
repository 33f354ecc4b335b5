"""Report command module."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from app.cli.context import EXIT_OK, CliParser, CommandContext, positive_int
from app.services.report import OrderStatus, coverage_report


def build_parser(prog: str) -> argparse.ArgumentParser:
    p = CliParser(prog=prog, description="Coverage of orders 4n, n odd, against the published lists")
    p.add_argument("--max-n", type=positive_int, default=200, help="Cover odd n below this bound")
    p.add_argument("--budget", type=positive_int, help="Node budget per ingredient search")
    return p


def run(ctx: CommandContext, ns: argparse.Namespace) -> int:
    report = coverage_report(ns.max_n, ctx.budget)
    for row in report.rows:
        route = row.route or "-"
        line = f"n={row.n:<4} order={row.order:<5} {row.status.value:<18} {route:<12} published={row.published}"
        if ctx.verbose and row.note:
            line += f"  ({row.note})"
        print(line)

    print(
        f"\n{report.count(OrderStatus.constructed)} constructed, "
        f"{report.count(OrderStatus.catalog_dependent)} catalog-dependent, "
        f"{report.count(OrderStatus.unresolved)} unresolved"
    )
    for row in report.discrepancies:
        print(f"!!! DISCREPANCY n={row.n}: constructed via {row.route}, published as unresolved")
    return EXIT_OK


@dataclass
class _Command:
    name: str = "report"
    help: str = "Report constructible orders against the published lists"
    build_parser = staticmethod(build_parser)
    run = staticmethod(run)


COMMAND = _Command()
