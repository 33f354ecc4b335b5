"""Verify command module."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from app.cli.context import EXIT_OK, EXIT_VERIFY_FAILED, CliParser, CommandContext
from app.services.catalog import load_text, serialize
from app.services.matrix_core import check_properties
from app.utils.matrix_text import parse_matrix_text, sniff_kind


def build_parser(prog: str) -> argparse.ArgumentParser:
    p = CliParser(prog=prog, description="Re-verify a catalog file or a full matrix file")
    p.add_argument("--file", required=True, help="Catalog or matrix text file")
    return p


def run(ctx: CommandContext, ns: argparse.Namespace) -> int:
    text = Path(ns.file).read_text(encoding="utf-8")

    if sniff_kind(text) == "catalog":
        catalog = load_text(text, source=ns.file)
        for entry in catalog:
            print(f"OK       {serialize(entry)}")
        for _, reason in catalog.rejected:
            print(f"REJECTED {reason}")
        print(f"{len(catalog)} accepted, {len(catalog.rejected)} rejected")
        return EXIT_VERIFY_FAILED if catalog.rejected else EXIT_OK

    report = check_properties(parse_matrix_text(text))
    for name, value in report.model_dump().items():
        print(f"{name:<22} {value}")
    return EXIT_OK if report.is_hadamard or report.is_conference else EXIT_VERIFY_FAILED


@dataclass
class _Command:
    name: str = "verify"
    help: str = "Verify a catalog or matrix file"
    build_parser = staticmethod(build_parser)
    run = staticmethod(run)


COMMAND = _Command()
