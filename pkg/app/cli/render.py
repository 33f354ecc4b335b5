"""Render command module."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from app.cli.context import EXIT_OK, CliParser, CommandContext
from app.utils.matrix_text import parse_matrix_text, sniff_kind
from app.utils.pgm import render_image


def build_parser(prog: str) -> argparse.ArgumentParser:
    p = CliParser(prog=prog, description="Render a matrix file as a PGM image")
    p.add_argument("--file", required=True, help="Full matrix text file")
    p.add_argument("--out", required=True, help="Output .pgm path")
    return p


def run(ctx: CommandContext, ns: argparse.Namespace) -> int:
    text = Path(ns.file).read_text(encoding="utf-8")
    if sniff_kind(text) == "catalog":
        raise ValueError(f"{ns.file} is a catalog file; render needs a full matrix (construct --out)")
    out = render_image(parse_matrix_text(text), ns.out)
    if ctx.verbose:
        print(f"[debug] wrote {out}")
    return EXIT_OK


@dataclass
class _Command:
    name: str = "render"
    help: str = "Render a matrix as a PGM image"
    build_parser = staticmethod(build_parser)
    run = staticmethod(run)


COMMAND = _Command()
