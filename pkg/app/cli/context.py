"""Shared CLI plumbing: run context, exit codes and a parser that never exits."""
from __future__ import annotations

import argparse
from dataclasses import dataclass
from typing import Optional

EXIT_OK = 0
EXIT_NOT_FOUND = 1
EXIT_VERIFY_FAILED = 2
EXIT_USAGE = 3


class UsageError(Exception):
    pass


class CliParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class CommandContext:
    command: str
    verbose: bool = False
    budget: Optional[int] = None


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value
