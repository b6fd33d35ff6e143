#!/usr/bin/env python
# -*- encoding=utf8 -*-
import argparse
import sys
from typing import List

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2


class WalkArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that exits with EXIT_USAGE on bad arguments."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_point(text: str) -> List[int]:
    """Lattice point given as comma separated integers, inside the orthant."""
    try:
        point = [int(c) for c in text.split(",") if c.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid lattice point {text!r}, expected integers like 0,0")
    if not point:
        raise argparse.ArgumentTypeError("empty lattice point")
    if any(c < 0 for c in point):
        raise argparse.ArgumentTypeError(f"point {text} is outside the orthant")
    return point


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value
