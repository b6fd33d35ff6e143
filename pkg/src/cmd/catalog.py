#!/usr/bin/env python
# -*- encoding=utf8 -*-

import sys

sys.path.append('.')
sys.path.append('..')

import argparse

from src.cmd import EXIT_OK, EXIT_USAGE, WalkArgumentParser, positive_int
from src.service.catalog import CatalogParams, CatalogService
from src.utils.helper import ReportWriter


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--dim", type=positive_int, required=True, help="ambient dimension, 2 to 4")
    parser.add_argument("--delimiter", default=",")
    parser.add_argument("--max-order", type=positive_int, default=None,
                        help="instantiate the infinite families up to this order")
    parser.add_argument("--json", action="store_true")


def run(args) -> int:
    output = CatalogService().table(CatalogParams(dim=args.dim, delimiter=args.delimiter, max_order=args.max_order))
    if not output.ok:
        print(output.message, file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        ReportWriter().write({"rows": output.data["rows"]})
    else:
        sys.stdout.write(output.data["text"])
    return EXIT_OK


def main(argv=None) -> int:
    parser = WalkArgumentParser(description="admissible wall-angle tuples of polyhedral nodal domains")
    add_arguments(parser)
    return run(parser.parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
