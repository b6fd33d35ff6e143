#!/usr/bin/env python
# -*- encoding=utf8 -*-
import os
import sys

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.cmd import WalkArgumentParser, analyze, catalog, count
from src.utils import config

COMMANDS = {
    "analyze": (analyze, "critical point, groups G and H, nodal classification"),
    "count": (count, "exact excursion counts in the orthant"),
    "catalog": (catalog, "admissible wall-angle tuples for d = 2, 3, 4"),
}


def main(argv=None) -> int:
    parser = WalkArgumentParser(prog="orthant-walks", description="analysis of walks confined to the orthant")
    parser.add_argument("--version", action="version", version=f"%(prog)s {config.tool_version}")
    subparsers = parser.add_subparsers(dest="command", parser_class=WalkArgumentParser)
    subparsers.required = True
    for name, (module, help_text) in COMMANDS.items():
        module.add_arguments(subparsers.add_parser(name, help=help_text))
    args = parser.parse_args(argv)
    module, _ = COMMANDS[args.command]
    return module.run(args)


if __name__ == "__main__":
    sys.exit(main())
