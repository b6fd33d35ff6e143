#!/usr/bin/env python
# -*- encoding=utf8 -*-

import sys

sys.path.append('.')
sys.path.append('..')

import argparse

from src.cmd import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, WalkArgumentParser, nonnegative_int, parse_point, positive_int
from src.service.counting import CountingService, CountParams
from src.utils.config import cfg
from src.utils.helper import ReportWriter
from src.walks.errors import ModelError


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("model", help="model file (YAML or JSON)")
    parser.add_argument("--from", dest="start", type=parse_point, required=True, help="start point, e.g. 0,0")
    parser.add_argument("--to", dest="end", type=parse_point, required=True, help="end point, e.g. 0,0")
    parser.add_argument("--n", type=nonnegative_int, required=True, help="largest walk length")
    parser.add_argument("--fit", action="store_true", help="fit rho and alpha and print a JSON document")
    parser.add_argument("--unweighted", action="store_true", help="count walks instead of weighting them")
    parser.add_argument("--float", action="store_true", help="use log-scaled float layers")
    parser.add_argument("--delimiter", default=",")
    parser.add_argument("--json", action="store_true", help="print the JSON document instead of the table")
    parser.add_argument("--pretty", action="store_true")
    parser.add_argument("--threads", type=positive_int, default=cfg.threads)


def run(args) -> int:
    try:
        service = CountingService.from_file(args.model)
    except (ModelError, OSError) as e:
        print(f"{args.model}: {e}", file=sys.stderr)
        return EXIT_USAGE
    d = service.model.d
    for name, point in (("--from", args.start), ("--to", args.end)):
        if len(point) != d:
            print(f"{name} has {len(point)} coordinates, the model has dimension {d}", file=sys.stderr)
            return EXIT_USAGE

    params = CountParams(
        model_path=args.model,
        start=args.start,
        end=args.end,
        n_max=args.n,
        weighted=not args.unweighted,
        exact=not args.float,
        fit=args.fit,
        delimiter=args.delimiter,
        threads=args.threads,
    )
    output = service.count(params)
    if not output.ok:
        print(output.message, file=sys.stderr)
        return EXIT_FAILURE
    if args.fit or args.json:
        ReportWriter(pretty=args.pretty).write(output.data)
    else:
        sys.stdout.write(output.data["text"])
    return EXIT_OK


def main(argv=None) -> int:
    parser = WalkArgumentParser(description="count excursions of a weighted step set in the orthant")
    add_arguments(parser)
    return run(parser.parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
