#!/usr/bin/env python
# -*- encoding=utf8 -*-

import sys

sys.path.append('.')
sys.path.append('..')

import argparse
import traceback

from src.cmd import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, WalkArgumentParser, nonnegative_int, positive_int
from src.logger import logger
from src.service.analysis import AnalysisParams, AnalysisService
from src.utils import config
from src.utils.config import cfg
from src.utils.helper import ReportWriter
from src.walks.errors import ModelError


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("model", help="model file (YAML or JSON)")
    parser.add_argument("--out", default=None, help="write the report here instead of standard output")
    parser.add_argument("--pretty", action="store_true", help="indent the JSON report")
    parser.add_argument("--seed", type=int, default=cfg.seed)
    parser.add_argument("--threads", type=positive_int, default=cfg.threads)
    parser.add_argument("--group-order", type=positive_int, default=None, help="known order of the group G")
    parser.add_argument("--normal-order", type=positive_int, default=2,
                        help="order of a minimal nontrivial normal subgroup of G (at least 2)")
    parser.add_argument("--word-bfs", action="store_true", help="enumerate G by word length")
    parser.add_argument("--no-fixed-point-scan", action="store_true")
    parser.add_argument("--no-polynomial", action="store_true", help="skip the P0 harmonicity check")
    parser.add_argument("--verify", action="store_true", help="count excursions and compare with the prediction")
    parser.add_argument("--n", type=nonnegative_int, default=config.default_n_max, help="walk length for --verify")


def run(args) -> int:
    try:
        service = AnalysisService.from_file(args.model)
    except (ModelError, OSError) as e:
        print(f"{args.model}: {e}", file=sys.stderr)
        return EXIT_USAGE

    params = AnalysisParams(
        model_path=args.model,
        seed=args.seed,
        threads=args.threads,
        group_order=args.group_order,
        normal_order=args.normal_order,
        word_bfs=args.word_bfs,
        fixed_point_scan=not args.no_fixed_point_scan,
        with_polynomial=not args.no_polynomial,
        verify=args.verify,
        n_max=args.n,
    )
    try:
        output = service.analyze(params)
        ReportWriter(pretty=args.pretty).write(output.data, args.out)
    except Exception as e:
        logger.error(traceback.format_exc())
        print(f"analysis failed: {e}", file=sys.stderr)
        return EXIT_FAILURE
    if not output.ok:
        print(output.message, file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def main(argv=None) -> int:
    parser = WalkArgumentParser(description="analyze a weighted step set")
    add_arguments(parser)
    return run(parser.parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
