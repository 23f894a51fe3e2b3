# ============================================================================
# app.py - hilbasis command line entry point
# ============================================================================

import argparse
import logging
import sys

from config import Config
from models.lattice import AMBIENT_LATTICE, GENERATED_LATTICE
from models.report import ALGORITHMS, PRIMAL
from utils.dual_logic import ORDER_STRATEGIES
from views.solve_routes import handle_args

LATTICES = {'ambient': AMBIENT_LATTICE, 'generated': GENERATED_LATTICE}


def build_parser():
    """Argument parser for `python app.py INPUT ...`"""
    parser = argparse.ArgumentParser(
        prog='hilbasis',
        description='Hilbert bases, support hyperplanes and h-vectors of rational cones')
    parser.add_argument('input', help='problem file (row count, column count, rows, mode keyword)')
    parser.add_argument('--algorithm', choices=ALGORITHMS, default=PRIMAL)
    parser.add_argument('--hvector', action='store_true', help='compute h-vector and Hilbert polynomial')
    parser.add_argument('--lattice', choices=sorted(LATTICES), default='ambient',
                        help='lattice of generators input')
    parser.add_argument('--output', metavar='PREFIX', help='output prefix (default: input path without extension)')
    parser.add_argument('--json-only', action='store_true', help='write only PREFIX.json')
    parser.add_argument('--xlsx', action='store_true', help='also write PREFIX.xlsx')
    parser.add_argument('--order', choices=ORDER_STRATEGIES, default=None,
                        help='hyperplane order of the dual algorithm')
    parser.add_argument('--verbose', action='store_true', help='log progress')
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    args.lattice = LATTICES[args.lattice]
    level = logging.INFO if args.verbose else getattr(logging, Config.LOG_LEVEL, logging.WARNING)
    logging.basicConfig(level=level, format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    return handle_args(args)


# ============================================================================
# RUN APPLICATION
# ============================================================================

if __name__ == '__main__':
    sys.exit(main())
