# views/solve_routes.py - Command Line Handlers
import logging
import os

from models.errors import InputParseError, MathError
from models.report import SolveOptions
from utils.input_processor import read_input
from utils.problem_runner import run
from utils.report_exporter import emit

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_MATH = 2
EXIT_IO = 3


def default_prefix(input_path):
    """Input path without its extension"""
    return os.path.splitext(input_path)[0]


def summarize(report):
    """One-paragraph summary of a report for stdout"""
    parts = [
        f'{report.input_mode} input, {report.algorithm} algorithm:',
        f'dimension {report.dim} (ambient {report.ambient_dim}),',
        f'{report.num_hilbert_basis} Hilbert basis elements,',
        f'{len(report.extreme_rays)} extreme rays,',
        f'{report.num_support_hyperplanes} support hyperplanes',
    ]
    if not report.pointed:
        parts.append(f'(not pointed, unit group of rank {len(report.unit_group_basis)})')
    if report.total_multiplicity is not None:
        parts.append(f'| triangulation of {report.triangulation_size} cells, '
                     f'multiplicity {report.total_multiplicity}')
    if report.h_vector is not None:
        parts.append(f'| h-vector {" ".join(str(h) for h in report.h_vector)}')
    for warning in report.warnings:
        parts.append(f'| warning: {warning}')
    return ' '.join(parts)


def solve_file(input_path, options, lattice_mode, json_only=False, xlsx=False):
    """Parse, solve and emit one problem file; returns (exit code, report or None)"""
    prefix = options.output_prefix or default_prefix(input_path)
    try:
        problem = read_input(input_path, options=options, lattice_mode=lattice_mode)
        report = run(problem)
        emit(report, prefix, json_only=json_only, xlsx=xlsx)
    except InputParseError as e:
        logger.error(f'Cannot parse {input_path}: {e.message}')
        return EXIT_PARSE, None
    except MathError as e:
        logger.error(f'{e.code}: {e.message}')
        return EXIT_MATH, None
    except OSError as e:
        logger.error(f'I/O error: {e}')
        return EXIT_IO, None
    return EXIT_OK, report


def handle_args(args):
    """Entry point for parsed command line arguments"""
    options = SolveOptions(
        algorithm=args.algorithm,
        compute_hvector=args.hvector,
        output_prefix=args.output,
        order=args.order,
    )
    code, report = solve_file(args.input, options, args.lattice, json_only=args.json_only, xlsx=args.xlsx)
    if report is not None:
        print(summarize(report))
    return code
