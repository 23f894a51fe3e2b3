# utils/input_processor.py - Problem File Parsing and Matrix Formatting
import logging
import re

from models.errors import InputParseError
from models.lattice import AMBIENT_LATTICE, GENERATED_LATTICE, LATTICE_MODES
from models.report import GENERATORS, INPUT_MODES, ProblemInput, SolveOptions

logger = logging.getLogger(__name__)

_INTEGER = re.compile(r'[+-]?\d+\Z')


def _content_lines(text):
    """(line number, tokens) for every line that is not blank after stripping comments"""
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if line:
            yield number, line.split()


def _parse_int(token, number, what):
    if not _INTEGER.match(token):
        raise InputParseError(f'{what}: {token!r} is not an integer', number)
    return int(token)


def _parse_count(lines, what):
    try:
        number, tokens = next(lines)
    except StopIteration:
        raise InputParseError(f'missing {what}') from None
    if len(tokens) != 1:
        raise InputParseError(f'{what} must be a single integer, got {len(tokens)} tokens', number)
    value = _parse_int(tokens[0], number, what)
    if value <= 0:
        raise InputParseError(f'{what} must be positive, got {value}', number)
    return value


def parse_input(text, options=None, lattice_mode=AMBIENT_LATTICE):
    """Parse a problem file: row count, column count, rows, mode keyword.

    `#` starts a comment and blank lines are ignored. Hyperplanes and
    equations input always use the ambient lattice.
    """
    lines = _content_lines(text)
    m = _parse_count(lines, 'row count')
    d = _parse_count(lines, 'column count')

    matrix = []
    for row in range(m):
        try:
            number, tokens = next(lines)
        except StopIteration:
            raise InputParseError(f'expected {m} rows, found {row}') from None
        if len(tokens) != d:
            raise InputParseError(f'row {row + 1} has {len(tokens)} entries, expected {d}', number)
        matrix.append(tuple(_parse_int(t, number, f'row {row + 1}') for t in tokens))

    try:
        number, tokens = next(lines)
    except StopIteration:
        raise InputParseError('missing mode keyword') from None
    if len(tokens) != 1 or tokens[0] not in INPUT_MODES:
        raise InputParseError(f'unknown mode {" ".join(tokens)!r}, expected one of {", ".join(INPUT_MODES)}',
                              number)
    mode = tokens[0]

    extra = next(lines, None)
    if extra is not None:
        raise InputParseError('unexpected content after the mode keyword', extra[0])

    if lattice_mode not in LATTICE_MODES:
        raise ValueError(f'unknown lattice mode {lattice_mode!r}')
    if mode != GENERATORS and lattice_mode == GENERATED_LATTICE:
        logger.warning(f'{mode} input always uses the ambient lattice')
        lattice_mode = AMBIENT_LATTICE

    logger.debug(f'Parsed {m}x{d} matrix in {mode} mode')
    return ProblemInput(mode=mode, matrix=matrix, lattice_mode=lattice_mode,
                        options=options or SolveOptions())


def read_input(path, options=None, lattice_mode=AMBIENT_LATTICE):
    with open(path, encoding='utf-8') as handle:
        text = handle.read()
    return parse_input(text, options=options, lattice_mode=lattice_mode)


def format_matrix(rows, dim, mode=None):
    """Matrix in the input grammar; rows sorted lexicographically"""
    rows = sorted(tuple(r) for r in rows)
    lines = [str(len(rows)), str(dim)]
    lines.extend(' '.join(str(a) for a in row) for row in rows)
    if mode is not None:
        lines.append(mode)
    return '\n'.join(lines) + '\n'
