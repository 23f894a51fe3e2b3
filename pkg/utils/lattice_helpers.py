# utils/lattice_helpers.py - Exact Integer Linear Algebra
import logging
from math import gcd, isqrt

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMError

from models.errors import (DimMismatchError, NotFullDimError, NotSquareError,
                           ZeroConeError, ZeroVectorError)
from models.lattice import AMBIENT_LATTICE, GENERATED_LATTICE, LATTICE_MODES, LatticeEmbedding

logger = logging.getLogger(__name__)


def dot(u, v):
    """Integer scalar product"""
    return sum(a * b for a, b in zip(u, v))


def primitive_part(v):
    """Divide a nonzero integer vector by the gcd of its entries"""
    g = gcd(*v)
    if g == 0:
        raise ZeroVectorError(f'cannot normalize the zero vector of length {len(v)}')
    return tuple(a // g for a in v)


def extended_gcd(a, b):
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0"""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def extended_gcd_vector(values):
    """Return (g, c) with sum(c_i * values_i) = g = gcd(values)"""
    g = 0
    coeffs = [0] * len(values)
    for i, a in enumerate(values):
        if a == 0:
            continue
        g, s, t = extended_gcd(g, a)
        coeffs = [c * s for c in coeffs]
        coeffs[i] = t
    return g, coeffs


def _column_count(A, ncols):
    if ncols is not None:
        return ncols
    if not A:
        raise DimMismatchError('column count is required for a matrix without rows')
    return len(A[0])


def _check_rectangular(A, ncols):
    for row in A:
        if len(row) != ncols:
            raise DimMismatchError(f'row of length {len(row)} in a matrix with {ncols} columns')


def to_domain_matrix(A, ncols=None, domain=ZZ):
    """Wrap a list of integer rows as a sympy DomainMatrix"""
    ncols = _column_count(A, ncols)
    _check_rectangular(A, ncols)
    return DomainMatrix([[domain(a) for a in row] for row in A], (len(A), ncols), domain)


def rank(A, ncols=None):
    """Rank over the rationals, by fraction-free row reduction over ZZ"""
    if not A:
        return 0
    ncols = _column_count(A, ncols)
    if ncols == 0:
        return 0
    _, _, pivots = to_domain_matrix(A, ncols, ZZ).rref_den(method='FF')
    return len(pivots)


def determinant_abs(A):
    """Absolute value of the determinant of a square integer matrix"""
    n = len(A)
    if any(len(row) != n for row in A):
        raise NotSquareError(f'matrix with {n} rows is not square')
    if n == 0:
        return 1
    # Bareiss elimination over ZZ
    return abs(int(to_domain_matrix(A, n).det()))


def inverse_with_denominator(A):
    """Return (N, den) with A * N = den * I, den = |det A| > 0 and N integral"""
    den = determinant_abs(A)
    n = len(A)
    if den == 0:
        raise NotFullDimError(f'{n} x {n} matrix is singular')
    inverse = to_domain_matrix(A, n, QQ).inv().to_Matrix()
    numerators = tuple(tuple(int(inverse[i, j] * den) for j in range(n)) for i in range(n))
    return numerators, den


def echelon_form(rows, ncols):
    """Integer row echelon form of the first `ncols` columns.

    Uses unimodular row operations only (Euclid on each column), so the pivot
    rows together with the leftover rows span the same lattice as `rows`.
    Returns (pivots, leftover): pivot rows have strictly increasing leading
    columns, positive pivots and entries above each pivot reduced into
    [0, pivot); leftover rows vanish on the first `ncols` columns.
    """
    work = [list(r) for r in rows if any(r)]
    pivots = []
    for col in range(ncols):
        active = [r for r in work if r[col] != 0]
        if not active:
            continue
        work = [r for r in work if r[col] == 0]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            head = active[0]
            survivors = [head]
            for r in active[1:]:
                q = r[col] // head[col]
                r = [a - q * b for a, b in zip(r, head)]
                if r[col] != 0:
                    survivors.append(r)
                elif any(r):
                    work.append(r)
            active = survivors
        pivot = active[0]
        if pivot[col] < 0:
            pivot = [-a for a in pivot]
        for upper in pivots:
            q = upper[col] // pivot[col]
            if q:
                upper[:] = [a - q * b for a, b in zip(upper, pivot)]
        pivots.append(pivot)
    return [tuple(p) for p in pivots], [tuple(r) for r in work if any(r)]


def lll_reduce(basis):
    """LLL-reduce a lattice basis given as rows (kept unchanged when sympy lacks LLL)"""
    if len(basis) <= 1:
        return [tuple(b) for b in basis]
    try:
        reduced = to_domain_matrix(basis).lll()
    except (AttributeError, DMError) as e:
        logger.debug(f'LLL reduction skipped: {e}')
        return [tuple(b) for b in basis]
    return [tuple(int(a) for a in row) for row in reduced.to_Matrix().tolist()]


def integer_kernel_basis(A, ncols=None):
    """Lattice basis of {x in Z^n : A x = 0}.

    The columns of A are augmented by the unit matrix and brought to echelon
    form; the rows whose A-part vanishes then form a basis of the full integer
    kernel (the transformation is unimodular, so nothing of finite index is lost).
    """
    ncols = _column_count(A, ncols)
    _check_rectangular(A, ncols)
    m = len(A)
    augmented = [[A[i][j] for i in range(m)] + [1 if k == j else 0 for k in range(ncols)]
                 for j in range(ncols)]
    _, leftover = echelon_form(augmented, m)
    basis = [tuple(r[m:]) for r in leftover]
    return lll_reduce(basis)


def lattice_basis(rows, ncols):
    """Basis (in Hermite echelon form) of the lattice generated by `rows`"""
    pivots, _ = echelon_form(rows, ncols)
    return pivots


def saturated_basis(rows, ncols):
    """Basis of Z^n intersected with the rational span of `rows`"""
    annihilator = integer_kernel_basis(rows, ncols)
    if not annihilator:
        return [tuple(1 if i == j else 0 for i in range(ncols)) for j in range(ncols)]
    return integer_kernel_basis(annihilator, ncols)


def _gram_determinant(basis):
    gram = [[dot(b, c) for c in basis] for b in basis]
    return determinant_abs(gram)


def build_embedding(basis, ambient_dim, lattice_mode=AMBIENT_LATTICE, lattice_index=1):
    """Embedding with backward map `basis` and a rational left inverse"""
    basis = tuple(tuple(b) for b in basis)
    r = len(basis)
    gram = [[dot(b, c) for c in basis] for b in basis]
    gram_inverse, gram_den = inverse_with_denominator(gram)
    # forward = B^T (B B^T)^-1, kept as integer numerator over a common denominator
    forward = [[sum(basis[k][i] * gram_inverse[k][j] for k in range(r)) for j in range(r)]
               for i in range(ambient_dim)]
    common = gcd(gram_den, *(a for row in forward for a in row))
    forward = tuple(tuple(a // common for a in row) for row in forward)
    return LatticeEmbedding(forward=forward, denominator=gram_den // common, backward=basis,
                            rank=r, ambient_dim=ambient_dim, lattice_mode=lattice_mode,
                            lattice_index=lattice_index)


def identity_embedding(dim):
    unit = tuple(tuple(1 if i == j else 0 for i in range(dim)) for j in range(dim))
    return LatticeEmbedding(forward=unit, denominator=1, backward=unit, rank=dim,
                            ambient_dim=dim, lattice_mode=AMBIENT_LATTICE, lattice_index=1)


def to_full_dimensional(generators, lattice_mode=AMBIENT_LATTICE):
    """Pass to coordinates in which the generators span a full-dimensional cone.

    In ambient_lattice mode the working lattice is Z^d intersected with the
    linear span of the generators; in generated_lattice mode it is the lattice
    generated by the generators themselves.
    Returns (embedding, transformed generators).
    """
    if lattice_mode not in LATTICE_MODES:
        raise ValueError(f'unknown lattice mode {lattice_mode!r}')
    gens = [tuple(g) for g in generators]
    if not gens:
        raise ZeroConeError('no generators given')
    d = len(gens[0])
    _check_rectangular(gens, d)
    nonzero = [g for g in gens if any(g)]
    if not nonzero:
        raise ZeroConeError('all generators are zero')

    saturation = saturated_basis(nonzero, d)
    if lattice_mode == GENERATED_LATTICE:
        basis = lattice_basis(nonzero, d)
        index = isqrt(_gram_determinant(basis) // _gram_determinant(saturation))
        embedding = build_embedding(basis, d, GENERATED_LATTICE, index)
    elif len(saturation) == d:
        embedding = identity_embedding(d)
    else:
        embedding = build_embedding(saturation, d)

    transformed = [embedding.to_working(g) for g in nonzero]
    logger.debug(f'Embedding of rank {embedding.rank} in dimension {d} ({lattice_mode}, index {embedding.lattice_index})')
    return embedding, transformed
