# utils/shelling_logic.py - Line Shellings, h-Vectors and Hilbert Polynomials
import logging
from fractions import Fraction
from functools import cmp_to_key
from math import comb, factorial

from sympy import Mul, Poly, Rational, Symbol, expand

from config import Config
from models.cone import FacetRecord, SupportForm, bit_indices, indices_mask
from models.errors import MathError, NotFullDimError, NotHomogeneousError, NotInteriorError
from models.triangulation import (SHELLING, BottomFacet, HilbertPolynomial, HVector, LiftedCone,
                                  ShelledCell, Triangulation)
from utils.cone_helpers import extreme_ray_vectors
from utils.fourier_motzkin import ConeHull
from utils.lattice_helpers import (dot, extended_gcd_vector, integer_kernel_basis, primitive_part,
                                   rank)
from utils.primal_logic import enumerate_par_points, make_cell

logger = logging.getLogger(__name__)

FORMULAS = ('first', 'second')


def find_grading(generators):
    """Integral form with value 1 on every generator, or None if there is none"""
    gens = [tuple(g) for g in generators]
    if not gens:
        return None
    d = len(gens[0])
    # (gamma, t) with gamma(x_i) = t for all i; the t-values form an ideal of Z
    kernel = integer_kernel_basis([g + (-1,) for g in gens], d + 1)
    g, coeffs = extended_gcd_vector([k[-1] for k in kernel])
    if g != 1:
        return None
    return tuple(sum(c * k[i] for c, k in zip(coeffs, kernel)) for i in range(d))


def _independent_prefix(vectors, dim):
    chosen = []
    for i, v in enumerate(vectors):
        if rank([vectors[j] for j in chosen] + [v], dim) > len(chosen):
            chosen.append(i)
            if len(chosen) == dim:
                break
    return chosen


def lift_and_hull(generators, weights=None, retries=None, threshold=None):
    """Lift generators to (v_i, w_i) and compute the facets of the lifted cone.

    Weights start at `weights` (default all 1). Before a lifted generator is
    inserted its weight is raised by 1, 2, 4, ... while it lies on the
    hyperplane of a non-vertical facet, so bottom and top facets stay simplicial.
    """
    gens = [tuple(g) for g in generators]
    n = len(gens)
    d = len(gens[0])
    weights = list(weights) if weights is not None else [1] * n
    if len(weights) != n or any(w <= 0 for w in weights):
        raise ValueError(f'need {n} positive weights, got {weights}')
    retries = retries if retries is not None else Config.WEIGHT_RETRIES
    lifted = [g + (w,) for g, w in zip(gens, weights)]

    base = _independent_prefix(gens, d)
    if len(base) < d:
        raise NotFullDimError(f'generators span a cone of dimension {len(base)} < {d}')
    rest = [i for i in range(n) if i not in base]

    if not rest:
        form = integer_kernel_basis([lifted[i] for i in base], d + 1)[0]
        if form[-1] < 0:
            form = tuple(-a for a in form)
        facet = FacetRecord(SupportForm(primitive_part(form)), indices_mask(base), True)
        return LiftedCone(lifted, weights, [facet])

    def set_weight(i, w):
        weights[i] = w
        lifted[i] = gens[i] + (w,)

    apex = None
    for i in rest:
        for _ in range(retries):
            if rank([lifted[j] for j in base] + [lifted[i]], d + 1) == d + 1:
                apex = i
                break
            set_weight(i, weights[i] + 1)
        if apex is not None:
            break
    if apex is None:
        raise MathError('lifted generators do not span a full-dimensional cone')

    hull = ConeHull(d + 1, threshold=threshold)
    hull.generators = lifted
    hull.start(base + [apex])
    bumps = 0
    for i in rest:
        if i == apex:
            continue
        step = 1
        for _ in range(retries):
            if not any(f.form.coeffs[-1] != 0 and f.value(lifted[i]) == 0 for f in hull.facets):
                break
            set_weight(i, weights[i] + step)
            step *= 2
            bumps += 1
        else:
            logger.warning(f'Weight of generator {i} still degenerate after {retries} bumps')
        hull.insert_generator(i)
    logger.debug(f'Lifted hull: {len(hull.facets)} facets, {bumps} weight bumps, weights {weights}')
    return LiftedCone(lifted, weights, hull.facets)


def bottom_facets(lifted_cone):
    """Facets visible from below (positive last coordinate)"""
    d = lifted_cone.dim - 1
    bottom = []
    for facet in lifted_cone.facets:
        if facet.form.coeffs[-1] <= 0:
            continue
        indices = tuple(bit_indices(facet.incidence))
        if len(indices) != d:
            raise MathError(f'bottom facet {facet.form.coeffs} has {len(indices)} generators, expected {d}')
        bottom.append(BottomFacet(facet.form, indices))
    return bottom


def _compare_transitions(x):
    def compare(first, second):
        c_first, c_second = first.height_coeff, second.height_coeff
        a = dot(first.support_form.coeffs, x) * c_second
        b = dot(second.support_form.coeffs, x) * c_first
        if a != b:
            return -1 if a < b else 1
        # symbolic perturbation of x: lexicographic order of the normed forms
        for s, t in zip(first.support_form.coeffs, second.support_form.coeffs):
            a, b = s * c_second, t * c_first
            if a != b:
                return -1 if a < b else 1
        return 0
    return compare


def shelling_order(bottom, x):
    """Order bottom facets by ascending transition time of the line x - t (0, ..., 0, 1)"""
    if len(bottom) <= 1:
        return list(bottom)
    for facet in bottom:
        if dot(facet.support_form.coeffs, x) <= 0:
            raise NotInteriorError(f'{tuple(x)} is not interior for facet {facet.support_form.coeffs}')
    return sorted(bottom, key=cmp_to_key(_compare_transitions(x)))


def compute_W_sets(cells):
    """Attach to each cell the positions of vertices opposite to already seen facets"""
    seen = set()
    shelled = []
    for cell in cells:
        mask = cell.mask
        W = set()
        for pos, index in enumerate(cell.generator_indices):
            key = mask & ~(1 << index)
            if key in seen:
                seen.discard(key)
                W.add(pos)
            else:
                seen.add(key)
        shelled.append(ShelledCell(cell, frozenset(W)))
    return shelled


def h_vector(shelled_cells, grading, formula='second'):
    """Count each parallelotope point (0 included) of every shelled cell in its degree"""
    if grading is None:
        raise NotHomogeneousError('no grading with value 1 on all generators')
    if formula not in FORMULAS:
        raise ValueError(f'unknown formula {formula!r}')
    if not shelled_cells:
        raise MathError('cannot compute an h-vector without cells')
    d = len(shelled_cells[0].cell.generators)
    counts = [0] * d
    for shelled in shelled_cells:
        if not shelled.par_points:
            shelled.par_points = enumerate_par_points(shelled.cell, grading)
        for point in shelled.par_points:
            degree = point.degree if point.degree is not None else dot(grading, point.vector)
            if formula == 'second':
                k = len(shelled.W - point.barycentric_support) + degree
            else:
                k = len(shelled.W | point.barycentric_support) - degree
            if k >= len(counts):
                counts.extend([0] * (k + 1 - len(counts)))
            counts[k] += 1
    while len(counts) > d and counts[-1] == 0:
        counts.pop()
    return HVector(tuple(counts), d, tuple(grading))


def hilbert_polynomial(h):
    """Polynomial P with P(k) = sum_i h_i * C(k - i + d - 1, d - 1)"""
    d = h.dim
    k = Symbol('k')
    expr = 0
    for i, h_i in enumerate(h.coefficients):
        if h_i:
            expr += Rational(h_i, factorial(d - 1)) * Mul(*[k - i + j for j in range(1, d)])
    coeffs = Poly(expand(expr), k).all_coeffs()[::-1]
    return HilbertPolynomial(tuple(Fraction(int(c.p), int(c.q)) for c in coeffs))


def hilbert_function(h, d, k):
    """Number of monoid elements of degree k"""
    coefficients = getattr(h, 'coefficients', h)
    total = 0
    for i, h_i in enumerate(coefficients):
        n = k - i + d - 1
        if n >= 0:
            total += h_i * comb(n, d - 1)
    return total


def shelling_triangulation(cone, weights=None, threshold=None, lifted=None):
    """Cells of the projected bottom of the lifted extreme rays, in shelling order"""
    rays = extreme_ray_vectors(cone)
    if lifted is None:
        lifted = lift_and_hull(rays, weights=weights, threshold=threshold)
    bottom = bottom_facets(lifted)
    interior = tuple(sum(column) for column in zip(*lifted.lifted_generators))
    ordered = shelling_order(bottom, interior)
    cells = [make_cell(f.generator_indices, [rays[i] for i in f.generator_indices]) for f in ordered]
    logger.info(f'Shelling: {len(rays)} extreme rays, {len(lifted.facets)} lifted facets, {len(cells)} cells')
    return Triangulation(cells, SHELLING)


def compute_h_vector(cone, weights=None, formula='second', threshold=None):
    """h-vector, Hilbert polynomial and shelling triangulation of a homogeneous pointed cone"""
    grading = find_grading(extreme_ray_vectors(cone))
    if grading is None:
        raise NotHomogeneousError('no grading with value 1 on all generators')
    triangulation = shelling_triangulation(cone, weights=weights, threshold=threshold)
    shelled = compute_W_sets(triangulation.cells)
    h = h_vector(shelled, grading, formula)
    polynomial = hilbert_polynomial(h)
    logger.info(f'h-vector {list(h.coefficients)}, multiplicity {h.multiplicity}')
    return h, polynomial, triangulation
