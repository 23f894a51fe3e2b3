# utils/primal_logic.py - Primal Hilbert Basis Algorithm
import logging
from itertools import product

from config import Config
from models.errors import NotPointedError
from models.lattice import AMBIENT_LATTICE
from models.report import HilbertResult
from models.triangulation import LEXICOGRAPHIC, SHELLING, ParPoint, SimplicialCell, Triangulation
from utils.cone_helpers import ambient_support_forms, create_cone_state, extreme_rays
from utils.fourier_motzkin import HullListener
from utils.lattice_helpers import determinant_abs, dot, echelon_form, inverse_with_denominator
from utils.reduction_logic import graded_value, reduce_to_hilbert_basis

logger = logging.getLogger(__name__)

TRIANGULATION_KINDS = (LEXICOGRAPHIC, SHELLING)


def make_cell(indices, vectors):
    """Simplicial cell over generators given by index and vector (sorted by index)"""
    pairs = sorted(zip(indices, (tuple(v) for v in vectors)))
    generators = tuple(v for _, v in pairs)
    return SimplicialCell(generator_indices=tuple(i for i, _ in pairs), generators=generators,
                          multiplicity=determinant_abs(generators))


def extend_lex_triangulation(triangulation, x_index, x_new, visible_facets):
    """Add the cones F + R_+ x_new over the cell facets F lying in a visible facet"""
    if not visible_facets:
        return triangulation
    new_cells = []
    for cell in triangulation.cells:
        mask = cell.mask
        for pos, index in enumerate(cell.generator_indices):
            face = mask & ~(1 << index)
            if any(not face & ~facet.incidence for facet in visible_facets):
                indices = [i for i in cell.generator_indices if i != index] + [x_index]
                vectors = [v for p, v in enumerate(cell.generators) if p != pos] + [tuple(x_new)]
                new_cells.append(make_cell(indices, vectors))
    logger.debug(f'Generator {x_index}: {len(new_cells)} new cells')
    return Triangulation(triangulation.cells + new_cells, triangulation.order_kind)


class LexTriangulationBuilder(HullListener):
    """Builds the placing triangulation alongside the hull computation"""

    def __init__(self):
        self.triangulation = Triangulation(order_kind=LEXICOGRAPHIC)

    def on_start(self, hull, indices):
        self.triangulation = Triangulation(
            [make_cell(indices, [hull.generators[i] for i in indices])], LEXICOGRAPHIC)

    def on_insert(self, hull, index, visible):
        self.triangulation = extend_lex_triangulation(self.triangulation, index,
                                                      hull.generators[index], visible)


def cell_forms(cell):
    """Support forms of a cell: columns of the scaled inverse (value den * a_i on sum a_i v_i)"""
    numerators, den = inverse_with_denominator(cell.generators)
    d = len(cell.generators)
    forms = [tuple(numerators[k][j] for k in range(d)) for j in range(d)]
    return forms, den


def enumerate_par_points(cell, grading=None):
    """Lattice points of the semi-open parallelotope of a cell, including 0.

    Residue classes of Z^d modulo the cell's lattice are enumerated through
    the diagonal of its Hermite echelon form; each representative is moved
    into the parallelotope by subtracting the integral parts of its
    coordinates.
    """
    generators = cell.generators
    d = len(generators)
    numerators, den = inverse_with_denominator(generators)
    hermite, _ = echelon_form(generators, d)
    diagonal = [hermite[i][i] for i in range(d)]

    points = []
    for residue in product(*(range(h) for h in diagonal)):
        coords = [sum(residue[k] * numerators[k][j] for k in range(d)) % den for j in range(d)]
        vector = tuple(sum(coords[j] * generators[j][i] for j in range(d)) // den for i in range(d))
        support = frozenset(j for j in range(d) if coords[j])
        degree = dot(grading, vector) if grading is not None else None
        points.append(ParPoint(vector, support, degree))
    return points


def cell_candidates(cell, local_reduction=True):
    """Nonzero parallelotope points together with the cell generators.

    With local reduction the set is first reduced to the Hilbert basis of
    the simplicial monoid of the cell.
    """
    vectors = {p.vector for p in enumerate_par_points(cell) if any(p.vector)}
    vectors.update(cell.generators)
    if not local_reduction:
        return sorted(vectors)
    forms, _ = cell_forms(cell)
    values = sorted((graded_value(v, forms) for v in vectors), key=lambda v: v.sort_key())
    return sorted(v.vector for v in reduce_to_hilbert_basis(values))


def primal_hilbert_basis(generators, lattice_mode=AMBIENT_LATTICE, triangulation_kind=LEXICOGRAPHIC,
                         local_reduction=None, threshold=None, weights=None):
    """Hilbert basis of the monoid C intersected with L, C spanned by `generators`.

    The support forms and the triangulation come out of one hull computation;
    the parallelotope points of all cells are reduced against the support forms.
    """
    if triangulation_kind not in TRIANGULATION_KINDS:
        raise ValueError(f'unknown triangulation kind {triangulation_kind!r}')
    if local_reduction is None:
        local_reduction = Config.LOCAL_REDUCTION

    builder = LexTriangulationBuilder()
    cone = create_cone_state(generators, lattice_mode, threshold=threshold, listeners=[builder])
    if not cone.pointed:
        raise NotPointedError(f'cone of dimension {cone.dim} contains a line')

    if triangulation_kind == SHELLING:
        from utils.shelling_logic import shelling_triangulation
        triangulation = shelling_triangulation(cone, weights=weights, threshold=threshold)
    else:
        triangulation = builder.triangulation
    logger.info(f'Triangulation ({triangulation.order_kind}): {len(triangulation)} cells, '
                f'total multiplicity {triangulation.total_multiplicity}')

    candidates = set()
    local_survivors = 0
    for cell in triangulation.cells:
        found = cell_candidates(cell, local_reduction)
        local_survivors += len(found)
        candidates.update(found)

    values = sorted((graded_value(v, cone.support_forms) for v in candidates),
                    key=lambda v: v.sort_key())
    basis = reduce_to_hilbert_basis(values)
    logger.info(f'Reduction: {len(values)} candidates -> {len(basis)} Hilbert basis elements')

    embedding = cone.embedding
    statistics = {
        'num_cells': len(triangulation),
        'total_multiplicity': triangulation.total_multiplicity,
        'num_parallelotope_vectors': triangulation.total_multiplicity - len(triangulation),
        'num_local_survivors': local_survivors if local_reduction else None,
        'num_candidates': len(values),
    }
    return HilbertResult(
        hilbert_basis=sorted(embedding.to_ambient(v.vector) for v in basis),
        support_forms=ambient_support_forms(cone),
        extreme_rays=extreme_rays(cone),
        triangulation=triangulation,
        total_multiplicity=triangulation.total_multiplicity,
        dim=cone.dim,
        pointed=True,
        embedding=embedding,
        cone=cone,
        statistics=statistics,
    )
