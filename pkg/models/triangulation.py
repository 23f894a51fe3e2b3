# models/triangulation.py - Triangulation, Shelling and Hilbert Series Models
from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, List, Optional, Tuple

from models.cone import FacetRecord, SupportForm
from models.lattice import IntVector

LEXICOGRAPHIC = 'lexicographic'
SHELLING = 'shelling'


@dataclass(frozen=True)
class SimplicialCell:
    """Cone over d linearly independent generators; multiplicity = |det|"""

    generator_indices: Tuple[int, ...]
    generators: Tuple[IntVector, ...]
    multiplicity: int

    @property
    def mask(self):
        mask = 0
        for i in self.generator_indices:
            mask |= 1 << i
        return mask


@dataclass(frozen=True)
class ParPoint:
    """Lattice point x = sum a_i v_i of the semi-open parallelotope of a cell.

    `barycentric_support` holds the positions i (within the cell) with a_i != 0.
    """

    vector: IntVector
    barycentric_support: FrozenSet[int]
    degree: Optional[int] = None


@dataclass
class Triangulation:
    cells: List[SimplicialCell] = field(default_factory=list)
    order_kind: str = LEXICOGRAPHIC

    def __len__(self):
        return len(self.cells)

    @property
    def total_multiplicity(self):
        return sum(c.multiplicity for c in self.cells)


@dataclass(frozen=True)
class BottomFacet:
    """Facet of a lifted cone visible from below.

    The lifted support form has positive last coordinate c; the form
    rho = sigma / c takes the value 1 on (0, ..., 0, 1).
    """

    support_form: SupportForm
    generator_indices: Tuple[int, ...]

    @property
    def height_coeff(self):
        return self.support_form.coeffs[-1]

    def rho(self):
        c = self.height_coeff
        return tuple(Fraction(a, c) for a in self.support_form.coeffs)


@dataclass
class LiftedCone:
    """Generators extended by a positive weight in an extra coordinate"""

    lifted_generators: List[IntVector]
    weights: List[int]
    facets: List[FacetRecord]

    @property
    def dim(self):
        return len(self.lifted_generators[0]) if self.lifted_generators else 0


@dataclass
class ShelledCell:
    """Cell of a shelling with the opposite vertices W of facets already seen"""

    cell: SimplicialCell
    W: FrozenSet[int]
    par_points: List[ParPoint] = field(default_factory=list)


@dataclass(frozen=True)
class HVector:
    """Numerator coefficients h_0, ..., h_{d-1} of the Hilbert series over (1-t)^d"""

    coefficients: Tuple[int, ...]
    dim: int
    grading: IntVector

    @property
    def multiplicity(self):
        return sum(self.coefficients)


@dataclass(frozen=True)
class HilbertPolynomial:
    """P(k) = sum_j coefficients[j] * k^j"""

    coefficients: Tuple[Fraction, ...]

    def __call__(self, k):
        return sum(c * k ** j for j, c in enumerate(self.coefficients))

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def tokens(self):
        return [f'{c.numerator}/{c.denominator}' for c in self.coefficients]
