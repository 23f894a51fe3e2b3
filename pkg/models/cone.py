# models/cone.py - Cone, Support Form and Facet Models
from dataclasses import dataclass, field
from typing import Tuple

from models.errors import DimMismatchError
from models.lattice import IntVector, LatticeEmbedding

SUPPORT = 'support'
EQUATION = 'equation'


@dataclass(frozen=True)
class SupportForm:
    """Primitive integral linear form; `role` is 'support' or 'equation'"""

    coeffs: IntVector
    role: str = SUPPORT

    @property
    def dim(self):
        return len(self.coeffs)

    def evaluate(self, x):
        if len(x) != len(self.coeffs):
            raise DimMismatchError(f'form of length {len(self.coeffs)} applied to vector of length {len(x)}')
        return sum(a * b for a, b in zip(self.coeffs, x))

    def negated(self):
        return SupportForm(tuple(-a for a in self.coeffs), self.role)


@dataclass(frozen=True)
class GradedValue:
    """A lattice element with its cached standard map sigma(x) and total degree"""

    vector: IntVector
    sigma_values: Tuple[int, ...]
    tdeg: int

    @classmethod
    def from_sigma(cls, vector, sigma_values):
        sigma_values = tuple(sigma_values)
        return cls(tuple(vector), sigma_values, sum(sigma_values))

    @property
    def is_unit(self):
        return self.tdeg == 0 and not any(self.sigma_values)

    def sort_key(self):
        return (self.tdeg, self.vector)


@dataclass
class FacetRecord:
    """Facet of an incremental hull.

    `incidence` is a bitset over generator indices: bit i is set iff the
    form vanishes on generator i. A facet is simplicial when exactly d-1
    generators lie on it.
    """

    form: SupportForm
    incidence: int
    simplicial: bool

    def value(self, x):
        return self.form.evaluate(x)


# A subfacet key is the bitset of its d-2 generator indices
SubfacetKey = int


def bit_indices(mask):
    """Indices of the set bits of `mask`, ascending"""
    indices = []
    i = 0
    while mask:
        if mask & 1:
            indices.append(i)
        mask >>= 1
        i += 1
    return indices


def indices_mask(indices):
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


@dataclass(frozen=True)
class ConeState:
    """A cone in working coordinates together with its support forms.

    `generators` and `support_forms` live in the full-dimensional working
    coordinates of `embedding`; `extreme_ray_flags[i]` marks generator i.
    """

    dim: int
    generators: Tuple[IntVector, ...]
    support_forms: Tuple[SupportForm, ...]
    embedding: LatticeEmbedding
    pointed: bool
    extreme_ray_flags: Tuple[bool, ...] = field(default_factory=tuple)

    @property
    def ambient_dim(self):
        return self.embedding.ambient_dim
