# models/dual_state.py - Candidate and Halfspace-Cutting State Models
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from models.cone import GradedValue, SupportForm
from models.lattice import IntVector

CASE_A = 'a'
CASE_B = 'b'


@dataclass(frozen=True)
class Candidate:
    """Element waiting for reduction.

    `reducer_hint` stores lambda(x) of the positive summand x when the
    candidate was formed as a sum x + y; sums with an element w such that
    lambda(w) < -reducer_hint need not be formed.
    """

    value: GradedValue
    generation: int = 0
    reducer_hint: Optional[int] = None

    @property
    def vector(self):
        return self.value.vector

    @property
    def tdeg(self):
        return self.value.tdeg


@dataclass
class DualState:
    """Hilbert basis (modulo units) and unit group basis of the current monoid"""

    dim: int
    hilbert_basis: List[Candidate] = field(default_factory=list)
    unit_basis: List[IntVector] = field(default_factory=list)
    inserted_forms: List[SupportForm] = field(default_factory=list)

    @classmethod
    def full_lattice(cls, dim):
        """State for M = Z^d: no Hilbert basis elements, unit basis = standard basis"""
        units = [tuple(1 if i == j else 0 for i in range(dim)) for j in range(dim)]
        return cls(dim=dim, unit_basis=units)

    @property
    def pointed(self):
        return not self.unit_basis

    def basis_vectors(self):
        return [c.vector for c in self.hilbert_basis]


@dataclass
class CutOutcome:
    """Result of cutting a state by one halfspace"""

    plus_state: DualState
    minus_basis: List[IntVector]
    h_element: Optional[IntVector] = None
    case: str = CASE_A
    generations: int = 0


@dataclass(frozen=True)
class CutTrace:
    """Per-hyperplane record of a dual run"""

    form: Tuple[int, ...]
    case: str
    generations: int
    basis_size: int
    unit_rank: int

    def to_dict(self):
        return {'form': list(self.form), 'case': self.case, 'generations': self.generations,
                'basis_size': self.basis_size, 'unit_rank': self.unit_rank}
