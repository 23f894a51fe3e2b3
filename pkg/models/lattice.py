# models/lattice.py - Integer vectors and the full-dimensional lattice embedding
from dataclasses import dataclass
from typing import Tuple

from models.errors import DimMismatchError, MathError

# Arbitrary-precision integer vector; tuples keep vectors hashable for dedup sets
IntVector = Tuple[int, ...]
IntMatrix = Tuple[IntVector, ...]

AMBIENT_LATTICE = 'ambient_lattice'
GENERATED_LATTICE = 'generated_lattice'
LATTICE_MODES = (AMBIENT_LATTICE, GENERATED_LATTICE)


@dataclass(frozen=True)
class LatticeEmbedding:
    """Coordinates of the working lattice L = Z b_1 + ... + Z b_r inside Z^d.

    `backward` holds the basis rows b_j, so a working vector c maps to the
    ambient vector c * B. `forward` / `denominator` is a rational left inverse:
    x in L has working coordinates (x * forward) / denominator.
    """

    forward: IntMatrix
    denominator: int
    backward: IntMatrix
    rank: int
    ambient_dim: int
    lattice_mode: str = AMBIENT_LATTICE
    lattice_index: int = 1

    @property
    def is_identity(self):
        """True when working and ambient coordinates coincide"""
        return (self.rank == self.ambient_dim and self.denominator == 1 and
                all(row[i] == (1 if i == j else 0)
                    for j, row in enumerate(self.backward) for i in range(self.ambient_dim)))

    def to_working(self, x):
        """Map an ambient vector of L to working coordinates"""
        if len(x) != self.ambient_dim:
            raise DimMismatchError(f'vector of length {len(x)} in ambient dimension {self.ambient_dim}')
        coords = []
        for j in range(self.rank):
            num = sum(x[i] * self.forward[i][j] for i in range(self.ambient_dim))
            if num % self.denominator:
                raise MathError(f'{tuple(x)} does not lie in the working lattice')
            coords.append(num // self.denominator)
        return tuple(coords)

    def to_ambient(self, c):
        """Map working coordinates back to Z^d"""
        if len(c) != self.rank:
            raise DimMismatchError(f'vector of length {len(c)} in working rank {self.rank}')
        return tuple(sum(c[j] * self.backward[j][i] for j in range(self.rank))
                     for i in range(self.ambient_dim))

    def form_to_working(self, form):
        """Restrict an ambient linear form to the working lattice"""
        if len(form) != self.ambient_dim:
            raise DimMismatchError(f'form of length {len(form)} in ambient dimension {self.ambient_dim}')
        return tuple(sum(b[i] * form[i] for i in range(self.ambient_dim)) for b in self.backward)

    def form_to_ambient(self, form):
        """Positive multiple of an ambient form agreeing with `form` on L (not normalized)"""
        return tuple(sum(self.forward[i][j] * form[j] for j in range(self.rank))
                     for i in range(self.ambient_dim))
