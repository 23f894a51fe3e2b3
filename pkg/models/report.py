# models/report.py - Problem Input, Results and Report Schema
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from models.lattice import AMBIENT_LATTICE, IntVector

GENERATORS = 'generators'
HYPERPLANES = 'hyperplanes'
EQUATIONS = 'equations'
INPUT_MODES = (GENERATORS, HYPERPLANES, EQUATIONS)

PRIMAL = 'primal'
DUAL = 'dual'
ALGORITHMS = (PRIMAL, DUAL)


@dataclass
class SolveOptions:
    algorithm: str = PRIMAL
    compute_hvector: bool = False
    output_prefix: Optional[str] = None
    order: Optional[str] = None
    local_reduction: Optional[bool] = None


@dataclass
class ProblemInput:
    """Parsed problem file; hyperplanes and equations always use the ambient lattice"""

    mode: str
    matrix: List[IntVector]
    lattice_mode: str = AMBIENT_LATTICE
    options: SolveOptions = field(default_factory=SolveOptions)

    @property
    def dim(self):
        return len(self.matrix[0]) if self.matrix else 0


@dataclass
class HilbertResult:
    """Outcome of either algorithm; vectors are in ambient coordinates"""

    hilbert_basis: List[IntVector]
    support_forms: List[Any]
    extreme_rays: List[IntVector]
    dim: int
    pointed: bool
    embedding: Any = None
    triangulation: Any = None
    total_multiplicity: Optional[int] = None
    cone: Any = None
    unit_group_basis: List[IntVector] = field(default_factory=list)
    trace: List[Any] = field(default_factory=list)
    statistics: Dict[str, Optional[int]] = field(default_factory=dict)


class Report(BaseModel):
    """Machine-readable summary of a run (written as prefix.json)"""

    input_mode: str
    algorithm: str
    lattice_mode: str = AMBIENT_LATTICE
    ambient_dim: int
    dim: int
    pointed: bool
    hilbert_basis: List[List[int]] = Field(default_factory=list)
    extreme_rays: List[List[int]] = Field(default_factory=list)
    support_forms: List[List[int]] = Field(default_factory=list)
    equations: List[List[int]] = Field(default_factory=list)
    num_support_hyperplanes: int = 0
    unit_group_basis: List[List[int]] = Field(default_factory=list)
    lattice_index: int = 1
    triangulation_size: Optional[int] = None
    total_multiplicity: Optional[int] = None
    h_vector: Optional[List[int]] = None
    hilbert_polynomial: Optional[List[str]] = None
    grading: Optional[List[int]] = None
    statistics: Dict[str, Optional[int]] = Field(default_factory=dict)
    dual_trace: List[Dict[str, Any]] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)
    timings: Optional[Dict[str, float]] = None

    @property
    def num_hilbert_basis(self):
        return len(self.hilbert_basis)
