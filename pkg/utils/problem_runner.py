# utils/problem_runner.py - Mode Dispatch and Report Assembly
import logging

from models.errors import NotHomogeneousError, NotPointedError, ZeroConeError
from models.lattice import AMBIENT_LATTICE
from models.report import DUAL, EQUATIONS, GENERATORS, PRIMAL, Report
from models.triangulation import LEXICOGRAPHIC, SHELLING
from utils.cone_helpers import ambient_support_forms, create_cone_state, extreme_rays, span_equations
from utils.decorators import recoverable, timed_phase
from utils.dual_logic import dual_hilbert_basis, kernel_embedding
from utils.fourier_motzkin import dual_cone
from utils.lattice_helpers import primitive_part, rank
from utils.primal_logic import primal_hilbert_basis
from utils.shelling_logic import compute_h_vector

logger = logging.getLogger(__name__)


class ProblemRunner:
    """Runs one parsed problem with the selected algorithm and builds its report"""

    def __init__(self, problem):
        self.problem = problem
        self.options = problem.options
        self.timings = {}
        self.warnings = []

    @property
    def dim(self):
        return self.problem.dim

    # Cone descriptions

    @timed_phase('dual_cone')
    def generators_from_forms(self, forms, embedding):
        """Extreme rays (ambient) of {x in L : forms >= 0}, forms in working coordinates"""
        if rank(forms, embedding.rank) < embedding.rank:
            raise NotPointedError(f'the inequalities leave a lineality space of dimension '
                                  f'{embedding.rank - rank(forms, embedding.rank)}')
        rays = dual_cone(forms)
        return [primitive_part(embedding.to_ambient(r.coeffs)) for r in rays]

    def solution_embedding(self):
        """Working lattice of equations input (identity otherwise)"""
        if self.problem.mode == EQUATIONS:
            return kernel_embedding(self.problem.matrix, self.dim)
        return kernel_embedding([], self.dim)

    def working_forms(self, embedding):
        if self.problem.mode == EQUATIONS:
            units = [tuple(1 if i == j else 0 for i in range(self.dim)) for j in range(self.dim)]
            forms = [embedding.form_to_working(u) for u in units]
        else:
            forms = [embedding.form_to_working(f) for f in self.problem.matrix]
        return [f for f in forms if any(f)]

    # Algorithms

    @timed_phase('hilbert_basis')
    def run_primal(self, generators, lattice_mode):
        kind = SHELLING if self.options.compute_hvector else LEXICOGRAPHIC
        return primal_hilbert_basis(generators, lattice_mode, triangulation_kind=kind,
                                    local_reduction=self.options.local_reduction)

    @timed_phase('hilbert_basis')
    def run_dual(self, forms, equations=None, embedding=None):
        return dual_hilbert_basis(forms, equations=equations, strategy=self.options.order,
                                  embedding=embedding)

    @timed_phase('dual_cone')
    def describe(self, result):
        """Fill in the cone of a dual result from its Hilbert basis and unit group"""
        generators = list(result.hilbert_basis)
        for u in result.unit_group_basis:
            generators.extend([u, tuple(-a for a in u)])
        cone = create_cone_state(generators, AMBIENT_LATTICE)
        result.cone = cone
        result.support_forms = ambient_support_forms(cone)
        result.extreme_rays = extreme_rays(cone) if cone.pointed else []
        return result

    @timed_phase('hvector')
    @recoverable(NotHomogeneousError)
    def h_vector(self, cone):
        return compute_h_vector(cone)

    def solve(self):
        mode = self.problem.mode
        algorithm = self.options.algorithm
        logger.info(f'Solving {mode} input of dimension {self.dim} with the {algorithm} algorithm')

        if mode == GENERATORS:
            if algorithm == PRIMAL:
                return self.run_primal(self.problem.matrix, self.problem.lattice_mode)
            cone = create_cone_state(self.problem.matrix, self.problem.lattice_mode)
            result = self.run_dual(cone.support_forms, embedding=cone.embedding)
            result.cone = cone
            result.support_forms = ambient_support_forms(cone)
            result.extreme_rays = extreme_rays(cone) if cone.pointed else []
            return result

        if algorithm == DUAL:
            if mode == EQUATIONS:
                units = [tuple(1 if i == j else 0 for i in range(self.dim)) for j in range(self.dim)]
                result = self.run_dual(units, equations=self.problem.matrix)
            else:
                result = self.run_dual(self.problem.matrix)
            if not result.hilbert_basis and not result.unit_group_basis:
                raise ZeroConeError('the solution cone is {0}')
            if result.unit_group_basis:
                self.warnings.append(f'NotPointed: the solution cone contains a lineality space of '
                                     f'rank {len(result.unit_group_basis)}')
            return self.describe(result)

        embedding = self.solution_embedding()
        generators = self.generators_from_forms(self.working_forms(embedding), embedding)
        if not generators:
            raise ZeroConeError('the solution cone is {0}')
        return self.run_primal(generators, AMBIENT_LATTICE)

    # Report

    def num_support_hyperplanes(self, result):
        count = len(result.support_forms)
        if self.problem.mode == EQUATIONS:
            count += 2 * len(self.problem.matrix)
        return count

    def equations(self, result):
        if self.problem.mode == EQUATIONS:
            return [list(e) for e in self.problem.matrix]
        if result.cone is None:
            return []
        return [list(e) for e in span_equations(result.cone.embedding)]

    def empty_report(self):
        return Report(input_mode=self.problem.mode, algorithm=self.options.algorithm,
                      lattice_mode=self.problem.lattice_mode, ambient_dim=self.dim, dim=0, pointed=True,
                      equations=[list(e) for e in self.problem.matrix] if self.problem.mode == EQUATIONS else [],
                      warnings=self.warnings, timings=self.timings)

    def run(self):
        try:
            result = self.solve()
        except ZeroConeError as e:
            if self.problem.mode == GENERATORS:
                raise
            logger.warning(f'Empty solution cone: {e}')
            self.warnings.append(f'{e.code}: {e.message}')
            return self.empty_report()

        h = polynomial = grading = None
        if self.options.compute_hvector:
            if not result.pointed or result.cone is None:
                self.warnings.append('NotPointed: h-vector requires a pointed cone')
            else:
                outcome = self.h_vector(result.cone)
                if outcome is not None:
                    h, polynomial, _ = outcome
                    grading = list(h.grading)

        trace = [t.to_dict() for t in result.trace]
        embedding = result.embedding
        report = Report(
            input_mode=self.problem.mode,
            algorithm=self.options.algorithm,
            lattice_mode=self.problem.lattice_mode,
            ambient_dim=self.dim,
            dim=result.dim,
            pointed=result.pointed,
            hilbert_basis=[list(v) for v in sorted(result.hilbert_basis)],
            extreme_rays=[list(v) for v in sorted(result.extreme_rays)],
            support_forms=[list(f.coeffs) for f in result.support_forms],
            equations=self.equations(result),
            num_support_hyperplanes=self.num_support_hyperplanes(result),
            unit_group_basis=[list(u) for u in result.unit_group_basis],
            lattice_index=embedding.lattice_index if embedding is not None else 1,
            triangulation_size=len(result.triangulation) if result.triangulation is not None else None,
            total_multiplicity=result.total_multiplicity,
            h_vector=list(h.coefficients) if h is not None else None,
            hilbert_polynomial=polynomial.tokens() if polynomial is not None else None,
            grading=grading,
            statistics=result.statistics,
            dual_trace=trace,
            warnings=self.warnings,
            timings=self.timings,
        )
        logger.info(f'Report: {report.num_hilbert_basis} Hilbert basis elements, '
                    f'{len(report.extreme_rays)} extreme rays, {report.num_support_hyperplanes} support hyperplanes')
        return report


def run(problem):
    """Solve a parsed problem and return its report"""
    if problem.options.algorithm not in (PRIMAL, DUAL):
        raise ValueError(f'unknown algorithm {problem.options.algorithm!r}')
    return ProblemRunner(problem).run()

