# utils/dual_logic.py - Dual Hilbert Basis Algorithm by Successive Halfspace Cuts
import logging

from config import Config
from models.cone import SupportForm
from models.dual_state import CASE_A, CASE_B, Candidate, CutOutcome, CutTrace, DualState
from models.errors import ZeroConeError
from models.report import HilbertResult
from utils.lattice_helpers import (build_embedding, dot, extended_gcd_vector, identity_embedding,
                                   integer_kernel_basis, primitive_part)
from utils.reduction_logic import auto_reduce, graded_value, reduces

logger = logging.getLogger(__name__)

HEURISTIC = 'heuristic'
INPUT_ORDER = 'input'
ORDER_STRATEGIES = (HEURISTIC, INPUT_ORDER)


def _combine(coeffs, vectors, dim):
    return tuple(sum(c * v[i] for c, v in zip(coeffs, vectors)) for i in range(dim))


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _scaled(x, a):
    return tuple(a * b for b in x)


class _Side:
    """One of the monoids M+ / M- while a cut is in progress"""

    def __init__(self, forms):
        self.forms = forms
        self.members = {}
        self._values = {}

    def value(self, vector):
        value = self._values.get(vector)
        if value is None:
            value = graded_value(vector, self.forms)
            self._values[vector] = value
        return value

    def is_reduced(self, vector):
        value = self.value(vector)
        return any(reduces(self.value(y), value) for y in self.members)

    def merge(self, candidates):
        """Add sums that passed the members of the last generation.

        The sums are auto-reduced among themselves, and members reduced by
        one of them are dropped. Returns the vectors added.
        """
        if not candidates:
            return set()
        by_vector = {}
        for c in candidates:
            by_vector.setdefault(c.vector, c)
        survivors = auto_reduce([self.value(v) for v in by_vector])
        for vector in list(self.members):
            value = self.value(vector)
            if any(reduces(s, value) for s in survivors):
                del self.members[vector]
        for s in survivors:
            self.members[s.vector] = by_vector[s.vector]
        return {s.vector for s in survivors}


def cut_by_halfspace(state, form):
    """Cut the monoid of `state` by the halfspace form >= 0.

    Returns the state for M+ together with the Hilbert basis of M-.
    """
    support = form if isinstance(form, SupportForm) else SupportForm(tuple(form))
    lam = support.coeffs
    dim = state.dim

    def lam_of(x):
        return dot(lam, x)

    # unit group of M+ = kernel of lambda on U(M)
    unit_values = [lam_of(u) for u in state.unit_basis]
    h = None
    if any(unit_values):
        case = CASE_B
        kernel = integer_kernel_basis([unit_values], len(unit_values))
        units = [_combine(k, state.unit_basis, dim) for k in kernel]
        g, coeffs = extended_gcd_vector(unit_values)
        h = _combine(coeffs, state.unit_basis, dim)
        lam_h = g
    else:
        case = CASE_A
        units = list(state.unit_basis)

    start = []
    for c in state.hilbert_basis:
        x = c.vector
        if h is not None:
            value = lam_of(x)
            if value > 0:
                x = _add(x, _scaled(h, -(value // lam_h)))
            elif value < 0:
                x = _add(x, _scaled(h, (-value) // lam_h))
        start.append(x)
    if h is not None:
        start.extend([h, tuple(-a for a in h)])

    old_forms = [f.coeffs for f in state.inserted_forms]
    plus = _Side(old_forms + [lam])
    minus = _Side(old_forms + [support.negated().coeffs])
    for x in dict.fromkeys(start):
        if not any(x):
            continue
        candidate = Candidate(graded_value(x, plus.forms), 0, None)
        if lam_of(x) >= 0:
            plus.members[x] = candidate
        if lam_of(x) <= 0:
            minus.members[x] = candidate
    seen = set(plus.members) | set(minus.members)
    fresh_plus, fresh_minus = set(plus.members), set(minus.members)

    generation = 0
    while fresh_plus or fresh_minus:
        generation += 1
        positives = [c for v, c in plus.members.items() if lam_of(v) > 0]
        negatives = [c for v, c in minus.members.items() if lam_of(v) < 0]
        plus_new, minus_new = [], []
        for x in positives:
            lx = lam_of(x.vector)
            x_fresh = x.vector in fresh_plus
            for y in negatives:
                # pairs of two old members were formed in an earlier generation
                if not x_fresh and y.vector not in fresh_minus:
                    continue
                ly = lam_of(y.vector)
                # a sum z = x' + y' skips partners beyond the value of its same-sign summand
                if x.reducer_hint is not None and ly < -x.reducer_hint:
                    continue
                if y.reducer_hint is not None and lx > y.reducer_hint - ly:
                    continue
                s = _add(x.vector, y.vector)
                if not any(s) or s in seen:
                    continue
                seen.add(s)
                ls = lx + ly
                candidate = Candidate(graded_value(s, plus.forms), generation, lx)
                if ls >= 0 and not plus.is_reduced(s):
                    plus_new.append(candidate)
                if ls <= 0 and not minus.is_reduced(s):
                    minus_new.append(candidate)

        fresh_plus = plus.merge(plus_new)
        fresh_minus = minus.merge(minus_new)
        logger.debug(f'Cut {lam}, generation {generation}: {len(fresh_plus)}+{len(fresh_minus)} new elements, '
                     f'|B+|={len(plus.members)}, |B-|={len(minus.members)}')

    basis = [Candidate(plus.value(v), c.generation, c.reducer_hint)
             for v, c in sorted(plus.members.items())]
    plus_state = DualState(dim=dim, hilbert_basis=basis, unit_basis=units,
                           inserted_forms=list(state.inserted_forms) + [support])
    return CutOutcome(plus_state=plus_state, minus_basis=sorted(minus.members),
                      h_element=h, case=case, generations=generation)


def _probes(state):
    probes = list(state.basis_vectors())
    for u in state.unit_basis:
        probes.extend([u, tuple(-a for a in u)])
    return probes


def order_hyperplanes(forms, state=None, strategy=None):
    """Insertion order for the halfspaces.

    The heuristic picks next the form with the fewest strictly negative
    values on the Hilbert basis and the +-unit basis of `state` (default:
    the full lattice, so +-e_i), then drops the probes it cuts off. Ties
    keep the input order.
    """
    strategy = strategy or Config.DUAL_ORDER
    forms = list(forms)
    if strategy == INPUT_ORDER or len(forms) <= 1:
        return forms
    if strategy != HEURISTIC:
        raise ValueError(f'unknown order strategy {strategy!r}')
    coeffs = [getattr(f, 'coeffs', f) for f in forms]
    if state is None:
        state = DualState.full_lattice(len(coeffs[0]))
    probes = _probes(state)
    remaining = list(range(len(forms)))
    order = []
    while remaining:
        best = min(remaining, key=lambda i: (sum(1 for p in probes if dot(coeffs[i], p) < 0), i))
        remaining.remove(best)
        order.append(forms[best])
        probes = [p for p in probes if dot(coeffs[best], p) >= 0]
    return order


def run_cuts(dim, forms, strategy=None):
    """Cut Z^dim by all forms; returns the final state and the per-cut trace.

    The remaining forms are ranked again against the state after every cut.
    """
    state = DualState.full_lattice(dim)
    remaining = list(forms)
    trace = []
    while remaining:
        form = order_hyperplanes(remaining, state, strategy)[0]
        remaining.remove(form)
        outcome = cut_by_halfspace(state, form)
        state = outcome.plus_state
        trace.append(CutTrace(form.coeffs, outcome.case, outcome.generations,
                              len(state.hilbert_basis), len(state.unit_basis)))
        logger.info(f'Cut by {form.coeffs}: case ({outcome.case}), {outcome.generations} generations, '
                    f'{len(state.hilbert_basis)} basis elements, unit rank {len(state.unit_basis)}')
    return state, trace


def working_forms(forms, basis):
    """Restrict ambient forms to the lattice spanned by `basis` (zero restrictions dropped)"""
    restricted = []
    seen = set()
    for form in forms:
        coeffs = getattr(form, 'coeffs', form)
        values = tuple(dot(b, coeffs) for b in basis)
        if not any(values):
            continue
        values = primitive_part(values)
        if values not in seen:
            seen.add(values)
            restricted.append(SupportForm(values))
    return restricted


def kernel_embedding(equations, dim):
    """Embedding of the saturated lattice cut out by `equations`"""
    if not equations:
        return identity_embedding(dim)
    basis = integer_kernel_basis(equations, dim)
    if not basis:
        raise ZeroConeError('the equations have only the zero solution')
    return build_embedding(basis, dim)


def dual_hilbert_basis(forms, equations=None, strategy=None, embedding=None):
    """Hilbert basis of {x in L : form(x) >= 0 for all forms, equations(x) = 0}.

    Equations are handled by passing to coordinates of their integer kernel.
    With an explicit `embedding` the forms are taken to be in its working
    coordinates already.
    """
    if embedding is None:
        forms = list(forms)
        dim = len(getattr(forms[0], 'coeffs', forms[0])) if forms else len(equations[0])
        embedding = kernel_embedding(equations or [], dim)
        restricted = working_forms(forms, embedding.backward)
    else:
        restricted = [f if isinstance(f, SupportForm) else SupportForm(tuple(f)) for f in forms]

    state, trace = run_cuts(embedding.rank, restricted, strategy)
    hilbert_basis = sorted(embedding.to_ambient(c.vector) for c in state.hilbert_basis)
    units = sorted(embedding.to_ambient(u) for u in state.unit_basis)
    logger.info(f'Dual algorithm: {len(hilbert_basis)} Hilbert basis elements, unit rank {len(units)}')
    return HilbertResult(
        hilbert_basis=hilbert_basis,
        support_forms=[],
        extreme_rays=[],
        dim=embedding.rank,
        pointed=not units,
        embedding=embedding,
        unit_group_basis=units,
        trace=trace,
        statistics={'num_cuts': len(trace), 'max_generations': max((t.generations for t in trace), default=0)},
    )

