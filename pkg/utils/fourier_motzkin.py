# utils/fourier_motzkin.py - Incremental Dual Cone Computation
import logging
from dataclasses import dataclass, field
from typing import List

from config import Config
from models.cone import FacetRecord, SupportForm, bit_indices
from models.errors import DimMismatchError, NotFullDimError
from utils.lattice_helpers import dot, inverse_with_denominator, primitive_part, rank

logger = logging.getLogger(__name__)


class HullListener:
    """Receives the simplex start and every insertion of a ConeHull"""

    def on_start(self, hull, indices):
        pass

    def on_insert(self, hull, index, visible):
        pass


@dataclass
class FMStep:
    """Partition of the facets by the sign of their value on x_new"""

    positive: List[FacetRecord] = field(default_factory=list)
    negative: List[FacetRecord] = field(default_factory=list)
    zero: List[FacetRecord] = field(default_factory=list)
    combined: List[SupportForm] = field(default_factory=list)


def combine_forms(positive, negative, x_new):
    """lambda_P(x) * lambda_N - lambda_N(x) * lambda_P, made primitive (vanishes on x_new)"""
    p_value = dot(positive.coeffs, x_new)
    n_value = dot(negative.coeffs, x_new)
    coeffs = tuple(p_value * a - n_value * b for a, b in zip(negative.coeffs, positive.coeffs))
    return SupportForm(primitive_part(coeffs))


def raw_fm_step(facets, x_new):
    """One unrefined Fourier-Motzkin step: all P x N combinations"""
    step = FMStep()
    for facet in facets:
        value = facet.value(x_new)
        if value > 0:
            step.positive.append(facet)
        elif value < 0:
            step.negative.append(facet)
        else:
            step.zero.append(facet)
    for p in step.positive:
        for n in step.negative:
            step.combined.append(combine_forms(p.form, n.form, x_new))
    return step


def is_facet_form(form, generators, dim):
    """True iff `form` is nonnegative on all generators and vanishes on a rank-(d-1) subset"""
    vanishing = []
    for g in generators:
        value = form.evaluate(g)
        if value < 0:
            return False
        if value == 0:
            vanishing.append(g)
    return rank(vanishing, dim) == dim - 1


def naive_prune(forms, generators, dim):
    """Keep the distinct forms that define facets of the cone spanned by `generators`"""
    kept = {}
    for form in forms:
        if form.coeffs not in kept and is_facet_form(form, generators, dim):
            kept[form.coeffs] = form
    return [kept[c] for c in sorted(kept)]


class ConeHull:
    """Facets of the cone spanned by the generators inserted so far.

    The hull starts from a simplex on the first d linearly independent
    generators and then inserts the others one at a time. Incidences are
    bitsets over generator indices (the position in the input list).
    """

    def __init__(self, dim, threshold=None, listeners=None):
        self.dim = dim
        self.threshold = threshold if threshold is not None else Config.rank_test_threshold(dim)
        self.listeners = list(listeners or [])
        self.generators = []
        self.facets = []
        self.inserted = []
        self._known = {}
        self.stats = {'simplicial_pairs': 0, 'nonsimplicial_pairs': 0, 'rank_tests': 0,
                      'containment_tests': 0, 'discarded': 0}

    # -- construction ---------------------------------------------------

    def build(self, generators):
        """Run the whole insertion sequence on `generators` (in order)"""
        self.generators = [tuple(g) for g in generators]
        for g in self.generators:
            if len(g) != self.dim:
                raise DimMismatchError(f'generator {g} does not have length {self.dim}')
        simplex = self._choose_simplex()
        self.start(simplex)
        chosen = set(simplex)
        for index in range(len(self.generators)):
            if index not in chosen:
                self.insert_generator(index)
        logger.debug(f'Hull of {len(self.inserted)} generators in dimension {self.dim}: '
                     f'{len(self.facets)} facets, stats {self.stats}')
        return self

    def _choose_simplex(self):
        chosen = []
        rows = []
        for index, g in enumerate(self.generators):
            if not any(g):
                continue
            if rank(rows + [g], self.dim) > len(rows):
                chosen.append(index)
                rows.append(g)
                if len(rows) == self.dim:
                    return chosen
        raise NotFullDimError(f'generators span a cone of dimension {len(rows)} < {self.dim}')

    def start(self, simplex):
        """Begin with the simplex on the generators `simplex` (linearly independent)"""
        rows = [self.generators[i] for i in simplex]
        numerators, _ = inverse_with_denominator(rows)
        full = 0
        for i in simplex:
            full |= 1 << i
        for j, index in enumerate(simplex):
            column = tuple(numerators[k][j] for k in range(self.dim))
            self.facets.append(FacetRecord(SupportForm(primitive_part(column)),
                                           full & ~(1 << index), True))
        for index in simplex:
            self._known[self.generators[index]] = index
            self.inserted.append(index)
        for listener in self.listeners:
            listener.on_start(self, list(simplex))

    # -- insertion ---------------------------------------------------------

    def _is_simplicial(self, incidence):
        return incidence.bit_count() == self.dim - 1

    def insert_generator(self, index):
        """Insert generator `index`; returns the facets visible from it (now removed)"""
        x = self.generators[index]
        if not any(x) or x in self._known:
            logger.debug(f'Generator {index} skipped (zero or duplicate)')
            return []
        self._known[x] = index
        self.inserted.append(index)
        bit = 1 << index

        positive, negative, zero = [], [], []
        for facet in self.facets:
            value = facet.value(x)
            if value > 0:
                positive.append(facet)
            elif value < 0:
                negative.append(facet)
            else:
                zero.append(facet)

        if not negative:
            for facet in zero:
                facet.incidence |= bit
                facet.simplicial = self._is_simplicial(facet.incidence)
            for listener in self.listeners:
                listener.on_insert(self, index, [])
            return []

        new_facets = self._pair_facets(x, bit, positive, negative, zero)

        for facet in zero:
            facet.incidence |= bit
            facet.simplicial = self._is_simplicial(facet.incidence)
        negative_ids = {id(f) for f in negative}
        self.facets = [f for f in self.facets if id(f) not in negative_ids] + new_facets
        for listener in self.listeners:
            listener.on_insert(self, index, negative)
        logger.debug(f'Inserted generator {index}: {len(negative)} visible, {len(new_facets)} new, '
                     f'{len(self.facets)} facets')
        return negative

    def _pair_facets(self, x, bit, positive, negative, zero):
        d = self.dim
        in_positive = 0
        for facet in positive:
            in_positive |= facet.incidence
        in_negative = 0
        for facet in negative:
            in_negative |= facet.incidence
        edge = in_positive & in_negative

        def relevant(facet):
            return (facet.incidence & edge).bit_count() >= d - 2

        p_simp = [f for f in positive if f.simplicial and relevant(f)]
        p_nonsimp = [f for f in positive if not f.simplicial and relevant(f)]
        n_simp = [f for f in negative if f.simplicial and relevant(f)]
        n_nonsimp = [f for f in negative if not f.simplicial and relevant(f)]
        blockers = n_nonsimp + [f for f in zero if relevant(f)]

        pairs = []

        # subfacets of simplicial negative facets; a key seen twice is interior to the visible part
        table = {}
        seen_twice = set()
        for facet in n_simp:
            for i in bit_indices(facet.incidence):
                key = facet.incidence & ~(1 << i)
                if key & ~edge or key in seen_twice:
                    continue
                if key in table:
                    del table[key]
                    seen_twice.add(key)
                else:
                    table[key] = facet

        for key in [k for k in table if any(not (k & ~g.incidence) for g in blockers)]:
            del table[key]

        for facet in p_simp:
            for i in bit_indices(facet.incidence):
                key = facet.incidence & ~(1 << i)
                partner = table.pop(key, None)
                if partner is not None:
                    pairs.append((facet, partner))

        for key, partner in sorted(table.items()):
            for facet in p_nonsimp:
                if not key & ~facet.incidence:
                    pairs.append((facet, partner))
                    break
            else:
                logger.debug(f'No positive partner for subfacet {bit_indices(key)}')
        self.stats['simplicial_pairs'] += len(pairs)

        nonsimplicial = [f for f in self.facets if not f.simplicial]
        use_rank_test = len(nonsimplicial) >= self.threshold
        for n in n_nonsimp:
            for p in p_simp + p_nonsimp:
                common = n.incidence & p.incidence
                count = common.bit_count()
                if count < d - 2:
                    self.stats['discarded'] += 1
                    continue
                if count == d - 2 and p.simplicial:
                    pairs.append((p, n))
                    self.stats['nonsimplicial_pairs'] += 1
                    continue
                if use_rank_test:
                    self.stats['rank_tests'] += 1
                    vectors = [self.generators[i] for i in bit_indices(common)]
                    accepted = rank(vectors, d) == d - 2
                else:
                    self.stats['containment_tests'] += 1
                    accepted = not any(g is not n and g is not p and not (common & ~g.incidence)
                                       for g in nonsimplicial)
                if accepted:
                    pairs.append((p, n))
                    self.stats['nonsimplicial_pairs'] += 1
                else:
                    self.stats['discarded'] += 1

        new_facets = []
        for p, n in pairs:
            form = combine_forms(p.form, n.form, x)
            incidence = (p.incidence & n.incidence) | bit
            new_facets.append(FacetRecord(form, incidence, self._is_simplicial(incidence)))
        return new_facets

    # -- results -----------------------------------------------------------

    def support_forms(self):
        """Facet forms sorted lexicographically"""
        return sorted((f.form for f in self.facets), key=lambda f: f.coeffs)


def insert_generator(hull, x_new):
    """Append `x_new` to the hull's generator list and insert it"""
    x_new = tuple(x_new)
    if len(x_new) != hull.dim:
        raise DimMismatchError(f'generator {x_new} does not have length {hull.dim}')
    hull.generators.append(x_new)
    hull.insert_generator(len(hull.generators) - 1)
    return hull


def dual_cone(generators, threshold=None, listeners=None):
    """Primitive support forms of the full-dimensional cone spanned by `generators`"""
    generators = [tuple(g) for g in generators]
    if not generators:
        raise NotFullDimError('cannot compute the dual of an empty generator list')
    dim = len(generators[0])
    hull = ConeHull(dim, threshold=threshold, listeners=listeners).build(generators)
    forms = hull.support_forms()
    logger.info(f'Dual cone: {len(forms)} support forms from {len(generators)} generators in dimension {dim}')
    return forms
