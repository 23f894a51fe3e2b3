# tests/test_reduction.py - Reduction and Auto-Reduction
import pytest

from models.cone import SupportForm
from models.dual_state import Candidate
from models.errors import UnsortedInputError
from tests.conftest import WEDGE_BASIS, WEDGE_FORMS
from utils.reduction_logic import auto_reduce, graded_value, reduce_to_hilbert_basis, reduces

ORTHANT = [(1, 0), (0, 1)]


def values(vectors, forms):
    return sorted((graded_value(v, forms) for v in vectors), key=lambda v: v.sort_key())


class TestGradedValue:
    def test_sigma_and_total_degree(self):
        value = graded_value((1, 2), WEDGE_FORMS)
        assert value.sigma_values == (3, 1)
        assert value.tdeg == 4

    def test_support_form_objects(self):
        value = graded_value((1, 2), [SupportForm(f) for f in WEDGE_FORMS])
        assert value.sigma_values == (3, 1)

    def test_reduces(self):
        x = graded_value((2, 1), ORTHANT)
        y = graded_value((1, 0), ORTHANT)
        assert reduces(y, x)
        assert not reduces(x, y)
        assert not reduces(x, x)


class TestReduceToHilbertBasis:
    def test_orthant(self):
        candidates = values([(1, 0), (0, 1), (1, 1), (2, 1), (0, 3)], ORTHANT)
        basis = reduce_to_hilbert_basis(candidates)
        assert sorted(v.vector for v in basis) == [(0, 1), (1, 0)]

    def test_wedge_candidates(self):
        candidates = values([(2, 1), (1, 3), (1, 1), (1, 2), (2, 2), (2, 3)], WEDGE_FORMS)
        basis = reduce_to_hilbert_basis(candidates)
        assert sorted(v.vector for v in basis) == WEDGE_BASIS

    def test_unsorted_input(self):
        candidates = [graded_value((2, 1), ORTHANT), graded_value((1, 0), ORTHANT)]
        with pytest.raises(UnsortedInputError):
            reduce_to_hilbert_basis(candidates)

    def test_units_are_dropped(self):
        forms = [(1, 0)]
        candidates = values([(0, 1), (1, 0), (2, 0)], forms)
        basis = reduce_to_hilbert_basis(candidates)
        assert [v.vector for v in basis] == [(1, 0)]

    def test_empty(self):
        assert reduce_to_hilbert_basis([]) == []

    def test_accepts_candidates(self):
        candidates = [Candidate(v) for v in values([(1, 0), (0, 1), (1, 1)], ORTHANT)]
        basis = reduce_to_hilbert_basis(candidates)
        assert sorted(v.vector for v in basis) == [(0, 1), (1, 0)]


class TestAutoReduce:
    def test_keeps_irreducible_items(self):
        items = [graded_value(v, ORTHANT) for v in [(1, 1), (1, 0), (0, 1), (3, 0)]]
        kept = auto_reduce(items)
        assert [v.vector for v in kept] == [(0, 1), (1, 0)]

    def test_with_forms(self):
        items = [graded_value(v, ORTHANT) for v in [(1, 1), (1, 2), (1, 3), (2, 1)]]
        kept = auto_reduce(items, forms=WEDGE_FORMS)
        assert sorted(v.vector for v in kept) == [(1, 1), (1, 2), (1, 3), (2, 1)]

    def test_returns_original_items(self):
        items = [Candidate(graded_value(v, ORTHANT), generation=3) for v in [(2, 0), (1, 0)]]
        kept = auto_reduce(items)
        assert kept == [items[1]]
        assert kept[0].generation == 3

    def test_ties_prefer_smaller_vectors(self):
        items = [graded_value(v, [(1, 0), (0, 1)]) for v in [(1, 0), (0, 1)]]
        assert [v.vector for v in auto_reduce(items)] == [(0, 1), (1, 0)]
