# tests/test_dual.py - Halfspace Cutting (Dual Algorithm)
import pytest

from models.cone import SupportForm
from models.dual_state import CASE_A, CASE_B, DualState
from tests.conftest import SQUARE_RAYS, WEDGE_BASIS, WEDGE_FORMS, unit_vectors
from utils.dual_logic import cut_by_halfspace, dual_hilbert_basis, order_hyperplanes, run_cuts
from utils.lattice_helpers import dot
from utils.primal_logic import primal_hilbert_basis
from utils.reduction_logic import graded_value


def form(*coeffs):
    return SupportForm(tuple(coeffs))


class TestCutByHalfspace:
    def test_first_cut_of_the_plane(self):
        outcome = cut_by_halfspace(DualState.full_lattice(2), form(1, 0))
        assert outcome.case == CASE_B
        assert outcome.h_element == (1, 0)
        assert outcome.plus_state.basis_vectors() == [(1, 0)]
        assert outcome.plus_state.unit_basis in ([(0, 1)], [(0, -1)])
        assert outcome.minus_basis == [(-1, 0)]

    def test_second_cut_gives_the_orthant(self):
        state = cut_by_halfspace(DualState.full_lattice(2), form(1, 0)).plus_state
        outcome = cut_by_halfspace(state, form(0, 1))
        assert outcome.case == CASE_B
        assert outcome.plus_state.basis_vectors() == [(0, 1), (1, 0)]
        assert outcome.plus_state.unit_basis == []
        assert outcome.minus_basis == [(0, -1), (1, 0)]

    def test_case_a_without_negative_elements(self):
        state, _ = run_cuts(2, [form(1, 0), form(0, 1)])
        outcome = cut_by_halfspace(state, form(1, 1))
        assert outcome.case == CASE_A
        assert outcome.h_element is None
        assert outcome.plus_state.basis_vectors() == [(0, 1), (1, 0)]
        assert outcome.plus_state.inserted_forms[-1] == form(1, 1)

    def test_case_a_with_sums(self):
        state, _ = run_cuts(2, [form(1, 0), form(0, 1)])
        outcome = cut_by_halfspace(state, form(-1, 2))
        assert outcome.case == CASE_A
        assert outcome.plus_state.basis_vectors() == [(0, 1), (1, 1), (2, 1)]
        assert outcome.generations >= 1

    def test_case_b_normalization_bound(self):
        outcome = cut_by_halfspace(DualState.full_lattice(3), form(2, 3, 0))
        h = outcome.h_element
        assert dot((2, 3, 0), h) == 1
        assert outcome.plus_state.basis_vectors() == [h]
        assert len(outcome.plus_state.unit_basis) == 2
        for u in outcome.plus_state.unit_basis:
            assert dot((2, 3, 0), u) == 0

    def test_invariants_after_each_cut(self):
        forms = [form(*f) for f in WEDGE_FORMS]
        state = DualState.full_lattice(2)
        for f in forms:
            state = cut_by_halfspace(state, f).plus_state
            for x in state.basis_vectors():
                assert all(g.evaluate(x) >= 0 for g in state.inserted_forms)
            for u in state.unit_basis:
                assert all(g.evaluate(u) == 0 for g in state.inserted_forms)

    def test_minus_basis_matches_opposite_cut(self):
        state, _ = run_cuts(2, [form(1, 0)])
        outcome = cut_by_halfspace(state, form(-1, 2))
        opposite = cut_by_halfspace(state, form(-1, 2).negated())
        assert sorted(outcome.minus_basis) == opposite.plus_state.basis_vectors()

    def test_basis_is_irreducible(self):
        state, _ = run_cuts(2, [form(*f) for f in WEDGE_FORMS])
        forms = [f.coeffs for f in state.inserted_forms]
        values = [graded_value(x, forms) for x in state.basis_vectors()]
        for x in values:
            for y in values:
                if x.vector != y.vector:
                    assert not all(a >= b for a, b in zip(x.sigma_values, y.sigma_values))


class TestOrderHyperplanes:
    def test_single_form(self):
        assert order_hyperplanes([form(1, 0)]) == [form(1, 0)]

    def test_input_order(self):
        forms = [form(0, 1), form(1, 0), form(1, 1)]
        assert order_hyperplanes(forms, strategy='input') == forms

    def test_heuristic_prefers_fewer_negative_probes(self):
        forms = [form(1, 1), form(1, 0), form(0, 1)]
        ordered = order_hyperplanes(forms, strategy='heuristic')
        assert ordered[0] == form(1, 0)
        assert sorted(f.coeffs for f in ordered) == sorted(f.coeffs for f in forms)

    def test_scores_against_current_state(self):
        forms = [form(-1, 2), form(1, 1)]
        assert order_hyperplanes(forms, strategy='heuristic') == forms
        state, _ = run_cuts(2, [form(1, 0), form(0, 1)])
        # (1, 0) in the basis is cut off by (-1, 2) only
        assert order_hyperplanes(forms, state, strategy='heuristic') == [form(1, 1), form(-1, 2)]

    def test_unit_basis_counts_both_signs(self):
        state = cut_by_halfspace(DualState.full_lattice(2), form(1, 0)).plus_state
        forms = [form(-1, 1), form(1, 1)]
        # (-1, 1) is negative on (1, 0) and on one sign of the unit
        ordered = order_hyperplanes(forms, state, strategy='heuristic')
        assert ordered == [form(1, 1), form(-1, 1)]

    def test_run_cuts_reranks_after_each_cut(self):
        forms = [form(-1, 2), form(0, 1), form(1, 1), form(1, 0)]
        state, trace = run_cuts(2, forms, strategy='heuristic')
        assert sorted(t.form for t in trace) == sorted(f.coeffs for f in forms)
        expected, _ = run_cuts(2, forms, strategy='input')
        assert state.basis_vectors() == expected.basis_vectors()

    def test_unknown_strategy(self):
        with pytest.raises(ValueError):
            order_hyperplanes([form(1, 0), form(0, 1)], strategy='random')

    @pytest.mark.parametrize('strategy', ['heuristic', 'input'])
    def test_result_does_not_depend_on_order(self, strategy):
        forms = [form(0, 1, 0), form(1, 0, 0), form(0, 0, 1)]
        result = dual_hilbert_basis(forms, strategy=strategy)
        assert result.hilbert_basis == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


class TestDualHilbertBasis:
    def test_coordinate_forms(self):
        result = dual_hilbert_basis(unit_vectors(3))
        assert result.hilbert_basis == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
        assert result.pointed and result.unit_group_basis == []

    def test_wedge(self):
        result = dual_hilbert_basis(WEDGE_FORMS)
        assert result.hilbert_basis == WEDGE_BASIS

    def test_square_cone_matches_primal(self):
        forms = [(-1, 0, 1), (0, -1, 1), (0, 1, 0), (1, 0, 0)]
        assert dual_hilbert_basis(forms).hilbert_basis == primal_hilbert_basis(SQUARE_RAYS).hilbert_basis

    def test_matches_primal_in_dimension_three(self):
        primal = primal_hilbert_basis([(1, 0, 1), (0, 1, 1), (1, 2, 0), (3, 0, 1)])
        forms = [f.coeffs for f in primal.support_forms]
        assert dual_hilbert_basis(forms).hilbert_basis == primal.hilbert_basis

    def test_equation(self):
        result = dual_hilbert_basis(unit_vectors(2), equations=[(1, -1)])
        assert result.hilbert_basis == [(1, 1)]
        assert result.dim == 1

    def test_not_pointed(self):
        result = dual_hilbert_basis([(1, 0)])
        assert result.hilbert_basis == [(1, 0)]
        assert not result.pointed
        assert result.unit_group_basis in ([(0, 1)], [(0, -1)])

    def test_trace(self):
        result = dual_hilbert_basis(WEDGE_FORMS, strategy='input')
        assert [t.form for t in result.trace] == WEDGE_FORMS
        assert [t.case for t in result.trace] == [CASE_B, CASE_B]
        assert result.trace[-1].basis_size == 4
        assert result.trace[-1].unit_rank == 0
        assert result.statistics['num_cuts'] == 2

    def test_magic_squares_3x3(self, magic3):
        result = dual_hilbert_basis(unit_vectors(9), equations=magic3)
        assert result.dim == 3
        assert len(result.hilbert_basis) == 5
        primal_rays = primal_hilbert_basis(result.hilbert_basis).extreme_rays
        assert len(primal_rays) == 4
