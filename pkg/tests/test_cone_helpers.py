# tests/test_cone_helpers.py - Cone Construction and Extreme Rays
import pytest

from models.errors import DimMismatchError, ZeroConeError
from models.lattice import GENERATED_LATTICE
from tests.conftest import SQUARE_FORMS, SQUARE_RAYS
from utils.cone_helpers import (ambient_support_forms, cone_from_forms, create_cone_state, extreme_rays,
                                forms_are_pointed, is_pointed, span_equations, standard_map)
from utils.lattice_helpers import identity_embedding


class TestCreateConeState:
    def test_square_cone(self):
        cone = create_cone_state(SQUARE_RAYS + [(1, 1, 2)])
        assert cone.dim == 3 and cone.pointed
        assert [f.coeffs for f in cone.support_forms] == SQUARE_FORMS
        assert cone.extreme_ray_flags == (True, True, True, True, False)
        assert extreme_rays(cone) == sorted(SQUARE_RAYS)

    def test_zero_and_duplicate_generators_dropped(self):
        cone = create_cone_state([(1, 0), (0, 0), (0, 1), (1, 0)])
        assert cone.generators == ((1, 0), (0, 1))

    def test_non_primitive_generators_give_primitive_rays(self):
        cone = create_cone_state([(2, 0), (0, 3), (1, 1)])
        assert extreme_rays(cone) == [(0, 1), (1, 0)]

    def test_lower_dimensional_cone(self):
        cone = create_cone_state([(1, 0, 0), (1, 2, 0)])
        assert cone.dim == 2 and cone.ambient_dim == 3
        assert extreme_rays(cone) == [(1, 0, 0), (1, 2, 0)]
        assert [f.coeffs for f in ambient_support_forms(cone)] == [(0, 1, 0), (2, -1, 0)]
        assert span_equations(cone.embedding) in ([(0, 0, 1)], [(0, 0, -1)])

    def test_generated_lattice(self):
        cone = create_cone_state([(2, 0), (0, 2)], GENERATED_LATTICE)
        assert cone.embedding.lattice_index == 4
        assert extreme_rays(cone) == [(0, 2), (2, 0)]

    def test_not_pointed(self):
        cone = create_cone_state([(1, 0), (-1, 0), (0, 1)])
        assert not cone.pointed
        assert not is_pointed(cone)
        assert not any(cone.extreme_ray_flags)

    def test_zero_cone(self):
        with pytest.raises(ZeroConeError):
            create_cone_state([(0, 0)])


class TestStandardMap:
    def test_values(self):
        cone = create_cone_state(SQUARE_RAYS)
        value = standard_map((1, 1, 3), cone)
        assert value.sigma_values == (2, 2, 1, 1)
        assert value.tdeg == 6

    def test_dimension_mismatch(self):
        cone = create_cone_state(SQUARE_RAYS)
        with pytest.raises(DimMismatchError):
            standard_map((1, 1), cone)


class TestConeFromForms:
    def test_known_forms(self):
        cone = cone_from_forms(2, [(0, 1), (1, 0)], [(1, 0), (0, 1), (1, 1)], identity_embedding(2))
        assert cone.pointed
        assert cone.extreme_ray_flags == (True, True, False)

    def test_pointedness_from_forms(self):
        assert forms_are_pointed([(1, 0), (0, 1)], 2)
        assert not forms_are_pointed([(0, 1)], 2)
