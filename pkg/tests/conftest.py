# tests/conftest.py - Shared Fixtures
import pytest

from tests.oracles import magic_square_equations

# Cone between the rays (2,1) and (1,3)
WEDGE_RAYS = [(2, 1), (1, 3)]
WEDGE_FORMS = [(-1, 2), (3, -1)]
WEDGE_BASIS = [(1, 1), (1, 2), (1, 3), (2, 1)]

# Cone over the unit square at height 1
SQUARE_RAYS = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
SQUARE_FORMS = [(-1, 0, 1), (0, -1, 1), (0, 1, 0), (1, 0, 0)]


def unit_vectors(dim):
    return [tuple(1 if i == j else 0 for i in range(dim)) for j in range(dim)]


@pytest.fixture
def wedge_rays():
    return list(WEDGE_RAYS)


@pytest.fixture
def square_rays():
    return list(SQUARE_RAYS)


@pytest.fixture
def magic3():
    return magic_square_equations(3)


@pytest.fixture
def magic4():
    return magic_square_equations(4)


@pytest.fixture
def write_problem(tmp_path):
    """Write a problem file and return its path"""
    def _write(text, name='problem.in'):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return _write
