import pytest

from embed import e8_lattice
from icosian import generate_vertices
from mod2 import build_phi, build_points, build_quotient
from polytopes import build_array, label_all, pairs
from symmetry import generate_group


@pytest.fixture(scope="session")
def vertices():
    return generate_vertices()


@pytest.fixture(scope="session")
def pair_data():
    return pairs()


@pytest.fixture(scope="session")
def array():
    return build_array()


@pytest.fixture(scope="session")
def labels():
    return label_all()


@pytest.fixture(scope="session")
def group():
    return generate_group()


@pytest.fixture(scope="session")
def e8():
    return e8_lattice()


@pytest.fixture(scope="session")
def quotient():
    return build_quotient()


@pytest.fixture(scope="session")
def phi():
    return build_phi()


@pytest.fixture(scope="session")
def points():
    return build_points()
