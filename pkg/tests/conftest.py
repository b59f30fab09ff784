import pytest

from trimat import catalog


@pytest.fixture(scope="session")
def corpus():
    """The closed-surface corpus as (name, triangulation) pairs."""
    return [(name, catalog.standard(name)) for name in catalog.CLOSED_SURFACES]


@pytest.fixture(scope="session")
def tetrahedron():
    return catalog.standard("tetrahedron")


@pytest.fixture(scope="session")
def octahedron():
    return catalog.standard("octahedron")


@pytest.fixture(scope="session")
def icosahedron():
    return catalog.standard("icosahedron")


@pytest.fixture(scope="session")
def torus7():
    return catalog.standard("torus7")


@pytest.fixture(scope="session")
def tp10():
    return catalog.tp10()


@pytest.fixture(scope="session")
def tp12():
    return catalog.tp12()
