import pytest

from fuzzint.lattice import chain_lattice, diamond_lattice, m3_lattice, pentagon_lattice
from fuzzint.monoid import builtin_chain, godel_tensor, join_tensor, validate_gl
from fuzzint.powerset import Ground


@pytest.fixture(scope="session")
def c2():
    return builtin_chain("godel", 2)


@pytest.fixture(scope="session")
def godel3():
    return builtin_chain("godel", 3)


@pytest.fixture(scope="session")
def luk3():
    return builtin_chain("lukasiewicz", 3)


@pytest.fixture(scope="session")
def diamond_gl():
    return validate_gl(godel_tensor(diamond_lattice()))


@pytest.fixture(scope="session")
def diamond_join():
    # quasi-monoidal only: tensor = join is not integral
    return join_tensor(diamond_lattice())


@pytest.fixture(scope="session")
def lattice_zoo():
    """Assorted validated lattices with at most six elements."""
    return {
        "c2": chain_lattice(["0", "1"]),
        "c3": chain_lattice(["0", "1/2", "1"]),
        "c4": chain_lattice(["0", "a", "b", "1"]),
        "c5": chain_lattice(["0", "a", "b", "c", "1"]),
        "c6": chain_lattice(["0", "a", "b", "c", "d", "1"]),
        "diamond": diamond_lattice(),
        "pentagon": pentagon_lattice(),
        "m3": m3_lattice(),
    }


@pytest.fixture(scope="session")
def one_point_c3(godel3):
    return Ground(points=("p1",), algebra=godel3)


@pytest.fixture(scope="session")
def two_point_c3(godel3):
    return Ground(points=("p1", "p2"), algebra=godel3)


@pytest.fixture(scope="session")
def one_point_c2(c2):
    return Ground(points=("p1",), algebra=c2)


@pytest.fixture(scope="session")
def two_point_c2(c2):
    return Ground(points=("p1", "p2"), algebra=c2)


def naive_lub(lat, subset):
    """Least upper bound computed only from the order table (oracle)."""
    ubs = [k for k in range(len(lat)) if all(lat.leq[i][k] for i in subset)]
    mins = [u for u in ubs if all(lat.leq[u][v] for v in ubs)]
    assert len(mins) == 1
    return mins[0]


def naive_glb(lat, subset):
    lbs = [k for k in range(len(lat)) if all(lat.leq[k][i] for i in subset)]
    maxs = [l for l in lbs if all(lat.leq[v][l] for v in lbs)]
    assert len(maxs) == 1
    return maxs[0]
