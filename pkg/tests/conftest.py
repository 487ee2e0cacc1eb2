import pytest

from cutpoly.graph import complete_bipartite, configuration, cycle, path
from cutpoly.lattice import lattice_basis
from cutpoly.ehrhart import semigroup_counts


@pytest.fixture(scope="session")
def k23_config():
    return configuration(complete_bipartite(2, 3))


@pytest.fixture(scope="session")
def k22_config():
    return configuration(complete_bipartite(2, 2))


@pytest.fixture(scope="session")
def c4_config():
    return configuration(cycle(4))


@pytest.fixture(scope="session")
def k2_config():
    return configuration(path(1))


@pytest.fixture(scope="session")
def k23_basis(k23_config):
    return lattice_basis(k23_config)


@pytest.fixture(scope="session")
def k23_counts(k23_config):
    """Semigroup-route counts for dilates 0..7 of Cut(K_{2,3}), shared across tests."""
    return semigroup_counts(k23_config, 7)
