import pytest

from twouniform.catalog import catalog
from twouniform.lattice import enumerate_sublattices
from twouniform.torus_map import is_polyhedral, quotient


@pytest.fixture(scope="session")
def small_quotients():
    """Every quotient of index <= 3, with its polyhedrality verdict."""
    out = []
    for i in range(1, 21):
        t = catalog(i)
        for n in range(1, 4):
            for m in enumerate_sublattices(n):
                x = quotient(t, m)
                out.append((i, m, x, is_polyhedral(x)[0]))
    return out
