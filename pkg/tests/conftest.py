import pytest
from hypothesis import strategies as st

from twoclosure import PermGroup, Permutation, random_abelian_cyclic


def permutations(degree):
    return st.permutations(tuple(range(degree))).map(
        lambda xs: Permutation(tuple(xs))
    )


def perm_groups(max_degree=5, max_gens=2):
    """Arbitrary small groups; element counts stay enumeration-friendly."""
    return st.integers(1, max_degree).flatmap(
        lambda n: st.lists(permutations(n), min_size=0, max_size=max_gens).map(
            lambda gs: PermGroup(n, gs)
        )
    )


def abelian_instances(max_degree=10):
    """Seeded block-shift groups: abelian, cyclic constituents."""
    return st.integers(0, 10_000).map(lambda s: random_abelian_cyclic(s, max_degree))


@pytest.fixture(scope="session")
def sweep_pool():
    """The shared pool of random instances the validation sweeps run over."""
    return [random_abelian_cyclic(seed, 10) for seed in range(200)]
