import random

import pytest
from hypothesis import strategies as st

from ecctrees.tree import Tree, tree_from_pruefer


@st.composite
def random_trees(draw, min_n=1, max_n=16):
    n = draw(st.integers(min_n, max_n))
    if n <= 2:
        return Tree(n, ((0, 1),) if n == 2 else ())
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return tree_from_pruefer(tuple(seq), n)


def seeded_random_trees(count, max_n, seed=0, min_n=3):
    """Deterministic sample of labelled random trees (Pruefer based)."""
    rng = random.Random(seed)
    trees = []
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        seq = tuple(rng.randrange(n) for _ in range(n - 2))
        trees.append(tree_from_pruefer(seq, n))
    return trees


@pytest.fixture(scope="session")
def small_free_trees():
    """All free trees with n <= 10, keyed by n."""
    from ecctrees.enumeration import free_trees

    return {n: free_trees(n) for n in range(1, 11)}
