from itertools import permutations

import pytest

from dyck312 import dyck, perm


@pytest.fixture(scope="session")
def paths_by_n():
    """All Dyck paths of semilength 0..10, keyed by semilength."""
    return {n: dyck.enumerate_dyck(n) for n in range(11)}


@pytest.fixture(scope="session")
def avoiders_by_n():
    """All 312-avoiding permutations of length 0..9, filtered from the full
    factorial sweep with the stack-based check."""
    out = {}
    for n in range(10):
        out[n] = [
            pi
            for pi in (perm.Permutation(t) for t in permutations(range(1, n + 1)))
            if perm.avoids_312(pi)
        ]
    return out
