"""Matching kernel: both backends against a brute-force oracle."""

import itertools
import random

import pytest

from divcert import matching


def brute_lex_min(adjacency):
    n = len(adjacency)
    best = None
    for perm in itertools.permutations(range(n)):
        if all(perm[i] in adjacency[i] for i in range(n)):
            cand = list(perm)
            if best is None or cand < best:
                best = cand
    return best


def random_adjacency(rng, n, solvable=True):
    adj = [set() for _ in range(n)]
    if solvable:
        perm = list(range(n))
        rng.shuffle(perm)
        for i, j in enumerate(perm):
            adj[i].add(j)
    for i in range(n):
        for j in range(n):
            if rng.random() < 0.4:
                adj[i].add(j)
    return [sorted(cols) for cols in adj]


@pytest.mark.parametrize("backend", matching.available_backends())
class TestAgainstBruteForce:
    def test_random_graphs(self, backend):
        rng = random.Random(123)
        for _ in range(1500):
            n = rng.randint(1, 6)
            adj = random_adjacency(rng, n, solvable=rng.random() < 0.7)
            expected = brute_lex_min(adj)
            got = matching.lex_min_perfect_matching(adj, backend=backend)
            assert got == expected

    def test_permutation_support(self, backend):
        rng = random.Random(5)
        for _ in range(100):
            n = rng.randint(1, 12)
            perm = list(range(n))
            rng.shuffle(perm)
            adj = [[perm[i]] for i in range(n)]
            assert matching.lex_min_perfect_matching(adj, backend=backend) == perm

    def test_no_matching(self, backend):
        assert matching.lex_min_perfect_matching([[0], [0]], backend=backend) is None
        assert matching.lex_min_perfect_matching([[], [0]], backend=backend) is None

    def test_complete_graph_is_identity(self, backend):
        adj = [list(range(5)) for _ in range(5)]
        assert matching.lex_min_perfect_matching(adj, backend=backend) == [0, 1, 2, 3, 4]


def test_backends_agree_on_large_instances():
    if len(matching.available_backends()) < 2:
        pytest.skip("compiled backend not built")
    rng = random.Random(99)
    for _ in range(60):
        n = rng.randint(10, 60)
        adj = random_adjacency(rng, n, solvable=rng.random() < 0.8)
        a = matching.lex_min_perfect_matching(adj, backend="python")
        b = matching.lex_min_perfect_matching(adj, backend="compiled")
        assert a == b


def test_backend_selection():
    active = matching.active_backend()
    assert active in matching.available_backends()
    with pytest.raises(ValueError):
        matching.set_active_backend("turbo")
    matching.set_active_backend(active)


def test_csr_builder():
    n, indptr, indices = matching.csr_from_adjacency([[1, 2], [], [0]])
    assert n == 3
    assert list(indptr) == [0, 2, 2, 3]
    assert list(indices) == [1, 2, 0]
