from itertools import permutations, product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowlab.graphs import BipartiteGraph, Digraph, KPartiteHypergraph
from rainbowlab.sampling import RandomSeed
from rainbowlab.solvers import (
    PartSizeMismatch,
    SolveBudget,
    TooSmall,
    UnbalancedParts,
    find_bipartite_pm,
    find_directed_hamilton,
    find_kpartite_pm,
    hall_violator_ok,
)


def _has_pm(biadj):
    m = biadj.shape[0]
    return any(all(biadj[i, s[i]] for i in range(m)) for s in permutations(range(m)))


def test_bipartite_pm_all_3x3():
    for bits in range(512):
        a = np.array([(bits >> t) & 1 for t in range(9)], dtype=bool).reshape(3, 3)
        b = BipartiteGraph([1, 2, 3], [4, 5, 6], a)
        res = find_bipartite_pm(b)
        assert res.found == _has_pm(a)
        if res.found:
            assert sorted(u for u, _ in res.matching) == [1, 2, 3]
            assert sorted(v for _, v in res.matching) == [4, 5, 6]
            assert all(b.has_edge(u, v) for u, v in res.matching)
        else:
            assert hall_violator_ok(b, res.hall_violator)


@given(st.integers(1, 7), st.floats(0.1, 0.9), st.integers(0, 2**32))
@settings(max_examples=80, deadline=None)
def test_bipartite_pm_matches_brute_force(m, p, s):
    rng = np.random.default_rng(s)
    a = rng.random((m, m)) < p
    b = BipartiteGraph(list(range(1, m + 1)), list(range(m + 1, 2 * m + 1)), a)
    res = find_bipartite_pm(b)
    assert res.found == _has_pm(a)
    if not res.found:
        assert hall_violator_ok(b, res.hall_violator)


def test_bipartite_unbalanced():
    b = BipartiteGraph([1, 2], [3], np.ones((2, 1), dtype=bool))
    with pytest.raises(UnbalancedParts):
        find_bipartite_pm(b)


def _has_dhc(adj):
    n = adj.shape[0]
    return any(
        all(adj[c[i], c[(i + 1) % n]] for i in range(n))
        for c in ((0,) + rest for rest in permutations(range(1, n)))
    )


def test_directed_hamilton_all_tournaments_on_5():
    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    agree = 0
    for bits in range(1 << len(pairs)):
        a = np.zeros((5, 5), dtype=bool)
        for t, (i, j) in enumerate(pairs):
            if (bits >> t) & 1:
                a[i, j] = True
            else:
                a[j, i] = True
        res = find_directed_hamilton(Digraph(a))
        assert res.status in ("found", "none")
        assert res.found == _has_dhc(a)
        if res.found:
            w = [v - 1 for v in res.witness]
            assert sorted(w) == list(range(5))
            assert all(a[w[i], w[(i + 1) % 5]] for i in range(5))
        agree += 1
    assert agree == 1024


def test_directed_hamilton_too_small():
    with pytest.raises(TooSmall):
        find_directed_hamilton(Digraph.complete(2))


def test_directed_hamilton_triangle():
    res = find_directed_hamilton(Digraph.complete(3))
    assert res.found and sorted(res.witness) == [1, 2, 3]


def test_heuristic_on_dense_random_digraph():
    n = 80
    rng = np.random.default_rng(5)
    a = rng.random((n, n)) < 0.3
    np.fill_diagonal(a, False)
    res = find_directed_hamilton(Digraph(a), seed=RandomSeed(1))
    assert res.found
    w = [v - 1 for v in res.witness]
    assert sorted(w) == list(range(n))
    assert all(a[w[i], w[(i + 1) % n]] for i in range(n))


def test_heuristic_reports_exhausted_not_none():
    # vertices 1 and n both have 2 as their only out-neighbour, so no Hamilton
    # cycle exists; above the exact limit the heuristic can only give up
    n = 20
    a = np.zeros((n, n), dtype=bool)
    for i in range(n - 1):
        a[i, i + 1] = True
    a[n - 1, 0] = False
    a[n - 1, 1] = True
    a[2, 0] = True
    res = find_directed_hamilton(Digraph(a), SolveBudget(node_limit=2000, time_ms=2000, restarts=3), RandomSeed(0))
    assert res.status == "exhausted"


def _has_kpm(h):
    n = h.sizes[0]
    edges = set(h.edges)
    off = h.offsets
    for perms in product(permutations(range(n)), repeat=h.k - 1):
        ok = True
        for a in range(n):
            e = tuple(sorted([off[0] + a + 1] + [off[t + 1] + perms[t][a] + 1 for t in range(h.k - 1)]))
            if e not in edges:
                ok = False
                break
        if ok:
            return True
    return False


def test_kpartite_pm_exhaustive_oracle():
    rng = np.random.default_rng(0)
    cells = list(product(range(3), repeat=3))
    for _ in range(300):
        keep = rng.random(len(cells)) < rng.uniform(0.1, 0.6)
        t = np.zeros((3, 3, 3), dtype=bool)
        for c, k in zip(cells, keep):
            t[c] = k
        h = KPartiteHypergraph.from_tensor(t)
        res = find_kpartite_pm(h)
        assert res.found == _has_kpm(h)
        if res.found:
            used = [v for e in res.witness for v in e]
            assert sorted(used) == list(range(1, 10))
            assert all(h.has_edge(e) for e in res.witness)


def test_kpartite_size_mismatch():
    h = KPartiteHypergraph((2, 3, 2), [])
    with pytest.raises(PartSizeMismatch):
        find_kpartite_pm(h)
