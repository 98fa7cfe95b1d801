import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowlab.graphs import BalancedPartition, Graph, KPartiteHypergraph, Permutation
from rainbowlab.reduction import (
    NotHamiltonian,
    NotPerfect,
    RainbowStructure,
    aux_bipartite_scan,
    aux_digraph_scan,
    build_aux_bipartite,
    build_aux_digraph,
    build_aux_kpartite,
    induce_bipartite,
    lift_cycle,
    lift_hyper_matching,
    lift_matching,
    verify_rainbow,
)
from rainbowlab.sampling import GraphFamily, RandomSeed, sample_balanced_partition, sample_family, sample_permutation
from rainbowlab.solvers import find_bipartite_pm, find_directed_hamilton, find_kpartite_pm


@given(st.integers(1, 6), st.integers(0, 2**32))
@settings(max_examples=50, deadline=None)
def test_aux_bipartite_matches_scan(m, s):
    seed = RandomSeed(s)
    part = sample_balanced_partition(2 * m, seed.child("part"))
    fam = induce_bipartite(sample_family(2 * m, m, 0.5, seed.child("fam")), part)
    pi = sample_permutation(m, seed.child("pi"))
    b = build_aux_bipartite(fam, pi)
    assert set(b.edges()) == aux_bipartite_scan(fam, pi)


@given(st.integers(3, 8), st.integers(0, 2**32))
@settings(max_examples=50, deadline=None)
def test_aux_digraph_matches_scan_and_out_degrees(n, s):
    seed = RandomSeed(s)
    fam = sample_family(n, n, 0.5, seed.child("fam"))
    pi = sample_permutation(n, seed.child("pi"))
    d = build_aux_digraph(fam, pi)
    assert set(d.arcs()) == aux_digraph_scan(fam, pi)
    for i in range(1, n + 1):
        assert d.out_degrees[i - 1] == fam[pi(i)].degree(i)


def test_identical_colors_give_pi_independent_aux():
    g = Graph.from_edges(4, [(1, 3), (1, 4), (2, 4)])
    part = BalancedPartition([1, 2], [3, 4])
    fam = induce_bipartite(GraphFamily(4, [g, g]), part)
    assert build_aux_bipartite(fam, Permutation([1, 2])) == build_aux_bipartite(fam, Permutation([2, 1]))


def test_triangle_cycle_is_rainbow():
    fam = GraphFamily(3, [Graph.complete(3)] * 3)
    pi = Permutation([2, 3, 1])
    res = find_directed_hamilton(build_aux_digraph(fam, pi))
    rs = lift_cycle(res.witness, pi, fam)
    assert sorted(rs.colors) == [1, 2, 3]
    assert verify_rainbow(rs, fam).ok


def test_lift_matching_colors_by_v1_position():
    part = BalancedPartition([2, 4], [1, 3])
    fam = induce_bipartite(GraphFamily(4, [Graph.complete(4)] * 2), part)
    pi = Permutation([2, 1])
    rs = lift_matching([(2, 1), (3, 4)], pi, fam)
    assert dict(rs.elements) == {(2, 1): 2, (4, 3): 1}
    assert verify_rainbow(rs, GraphFamily(4, [Graph.complete(4)] * 2)).ok
    with pytest.raises(NotPerfect):
        lift_matching([(2, 1)], pi, fam)


def test_lift_cycle_rejects_bad_orders():
    fam = GraphFamily(4, [Graph.complete(4)] * 4)
    with pytest.raises(NotHamiltonian):
        lift_cycle([1, 2, 3, 3], Permutation.identity(4), fam)


def test_verify_flags_each_defect():
    fam = GraphFamily(4, [Graph.from_edges(4, [(1, 2), (3, 4)]), Graph.complete(4)])
    good = RainbowStructure("matching", (((1, 2), 1), ((3, 4), 2)))
    assert verify_rainbow(good, fam).ok
    twice = RainbowStructure("matching", (((1, 2), 2), ((3, 4), 2)))
    msgs = verify_rainbow(twice, fam).violations
    assert "color 2 used twice" in msgs and "colors never used: [1]" in msgs
    missing = RainbowStructure("matching", (((1, 3), 1), ((2, 4), 2)))
    assert "edge (1, 3) not in color 1" in verify_rainbow(missing, fam).violations
    partial = RainbowStructure("matching", (((1, 2), 1), ((1, 4), 2)))
    v = verify_rainbow(partial, fam).violations
    assert "matching edges share a vertex" in v and "matching is not perfect" in v


def test_verify_cycle_defects():
    fam = GraphFamily(6, [Graph.complete(6)] * 6)
    two_triangles = RainbowStructure(
        "hamilton-cycle",
        tuple(((u, v), c) for c, (u, v) in enumerate([(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)], 1)),
    )
    assert "edges form more than one cycle" in verify_rainbow(two_triangles, fam).violations
    assert not verify_rainbow(RainbowStructure("hamilton-cycle", ()), fam).ok


def test_verify_never_raises_on_garbage():
    fam = GraphFamily(4, [Graph.complete(4)] * 2)
    rep = verify_rainbow(RainbowStructure("matching", (((1, 2, 3), 1),)), fam)
    assert not rep.ok


def test_kpartite_pipeline_on_complete_colors():
    colors = [KPartiteHypergraph.complete(3, 3)] * 3
    pi = Permutation([3, 1, 2])
    h = build_aux_kpartite(colors, pi)
    res = find_kpartite_pm(h)
    rs = lift_hyper_matching(res.witness, pi, colors)
    assert verify_rainbow(rs, colors).ok
    assert sorted(rs.colors) == [1, 2, 3]


@given(st.integers(1, 5), st.integers(0, 2**32))
@settings(max_examples=60, deadline=None)
def test_every_found_pm_lifts_to_rainbow(m, s):
    seed = RandomSeed(s)
    host = sample_family(2 * m, m, 0.7, seed.child("fam"))
    part = sample_balanced_partition(2 * m, seed.child("part"))
    fam = induce_bipartite(host, part)
    pi = sample_permutation(m, seed.child("pi"))
    res = find_bipartite_pm(build_aux_bipartite(fam, pi))
    if res.found:
        assert verify_rainbow(lift_matching(res.matching, pi, fam), host).ok
