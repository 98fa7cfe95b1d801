import numpy as np
import pytest

from rainbowlab.graphs import (
    BalancedPartition,
    BipartiteGraph,
    Digraph,
    Graph,
    KPartiteHypergraph,
    Permutation,
    crossing_codegree,
    min_degree,
    min_semidegree,
)


def test_graph_from_edges_roundtrip():
    g = Graph.from_edges(4, [(1, 2), (3, 2), (4, 1)])
    assert list(g.edges()) == [(1, 2), (1, 4), (2, 3)]
    assert g.has_edge(2, 1) and not g.has_edge(1, 3)
    assert not g.has_edge(1, 9)
    assert g.degrees.tolist() == [2, 2, 1, 1]
    assert g.num_edges == 3


def test_graph_rejects_loops_and_asymmetry():
    a = np.zeros((3, 3), dtype=bool)
    a[0, 1] = True
    with pytest.raises(ValueError):
        Graph(a)
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(2, 2)])


def test_adjacency_is_read_only():
    g = Graph.complete(4)
    with pytest.raises(ValueError):
        g.adj[0, 1] = False


def test_complete_and_empty_degrees():
    assert min_degree(Graph.complete(6)) == 5
    assert min_degree(Graph.empty(6)) == 0


def test_bipartite_edges_either_order():
    b = BipartiteGraph.from_edges([1, 3], [2, 4], [(1, 4), (2, 3)])
    assert b.has_edge(4, 1) and b.has_edge(3, 2)
    assert sorted(b.edges()) == [(1, 4), (3, 2)]
    assert b.to_graph(4).has_edge(1, 4)
    assert b.to_graph(4).is_subgraph_of(Graph.complete(4))


def test_digraph_semidegree():
    d = Digraph.from_arcs(3, [(1, 2), (2, 3), (3, 1)])
    assert min_semidegree(d) == 1
    assert d.has_arc(1, 2) and not d.has_arc(2, 1)


def test_permutation_inverse_and_digest():
    pi = Permutation([3, 1, 2])
    assert [pi(i) for i in (1, 2, 3)] == [3, 1, 2]
    assert pi.inverse().images == (2, 3, 1)
    assert pi.digest() == Permutation([3, 1, 2]).digest()
    assert pi.digest() != Permutation.identity(3).digest()
    assert len(pi.digest()) == 16
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])


def test_balanced_partition_validation():
    part = BalancedPartition([4, 1], [2, 3])
    assert part.v1 == (1, 4)
    assert part.side_mask().tolist() == [True, False, False, True]
    with pytest.raises(ValueError):
        BalancedPartition([1, 2], [2, 3])
    with pytest.raises(ValueError):
        BalancedPartition([1], [2, 3])


def test_kpartite_labels_and_codegree():
    h = KPartiteHypergraph.complete(3, 3)
    assert list(h.part(1)) == [4, 5, 6]
    assert h.part_of(7) == 2
    assert crossing_codegree(h, 2) == 3
    assert crossing_codegree(h, 1) == 9
    with pytest.raises(ValueError):
        crossing_codegree(h, 3)
    h2 = KPartiteHypergraph.uniform(3, 2, [(1, 3, 5)])
    assert h2.has_edge((5, 1, 3))
    assert crossing_codegree(h2, 2) == 0


def test_subgraph_relation():
    g = Graph.from_edges(3, [(1, 2)])
    assert g.is_subgraph_of(Graph.complete(3))
    assert not Graph.complete(3).is_subgraph_of(g)
