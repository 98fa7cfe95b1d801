import numpy as np
import pytest

from rainbowlab.graphs import crossing_codegree
from rainbowlab.sampling import (
    RandomSeed,
    sample_balanced_partition,
    sample_family,
    sample_gnp,
    sample_kpartite_color,
    sample_permutation,
    stream_label,
)


def test_stream_labels_stable():
    assert stream_label("pm") == stream_label("pm")
    assert stream_label("pm") != stream_label("hc")
    assert RandomSeed(5).child("pm", 3) == RandomSeed(5, (stream_label("pm"), 3))


def test_seed_range():
    with pytest.raises(ValueError):
        RandomSeed(-1)
    with pytest.raises(ValueError):
        RandomSeed(2**64)


def test_same_seed_same_graph():
    s = RandomSeed(11).child(4)
    assert sample_gnp(30, 0.3, s) == sample_gnp(30, 0.3, s)
    assert sample_gnp(30, 0.3, s) != sample_gnp(30, 0.3, s.child(0))


def test_gnp_extremes():
    assert sample_gnp(7, 1.0, RandomSeed(0)).num_edges == 21
    assert sample_gnp(7, 0.0, RandomSeed(0)).num_edges == 0
    with pytest.raises(ValueError):
        sample_gnp(7, 1.5, RandomSeed(0))


def test_gnp_edge_frequency():
    # each pair is an independent coin; mean edge count over many draws
    n, p, reps = 12, 0.3, 2000
    counts = [sample_gnp(n, p, RandomSeed(9).child(t)).num_edges for t in range(reps)]
    pairs = n * (n - 1) // 2
    se = np.sqrt(pairs * p * (1 - p) / reps)
    assert abs(np.mean(counts) - pairs * p) < 5 * se


def test_gnp_uses_lexicographic_pairs():
    s = RandomSeed(3)
    u = s.generator().random(6) < 0.5
    g = sample_gnp(4, 0.5, s)
    pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert [g.has_edge(*e) for e in pairs] == u.tolist()


def test_family_colors_are_independent_streams():
    fam = sample_family(10, 4, 0.5, RandomSeed(2))
    assert fam.m == 4
    assert fam[1] == sample_gnp(10, 0.5, RandomSeed(2).child(0))
    assert len({g for g in fam.colors}) == 4


def test_permutation_uniform_over_s3():
    counts = {}
    for t in range(6000):
        pi = sample_permutation(3, RandomSeed(1).child(t))
        counts[pi.images] = counts.get(pi.images, 0) + 1
    assert len(counts) == 6
    # chi-square with 5 dof, 0.999 quantile ~ 20.5
    chi = sum((c - 1000) ** 2 / 1000 for c in counts.values())
    assert chi < 20.5


def test_balanced_partition():
    part = sample_balanced_partition(10, RandomSeed(4))
    assert len(part.v1) == len(part.v2) == 5
    assert sorted(part.v1 + part.v2) == list(range(1, 11))
    with pytest.raises(ValueError):
        sample_balanced_partition(5, RandomSeed(4))


def test_kpartite_color_respects_floor():
    for t in range(10):
        h = sample_kpartite_color(3, 5, 2, 4, 0.3, RandomSeed(8).child(t))
        assert crossing_codegree(h, 2) >= 4
    full = sample_kpartite_color(3, 4, 2, 4, 0.0, RandomSeed(0))
    assert len(full.edges) == 64
    with pytest.raises(ValueError):
        sample_kpartite_color(3, 4, 2, 5, 0.5, RandomSeed(0))
