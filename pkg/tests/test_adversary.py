from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowlab.adversary import (
    STRATEGIES,
    AdversaryStrategy,
    UnsatisfiableFloor,
    apply_adversary,
    aux_window,
    dirac_floor,
    verify_subfamily,
)
from rainbowlab.graphs import Graph
from rainbowlab.sampling import GraphFamily, RandomSeed, sample_balanced_partition, sample_family


def test_floor_arithmetic_is_exact():
    # 0.6 * 400 * 0.15 is 35.99999... in binary floating point
    assert dirac_floor(400, 0.15, 0.1) == 36
    assert dirac_floor(400, 0.2, 0.1, bipartite=True) == 24
    assert dirac_floor(150, 0.4, 0.1) == 36
    assert dirac_floor(10, 1, 0.1) == 6
    assert aux_window(400, 0.15, 0.1) == Fraction(33)
    assert aux_window(400, 0.15, 0.1, bipartite=True) == Fraction(33, 2)


@pytest.mark.parametrize("kind", STRATEGIES)
def test_every_strategy_respects_floor(kind):
    fam = sample_family(40, 5, 0.5, RandomSeed(3))
    floor = min(12, min(fam.min_degrees()))
    sub = apply_adversary(fam, AdversaryStrategy(kind, focus=3), floor, RandomSeed(4))
    rep = verify_subfamily(fam, sub, floor)
    assert rep.ok, rep.violations


@pytest.mark.parametrize("kind", STRATEGIES)
def test_strategies_deterministic(kind):
    fam = sample_family(30, 3, 0.6, RandomSeed(5))
    s = AdversaryStrategy(kind)
    assert apply_adversary(fam, s, 10, RandomSeed(6)) == apply_adversary(fam, s, 10, RandomSeed(6))


def test_greedy_removes_to_floor_on_complete_graph():
    fam = GraphFamily(8, [Graph.complete(8)])
    sub = apply_adversary(fam, AdversaryStrategy("greedy-global"), 4, RandomSeed(0))
    assert sub[1].degrees.min() == 4
    assert sub[1].num_edges == 16


def test_star_cut_isolates_focus_down_to_floor():
    fam = GraphFamily(6, [Graph.complete(6)])
    sub = apply_adversary(fam, AdversaryStrategy("star-cut", focus=2), 2, RandomSeed(0))
    assert sub[1].degree(2) == 2
    assert sub[1].is_subgraph_of(fam[1])


def test_bipartite_bias_only_touches_split_side():
    fam = GraphFamily(8, [Graph.complete(8)])
    strat = AdversaryStrategy("bipartite-bias", split=(1, 2, 3, 4))
    sub = apply_adversary(fam, strat, 4, RandomSeed(1))
    for u, v in fam[1].edges():
        if u >= 5 or v >= 5:
            assert sub[1].has_edge(u, v)


def test_strict_and_clamp_modes():
    g = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])
    fam = GraphFamily(4, [g])
    with pytest.raises(UnsatisfiableFloor) as info:
        apply_adversary(fam, AdversaryStrategy("random-thinning"), 3, RandomSeed(0))
    assert info.value.color == 1 and info.value.vertex == 2
    sub = apply_adversary(fam, AdversaryStrategy("random-thinning"), 3, RandomSeed(0), clamp=True)
    assert sub[1].degree(1) == 3 and sub[1].degree(3) == 3
    assert verify_subfamily(fam, sub, 3, clamp=True).ok
    assert not verify_subfamily(fam, sub, 3).ok


def test_bipartite_family_thinning():
    part = sample_balanced_partition(20, RandomSeed(1))
    fam = sample_family(20, 10, 0.8, RandomSeed(2), bipartition=part)
    floor = dirac_floor(20, 0.5, 0.1, bipartite=True)
    sub = apply_adversary(fam, AdversaryStrategy("random-thinning"), floor, RandomSeed(3))
    assert sub.bipartition == part
    assert verify_subfamily(fam, sub, floor).ok


@given(st.integers(0, 2**32), st.integers(0, 8), st.sampled_from(STRATEGIES))
@settings(max_examples=40, deadline=None)
def test_subfamily_property(s, floor, kind):
    fam = sample_family(16, 2, 0.7, RandomSeed(s))
    floor = min(floor, min(fam.min_degrees()))
    sub = apply_adversary(fam, AdversaryStrategy(kind), floor, RandomSeed(s).child(1))
    assert verify_subfamily(fam, sub, floor).ok
