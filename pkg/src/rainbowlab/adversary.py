"""Adversarial thinning of graph families down to a minimum-degree floor.

A strategy returns spanning subgraphs ``H_i`` of the colors ``G_i`` with every
vertex degree at least the floor.  The portfolio is a sampled stand-in for a
universally quantified adversary, not a worst case.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .graphs import BipartiteGraph, Graph
from .numeric import exact_fraction
from .sampling import GraphFamily, RandomSeed

__all__ = [
    "STRATEGIES",
    "AdversaryStrategy",
    "UnsatisfiableFloor",
    "DimensionMismatch",
    "SubfamilyReport",
    "aux_window",
    "dirac_floor",
    "apply_adversary",
    "verify_subfamily",
]

STRATEGIES = ("none", "random-thinning", "greedy-global", "bipartite-bias", "star-cut")


class UnsatisfiableFloor(ValueError):
    def __init__(self, color: int, vertex: int, degree: int, floor: int):
        super().__init__(f"color {color}, vertex {vertex}: host degree {degree} < floor {floor}")
        self.color = color
        self.vertex = vertex
        self.degree = degree
        self.floor = floor


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class AdversaryStrategy:
    kind: str = "none"
    focus: int = 1
    split: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in STRATEGIES:
            raise ValueError(f"unknown adversary strategy {self.kind!r}; choose from {STRATEGIES}")
        if self.focus < 1:
            raise ValueError("focus vertex is 1-indexed")


def dirac_floor(n: int, p, eps, bipartite: bool = False) -> int:
    """ceil((1/2 + eps) n p), halved for bipartite colors."""
    val = (Fraction(1, 2) + exact_fraction(eps)) * n * exact_fraction(p)
    if bipartite:
        val /= 2
    return math.ceil(val)


def aux_window(n: int, p, eps, bipartite: bool = False) -> Fraction:
    """(1/2 + eps/2) n p, or (1/2 + eps/2) m p with m = n/2 for bipartite colors."""
    val = (Fraction(1, 2) + exact_fraction(eps) / 2) * n * exact_fraction(p)
    return val / 2 if bipartite else val


# -- strategies on a symmetric 0/1 matrix with per-vertex floors -------------


def _random_thinning(a: np.ndarray, floors: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    deg = a.sum(axis=1)
    active = (deg > floors) & (deg > 0)
    # largest deletion probability keeping every unclamped vertex at its floor in expectation
    if active.any():
        r = float(np.min(1.0 - floors[active] / deg[active]))
    else:
        r = 0.0
    r = max(0.0, r)
    host = a
    iu, ju = np.nonzero(np.triu(host, 1))
    drop = rng.random(iu.size) < r
    h = host.copy()
    h[iu[drop], ju[drop]] = False
    h[ju[drop], iu[drop]] = False
    hdeg = h.sum(axis=1)
    for v in np.flatnonzero(hdeg < floors):
        need = int(floors[v] - hdeg[v])
        if need <= 0:
            continue
        deleted = np.flatnonzero(host[v] & ~h[v])
        back = rng.permutation(deleted)[:need]
        h[v, back] = True
        h[back, v] = True
        hdeg[v] += back.size
        hdeg[back] += 1
    return h


def _greedy_global(a: np.ndarray, floors: np.ndarray) -> np.ndarray:
    h = a.copy()
    deg = h.sum(axis=1).astype(np.int64)
    slack = (deg - floors).tolist()
    heap = []
    for u, v in zip(*np.nonzero(np.triu(h, 1))):
        u, v = int(u), int(v)
        s = min(slack[u], slack[v])
        if s > 0:
            heap.append((-s, u, v))
    heapq.heapify(heap)
    while heap:
        neg, u, v = heapq.heappop(heap)
        s = min(slack[u], slack[v])
        if s <= 0:
            continue
        if s != -neg:
            # slacks only shrink, so a stale key is re-queued at its true priority
            heapq.heappush(heap, (-s, u, v))
            continue
        h[u, v] = h[v, u] = False
        slack[u] -= 1
        slack[v] -= 1
    return h


def _delete_in_order(h: np.ndarray, floors: np.ndarray, pairs) -> np.ndarray:
    deg = h.sum(axis=1)
    for u, v in pairs:
        if h[u, v] and deg[u] > floors[u] and deg[v] > floors[v]:
            h[u, v] = h[v, u] = False
            deg[u] -= 1
            deg[v] -= 1
    return h


def _bipartite_bias(a: np.ndarray, floors: np.ndarray, side: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    h = a.copy()
    inside = np.triu(h & side[:, None] & side[None, :], 1)
    iu, ju = np.nonzero(inside)
    order = rng.permutation(iu.size)
    return _delete_in_order(h, floors, zip(iu[order].tolist(), ju[order].tolist()))


def _star_cut(a: np.ndarray, floors: np.ndarray, focus: int) -> np.ndarray:
    h = a.copy()
    deg = h.sum(axis=1)
    nbrs = np.flatnonzero(h[focus])
    # high-degree neighbours first, ties by label
    order = sorted(nbrs.tolist(), key=lambda u: (-int(deg[u]), u))
    return _delete_in_order(h, floors, ((focus, u) for u in order))


def _vertex_floors(deg: np.ndarray, floor: int, clamp: bool, color: int, labels) -> np.ndarray:
    floors = np.full(deg.shape, floor, dtype=np.int64)
    low = np.flatnonzero(deg < floor)
    if low.size:
        if not clamp:
            v = int(low[0])
            raise UnsatisfiableFloor(color, int(labels[v]), int(deg[v]), floor)
        floors[low] = deg[low]
    return floors


def apply_adversary(
    family: GraphFamily,
    strategy: AdversaryStrategy,
    floor: int,
    seed: RandomSeed,
    *,
    clamp: bool = False,
) -> GraphFamily:
    """Thin every color of ``family`` down towards ``floor``.

    With ``clamp=False`` a host vertex below the floor raises
    :class:`UnsatisfiableFloor`.  With ``clamp=True`` such a vertex keeps its
    host degree, which is the best any spanning subgraph can do.
    """
    if floor < 0:
        raise ValueError("floor must be non-negative")
    if strategy.kind == "none":
        for c, g in enumerate(family.colors, 1):
            labels = _labels(g)
            _vertex_floors(np.asarray(g.degrees), floor, clamp, c, labels)
        return family
    out = []
    for c, g in enumerate(family.colors, 1):
        a, labels = _as_matrix(g)
        deg = a.sum(axis=1)
        floors = _vertex_floors(deg, floor, clamp, c, labels)
        rng = seed.child(c - 1).generator()
        kind = strategy.kind
        if kind == "random-thinning":
            h = _random_thinning(a, floors, rng)
        elif kind == "greedy-global":
            h = _greedy_global(a, floors)
        elif kind == "bipartite-bias":
            h = _bipartite_bias(a, floors, _split_mask(strategy, labels), rng)
        else:
            pos = {lab: i for i, lab in enumerate(labels)}
            if strategy.focus not in pos:
                raise ValueError(f"focus vertex {strategy.focus} not in the graph")
            h = _star_cut(a, floors, pos[strategy.focus])
        out.append(_from_matrix(g, h))
    return GraphFamily(family.n, out, family.bipartition)


def _labels(g) -> list[int]:
    if isinstance(g, BipartiteGraph):
        return list(g.left) + list(g.right)
    return list(range(1, g.n + 1))


def _as_matrix(g):
    """Symmetric adjacency over the vertex order of :func:`_labels`."""
    if isinstance(g, BipartiteGraph):
        m1, m2 = g.biadj.shape
        a = np.zeros((m1 + m2, m1 + m2), dtype=bool)
        a[:m1, m1:] = g.biadj
        a[m1:, :m1] = g.biadj.T
        return a, _labels(g)
    return g.adj.copy(), _labels(g)


def _from_matrix(g, h: np.ndarray):
    if isinstance(g, BipartiteGraph):
        m1 = len(g.left)
        return BipartiteGraph(g.left, g.right, h[:m1, m1:], check=False)
    return Graph(h, check=False)


def _split_mask(strategy: AdversaryStrategy, labels: list[int]) -> np.ndarray:
    if strategy.split is not None:
        side = set(strategy.split)
    else:
        top = max(labels)
        side = set(range(1, top // 2 + 1))
    return np.array([lab in side for lab in labels], dtype=bool)


@dataclass
class SubfamilyReport:
    floor: int
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_subfamily(host: GraphFamily, sub: GraphFamily, floor: int, *, clamp: bool = False) -> SubfamilyReport:
    """Check containment per color and the degree floor.

    With ``clamp`` a vertex whose host degree is below ``floor`` only has to
    keep its host degree.
    """
    if host.n != sub.n or host.m != sub.m:
        raise DimensionMismatch(f"host (n={host.n}, m={host.m}) vs sub (n={sub.n}, m={sub.m})")
    rep = SubfamilyReport(floor)
    for c, (g, h) in enumerate(zip(host.colors, sub.colors), 1):
        if type(g) is not type(h):
            rep.violations.append(f"color {c}: type mismatch")
            continue
        if not h.is_subgraph_of(g):
            extra = next((e for e in h.edges() if not g.has_edge(*e)), None)
            rep.violations.append(f"color {c}: edge {extra} not in host")
        labels = _labels(h)
        need = np.full(len(labels), floor)
        if clamp:
            need = np.minimum(need, g.degrees)  # same vertex order as _labels
        for i in np.flatnonzero(np.asarray(h.degrees) < need):
            rep.violations.append(f"color {c}: vertex {labels[i]} has degree {int(h.degrees[i])} < {int(need[i])}")
    return rep
