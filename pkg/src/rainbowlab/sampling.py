"""Seeded generators for random graphs, families, permutations and partitions.

Every random object is drawn from its own counter-based stream keyed by
``(root, experiment, trial, object, ...)``, so trials can run in any order
or in parallel and still reproduce bit for bit.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence

import numpy as np

from .graphs import BalancedPartition, BipartiteGraph, Graph, KPartiteHypergraph, Permutation

__all__ = [
    "RandomSeed",
    "GraphFamily",
    "stream_label",
    "sample_gnp",
    "sample_bipartite",
    "sample_family",
    "sample_permutation",
    "sample_balanced_partition",
    "sample_kpartite_color",
]


def stream_label(name: str) -> int:
    """Stable 32-bit label for a textual stream name."""
    return int.from_bytes(hashlib.blake2b(name.encode(), digest_size=4).digest(), "little")


@dataclass(frozen=True)
class RandomSeed:
    root: int
    labels: tuple[int, ...] = ()

    def __post_init__(self):
        if not 0 <= self.root < 2**64:
            raise ValueError(f"root seed must be a 64-bit unsigned integer, got {self.root}")
        if any(lab < 0 for lab in self.labels):
            raise ValueError("stream labels must be non-negative")

    def child(self, *labels: int | str) -> RandomSeed:
        conv = tuple(stream_label(x) if isinstance(x, str) else int(x) for x in labels)
        return RandomSeed(self.root, self.labels + conv)

    def generator(self) -> np.random.Generator:
        ss = np.random.SeedSequence(self.root, spawn_key=self.labels)
        return np.random.Generator(np.random.Philox(ss))


@dataclass(frozen=True)
class GraphFamily:
    """Ordered colors on a common vertex set {1..n}.

    Colors are either all :class:`Graph` or all :class:`BipartiteGraph` on the
    shared ``bipartition``.
    """

    n: int
    colors: tuple
    bipartition: BalancedPartition | None = None

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        for c, g in enumerate(self.colors, 1):
            if self.bipartition is None:
                if not isinstance(g, Graph) or g.n != self.n:
                    raise ValueError(f"color {c} is not a graph on {self.n} vertices")
            else:
                if not isinstance(g, BipartiteGraph) or g.parts != (self.bipartition.v1, self.bipartition.v2):
                    raise ValueError(f"color {c} does not live on the family bipartition")

    @property
    def m(self) -> int:
        return len(self.colors)

    @property
    def is_bipartite(self) -> bool:
        return self.bipartition is not None

    def __len__(self):
        return self.m

    def __getitem__(self, c: int):
        """Color ``c`` (1-indexed)."""
        if not 1 <= c <= self.m:
            raise IndexError(c)
        return self.colors[c - 1]

    def stack(self) -> np.ndarray:
        """Adjacency (or biadjacency) matrices stacked along a leading color axis."""
        if self.m == 0:
            shape = (0, len(self.bipartition.v1), len(self.bipartition.v2)) if self.is_bipartite else (0, self.n, self.n)
            return np.zeros(shape, dtype=bool)
        if self.is_bipartite:
            return np.stack([g.biadj for g in self.colors])
        return np.stack([g.adj for g in self.colors])

    def min_degrees(self) -> list[int]:
        return [int(g.degrees.min()) if g.n else 0 for g in self.colors]

    def max_degrees(self) -> list[int]:
        return [int(g.degrees.max()) if g.n else 0 for g in self.colors]


def _check_p(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")


@lru_cache(maxsize=16)
def _pairs(n: int) -> tuple[np.ndarray, np.ndarray]:
    iu = np.triu_indices(n, 1)
    for a in iu:
        a.setflags(write=False)
    return iu


def sample_gnp(n: int, p: float, seed: RandomSeed) -> Graph:
    """G(n, p); pairs are consumed in lexicographic order (1,2), (1,3), ..."""
    _check_p(p)
    rng = seed.generator()
    iu, ju = _pairs(n)
    hit = rng.random(iu.size) < p
    a = np.zeros((n, n), dtype=bool)
    a[iu[hit], ju[hit]] = True
    a |= a.T
    return Graph(a, check=False)


def sample_bipartite(part: BalancedPartition, p: float, seed: RandomSeed) -> BipartiteGraph:
    """B(n, p) on ``part``; pairs (i, j) in V1 x V2 drawn row by row."""
    _check_p(p)
    rng = seed.generator()
    m1, m2 = len(part.v1), len(part.v2)
    return BipartiteGraph(part.v1, part.v2, rng.random((m1, m2)) < p, check=False)


def sample_family(
    n: int,
    m: int,
    p: float,
    seed: RandomSeed,
    bipartition: BalancedPartition | None = None,
) -> GraphFamily:
    _check_p(p)
    if bipartition is not None:
        if bipartition.n != n:
            raise ValueError(f"bipartition covers {bipartition.n} vertices, expected {n}")
        colors = [sample_bipartite(bipartition, p, seed.child(c)) for c in range(m)]
    else:
        colors = [sample_gnp(n, p, seed.child(c)) for c in range(m)]
    return GraphFamily(n, colors, bipartition)


def sample_permutation(m: int, seed: RandomSeed) -> Permutation:
    if m < 1:
        raise ValueError("permutation size must be at least 1")
    return Permutation.from_array(seed.generator().permutation(m))


def sample_balanced_partition(n: int, seed: RandomSeed) -> BalancedPartition:
    if n % 2:
        raise ValueError(f"balanced partition needs even n, got {n}")
    order = seed.generator().permutation(n) + 1
    return BalancedPartition(order[: n // 2], order[n // 2:])


def permutations_array(m: int, count: int, seed: RandomSeed) -> np.ndarray:
    """``count`` independent uniform permutations of range(m), one per row."""
    return np.stack([seed.child(t).generator().permutation(m) for t in range(count)]) if count else np.zeros((0, m), dtype=np.intp)


def family_from_graphs(graphs: Sequence[Graph | BipartiteGraph], bipartition: BalancedPartition | None = None) -> GraphFamily:
    if not graphs and bipartition is None:
        raise ValueError("cannot infer n from an empty family")
    n = bipartition.n if bipartition is not None else graphs[0].n
    return GraphFamily(n, tuple(graphs), bipartition)


def sample_kpartite_color(k: int, n: int, d: int, floor: int, keep: float, seed: RandomSeed) -> KPartiteHypergraph:
    """Random k-partite k-graph with every crossing d-set in at least ``floor`` edges.

    Starts from the complete hypergraph and visits the crossing k-sets in a
    seeded random order, deleting each with probability ``1 - keep`` whenever
    no d-subset would drop below ``floor``.
    """
    _check_p(keep)
    if floor > n ** (k - d):
        raise ValueError(f"floor {floor} exceeds the maximum codegree {n ** (k - d)}")
    rng = seed.generator()
    t = np.ones((n,) * k, dtype=bool)
    subsets = list(combinations(range(k), d))
    counts = [np.full((n,) * d, n ** (k - d), dtype=np.int64) for _ in subsets]
    cells = np.array(list(product(range(n), repeat=k)), dtype=np.intp)
    order = rng.permutation(len(cells))
    coins = rng.random(len(cells)) >= keep
    for idx in order:
        if not coins[idx]:
            continue
        cell = tuple(cells[idx])
        keys = [tuple(cell[a] for a in sub) for sub in subsets]
        if all(cnt[key] > floor for cnt, key in zip(counts, keys)):
            t[cell] = False
            for cnt, key in zip(counts, keys):
                cnt[key] -= 1
    return KPartiteHypergraph.from_tensor(t)
