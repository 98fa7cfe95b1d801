"""Core graph types shared by the whole package.

Every type stores its adjacency as dense boolean rows (one row per vertex)
and is immutable after construction.  Vertex labels are 1-indexed at the
public surface and 0-indexed inside the arrays.
"""

from __future__ import annotations

import hashlib
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Graph",
    "BipartiteGraph",
    "Digraph",
    "KPartiteHypergraph",
    "Permutation",
    "BalancedPartition",
    "min_degree",
    "max_degree",
    "min_semidegree",
    "crossing_codegree",
]


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class Graph:
    """Simple undirected graph on the vertex set {1..n}."""

    __slots__ = ("_adj", "__dict__")

    def __init__(self, adj, *, check: bool = True):
        a = np.array(adj, dtype=bool)
        if check:
            if a.ndim != 2 or a.shape[0] != a.shape[1]:
                raise ValueError("adjacency must be a square matrix")
            if a.diagonal().any():
                raise ValueError("self-loops are not allowed")
            if not np.array_equal(a, a.T):
                raise ValueError("adjacency must be symmetric")
        self._adj = _frozen(a)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        a = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) outside [1, {n}]")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            a[u - 1, v - 1] = a[v - 1, u - 1] = True
        return cls(a, check=False)

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(~np.eye(n, dtype=bool), check=False)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(np.zeros((n, n), dtype=bool), check=False)

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def adj(self) -> np.ndarray:
        return self._adj

    @cached_property
    def degrees(self) -> np.ndarray:
        return _frozen(self._adj.sum(axis=1))

    def degree(self, v: int) -> int:
        return int(self.degrees[v - 1])

    def neighbors(self, v: int) -> list[int]:
        return (np.flatnonzero(self._adj[v - 1]) + 1).tolist()

    def has_edge(self, u: int, v: int) -> bool:
        if not (1 <= u <= self.n and 1 <= v <= self.n):
            return False
        return bool(self._adj[u - 1, v - 1])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        us, vs = np.nonzero(np.triu(self._adj, 1))
        for u, v in zip(us.tolist(), vs.tolist()):
            yield u + 1, v + 1

    @property
    def num_edges(self) -> int:
        return int(self.degrees.sum()) // 2

    def is_subgraph_of(self, other: Graph) -> bool:
        return self.n == other.n and not (self._adj & ~other._adj).any()

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self._adj, other._adj)

    def __hash__(self):
        return hash((self.n, self._adj.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.num_edges})"


class BipartiteGraph:
    """Bipartite graph with parts ``left`` and ``right`` (original labels).

    Internally the parts are relabeled to positions ``0..len(part)-1`` and the
    edge relation is a ``len(left) x len(right)`` boolean matrix.
    """

    __slots__ = ("_left", "_right", "_bi", "__dict__")

    def __init__(self, left: Sequence[int], right: Sequence[int], biadj, *, check: bool = True):
        self._left = tuple(int(x) for x in left)
        self._right = tuple(int(x) for x in right)
        b = np.array(biadj, dtype=bool)
        if check:
            if b.shape != (len(self._left), len(self._right)):
                raise ValueError(
                    f"biadjacency shape {b.shape} does not match parts "
                    f"({len(self._left)}, {len(self._right)})"
                )
            if set(self._left) & set(self._right):
                raise ValueError("parts must be disjoint")
            if len(set(self._left)) != len(self._left) or len(set(self._right)) != len(self._right):
                raise ValueError("repeated vertex inside a part")
        self._bi = _frozen(b)

    @classmethod
    def from_edges(cls, left, right, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
        li = {v: i for i, v in enumerate(left)}
        ri = {v: i for i, v in enumerate(right)}
        b = np.zeros((len(li), len(ri)), dtype=bool)
        for u, v in edges:
            if u in li and v in ri:
                b[li[u], ri[v]] = True
            elif v in li and u in ri:
                b[li[v], ri[u]] = True
            else:
                raise ValueError(f"edge ({u}, {v}) does not cross the parts")
        return cls(left, right, b)

    @property
    def left(self) -> tuple[int, ...]:
        return self._left

    @property
    def right(self) -> tuple[int, ...]:
        return self._right

    @property
    def parts(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self._left, self._right

    @property
    def biadj(self) -> np.ndarray:
        return self._bi

    @property
    def n(self) -> int:
        return len(self._left) + len(self._right)

    @cached_property
    def _left_pos(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self._left)}

    @cached_property
    def _right_pos(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self._right)}

    @cached_property
    def left_degrees(self) -> np.ndarray:
        return _frozen(self._bi.sum(axis=1))

    @cached_property
    def right_degrees(self) -> np.ndarray:
        return _frozen(self._bi.sum(axis=0))

    @cached_property
    def degrees(self) -> np.ndarray:
        return _frozen(np.concatenate([self.left_degrees, self.right_degrees]))

    def degree(self, v: int) -> int:
        if v in self._left_pos:
            return int(self.left_degrees[self._left_pos[v]])
        if v in self._right_pos:
            return int(self.right_degrees[self._right_pos[v]])
        raise KeyError(v)

    def has_edge(self, u: int, v: int) -> bool:
        lp, rp = self._left_pos, self._right_pos
        if u in lp and v in rp:
            return bool(self._bi[lp[u], rp[v]])
        if v in lp and u in rp:
            return bool(self._bi[lp[v], rp[u]])
        return False

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(left_label, right_label)``."""
        for i, j in zip(*np.nonzero(self._bi)):
            yield self._left[i], self._right[j]

    @property
    def num_edges(self) -> int:
        return int(self._bi.sum())

    def to_graph(self, n: int | None = None) -> Graph:
        n = n if n is not None else max(self._left + self._right, default=0)
        a = np.zeros((n, n), dtype=bool)
        li = np.asarray(self._left, dtype=np.intp) - 1
        ri = np.asarray(self._right, dtype=np.intp) - 1
        a[np.ix_(li, ri)] = self._bi
        a[np.ix_(ri, li)] = self._bi.T
        return Graph(a, check=False)

    def is_subgraph_of(self, other: BipartiteGraph) -> bool:
        return (
            self.parts == other.parts
            and not (self._bi & ~other._bi).any()
        )

    def __eq__(self, other):
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return self.parts == other.parts and np.array_equal(self._bi, other._bi)

    def __hash__(self):
        return hash((self._left, self._right, self._bi.tobytes()))

    def __repr__(self):
        return f"BipartiteGraph({len(self._left)}+{len(self._right)}, edges={self.num_edges})"


class Digraph:
    """Loopless digraph on {1..n}; ``adj[u, v]`` is the arc u -> v."""

    __slots__ = ("_adj", "__dict__")

    def __init__(self, adj, *, check: bool = True):
        a = np.array(adj, dtype=bool)
        if check:
            if a.ndim != 2 or a.shape[0] != a.shape[1]:
                raise ValueError("adjacency must be a square matrix")
            if a.diagonal().any():
                raise ValueError("self-arcs are not allowed")
        self._adj = _frozen(a)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
        a = np.zeros((n, n), dtype=bool)
        for u, v in arcs:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"arc ({u}, {v}) outside [1, {n}]")
            if u == v:
                raise ValueError(f"self-arc at {u}")
            a[u - 1, v - 1] = True
        return cls(a, check=False)

    @classmethod
    def complete(cls, n: int) -> Digraph:
        return cls(~np.eye(n, dtype=bool), check=False)

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def adj(self) -> np.ndarray:
        return self._adj

    @cached_property
    def out_degrees(self) -> np.ndarray:
        return _frozen(self._adj.sum(axis=1))

    @cached_property
    def in_degrees(self) -> np.ndarray:
        return _frozen(self._adj.sum(axis=0))

    def has_arc(self, u: int, v: int) -> bool:
        if not (1 <= u <= self.n and 1 <= v <= self.n):
            return False
        return bool(self._adj[u - 1, v - 1])

    def arcs(self) -> Iterator[tuple[int, int]]:
        us, vs = np.nonzero(self._adj)
        for u, v in zip(us.tolist(), vs.tolist()):
            yield u + 1, v + 1

    @property
    def num_arcs(self) -> int:
        return int(self._adj.sum())

    def is_subgraph_of(self, other: Digraph) -> bool:
        return self.n == other.n and not (self._adj & ~other._adj).any()

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return np.array_equal(self._adj, other._adj)

    def __hash__(self):
        return hash((self.n, self._adj.tobytes()))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={self.num_arcs})"


class KPartiteHypergraph:
    """k-partite k-uniform hypergraph.

    Part ``t`` (0-based) owns the global labels
    ``offset_t + 1 .. offset_t + sizes[t]``, so with equal part sizes ``n`` the
    parts are ``{1..n}, {n+1..2n}, ...``.  Edges are kept as sorted tuples of
    global labels, one vertex per part.
    """

    __slots__ = ("_sizes", "_edges", "__dict__")

    def __init__(self, sizes: Sequence[int], edges: Iterable[Sequence[int]]):
        self._sizes = tuple(int(s) for s in sizes)
        if len(self._sizes) < 2:
            raise ValueError("need at least two parts")
        if any(s < 1 for s in self._sizes):
            raise ValueError("part sizes must be positive")
        canon = set()
        for e in edges:
            t = tuple(sorted(int(x) for x in e))
            if len(t) != self.k or [self.part_of(x) for x in t] != list(range(self.k)):
                raise ValueError(f"edge {tuple(e)} is not a crossing {self.k}-set")
            canon.add(t)
        self._edges = frozenset(canon)

    @classmethod
    def uniform(cls, k: int, n: int, edges: Iterable[Sequence[int]] = ()) -> KPartiteHypergraph:
        return cls((n,) * k, edges)

    @classmethod
    def complete(cls, k: int, n: int) -> KPartiteHypergraph:
        return cls.from_tensor(np.ones((n,) * k, dtype=bool))

    @classmethod
    def from_tensor(cls, tensor) -> KPartiteHypergraph:
        t = np.asarray(tensor, dtype=bool)
        offsets = np.concatenate([[0], np.cumsum(t.shape)[:-1]])
        edges = [tuple(int(i) + int(o) + 1 for i, o in zip(idx, offsets)) for idx in zip(*np.nonzero(t))]
        h = cls(t.shape, edges)
        h.__dict__["tensor"] = _frozen(t.copy())
        return h

    @property
    def k(self) -> int:
        return len(self._sizes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return self._sizes

    @property
    def n(self) -> int:
        """Common part size (only defined when all parts have equal size)."""
        if len(set(self._sizes)) != 1:
            raise ValueError(f"parts have unequal sizes {self._sizes}")
        return self._sizes[0]

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for s in self._sizes:
            out.append(acc)
            acc += s
        return tuple(out)

    def part(self, t: int) -> range:
        return range(self.offsets[t] + 1, self.offsets[t] + self._sizes[t] + 1)

    def part_of(self, v: int) -> int:
        for t, (o, s) in enumerate(zip(self.offsets, self._sizes)):
            if o < v <= o + s:
                return t
        raise ValueError(f"vertex {v} outside the hypergraph")

    @property
    def edges(self) -> frozenset[tuple[int, ...]]:
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def has_edge(self, e: Sequence[int]) -> bool:
        return tuple(sorted(e)) in self._edges

    @cached_property
    def tensor(self) -> np.ndarray:
        t = np.zeros(self._sizes, dtype=bool)
        if self._edges:
            idx = np.array(sorted(self._edges)) - 1 - np.array(self.offsets)
            t[tuple(idx.T)] = True
        return _frozen(t)

    def is_subgraph_of(self, other: KPartiteHypergraph) -> bool:
        return self._sizes == other._sizes and self._edges <= other._edges

    def __eq__(self, other):
        if not isinstance(other, KPartiteHypergraph):
            return NotImplemented
        return self._sizes == other._sizes and self._edges == other._edges

    def __hash__(self):
        return hash((self._sizes, self._edges))

    def __repr__(self):
        return f"KPartiteHypergraph(sizes={self._sizes}, edges={len(self._edges)})"


class Permutation:
    """Bijection of {1..m}, stored as its image sequence."""

    __slots__ = ("_images", "__dict__")

    def __init__(self, images: Sequence[int]):
        imgs = tuple(int(x) for x in images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"{imgs} is not a permutation of 1..{len(imgs)}")
        self._images = imgs

    @classmethod
    def identity(cls, m: int) -> Permutation:
        return cls(range(1, m + 1))

    @classmethod
    def from_array(cls, arr) -> Permutation:
        """Build from a 0-indexed image array."""
        return cls(np.asarray(arr) + 1)

    @property
    def m(self) -> int:
        return len(self._images)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @cached_property
    def array(self) -> np.ndarray:
        """0-indexed images."""
        return _frozen(np.asarray(self._images, dtype=np.intp) - 1)

    def __call__(self, i: int) -> int:
        return self._images[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * self.m
        for i, img in enumerate(self._images, 1):
            inv[img - 1] = i
        return Permutation(inv)

    def digest(self) -> str:
        """64-bit hex digest of the image sequence."""
        data = np.asarray(self._images, dtype="<u4").tobytes()
        return hashlib.blake2b(data, digest_size=8).hexdigest()

    def __len__(self):
        return self.m

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self):
        return hash(self._images)

    def __repr__(self):
        return f"Permutation({list(self._images)})"


class BalancedPartition:
    """Ordered split of {1..n} into two halves ``(V1, V2)``."""

    __slots__ = ("v1", "v2")

    def __init__(self, v1: Iterable[int], v2: Iterable[int]):
        a, b = tuple(sorted(int(x) for x in v1)), tuple(sorted(int(x) for x in v2))
        n = len(a) + len(b)
        if len(a) != len(b):
            raise ValueError(f"unbalanced partition: |V1|={len(a)}, |V2|={len(b)}")
        if sorted(a + b) != list(range(1, n + 1)):
            raise ValueError(f"parts do not partition 1..{n}")
        self.v1 = a
        self.v2 = b

    @classmethod
    def halves(cls, n: int) -> BalancedPartition:
        return cls(range(1, n // 2 + 1), range(n // 2 + 1, n + 1))

    @property
    def n(self) -> int:
        return 2 * len(self.v1)

    def side_mask(self) -> np.ndarray:
        """Boolean mask (0-indexed) that is True on V1."""
        mask = np.zeros(self.n, dtype=bool)
        mask[np.asarray(self.v1, dtype=np.intp) - 1] = True
        return mask

    def __iter__(self):
        return iter((self.v1, self.v2))

    def __eq__(self, other):
        if not isinstance(other, BalancedPartition):
            return NotImplemented
        return self.v1 == other.v1 and self.v2 == other.v2

    def __hash__(self):
        return hash((self.v1, self.v2))

    def __repr__(self):
        return f"BalancedPartition({list(self.v1)}, {list(self.v2)})"


def min_degree(g: Graph | BipartiteGraph) -> int:
    if g.n < 1:
        raise ValueError("graph has no vertices")
    return int(g.degrees.min())


def max_degree(g: Graph | BipartiteGraph) -> int:
    if g.n < 1:
        raise ValueError("graph has no vertices")
    return int(g.degrees.max())


def min_semidegree(d: Digraph) -> int:
    if d.n < 1:
        raise ValueError("digraph has no vertices")
    return int(min(d.out_degrees.min(), d.in_degrees.min()))


def crossing_codegree(h: KPartiteHypergraph, d: int) -> int:
    """Minimum number of edges containing a crossing d-set."""
    if not 0 < d < h.k:
        raise ValueError(f"need 0 < d < k, got d={d}, k={h.k}")
    t = h.tensor.astype(np.int64)
    best = None
    for keep in combinations(range(h.k), d):
        drop = tuple(ax for ax in range(h.k) if ax not in keep)
        val = int(t.sum(axis=drop).min())
        best = val if best is None else min(best, val)
    return best


def crossing_dsets(h: KPartiteHypergraph, d: int) -> Iterator[tuple[int, ...]]:
    """All crossing d-sets as sorted tuples of global labels."""
    for parts in combinations(range(h.k), d):
        yield from product(*(h.part(t) for t in parts))
