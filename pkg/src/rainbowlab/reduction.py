"""Permutation-indexed auxiliary graphs and lifting of their solutions.

Given colors ``H_1..H_m`` and a permutation ``pi``, vertex ``i`` of the first
part (or of the whole vertex set, for digraphs) draws its edges from color
``pi(i)``.  A perfect matching or Hamilton cycle of the auxiliary graph then
uses every color exactly once.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .graphs import BalancedPartition, BipartiteGraph, Digraph, Graph, KPartiteHypergraph, Permutation
from .sampling import GraphFamily

__all__ = [
    "SizeMismatch",
    "NotPerfect",
    "NotHamiltonian",
    "RainbowStructure",
    "RainbowReport",
    "induce_bipartite",
    "build_aux_bipartite",
    "build_aux_digraph",
    "build_aux_kpartite",
    "lift_matching",
    "lift_cycle",
    "lift_hyper_matching",
    "verify_rainbow",
]


class SizeMismatch(ValueError):
    pass


class NotPerfect(ValueError):
    pass


class NotHamiltonian(ValueError):
    pass


KINDS = ("matching", "hamilton-cycle", "hyper-matching")


@dataclass(frozen=True)
class RainbowStructure:
    kind: str
    elements: tuple[tuple[tuple[int, ...], int], ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown rainbow structure kind {self.kind!r}")
        object.__setattr__(self, "elements", tuple((tuple(e), int(c)) for e, c in self.elements))

    @property
    def edges(self) -> list[tuple[int, ...]]:
        return [e for e, _ in self.elements]

    @property
    def colors(self) -> list[int]:
        return [c for _, c in self.elements]


def induce_bipartite(family: GraphFamily, part: BalancedPartition) -> GraphFamily:
    """Restrict every color to the edges crossing ``part``."""
    if family.is_bipartite:
        raise ValueError("family is already bipartite")
    if part.n != family.n:
        raise SizeMismatch(f"partition of {part.n} vertices for a family on {family.n}")
    li = np.asarray(part.v1, dtype=np.intp) - 1
    ri = np.asarray(part.v2, dtype=np.intp) - 1
    colors = [BipartiteGraph(part.v1, part.v2, g.adj[np.ix_(li, ri)], check=False) for g in family.colors]
    return GraphFamily(family.n, colors, part)


def build_aux_bipartite(family: GraphFamily, pi: Permutation) -> BipartiteGraph:
    if not family.is_bipartite:
        raise ValueError("B_pi needs a family of bipartite colors")
    v1, v2 = family.bipartition.v1, family.bipartition.v2
    m = len(v1)
    if family.m != m:
        raise SizeMismatch(f"{family.m} colors but |V1| = {m}")
    if pi.m != m:
        raise SizeMismatch(f"permutation of {pi.m} for |V1| = {m}")
    stack = family.stack()
    rows = stack[pi.array, np.arange(m), :]
    return BipartiteGraph(v1, v2, rows, check=False)


def build_aux_digraph(family: GraphFamily, pi: Permutation) -> Digraph:
    if family.is_bipartite:
        raise ValueError("D_pi needs a family of full graphs")
    n = family.n
    if family.m != n:
        raise SizeMismatch(f"{family.m} colors on {n} vertices")
    if pi.m != n:
        raise SizeMismatch(f"permutation of {pi.m} for n = {n}")
    stack = family.stack()
    return Digraph(stack[pi.array, np.arange(n), :], check=False)


def _hyper_stack(colors: Sequence[KPartiteHypergraph]) -> np.ndarray:
    sizes = {h.sizes for h in colors}
    if len(sizes) != 1:
        raise SizeMismatch("colors do not share one k-partition")
    return np.stack([h.tensor for h in colors])


def build_aux_kpartite(colors: Sequence[KPartiteHypergraph], pi: Permutation) -> KPartiteHypergraph:
    if not colors:
        raise SizeMismatch("empty family")
    stack = _hyper_stack(colors)
    n1 = stack.shape[1]
    if len(colors) != n1:
        raise SizeMismatch(f"{len(colors)} colors but |V1| = {n1}")
    if pi.m != n1:
        raise SizeMismatch(f"permutation of {pi.m} for |V1| = {n1}")
    return KPartiteHypergraph.from_tensor(stack[pi.array, np.arange(n1)])


def lift_matching(pm: Sequence[tuple[int, int]], pi: Permutation, family: GraphFamily) -> RainbowStructure:
    """Color the B_pi edge ``{i, j}`` (i in V1) with ``pi(i)``."""
    v1, v2 = family.bipartition.v1, family.bipartition.v2
    pos = {v: a for a, v in enumerate(v1, 1)}
    left = [i if i in pos else j for i, j in pm]
    right = [j if i in pos else i for i, j in pm]
    if sorted(left) != list(v1) or sorted(right) != list(v2):
        raise NotPerfect("matching does not cover both parts exactly once")
    elems = [((i, j), pi(pos[i])) for i, j in zip(left, right)]
    assert len({c for _, c in elems}) == len(elems)
    return RainbowStructure("matching", tuple(elems))


def lift_cycle(hc: Sequence[int], pi: Permutation, family: GraphFamily) -> RainbowStructure:
    """Color the arc ``(i, j)`` of a Hamilton cycle of D_pi with ``pi(i)``."""
    n = family.n
    order = [int(v) for v in hc]
    if n < 3:
        raise NotHamiltonian(f"no Hamilton cycle in a simple graph on {n} vertices")
    if sorted(order) != list(range(1, n + 1)):
        raise NotHamiltonian("cycle does not visit every vertex exactly once")
    elems = [((u, order[(t + 1) % n]), pi(u)) for t, u in enumerate(order)]
    assert len({c for _, c in elems}) == n
    return RainbowStructure("hamilton-cycle", tuple(elems))


def lift_hyper_matching(pm: Sequence[Sequence[int]], pi: Permutation, colors: Sequence[KPartiteHypergraph]) -> RainbowStructure:
    h0 = colors[0]
    first = h0.part(0)
    edges = [tuple(sorted(e)) for e in pm]
    if sorted(e[0] for e in edges) != list(first):
        raise NotPerfect("matching does not cover V1 exactly once")
    used = [v for e in edges for v in e]
    if len(set(used)) != len(used) or len(used) != sum(h0.sizes):
        raise NotPerfect("matching edges overlap or miss vertices")
    elems = [(e, pi(e[0] - first.start + 1)) for e in edges]
    return RainbowStructure("hyper-matching", tuple(elems))


@dataclass
class RainbowReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def verify_rainbow(rs: RainbowStructure, family) -> RainbowReport:
    """Check a rainbow structure against its family; never raises."""
    rep = RainbowReport()
    try:
        _verify(rs, family, rep.violations)
    except Exception as exc:  # malformed input is reported, not raised
        rep.violations.append(f"malformed structure: {exc!r}")
    return rep


def _verify(rs: RainbowStructure, family, out: list[str]) -> None:
    if isinstance(family, GraphFamily):
        colors, m = family.colors, family.m
    else:
        colors, m = tuple(family), len(family)
    counts = Counter(rs.colors)
    for c, k in sorted(counts.items()):
        if k > 1:
            out.append(f"color {c} used twice" if k == 2 else f"color {c} used {k} times")
        if not 1 <= c <= m:
            out.append(f"color {c} outside 1..{m}")
    missing = sorted(set(range(1, m + 1)) - set(counts))
    if missing:
        out.append(f"colors never used: {missing}")
    for e, c in rs.elements:
        if not 1 <= c <= m:
            continue
        g = colors[c - 1]
        inside = g.has_edge(e) if isinstance(g, KPartiteHypergraph) else (len(e) == 2 and g.has_edge(*e))
        if not inside:
            out.append(f"edge {e} not in color {c}")

    if rs.kind == "matching":
        used = [v for e in rs.edges for v in e]
        if len(set(used)) != len(used):
            out.append("matching edges share a vertex")
        n = family.n if isinstance(family, GraphFamily) else None
        if n is not None and sorted(set(used)) != list(range(1, n + 1)):
            out.append("matching is not perfect")
    elif rs.kind == "hyper-matching":
        used = [v for e in rs.edges for v in e]
        if len(set(used)) != len(used):
            out.append("matching edges share a vertex")
        total = sum(colors[0].sizes) if colors else 0
        if len(set(used)) != total:
            out.append("matching is not perfect")
    else:
        n = family.n
        edges = rs.edges
        if n < 3 or len(edges) != n:
            out.append(f"cycle has {len(edges)} edges on {n} vertices")
            return
        if any(len(e) != 2 or e[0] == e[1] for e in edges):
            out.append("cycle contains a malformed edge")
            return
        if len({frozenset(e) for e in edges}) != n:
            out.append("cycle repeats an edge")
        deg = Counter(v for e in edges for v in e)
        if sorted(deg) != list(range(1, n + 1)) or set(deg.values()) != {2}:
            out.append("edges do not form a spanning 2-regular graph")
            return
        adj = {v: [] for v in deg}
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        seen, stack = {1}, [1]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            out.append("edges form more than one cycle")


def aux_bipartite_scan(family: GraphFamily, pi: Permutation) -> set[tuple[int, int]]:
    """Edge set of B_pi by direct per-pair membership (independent of the array path)."""
    v1, v2 = family.bipartition.v1, family.bipartition.v2
    return {
        (i, j)
        for a, i in enumerate(v1, 1)
        for j in v2
        if family[pi(a)].has_edge(i, j)
    }


def aux_digraph_scan(family: GraphFamily, pi: Permutation) -> set[tuple[int, int]]:
    n = family.n
    return {(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j and family[pi(i)].has_edge(i, j)}
