"""Perfect matchings in k-partite k-graphs by exact backtracking."""

from __future__ import annotations

import time

import numpy as np

from ..graphs import KPartiteHypergraph
from .budget import EXHAUSTED, FOUND, NONE, SolveBudget, SolveResult


class PartSizeMismatch(ValueError):
    pass


def find_kpartite_pm(h: KPartiteHypergraph, budget: SolveBudget | None = None) -> SolveResult:
    """Match the vertices of V1 in order, with forward checking.

    ``witness`` is a list of edges (sorted global-label tuples).
    """
    budget = budget or SolveBudget()
    if len(set(h.sizes)) != 1:
        raise PartSizeMismatch(f"parts have sizes {h.sizes}")
    n, k = h.sizes[0], h.k
    off = np.array(h.offsets)
    # options[a] = edges through V1 vertex a, as local index tuples of the other parts
    options: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for e in sorted(h.edges):
        loc = tuple(int(x) for x in np.asarray(e) - 1 - off)
        options[loc[0]].append(loc[1:])
    if any(not opts for opts in options):
        return SolveResult(NONE, None, 0)
    deadline = time.monotonic() + budget.time_ms / 1000
    used = [[False] * n for _ in range(k - 1)]
    chosen: list[tuple[int, ...]] = []
    nodes = 0

    class Budget(Exception):
        pass

    def available(a: int) -> bool:
        return any(all(not used[t][x] for t, x in enumerate(rest)) for rest in options[a])

    def go(a: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget.node_limit or (nodes & 255 == 0 and time.monotonic() > deadline):
            raise Budget
        if a == n:
            return True
        for rest in options[a]:
            if any(used[t][x] for t, x in enumerate(rest)):
                continue
            for t, x in enumerate(rest):
                used[t][x] = True
            chosen.append(rest)
            if all(available(b) for b in range(a + 1, n)) and go(a + 1):
                return True
            chosen.pop()
            for t, x in enumerate(rest):
                used[t][x] = False
        return False

    try:
        ok = go(0)
    except Budget:
        return SolveResult(EXHAUSTED, None, nodes)
    if not ok:
        return SolveResult(NONE, None, nodes)
    edges = [tuple(int(o) + 1 + x for o, x in zip(off, (a,) + rest)) for a, rest in enumerate(chosen)]
    return SolveResult(FOUND, edges, nodes)
