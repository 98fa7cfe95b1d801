"""Bipartite perfect matching via Hopcroft-Karp, with Hall-violator certificates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from ..graphs import BipartiteGraph

INF = float("inf")


class UnbalancedParts(ValueError):
    pass


@dataclass
class MatchingResult:
    matching: list[tuple[int, int]] | None
    hall_violator: frozenset[int] | None = None

    @property
    def found(self) -> bool:
        return self.matching is not None


def _max_matching(adj: list[list[int]], nr: int) -> tuple[list[int], list[int]]:
    nl = len(adj)
    match_l = [-1] * nl
    match_r = [-1] * nr
    dist = [0] * nl

    def bfs() -> bool:
        q = deque()
        for u in range(nl):
            if match_l[u] == -1:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = INF
        found = False
        while q:
            u = q.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return found

    def dfs(u: int) -> bool:
        # iterative DFS along the BFS layering
        stack = [(u, iter(adj[u]))]
        path = []
        while stack:
            x, it = stack[-1]
            advanced = False
            for v in it:
                w = match_r[v]
                if w == -1:
                    path.append((x, v))
                    for a, b in path:
                        match_l[a] = b
                        match_r[b] = a
                    return True
                if dist[w] == dist[x] + 1:
                    path.append((x, v))
                    stack.append((w, iter(adj[w])))
                    advanced = True
                    break
            if not advanced:
                dist[x] = INF
                stack.pop()
                if path:
                    path.pop()
        return False

    while bfs():
        for u in range(nl):
            if match_l[u] == -1:
                dfs(u)
    return match_l, match_r


def find_bipartite_pm(b: BipartiteGraph) -> MatchingResult:
    """Perfect matching of ``b`` as ``(left, right)`` label pairs, or a Hall violator.

    The violator is the set of left vertices reachable from an unmatched left
    vertex by alternating paths; its neighbourhood is one smaller than it.
    """
    nl, nr = b.biadj.shape
    if nl != nr:
        raise UnbalancedParts(f"parts have sizes {nl} and {nr}")
    adj = [np.flatnonzero(row).tolist() for row in b.biadj]
    match_l, match_r = _max_matching(adj, nr)
    free = [u for u in range(nl) if match_l[u] == -1]
    if not free:
        return MatchingResult([(b.left[u], b.right[match_l[u]]) for u in range(nl)])
    root = free[0]
    seen_l, seen_r = {root}, set()
    q = deque([root])
    while q:
        u = q.popleft()
        for v in adj[u]:
            if v not in seen_r:
                seen_r.add(v)
                w = match_r[v]
                if w != -1 and w not in seen_l:
                    seen_l.add(w)
                    q.append(w)
    return MatchingResult(None, frozenset(b.left[u] for u in seen_l))


def hall_violator_ok(b: BipartiteGraph, s) -> bool:
    """True when ``s`` (left labels) has fewer neighbours than elements."""
    pos = {v: i for i, v in enumerate(b.left)}
    idx = [pos[v] for v in s]
    if not idx:
        return False
    return int(b.biadj[idx].any(axis=0).sum()) < len(idx)
