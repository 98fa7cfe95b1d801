"""Directed Hamilton cycles.

Two modes: exact backtracking for ``n <= EXACT_LIMIT`` and, above that, greedy
path extension with two-arc rotations, cycle opening and seeded restarts.  The
heuristic can only report ``found`` or ``exhausted``.
"""

from __future__ import annotations

import time

import numpy as np

from ..graphs import Digraph
from ..sampling import RandomSeed
from .budget import EXHAUSTED, FOUND, NONE, SolveBudget, SolveResult

EXACT_LIMIT = 12


class TooSmall(ValueError):
    pass


def find_directed_hamilton(d: Digraph, budget: SolveBudget | None = None, seed: RandomSeed | None = None) -> SolveResult:
    """Search ``d`` for a directed Hamilton cycle.

    On success ``witness`` is the vertex order (1-indexed), the closing arc
    being ``witness[-1] -> witness[0]``.
    """
    budget = budget or SolveBudget()
    seed = seed or RandomSeed(0)
    n = d.n
    if n < 3:
        raise TooSmall(f"need n >= 3, got {n}")
    if (d.out_degrees == 0).any() or (d.in_degrees == 0).any():
        return SolveResult(NONE, None, 0)
    if n <= EXACT_LIMIT:
        return _exact(d.adj, budget)
    return _heuristic(d.adj, budget, seed)


def _exact(adj: np.ndarray, budget: SolveBudget) -> SolveResult:
    n = adj.shape[0]
    out = [int(sum(1 << int(j) for j in np.flatnonzero(adj[i]))) for i in range(n)]
    inn = [int(sum(1 << int(j) for j in np.flatnonzero(adj[:, i]))) for i in range(n)]
    full = (1 << n) - 1
    deadline = time.monotonic() + budget.time_ms / 1000
    nodes = 0
    path = [0]

    def viable(visited: int, tail: int) -> bool:
        rest = full & ~visited
        r = rest
        while r:
            low = r & -r
            u = low.bit_length() - 1
            r ^= low
            # u still needs a predecessor among unvisited vertices or the tail,
            # and a successor among unvisited vertices or the start
            if not inn[u] & (rest | (1 << tail)):
                return False
            if not out[u] & (rest | 1):
                return False
        return True

    class Budget(Exception):
        pass

    def go(visited: int, tail: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget.node_limit or (nodes & 1023 == 0 and time.monotonic() > deadline):
            raise Budget
        if visited == full:
            return bool(out[tail] & 1)
        if not viable(visited, tail):
            return False
        cand = out[tail] & ~visited
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            path.append(v)
            if go(visited | low, v):
                return True
            path.pop()
        return False

    try:
        ok = go(1, 0)
    except Budget:
        return SolveResult(EXHAUSTED, None, nodes)
    if ok:
        return SolveResult(FOUND, [v + 1 for v in path], nodes)
    return SolveResult(NONE, None, nodes)


def _pick(cand: np.ndarray, adj_rows: np.ndarray, free: np.ndarray, rng: np.random.Generator) -> int:
    # fewest onward free neighbours first; random among ties
    onward = (adj_rows[cand] & free).sum(axis=1)
    best = cand[onward == onward.min()]
    return int(best[rng.integers(best.size)]) if best.size > 1 else int(best[0])


def _rotations(path: list[int], adj: np.ndarray) -> list[tuple[int, int]]:
    """All (i, j) with tail -> path[i] and path[i-1] -> path[j+1], i <= j <= k-2.

    Rerouting gives path[:i] + path[j+1:] + path[i:j+1], whose tail is path[j].
    """
    k = len(path)
    if k < 3:
        return []
    p = np.asarray(path)
    tail = path[-1]
    out = []
    for i in np.flatnonzero(adj[tail, p[1:k - 1]]) + 1:
        js = np.flatnonzero(adj[p[i - 1], p[i + 1:k]]) + i
        out.extend((int(i), int(j)) for j in js)
    return out


def _heuristic(adj: np.ndarray, budget: SolveBudget, seed: RandomSeed) -> SolveResult:
    n = adj.shape[0]
    adj_t = np.ascontiguousarray(adj.T)
    deadline = time.monotonic() + budget.time_ms / 1000
    nodes = 0
    for attempt in range(budget.restarts):
        rng = seed.child(attempt).generator()
        path = [int(rng.integers(n))]
        free = np.ones(n, dtype=bool)
        free[path[0]] = False
        stall = 0
        while True:
            nodes += 1
            if nodes > budget.node_limit or time.monotonic() > deadline:
                return SolveResult(EXHAUSTED, None, nodes)
            tail, head = path[-1], path[0]
            cand = np.flatnonzero(adj[tail] & free)
            if cand.size:
                v = _pick(cand, adj, free, rng)
                path.append(v)
                free[v] = False
                stall = 0
                continue
            cand = np.flatnonzero(adj_t[head] & free)
            if cand.size:
                v = _pick(cand, adj_t, free, rng)
                path.insert(0, v)
                free[v] = False
                stall = 0
                continue
            closed = bool(adj[tail, head])
            if len(path) == n and closed:
                return SolveResult(FOUND, [v + 1 for v in path], nodes)
            if closed:
                # the path is a cycle: reopen it next to a vertex that has an outside neighbour
                p = np.asarray(path)
                exits = np.flatnonzero((adj[p][:, free]).any(axis=1))
                if exits.size:
                    i = int(exits[rng.integers(exits.size)])
                    path = path[i + 1:] + path[:i + 1]
                    continue
                entries = np.flatnonzero((adj_t[p][:, free]).any(axis=1))
                if entries.size:
                    i = int(entries[rng.integers(entries.size)])
                    path = path[i:] + path[:i]
                    continue
            stall += 1
            if stall > 4 * n:
                break
            # rotate the tail, or the head via the reversed digraph
            if rng.random() < 0.5:
                new = _rotate(path, adj, free, rng)
            else:
                rev = _rotate(path[::-1], adj_t, free, rng)
                new = rev[::-1] if rev is not None else None
            if new is None:
                break
            path = new
    return SolveResult(EXHAUSTED, None, nodes)


def _rotate(path: list[int], adj: np.ndarray, free: np.ndarray, rng: np.random.Generator) -> list[int] | None:
    rots = _rotations(path, adj)
    if not rots:
        return None
    head = path[0]
    tails = np.array([path[j] for _, j in rots])
    useful = (adj[tails] & free).any(axis=1) | adj[tails, head]
    pool = np.flatnonzero(useful)
    if pool.size == 0:
        pool = np.arange(len(rots))
    i, j = rots[int(pool[rng.integers(pool.size)])]
    return path[:i] + path[j + 1:] + path[i:j + 1]
