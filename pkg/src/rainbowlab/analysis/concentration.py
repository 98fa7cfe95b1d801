"""Empirical window checks for degree concentration at finite n."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from ..graphs import Graph
from ..numeric import exact_fraction
from ..sampling import GraphFamily, RandomSeed

__all__ = [
    "WindowReport",
    "AuxMinDegreeReport",
    "check_degree_concentration",
    "check_partition_degrees",
    "check_aux_min_degree",
    "aux_min_degrees",
]


@dataclass
class WindowReport:
    name: str
    checks: int
    in_window: int
    threshold: float
    details: dict = field(default_factory=dict)

    @property
    def fraction(self) -> float:
        return self.in_window / self.checks if self.checks else 0.0

    @property
    def passed(self) -> bool:
        return self.checks > 0 and self.fraction >= self.threshold


def _ratio(x) -> tuple[int, int]:
    f = exact_fraction(x)
    return f.numerator, f.denominator


def check_degree_concentration(
    colors: Iterable[Graph],
    n: int,
    p,
    eps,
    threshold: float = 0.99,
) -> WindowReport:
    """Fraction of colors with (1-eps) np <= min degree <= max degree <= (1+eps) np.

    ``colors`` may be a generator, so very large families can be streamed.
    """
    lo = (1 - exact_fraction(eps)) * n * exact_fraction(p)
    hi = (1 + exact_fraction(eps)) * n * exact_fraction(p)
    lo_int, hi_int = math.ceil(lo), math.floor(hi)
    good = total = 0
    vert_good = vert_total = 0
    for g in colors:
        deg = g.degrees
        total += 1
        if lo_int <= int(deg.min()) and int(deg.max()) <= hi_int:
            good += 1
        # vertex-level rate, kept for diagnostics
        vert_good += int(((deg >= lo_int) & (deg <= hi_int)).sum())
        vert_total += deg.size
    return WindowReport(
        "degree-concentration",
        total,
        good,
        threshold,
        {"low": lo, "high": hi, "vertex_fraction": vert_good / vert_total if vert_total else 0.0},
    )


def check_partition_degrees(family: GraphFamily, part, eps, threshold: float = 0.99) -> WindowReport:
    """Per (vertex, color, side): d(u, V_i) in [(1-eps) d(u)/2, (1+eps) d(u)/2]."""
    if family.n % 2:
        raise ValueError("partition check needs even n")
    a, b = _ratio(eps)
    side = part.side_mask()
    stack = family.stack()
    deg = stack.sum(axis=2).astype(np.int64)
    d1 = stack[:, :, side].sum(axis=2).astype(np.int64)
    d2 = deg - d1
    ok = 0
    for ds in (d1, d2):
        # (b-a) d <= 2 b d_side <= (b+a) d, all integers
        ok += int((((b - a) * deg <= 2 * b * ds) & (2 * b * ds <= (b + a) * deg)).sum())
    checks = 2 * deg.size
    return WindowReport("partition-degrees", checks, ok, threshold)


def aux_min_degrees(family: GraphFamily, perms: np.ndarray) -> np.ndarray:
    """min degree of B_pi (bipartite family) or min semidegree of D_pi, one per row of ``perms``."""
    stack = family.stack()
    m = stack.shape[1]
    out = np.empty(len(perms), dtype=np.int64)
    idx = np.arange(m)
    for t, pi in enumerate(perms):
        rows = stack[pi, idx, :]
        out[t] = min(rows.sum(axis=1).min(), rows.sum(axis=0).min())
    return out


@dataclass
class AuxMinDegreeReport(WindowReport):
    minima: list[int] = field(default_factory=list)


def check_aux_min_degree(
    family: GraphFamily,
    window,
    trials: int,
    seed: RandomSeed,
    threshold: float = 0.95,
) -> AuxMinDegreeReport:
    """Fraction of sampled permutations whose auxiliary graph has minimum
    (semi)degree at least ``window``."""
    if family.is_bipartite:
        m = len(family.bipartition.v1)
        if family.m != m:
            raise ValueError(f"{family.m} colors but |V1| = {m}")
        name = "aux-min-degree-B"
    else:
        m = family.n
        if family.m != m:
            raise ValueError(f"{family.m} colors on {m} vertices")
        name = "aux-min-degree-D"
    perms = np.stack([seed.child(t).generator().permutation(m) for t in range(trials)])
    minima = aux_min_degrees(family, perms)
    w = exact_fraction(window)
    good = int(sum(1 for x in minima.tolist() if x >= w))
    rep = AuxMinDegreeReport(name, trials, good, threshold, {"window": w})
    rep.minima = minima.tolist()
    return rep
