"""Exact moments of auxiliary-graph degrees over a uniformly random permutation.

Expectations and exhaustive moments are exact rationals; only sampled mode
involves randomness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

import numpy as np

from ..numeric import exact_fraction
from ..sampling import GraphFamily, RandomSeed, permutations_array

__all__ = [
    "EXHAUSTIVE_LIMIT",
    "TooLargeForExhaustive",
    "VertexNotInV2",
    "DegreeDistribution",
    "ConcentrationReport",
    "expected_aux_degree",
    "expected_aux_semidegree",
    "aux_degree_variance_bound",
    "exact_aux_degree_distribution",
    "exact_aux_semidegree_distribution",
    "median_window_status",
    "concentration_report",
]

EXHAUSTIVE_LIMIT = 8


class TooLargeForExhaustive(ValueError):
    pass


class VertexNotInV2(ValueError):
    pass


@dataclass(frozen=True)
class DegreeDistribution:
    histogram: dict[int, int]
    mode: str

    @property
    def total(self) -> int:
        return sum(self.histogram.values())

    @property
    def mean(self) -> Fraction:
        return Fraction(sum(v * c for v, c in self.histogram.items()), self.total)

    @property
    def variance(self) -> Fraction:
        mu = self.mean
        return sum((c * (v - mu) ** 2 for v, c in self.histogram.items()), Fraction(0)) / self.total

    @property
    def median(self) -> int:
        """Lower middle order statistic."""
        target = (self.total - 1) // 2
        seen = 0
        for v in sorted(self.histogram):
            seen += self.histogram[v]
            if seen > target:
                return v
        raise ValueError("empty distribution")


def _jpos(family: GraphFamily, j: int) -> int:
    if not family.is_bipartite:
        raise ValueError("expected a bipartite family")
    try:
        return family.bipartition.v2.index(j)
    except ValueError:
        raise VertexNotInV2(f"vertex {j} is not in V2") from None


def expected_aux_degree(family: GraphFamily, j: int) -> Fraction:
    """E[d_{B_pi}(j)] = sum_c d_{H_c}(j) / m."""
    jp = _jpos(family, j)
    m = family.m
    if m == 0:
        raise ValueError("empty family")
    total = sum(int(g.right_degrees[jp]) for g in family.colors)
    return Fraction(total, m)


def expected_aux_semidegree(family: GraphFamily, i: int) -> Fraction:
    """E[d^-_{D_pi}(i)] = E[d^+_{D_pi}(i)] = sum_c d_{H_c}(i) / n."""
    return Fraction(sum(g.degree(i) for g in family.colors), family.m)


def aux_degree_variance_bound(mu, m: int) -> Fraction:
    """mu + mu^2 / (m - 1)."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    mu = Fraction(mu)
    return mu + mu * mu / (m - 1)


def _perm_rows(m: int, mode: str, trials: int | None, seed: RandomSeed | None) -> np.ndarray:
    if mode == "exhaustive":
        if m > EXHAUSTIVE_LIMIT:
            raise TooLargeForExhaustive(f"{m}! permutations is beyond the exhaustive limit m <= {EXHAUSTIVE_LIMIT}")
        return np.array(list(permutations(range(m))), dtype=np.intp).reshape(factorial(m), m)
    if mode == "sampled":
        if not trials or trials < 1 or seed is None:
            raise ValueError("sampled mode needs trials >= 1 and a seed")
        return permutations_array(m, trials, seed)
    raise ValueError(f"unknown mode {mode!r}")


def _histogram(values: np.ndarray) -> dict[int, int]:
    counts = np.bincount(values)
    return {int(v): int(c) for v, c in enumerate(counts) if c}


def exact_aux_degree_distribution(
    family: GraphFamily,
    j: int,
    mode: str = "exhaustive",
    *,
    trials: int | None = None,
    seed: RandomSeed | None = None,
) -> DegreeDistribution:
    """Distribution of d_{B_pi}(j) over all m! permutations, or over samples."""
    jp = _jpos(family, j)
    m = family.m
    # hit[c, a]: color c has the edge (V1[a], j)
    hit = family.stack()[:, :, jp]
    perms = _perm_rows(m, mode, trials, seed)
    values = hit[perms, np.arange(m)].sum(axis=1)
    return DegreeDistribution(_histogram(values), mode)


def exact_aux_semidegree_distribution(
    family: GraphFamily,
    i: int,
    direction: str = "in",
    mode: str = "exhaustive",
    *,
    trials: int | None = None,
    seed: RandomSeed | None = None,
) -> DegreeDistribution:
    if family.is_bipartite:
        raise ValueError("expected a family of full graphs")
    n = family.n
    if family.m != n:
        raise ValueError(f"{family.m} colors on {n} vertices")
    if not 1 <= i <= n:
        raise ValueError(f"vertex {i} outside 1..{n}")
    stack = family.stack()
    perms = _perm_rows(n, mode, trials, seed)
    if direction == "in":
        # arc (j, i) exists iff color pi(j) has the edge ji
        hit = stack[:, :, i - 1]
        values = hit[perms, np.arange(n)].sum(axis=1)
    elif direction == "out":
        degs = stack[:, i - 1, :].sum(axis=1)
        values = degs[perms[:, i - 1]]
    else:
        raise ValueError(f"direction must be 'in' or 'out', got {direction!r}")
    return DegreeDistribution(_histogram(values), mode)


def median_window_status(median: int, mu: Fraction, alpha, min_codegree: int) -> str:
    """'pass'/'fail' for median in [(1-alpha) mu, (1+alpha) mu], or 'skipped'
    when the colors' minimum degree is below 200 / alpha^2."""
    alpha = exact_fraction(alpha)
    if min_codegree < 200 / alpha**2:
        return "skipped"
    lo, hi = (1 - alpha) * mu, (1 + alpha) * mu
    return "pass" if lo <= median <= hi else "fail"


@dataclass(frozen=True)
class ConcentrationReport:
    """Exact and empirical statistics for one auxiliary-graph vertex."""

    target: int
    m: int
    mu: Fraction
    variance_bound: Fraction
    distribution: DegreeDistribution
    alpha: Fraction
    min_codegree: int

    @property
    def mean_exact(self) -> bool | None:
        if self.distribution.mode != "exhaustive":
            return None
        return self.distribution.mean == self.mu

    @property
    def variance_bounded(self) -> bool | None:
        if self.distribution.mode != "exhaustive":
            return None
        return self.distribution.variance <= self.variance_bound

    @property
    def median_window(self) -> str:
        return median_window_status(self.distribution.median, self.mu, self.alpha, self.min_codegree)


def concentration_report(
    family: GraphFamily,
    j: int,
    alpha,
    mode: str = "exhaustive",
    *,
    trials: int | None = None,
    seed: RandomSeed | None = None,
) -> ConcentrationReport:
    mu = expected_aux_degree(family, j)
    dist = exact_aux_degree_distribution(family, j, mode, trials=trials, seed=seed)
    min_codeg = min(int(g.degrees.min()) for g in family.colors)
    alpha = exact_fraction(alpha)
    return ConcentrationReport(j, family.m, mu, aux_degree_variance_bound(mu, family.m), dist, alpha, min_codeg)
