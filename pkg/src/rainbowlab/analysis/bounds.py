"""Closed-form tail bounds: Chernoff, the simple binomial tail, and the
Talagrand-type inequality for functions of random permutations."""

from __future__ import annotations

import math

__all__ = [
    "chernoff_lower_tail",
    "chernoff_upper_tail",
    "chernoff_tails",
    "binomial_tail_bound",
    "talagrand_tail",
]


def chernoff_lower_tail(mu: float, a: float) -> float:
    """Bound on Pr[X < (1 - a) mu] for X binomial or hypergeometric with mean mu."""
    if not a > 0:
        raise ValueError(f"lower tail needs a > 0, got {a}")
    if mu < 0:
        raise ValueError("mean must be non-negative")
    return math.exp(-a * a * mu / 2)


def chernoff_upper_tail(mu: float, a: float) -> float:
    """Bound on Pr[X > (1 + a) mu]; valid for 0 < a < 3/2."""
    if not 0 < a < 1.5:
        raise ValueError(f"upper tail needs 0 < a < 3/2, got {a}")
    if mu < 0:
        raise ValueError("mean must be non-negative")
    return math.exp(-a * a * mu / 3)


def chernoff_tails(mu: float, a: float) -> tuple[float, float]:
    return chernoff_lower_tail(mu, a), chernoff_upper_tail(mu, a)


def binomial_tail_bound(m: int, q: float, k: int) -> float:
    """Pr[Bin(m, q) >= k] <= (e m q / k)^k."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if not 0 <= q <= 1:
        raise ValueError(f"q must lie in [0, 1], got {q}")
    if m < 0:
        raise ValueError("m must be non-negative")
    return (math.e * m * q / k) ** k


def talagrand_tail(M: float, t: float, c: float, r: float) -> float:
    """Pr[h <= M - t] <= 2 exp(-t^2 / (16 r c^2 M)), M the median of h."""
    if not M > 0:
        raise ValueError(f"median must be positive, got {M}")
    if t < 0:
        raise ValueError("t must be non-negative")
    if not (c > 0 and r > 0):
        raise ValueError("c and r must be positive")
    return 2.0 * math.exp(-t * t / (16.0 * r * c * c * M))
