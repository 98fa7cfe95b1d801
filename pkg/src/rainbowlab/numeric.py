from __future__ import annotations

from fractions import Fraction


def exact_fraction(x) -> Fraction:
    """Exact rational for a config number (0.15 -> 3/20, not the binary float)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(repr(float(x)))
