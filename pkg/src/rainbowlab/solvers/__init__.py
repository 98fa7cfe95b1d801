from .budget import SolveBudget, SolveResult
from .matching import UnbalancedParts, find_bipartite_pm, hall_violator_ok
from .hamilton import TooSmall, find_directed_hamilton
from .hypermatching import PartSizeMismatch, find_kpartite_pm

__all__ = [
    "SolveBudget",
    "SolveResult",
    "UnbalancedParts",
    "TooSmall",
    "PartSizeMismatch",
    "find_bipartite_pm",
    "find_directed_hamilton",
    "find_kpartite_pm",
    "hall_violator_ok",
]
