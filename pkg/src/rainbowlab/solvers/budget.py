from __future__ import annotations

from dataclasses import dataclass
from typing import Any

FOUND, NONE, EXHAUSTED = "found", "none", "exhausted"


@dataclass(frozen=True)
class SolveBudget:
    node_limit: int = 2_000_000
    time_ms: int = 2000
    restarts: int = 50

    def __post_init__(self):
        for name in ("node_limit", "time_ms", "restarts"):
            if getattr(self, name) <= 0:
                raise ValueError(f"solver budget {name} must be positive")


@dataclass
class SolveResult:
    """Outcome of a search: ``found`` with a witness, ``none`` (proved absent)
    or ``exhausted`` (budget hit, existence unknown)."""

    status: str
    witness: Any = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == FOUND
