"""Experiment records and their CSV / JSON-lines rendering.

Column order is fixed per record type.  Floats use the shortest decimal that
round-trips (``repr``), so reruns with the same seed give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

__all__ = [
    "TrialRecord",
    "WindowRow",
    "AuxRow",
    "render",
    "columns_for",
    "to_csv",
    "write_csv",
    "write_jsonl",
]


@dataclass
class TrialRecord:
    """One pipeline trial.  ``verified`` is set iff ``outcome == "found"``."""

    trial: int
    root_seed: int
    kind: str
    n: int
    p: float
    eps: float
    m: int
    floor: int
    floor_mode: str
    strategy: str
    host_min_degree: int | None = None
    host_max_degree: int | None = None
    host_redraws: int | None = None
    clamped_cells: int | None = None
    sub_min_degree: int | None = None
    pi_digest: str | None = None
    aux_min_degree: int | None = None
    aux_edges: int | None = None
    outcome: str | None = None
    error: str | None = None
    verified: bool | None = None
    violations: str | None = None
    certificate: str | None = None
    solver_nodes: int | None = None
    wall_ms: float | None = None
    pi: str | None = None

    @property
    def success(self) -> bool:
        return self.outcome == "found" and self.verified is True


@dataclass
class WindowRow:
    """One concentration check, aggregated."""

    check: str
    n: int
    p: float
    eps: float
    checks: int
    in_window: int
    fraction: float
    threshold: float
    passed: bool
    detail: str = ""


@dataclass
class AuxRow:
    """Minimum (semi)degree of one auxiliary graph against its window."""

    trial: int
    root_seed: int
    graph: str
    n: int
    p: float
    eps: float
    pi_digest: str
    min_degree: int
    window: float
    in_window: bool


_OPTIONAL = {"wall_ms", "pi"}


def columns_for(cls, *, timing: bool = False, verbose: bool = False) -> list[str]:
    cols = [f.name for f in fields(cls)]
    if cls is TrialRecord:
        cols = [c for c in cols if c not in _OPTIONAL]
        if timing:
            cols.append("wall_ms")
        if verbose:
            cols.append("pi")
    return cols


def render(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        value = float(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def to_csv(rows: Sequence, columns: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([render(getattr(r, c)) for c in columns])
    return buf.getvalue()


def write_csv(path, rows: Sequence, columns: Sequence[str]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(to_csv(rows, columns))
    return path


def _json_value(v):
    if isinstance(v, Fraction):
        return float(v)
    return v


def write_jsonl(path, rows: Iterable, columns: Sequence[str]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w") as fh:
        for r in rows:
            d = asdict(r)
            fh.write(json.dumps({c: _json_value(d[c]) for c in columns}) + "\n")
    return path
