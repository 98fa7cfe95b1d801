"""Flat ``key=value`` experiment configuration.

Lines look like ``solver.time_ms=2000``; ``#`` starts a comment.  Unknown keys
are rejected so typos surface as config errors.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from pathlib import Path

from .adversary import STRATEGIES, AdversaryStrategy
from .solvers import SolveBudget

KINDS = ("pm", "pm-bipartite", "hc", "kpm", "concentration", "aux-stats")
FLOOR_MODES = ("strict", "clamp", "resample")


class ConfigError(ValueError):
    pass


class UnknownThreshold(ConfigError):
    pass


def _bool(s: str) -> bool:
    low = s.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {s!r}")


def _ints(s: str) -> tuple[int, ...]:
    return tuple(int(x) for x in s.replace(",", " ").split())


# config key -> (attribute, parser)
_KEYS = {
    "experiment": ("kind", str),
    "n": ("n", int),
    "p": ("p", float),
    "eps": ("eps", float),
    "k": ("k", int),
    "d": ("d", int),
    "trials": ("trials", int),
    "seed": ("seed", int),
    "jobs": ("jobs", int),
    "adversary.strategy": ("strategy", str),
    "adversary.focus": ("focus", int),
    "adversary.split": ("split", _ints),
    "adversary.floor_mode": ("floor_mode", str),
    "adversary.max_redraws": ("max_redraws", int),
    "solver.node_limit": ("node_limit", int),
    "solver.time_ms": ("time_ms", int),
    "solver.restarts": ("restarts", int),
    "threshold.success": ("threshold_success", float),
    "threshold.degree": ("threshold_degree", float),
    "threshold.partition": ("threshold_partition", float),
    "threshold.aux": ("threshold_aux", float),
    "threshold.moments": ("threshold_moments", float),
    "conc.degree.n": ("degree_n", int),
    "conc.degree.p": ("degree_p", float),
    "conc.degree.colors": ("degree_colors", int),
    "conc.partition.n": ("partition_n", int),
    "conc.partition.p": ("partition_p", float),
    "conc.partition.count": ("partition_count", int),
    "conc.aux.n": ("aux_n", int),
    "conc.aux.p": ("aux_p", float),
    "conc.aux.perms": ("aux_perms", int),
    "conc.moments.families": ("moment_families", int),
    "conc.moments.sizes": ("moment_sizes", _ints),
    "conc.moments.p": ("moment_p", float),
    "conc.moments.alpha": ("moment_alpha", float),
    "output.dir": ("out_dir", str),
    "output.jsonl": ("jsonl", _bool),
    "output.timing": ("timing", _bool),
    "output.verbose": ("verbose", _bool),
}


@dataclass
class ExperimentConfig:
    kind: str = "pm"
    n: int = 40
    p: float = 0.5
    eps: float = 0.1
    k: int = 3
    d: int = 2
    trials: int = 10
    seed: int = 0
    jobs: int = 1
    strategy: str = "random-thinning"
    focus: int = 1
    split: tuple[int, ...] | None = None
    floor_mode: str = "strict"
    max_redraws: int = 200
    node_limit: int = 2_000_000
    time_ms: int = 2000
    restarts: int = 50
    threshold_success: float = 0.95
    threshold_degree: float = 0.99
    threshold_partition: float = 0.99
    threshold_aux: float = 0.95
    threshold_moments: float = 1.0
    degree_n: int | None = None
    degree_p: float | None = None
    degree_colors: int = 100
    partition_n: int | None = None
    partition_p: float | None = None
    partition_count: int = 10
    aux_n: int | None = None
    aux_p: float | None = None
    aux_perms: int = 50
    moment_families: int = 20
    moment_sizes: tuple[int, ...] = (3, 4, 5)
    moment_p: float = 0.5
    moment_alpha: float = 0.25
    out_dir: str = "out"
    jsonl: bool = False
    timing: bool = False
    verbose: bool = False
    source: dict = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def from_text(cls, text: str) -> ExperimentConfig:
        values = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"line {lineno}: expected key=value, got {raw!r}")
            key, val = (s.strip() for s in line.split("=", 1))
            if key not in _KEYS:
                raise ConfigError(f"line {lineno}: unknown key {key!r}")
            if key in values:
                raise ConfigError(f"line {lineno}: duplicate key {key!r}")
            values[key] = val
        return cls.from_mapping(values)

    @classmethod
    def from_mapping(cls, values: dict) -> ExperimentConfig:
        kwargs = {}
        for key, val in values.items():
            if key not in _KEYS:
                raise ConfigError(f"unknown key {key!r}")
            attr, parse = _KEYS[key]
            try:
                kwargs[attr] = parse(val) if isinstance(val, str) else val
            except ValueError as exc:
                raise ConfigError(f"{key}: {exc}") from None
        cfg = cls(**kwargs)
        cfg.source = dict(values)
        return cfg

    @classmethod
    def from_file(cls, path) -> ExperimentConfig:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from None
        return cls.from_text(text)

    def replace(self, **changes) -> ExperimentConfig:
        return dataclasses.replace(self, **changes)

    def to_text(self) -> str:
        lines = []
        for key, (attr, _) in _KEYS.items():
            val = getattr(self, attr)
            if val is None:
                continue
            if isinstance(val, tuple):
                val = ",".join(map(str, val))
            elif isinstance(val, bool):
                val = "true" if val else "false"
            lines.append(f"{key}={val}")
        return "\n".join(lines) + "\n"

    @property
    def m(self) -> int:
        return self.n // 2 if self.kind in ("pm", "pm-bipartite") else self.n

    @property
    def adversary(self) -> AdversaryStrategy:
        return AdversaryStrategy(self.strategy, self.focus, self.split)

    @property
    def budget(self) -> SolveBudget:
        return SolveBudget(self.node_limit, self.time_ms, self.restarts)

    def validate(self) -> ExperimentConfig:
        if self.kind not in KINDS:
            raise ConfigError(f"experiment must be one of {KINDS}, got {self.kind!r}")
        if not 0 < self.p <= 1:
            raise ConfigError(f"p must satisfy 0 < p <= 1, got {self.p}")
        if not self.eps > 0:
            raise ConfigError(f"eps must be positive, got {self.eps}")
        if self.trials < 1:
            raise ConfigError("trials must be at least 1")
        if self.jobs < 1:
            raise ConfigError("jobs must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed must be an unsigned 64-bit integer")
        if self.strategy not in STRATEGIES:
            raise ConfigError(f"adversary.strategy must be one of {STRATEGIES}")
        if self.floor_mode not in FLOOR_MODES:
            raise ConfigError(f"adversary.floor_mode must be one of {FLOOR_MODES}")
        if self.max_redraws < 1:
            raise ConfigError("adversary.max_redraws must be at least 1")
        try:
            self.budget
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        if self.n < 1:
            raise ConfigError("n must be positive")
        if self.kind in ("pm", "pm-bipartite", "aux-stats") and self.n % 2:
            raise ConfigError(f"{self.kind} needs even n, got {self.n}")
        if self.kind == "hc" and self.n < 3:
            raise ConfigError("hc needs n >= 3")
        if self.kind == "kpm":
            if not self.k > self.d > 0:
                raise ConfigError(f"kpm needs k > d > 0, got k={self.k}, d={self.d}")
            if 2 * self.d < self.k:
                raise UnknownThreshold(f"no known threshold for d={self.d} < k/2 (k={self.k})")
            if self.n > 10:
                raise ConfigError("kpm is limited to n <= 10")
            if self.eps > 0.5:
                raise ConfigError("kpm needs eps <= 1/2 (the floor cannot exceed n^(k-d))")
        for name in ("degree_p", "partition_p", "aux_p"):
            val = getattr(self, name)
            if val is not None and not 0 < val <= 1:
                raise ConfigError(f"{name} must satisfy 0 < p <= 1")
        for name in ("partition_n", "aux_n"):
            val = getattr(self, name)
            if val is not None and val % 2:
                raise ConfigError(f"{name} must be even")
        if any(s < 2 or s > 8 for s in self.moment_sizes):
            raise ConfigError("conc.moments.sizes must lie in 2..8")
        return self
