"""End-to-end trial pipelines and the concentration suite.

Each trial draws everything from ``RandomSeed(root).child(kind, trial)`` and
named sub-streams below it, so trials are independent of execution order and
of the number of worker processes.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import numpy as np

from .adversary import UnsatisfiableFloor, apply_adversary, aux_window, dirac_floor
from .analysis import (
    WindowReport,
    check_aux_min_degree,
    check_degree_concentration,
    check_partition_degrees,
    concentration_report,
)
from .config import ExperimentConfig
from .graphs import BalancedPartition, crossing_codegree, min_semidegree
from .numeric import exact_fraction
from .records import AuxRow, TrialRecord, WindowRow
from .reduction import (
    build_aux_bipartite,
    build_aux_digraph,
    build_aux_kpartite,
    induce_bipartite,
    lift_cycle,
    lift_hyper_matching,
    lift_matching,
    verify_rainbow,
)
from .sampling import (
    GraphFamily,
    RandomSeed,
    sample_balanced_partition,
    sample_bipartite,
    sample_gnp,
    sample_kpartite_color,
    sample_permutation,
)
from .solvers import find_bipartite_pm, find_directed_hamilton, find_kpartite_pm

__all__ = [
    "trial_seed",
    "floor_for",
    "sample_host",
    "run_trials",
    "run_pm_pipeline",
    "run_pm_bipartite_pipeline",
    "run_hc_pipeline",
    "run_kpm_pipeline",
    "run_concentration_suite",
    "run_aux_stats",
    "success_count",
]


def trial_seed(cfg: ExperimentConfig, trial: int) -> RandomSeed:
    return RandomSeed(cfg.seed).child(cfg.kind, trial)


def floor_for(cfg: ExperimentConfig) -> int:
    if cfg.kind == "kpm":
        return math.ceil((Fraction(1, 2) + exact_fraction(cfg.eps)) * cfg.n ** (cfg.k - cfg.d))
    return dirac_floor(cfg.n, cfg.p, cfg.eps, bipartite=cfg.kind == "pm-bipartite")


def sample_host(
    n: int,
    m: int,
    p: float,
    floor: int,
    seed: RandomSeed,
    *,
    floor_mode: str = "strict",
    max_redraws: int = 200,
    bipartition: BalancedPartition | None = None,
) -> tuple[GraphFamily, int]:
    """Sample ``m`` colors; in resample mode redraw any color whose minimum
    degree is below ``floor``.  Returns the family and the number of redraws.

    Attempt ``a`` of color ``c`` (0-indexed) uses ``seed.child(c, a)``.
    """
    colors, redraws = [], 0
    for c in range(m):
        for a in range(max_redraws + 1):
            s = seed.child(c, a)
            g = sample_bipartite(bipartition, p, s) if bipartition is not None else sample_gnp(n, p, s)
            if floor_mode != "resample" or int(g.degrees.min()) >= floor:
                break
            redraws += 1
        else:
            deg = g.degrees
            v = int(np.argmin(deg))
            labels = list(g.left) + list(g.right) if bipartition is not None else range(1, n + 1)
            raise UnsatisfiableFloor(c + 1, int(labels[v]), int(deg[v]), floor)
        colors.append(g)
    return GraphFamily(n, colors, bipartition), redraws


def _base_record(cfg: ExperimentConfig, trial: int, floor: int) -> TrialRecord:
    return TrialRecord(
        trial=trial,
        root_seed=cfg.seed,
        kind=cfg.kind,
        n=cfg.n,
        p=cfg.p,
        eps=cfg.eps,
        m=cfg.m,
        floor=floor,
        floor_mode=cfg.floor_mode,
        strategy=cfg.strategy,
    )


def _host_and_sub(cfg: ExperimentConfig, rec: TrialRecord, seed: RandomSeed, bipartition=None) -> GraphFamily:
    host, redraws = sample_host(
        cfg.n, cfg.m, cfg.p, rec.floor, seed.child("color"),
        floor_mode=cfg.floor_mode, max_redraws=cfg.max_redraws, bipartition=bipartition,
    )
    rec.host_min_degree = min(host.min_degrees())
    rec.host_max_degree = max(host.max_degrees())
    rec.host_redraws = redraws
    rec.clamped_cells = sum(int((g.degrees < rec.floor).sum()) for g in host.colors)
    sub = apply_adversary(host, cfg.adversary, rec.floor, seed.child("adversary"), clamp=cfg.floor_mode == "clamp")
    rec.sub_min_degree = min(sub.min_degrees())
    return sub


def _finish(rec: TrialRecord, structure, family) -> None:
    rep = verify_rainbow(structure, family)
    rec.verified = rep.ok
    rec.violations = "; ".join(rep.violations) if rep.violations else None


def _set_pi(cfg: ExperimentConfig, rec: TrialRecord, pi) -> None:
    rec.pi_digest = pi.digest()
    if cfg.verbose:
        rec.pi = " ".join(map(str, pi.images))


def _pm_trial(cfg: ExperimentConfig, trial: int, rec: TrialRecord) -> None:
    seed = trial_seed(cfg, trial)
    bipartite = cfg.kind == "pm-bipartite"
    if bipartite:
        part = sample_balanced_partition(cfg.n, seed.child("partition"))
        sub = _host_and_sub(cfg, rec, seed, bipartition=part)
        aux_family = sub
    else:
        sub = _host_and_sub(cfg, rec, seed)
        part = sample_balanced_partition(cfg.n, seed.child("partition"))
        aux_family = induce_bipartite(sub, part)
    pi = sample_permutation(cfg.m, seed.child("pi"))
    _set_pi(cfg, rec, pi)
    b = build_aux_bipartite(aux_family, pi)
    rec.aux_min_degree = int(b.degrees.min())
    rec.aux_edges = int(b.biadj.sum())
    res = find_bipartite_pm(b)
    if not res.found:
        rec.outcome = "none"
        rec.certificate = "hall " + " ".join(map(str, sorted(res.hall_violator)))
        return
    rec.outcome = "found"
    _finish(rec, lift_matching(res.matching, pi, aux_family), sub)


def _hc_trial(cfg: ExperimentConfig, trial: int, rec: TrialRecord) -> None:
    seed = trial_seed(cfg, trial)
    sub = _host_and_sub(cfg, rec, seed)
    pi = sample_permutation(cfg.m, seed.child("pi"))
    _set_pi(cfg, rec, pi)
    d = build_aux_digraph(sub, pi)
    rec.aux_min_degree = min_semidegree(d)
    rec.aux_edges = d.num_arcs
    res = find_directed_hamilton(d, cfg.budget, seed.child("solver"))
    rec.outcome = res.status
    rec.solver_nodes = res.nodes
    if res.found:
        _finish(rec, lift_cycle(res.witness, pi, sub), sub)


def _kpm_trial(cfg: ExperimentConfig, trial: int, rec: TrialRecord) -> None:
    seed = trial_seed(cfg, trial)
    cs = seed.child("color")
    colors = [sample_kpartite_color(cfg.k, cfg.n, cfg.d, rec.floor, cfg.p, cs.child(c)) for c in range(cfg.n)]
    codeg = [crossing_codegree(h, cfg.d) for h in colors]
    rec.host_min_degree = min(codeg)
    rec.host_max_degree = max(codeg)
    rec.sub_min_degree = min(codeg)
    pi = sample_permutation(cfg.n, seed.child("pi"))
    _set_pi(cfg, rec, pi)
    h = build_aux_kpartite(colors, pi)
    rec.aux_min_degree = crossing_codegree(h, cfg.d)
    rec.aux_edges = len(h.edges)
    res = find_kpartite_pm(h, cfg.budget)
    rec.outcome = res.status
    rec.solver_nodes = res.nodes
    if res.found:
        _finish(rec, lift_hyper_matching(res.witness, pi, colors), colors)


_RUNNERS = {"pm": _pm_trial, "pm-bipartite": _pm_trial, "hc": _hc_trial, "kpm": _kpm_trial}


def _run_one(cfg: ExperimentConfig, trial: int) -> TrialRecord:
    start = time.perf_counter()
    try:
        floor = floor_for(cfg)
    except Exception as exc:
        floor = None
        err = exc
    else:
        err = None
    rec = _base_record(cfg, trial, floor)
    if err is None:
        try:
            _RUNNERS[cfg.kind](cfg, trial, rec)
        except Exception as exc:  # isolated per trial
            err = exc
    if err is not None:
        rec.error = f"{type(err).__name__}: {err}"
        if rec.outcome != "found":
            rec.verified = None
    if cfg.timing:
        rec.wall_ms = round((time.perf_counter() - start) * 1000, 3)
    return rec


def _run_chunk(cfg: ExperimentConfig, trials: list[int]) -> list[TrialRecord]:
    return [_run_one(cfg, t) for t in trials]


def run_trials(cfg: ExperimentConfig) -> list[TrialRecord]:
    """Run ``cfg.trials`` trials on ``cfg.jobs`` processes; records come back in trial order."""
    cfg.validate()
    if cfg.kind not in _RUNNERS:
        raise ValueError(f"{cfg.kind!r} is not a trial pipeline")
    idx = list(range(cfg.trials))
    if cfg.jobs == 1 or cfg.trials == 1:
        return _run_chunk(cfg, idx)
    chunks = [idx[i:: cfg.jobs] for i in range(cfg.jobs)]
    with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
        parts = list(pool.map(_run_chunk, [cfg] * len(chunks), chunks))
    out = [r for part in parts for r in part]
    out.sort(key=lambda r: r.trial)
    return out


def _with_kind(cfg: ExperimentConfig, kind: str) -> ExperimentConfig:
    if cfg.kind != kind:
        raise ValueError(f"config is for {cfg.kind!r}, expected {kind!r}")
    return cfg


def run_pm_pipeline(cfg: ExperimentConfig) -> list[TrialRecord]:
    return run_trials(_with_kind(cfg, "pm"))


def run_pm_bipartite_pipeline(cfg: ExperimentConfig) -> list[TrialRecord]:
    return run_trials(_with_kind(cfg, "pm-bipartite"))


def run_hc_pipeline(cfg: ExperimentConfig) -> list[TrialRecord]:
    return run_trials(_with_kind(cfg, "hc"))


def run_kpm_pipeline(cfg: ExperimentConfig) -> list[TrialRecord]:
    return run_trials(_with_kind(cfg, "kpm"))


def success_count(records) -> int:
    return sum(1 for r in records if r.success)


# -- concentration suite -----------------------------------------------------


def _row(rep: WindowReport, n: int, p: float, eps: float, detail: str = "") -> WindowRow:
    return WindowRow(rep.name, n, p, eps, rep.checks, rep.in_window, rep.fraction, rep.threshold, rep.passed, detail)


def _aux_families(cfg: ExperimentConfig, n: int, p: float, seed: RandomSeed):
    """Thinned bipartite family (for B_pi) and thinned full family (for D_pi)."""
    clamp = cfg.floor_mode == "clamp"
    part = sample_balanced_partition(n, seed.child("partition"))
    fb = dirac_floor(n, p, cfg.eps, bipartite=True)
    host_b, _ = sample_host(n, n // 2, p, fb, seed.child("bip", "color"), floor_mode=cfg.floor_mode,
                            max_redraws=cfg.max_redraws, bipartition=part)
    fam_b = apply_adversary(host_b, cfg.adversary, fb, seed.child("bip", "adversary"), clamp=clamp)
    fd = dirac_floor(n, p, cfg.eps)
    host_d, _ = sample_host(n, n, p, fd, seed.child("full", "color"), floor_mode=cfg.floor_mode,
                            max_redraws=cfg.max_redraws)
    fam_d = apply_adversary(host_d, cfg.adversary, fd, seed.child("full", "adversary"), clamp=clamp)
    return fam_b, fam_d


def _moment_rows(cfg: ExperimentConfig, seed: RandomSeed) -> list[WindowRow]:
    mean_ok = var_ok = 0
    medians = {"pass": 0, "fail": 0, "skipped": 0}
    fams = cfg.moment_families
    for t in range(fams):
        m = cfg.moment_sizes[t % len(cfg.moment_sizes)]
        fs = seed.child(t)
        part = sample_balanced_partition(2 * m, fs.child("partition"))
        fam = GraphFamily(2 * m, [sample_bipartite(part, cfg.moment_p, fs.child(c)) for c in range(m)], part)
        reps = [concentration_report(fam, j, cfg.moment_alpha) for j in part.v2]
        mean_ok += all(r.mean_exact for r in reps)
        var_ok += all(r.variance_bounded for r in reps)
        for r in reps:
            medians[r.median_window] += 1
    thr = cfg.threshold_moments
    rows = [
        WindowRow("moment-mean-exact", 0, cfg.moment_p, 0.0, fams, mean_ok, mean_ok / fams, thr, mean_ok / fams >= thr),
        WindowRow("moment-variance-bound", 0, cfg.moment_p, 0.0, fams, var_ok, var_ok / fams, thr, var_ok / fams >= thr),
    ]
    decided = medians["pass"] + medians["fail"]
    frac = medians["pass"] / decided if decided else 0.0
    rows.append(WindowRow(
        "moment-median-window", 0, cfg.moment_p, float(cfg.moment_alpha), decided, medians["pass"], frac,
        cfg.threshold_degree, decided == 0 or frac >= cfg.threshold_degree,
        f"skipped={medians['skipped']}",
    ))
    return rows


def run_concentration_suite(cfg: ExperimentConfig) -> list[WindowRow]:
    """Degree, partition, auxiliary min-degree and exact-moment checks."""
    cfg.validate()
    root = RandomSeed(cfg.seed).child("concentration")
    rows = []

    n, p = cfg.degree_n or cfg.n, cfg.degree_p or cfg.p
    ds = root.child("degree")
    graphs = (sample_gnp(n, p, ds.child(c)) for c in range(cfg.degree_colors))
    rep = check_degree_concentration(graphs, n, p, cfg.eps, cfg.threshold_degree)
    rows.append(_row(rep, n, p, cfg.eps, f"vertex_fraction={rep.details['vertex_fraction']!r}"))

    n, p = cfg.partition_n or cfg.n, cfg.partition_p or cfg.p
    ps = root.child("partition")
    fam = GraphFamily(n, [sample_gnp(n, p, ps.child("color", c)) for c in range(n // 2)])
    total = WindowReport("partition-degrees", 0, 0, cfg.threshold_partition)
    for t in range(cfg.partition_count):
        part = sample_balanced_partition(n, ps.child("split", t))
        r = check_partition_degrees(fam, part, cfg.eps, cfg.threshold_partition)
        total.checks += r.checks
        total.in_window += r.in_window
    rows.append(_row(total, n, p, cfg.eps, f"partitions={cfg.partition_count}"))

    n, p = cfg.aux_n or cfg.n, cfg.aux_p or cfg.p
    rows.extend(_aux_rows_summary(cfg, n, p, root.child("aux")))

    rows.extend(_moment_rows(cfg, root.child("moments")))
    return rows


def _aux_rows_summary(cfg: ExperimentConfig, n: int, p: float, seed: RandomSeed) -> list[WindowRow]:
    fam_b, fam_d = _aux_families(cfg, n, p, seed)
    out = []
    for fam, bip, label in ((fam_b, True, "B"), (fam_d, False, "D")):
        w = aux_window(n, p, cfg.eps, bipartite=bip)
        rep = check_aux_min_degree(fam, w, cfg.aux_perms, seed.child("pi", label), cfg.threshold_aux)
        out.append(_row(rep, n, p, cfg.eps, f"window={float(w)!r}"))
    return out


def run_aux_stats(cfg: ExperimentConfig) -> list[AuxRow]:
    """Per-permutation minimum degree of B_pi and minimum semidegree of D_pi
    on one thinned family of each type.  ``trials`` is the number of permutations."""
    cfg.validate()
    seed = RandomSeed(cfg.seed).child("aux-stats")
    n, p = cfg.n, cfg.p
    fam_b, fam_d = _aux_families(cfg, n, p, seed)
    rows = []
    for fam, bip, label in ((fam_b, True, "B"), (fam_d, False, "D")):
        w = aux_window(n, p, cfg.eps, bipartite=bip)
        ps = seed.child("pi", label)
        for t in range(cfg.trials):
            pi = sample_permutation(fam.m, ps.child(t))
            if bip:
                mind = int(build_aux_bipartite(fam, pi).degrees.min())
            else:
                mind = min_semidegree(build_aux_digraph(fam, pi))
            rows.append(AuxRow(t, cfg.seed, label, n, p, cfg.eps, pi.digest(), mind, float(w), mind >= w))
    return rows
