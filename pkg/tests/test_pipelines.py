import pytest

from rainbowlab.config import ExperimentConfig
from rainbowlab.pipelines import (
    floor_for,
    run_aux_stats,
    run_concentration_suite,
    run_hc_pipeline,
    run_kpm_pipeline,
    run_pm_bipartite_pipeline,
    run_pm_pipeline,
    run_trials,
    sample_host,
    success_count,
)
from rainbowlab.records import TrialRecord, columns_for, to_csv
from rainbowlab.sampling import RandomSeed


def _check_records(recs):
    for r in recs:
        assert (r.verified is not None) == (r.outcome == "found")
        if r.outcome == "found":
            assert r.verified, r.violations


@pytest.mark.parametrize(
    "runner,kind,n",
    [(run_pm_pipeline, "pm", 12), (run_pm_bipartite_pipeline, "pm-bipartite", 12), (run_hc_pipeline, "hc", 15)],
)
def test_complete_colors_always_succeed(runner, kind, n):
    cfg = ExperimentConfig(kind=kind, n=n, p=1.0, eps=0.1, strategy="none", trials=5)
    recs = runner(cfg)
    assert success_count(recs) == 5
    _check_records(recs)


def test_hc_triangle():
    recs = run_hc_pipeline(ExperimentConfig(kind="hc", n=3, p=1.0, strategy="none", trials=3))
    assert success_count(recs) == 3


def test_impossible_floor_isolated_per_trial():
    cfg = ExperimentConfig(kind="pm", n=20, p=0.5, eps=0.6, trials=4)
    recs = run_pm_pipeline(cfg)
    assert len(recs) == 4
    assert all(r.error.startswith("UnsatisfiableFloor") for r in recs)
    assert all(r.outcome is None and r.verified is None for r in recs)


def test_resample_reaches_floor():
    fam, redraws = sample_host(60, 30, 0.3, 12, RandomSeed(1), floor_mode="resample")
    assert min(fam.min_degrees()) >= 12
    assert redraws > 0


def test_kpm_complete_and_guard():
    cfg = ExperimentConfig(kind="kpm", k=3, d=2, n=4, p=1.0, eps=0.1, trials=3)
    assert floor_for(cfg) == 3
    assert success_count(run_kpm_pipeline(cfg)) == 3
    with pytest.raises(ValueError):
        run_kpm_pipeline(cfg.replace(k=5, d=2))


def test_desk_scale_pipelines():
    cfg = ExperimentConfig(kind="pm", n=60, p=0.5, eps=0.1, trials=10, floor_mode="resample")
    recs = run_pm_pipeline(cfg)
    _check_records(recs)
    assert success_count(recs) >= 9
    assert all(r.sub_min_degree >= r.floor for r in recs)


def test_jobs_do_not_change_output():
    cfg = ExperimentConfig(kind="hc", n=20, p=0.6, eps=0.1, trials=6, floor_mode="resample")
    cols = columns_for(TrialRecord)
    one = to_csv(run_trials(cfg), cols)
    two = to_csv(run_trials(cfg.replace(jobs=3)), cols)
    assert one == two


def test_seed_changes_output():
    cfg = ExperimentConfig(kind="pm", n=20, p=0.6, eps=0.1, trials=3, floor_mode="resample")
    a = [r.pi_digest for r in run_trials(cfg)]
    b = [r.pi_digest for r in run_trials(cfg.replace(seed=1))]
    assert a != b


def test_concentration_suite_small():
    cfg = ExperimentConfig(
        kind="concentration", n=40, p=0.5, eps=0.1, degree_colors=20, partition_count=3, aux_perms=10,
        moment_families=6, floor_mode="resample",
    )
    rows = {r.check: r for r in run_concentration_suite(cfg)}
    assert set(rows) == {
        "degree-concentration", "partition-degrees", "aux-min-degree-B", "aux-min-degree-D",
        "moment-mean-exact", "moment-variance-bound", "moment-median-window",
    }
    assert rows["moment-mean-exact"].in_window == 6
    assert rows["moment-variance-bound"].passed
    assert rows["moment-median-window"].checks == 0


def test_aux_stats_rows():
    cfg = ExperimentConfig(kind="aux-stats", n=30, p=0.5, eps=0.1, trials=5, floor_mode="resample")
    rows = run_aux_stats(cfg)
    assert [r.graph for r in rows] == ["B"] * 5 + ["D"] * 5
    assert all(r.in_window == (r.min_degree >= r.window) for r in rows)
