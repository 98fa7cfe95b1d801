"""Command-line batch runner.

    rainbowlab pm --config exp.cfg --out results --trials 100 --jobs 4 --assert

Exit codes: 0 batch completed, 1 config error, 2 threshold failure under ``--assert``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import ConfigError, ExperimentConfig
from .pipelines import run_aux_stats, run_concentration_suite, run_trials, success_count
from .records import AuxRow, TrialRecord, WindowRow, columns_for, write_csv, write_jsonl

# subcommand -> experiment kind
COMMANDS = {
    "pm": "pm",
    "pm-bip": "pm-bipartite",
    "hc": "hc",
    "kpm": "kpm",
    "conc": "concentration",
    "aux-stats": "aux-stats",
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rainbowlab", description="Rainbow Dirac-type experiments on random graph families.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--config", type=Path, help="flat key=value config file")
        sp.add_argument("--out", type=Path, help="output directory (overrides output.dir)")
        sp.add_argument("--seed", type=int, help="root seed, unsigned 64-bit")
        sp.add_argument("--trials", type=int)
        sp.add_argument("--jobs", type=int)
        sp.add_argument("--assert", dest="check", action="store_true", help="exit 2 when a pass threshold is missed")
    return ap


def load_config(args) -> ExperimentConfig:
    kind = COMMANDS[args.command]
    cfg = ExperimentConfig.from_file(args.config) if args.config else ExperimentConfig(kind=kind)
    if args.config and "experiment" in cfg.source and cfg.kind != kind:
        raise ConfigError(f"config is for experiment {cfg.kind!r}, not {kind!r}")
    changes = {"kind": kind}
    for attr in ("seed", "trials", "jobs"):
        val = getattr(args, attr)
        if val is not None:
            changes[attr] = val
    if args.out is not None:
        changes["out_dir"] = str(args.out)
    return cfg.replace(**changes).validate()


def run(cfg: ExperimentConfig) -> tuple[list, list[str], bool]:
    """Run the experiment; returns rows, CSV columns and whether thresholds were met."""
    if cfg.kind == "concentration":
        rows = run_concentration_suite(cfg)
        return rows, columns_for(WindowRow), all(r.passed for r in rows)
    if cfg.kind == "aux-stats":
        rows = run_aux_stats(cfg)
        ok = True
        for g in ("B", "D"):
            sel = [r for r in rows if r.graph == g]
            ok &= sum(r.in_window for r in sel) >= cfg.threshold_aux * len(sel)
        return rows, columns_for(AuxRow), ok
    rows = run_trials(cfg)
    ok = success_count(rows) >= cfg.threshold_success * len(rows)
    return rows, columns_for(TrialRecord, timing=cfg.timing, verbose=cfg.verbose), ok


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args)
    except (ConfigError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    rows, cols, ok = run(cfg)
    out = Path(cfg.out_dir)
    path = write_csv(out / f"{cfg.kind}.csv", rows, cols)
    if cfg.jsonl:
        write_jsonl(out / f"{cfg.kind}.jsonl", rows, cols)
    if cfg.kind in COMMANDS.values() and isinstance(rows[0] if rows else None, TrialRecord):
        print(f"{cfg.kind}: {success_count(rows)}/{len(rows)} verified successes -> {path}")
    else:
        print(f"{cfg.kind}: {'pass' if ok else 'fail'} -> {path}")
    if args.check and not ok:
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
