"""Seeded Monte Carlo sweeps over D(n, p(n)) with per-trial CSV records.

Every trial draws its digraph from ``substream(master_seed, n, trial_index)``
so records do not depend on scheduling. Records are written in canonical
``(n, trial_index)`` order.
"""

from __future__ import annotations

import csv
import io
import logging
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Iterable, Optional

from .degree_stats import delta_in, delta_out, delta_star, light_report
from .frank import tau_exact
from .lambda_stat import compute_lambda
from .packer import PACKED, Budget, pack
from .random_model import RegimeSpec, p_of, sample, substream

log = logging.getLogger(__name__)

RECORD_HEADER = (
    "n,p,seed_index,arc_count,delta_in,delta_out,delta_star,lambda,lambda_window_hit,"
    "tau_exact,packed_k,tau_eq_lambda,in_light_conflicts,out_light_conflicts,wall_time_ms"
).split(",")

SUMMARY_HEADER = [
    "n",
    "trials",
    "p",
    "fraction_lambda_zero",
    "fraction_lambda_window_hit",
    "mean_lambda_over_deltain",
    "fraction_ratio_in_1_1p5",
    "fraction_tau_eq_lambda",
    "fraction_deltain_in_deltastar_window",
    "mean_deltain_over_pn",
    "fraction_no_in_light_conflict",
]


@dataclass(frozen=True)
class ExperimentConfig:
    regime: RegimeSpec = RegimeSpec()
    n_values: tuple[int, ...] = (100,)
    trials_per_n: int = 10
    master_seed: int = 0
    # set pack=False to skip the packer (lambda-only sweeps at large n)
    pack: bool = True
    budget: Budget = Budget()
    oracle_limit: int = 9
    epsilon_light: float = 0.05
    records_path: Optional[str] = None
    summary_path: Optional[str] = None
    svg_path: Optional[str] = None
    workers: int = 1
    record_timing: bool = True

    def __post_init__(self):
        if self.trials_per_n < 1:
            raise ValueError("trials_per_n must be >= 1")
        if list(self.n_values) != sorted(self.n_values):
            raise ValueError("n_values must be sorted ascending")


@dataclass
class TrialRecord:
    n: int
    p: float
    seed_index: int
    arc_count: Optional[int] = None
    delta_in: Optional[int] = None
    delta_out: Optional[int] = None
    delta_star: Optional[int] = None
    lam: Optional[int] = None
    lambda_window_hit: Optional[bool] = None
    tau_exact: Optional[int] = None
    packed_k: Optional[int] = None
    tau_eq_lambda: Optional[bool] = None
    in_light_conflicts: Optional[int] = None
    out_light_conflicts: Optional[int] = None
    wall_time_ms: Optional[float] = None
    error: Optional[str] = field(default=None, compare=False)

    def row(self) -> list[str]:
        values = [getattr(self, f.name) for f in fields(self) if f.name != "error"]
        return [_fmt(v) for v in values]


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, float):
        # shortest round-trip form, so summaries can be rebuilt exactly from the CSV
        return repr(v)
    return str(v)


# -- config parsing ------------------------------------------------------------

_BOOL = {"true": True, "yes": True, "1": True, "false": False, "no": False, "0": False}


def parse_config(text: str, base_dir: str | os.PathLike = ".") -> ExperimentConfig:
    """Parse ``key = value`` lines; ``#`` starts a comment.

    Keys: ``regime.kind``, ``regime.h_scale``, ``regime.phi``,
    ``regime.psi_scale``, ``regime.p_explicit``, ``n_values`` (comma list),
    ``trials_per_n``, ``master_seed``, ``pack``, ``budget.restarts``,
    ``budget.exhaustive_limit``, ``budget.exhaustive_cap``, ``budget.seed``,
    ``oracle_limit``, ``epsilon_light``, ``outputs.records``,
    ``outputs.summary``, ``outputs.svg``, ``workers``, ``record_timing``.
    Output paths are resolved against ``base_dir``.
    """
    regime, budget, top = {}, {}, {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if key.startswith("regime."):
            name = key[len("regime.") :]
            regime[name] = value if name == "kind" else float(value)
        elif key.startswith("budget."):
            budget[key[len("budget.") :]] = int(value)
        elif key in ("n_values",):
            top[key] = tuple(int(x) for x in value.replace(" ", "").split(",") if x)
        elif key in ("trials_per_n", "master_seed", "oracle_limit", "workers"):
            top[key] = int(value)
        elif key == "epsilon_light":
            top[key] = float(value)
        elif key in ("pack", "record_timing"):
            top[key] = _BOOL[value.lower()]
        elif key.startswith("outputs."):
            name = key[len("outputs.") :]
            if name not in ("records", "summary", "svg"):
                raise ValueError(f"config line {lineno}: unknown output {name!r}")
            top[f"{name}_path"] = str(Path(base_dir, value))
        else:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
    unknown = set(budget) - {f.name for f in fields(Budget)}
    if unknown:
        raise ValueError(f"unknown budget keys {sorted(unknown)}")
    return ExperimentConfig(regime=RegimeSpec(**regime), budget=Budget(**budget), **top)


def load_config(path: str | os.PathLike) -> ExperimentConfig:
    path = Path(path)
    return parse_config(path.read_text(encoding="utf-8"), base_dir=path.parent)


# -- trials ------------------------------------------------------------------


def run_trial(config: ExperimentConfig, n: int, trial_index: int) -> TrialRecord:
    if not 0 <= trial_index < config.trials_per_n:
        raise ValueError(f"trial_index {trial_index} outside 0..{config.trials_per_n - 1}")
    start = time.perf_counter()
    rec = TrialRecord(n=n, p=float("nan"), seed_index=trial_index)
    try:
        p = p_of(config.regime, n)
        rec.p = p
        D = sample(n, p, substream(config.master_seed, n, trial_index))
        rec.arc_count = D.m
        rec.delta_in = delta_in(D)
        rec.delta_out = delta_out(D)
        if 0 < p < 1:
            rec.delta_star = delta_star(n, p)
        else:
            rec.delta_star = 0 if p == 0 else n - 1
        lam = compute_lambda(D).value if n > 1 else 0
        rec.lam = lam
        rec.lambda_window_hit = lam in (rec.delta_in, rec.delta_in + 1)
        if 2 <= n <= config.oracle_limit:
            rec.tau_exact = tau_exact(D, limit=config.oracle_limit).tau
        if config.pack:
            # descend from lambda; a Packed level certifies tau >= k
            for k in range(lam, -1, -1):
                if pack(D, k, config.budget).status == PACKED:
                    rec.packed_k = k
                    break
        if rec.packed_k is not None or rec.tau_exact is not None:
            rec.tau_eq_lambda = rec.packed_k == lam or rec.tau_exact == lam
        if p > 0:
            report = light_report(D, config.epsilon_light, p)
            rec.in_light_conflicts = report.in_conflicts
            rec.out_light_conflicts = report.out_conflicts
    except Exception as exc:  # one failed trial must not abort the sweep
        log.warning("trial n=%d index=%d failed: %s", n, trial_index, exc)
        rec.error = f"{type(exc).__name__}: {exc}"
    if config.record_timing:
        rec.wall_time_ms = round((time.perf_counter() - start) * 1000.0, 3)
    return rec


def _run_task(args):
    return run_trial(*args)


def iter_trials(config: ExperimentConfig) -> Iterable[TrialRecord]:
    tasks = [(config, n, t) for n in config.n_values for t in range(config.trials_per_n)]
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            # map() yields in submission order, which is the canonical order
            yield from pool.map(_run_task, tasks, chunksize=1)
    else:
        for task in tasks:
            yield _run_task(task)


# -- summaries ---------------------------------------------------------------


@dataclass
class SummaryRow:
    n: int
    trials: int
    p: float
    fraction_lambda_zero: Optional[float]
    fraction_lambda_window_hit: Optional[float]
    mean_lambda_over_deltain: Optional[float]
    fraction_ratio_in_1_1p5: Optional[float]
    fraction_tau_eq_lambda: Optional[float]
    fraction_deltain_in_deltastar_window: Optional[float]
    mean_deltain_over_pn: Optional[float]
    fraction_no_in_light_conflict: Optional[float]

    def row(self) -> list[str]:
        return [_fmt(getattr(self, name)) for name in SUMMARY_HEADER]


def _frac(flags: list[bool]) -> Optional[float]:
    return sum(flags) / len(flags) if flags else None


def _mean(xs: list[float]) -> Optional[float]:
    return math.fsum(xs) / len(xs) if xs else None


def summarize(records: Iterable[TrialRecord]) -> list[SummaryRow]:
    groups: dict[int, list[TrialRecord]] = {}
    for r in records:
        groups.setdefault(r.n, []).append(r)
    out = []
    for n in sorted(groups):
        rs = [r for r in groups[n] if r.lam is not None]
        pos = [r for r in rs if r.delta_in > 0]
        ratios = [r.lam / r.delta_in for r in pos]
        out.append(
            SummaryRow(
                n=n,
                trials=len(groups[n]),
                p=groups[n][0].p,
                fraction_lambda_zero=_frac([r.lam == 0 for r in rs]),
                fraction_lambda_window_hit=_frac([bool(r.lambda_window_hit) for r in rs]),
                mean_lambda_over_deltain=_mean(ratios),
                fraction_ratio_in_1_1p5=_frac([1 <= x <= 1.5 for x in ratios]),
                fraction_tau_eq_lambda=_frac(
                    [r.tau_eq_lambda for r in rs if r.tau_eq_lambda is not None]
                ),
                fraction_deltain_in_deltastar_window=_frac(
                    [abs(r.delta_in - r.delta_star) <= 1 for r in rs if r.delta_star is not None]
                ),
                mean_deltain_over_pn=_mean(
                    [r.delta_in / (r.p * (n - 1)) for r in rs if r.p > 0 and n > 1]
                ),
                fraction_no_in_light_conflict=_frac(
                    [r.in_light_conflicts == 0 for r in rs if r.in_light_conflicts is not None]
                ),
            )
        )
    return out


def _record_from_row(row: dict[str, str]) -> TrialRecord:
    def opt(key, conv):
        return conv(row[key]) if row[key] != "" else None

    def flag(s):
        return s == "1"

    return TrialRecord(
        n=int(row["n"]),
        p=float(row["p"]),
        seed_index=int(row["seed_index"]),
        arc_count=opt("arc_count", int),
        delta_in=opt("delta_in", int),
        delta_out=opt("delta_out", int),
        delta_star=opt("delta_star", int),
        lam=opt("lambda", int),
        lambda_window_hit=opt("lambda_window_hit", flag),
        tau_exact=opt("tau_exact", int),
        packed_k=opt("packed_k", int),
        tau_eq_lambda=opt("tau_eq_lambda", flag),
        in_light_conflicts=opt("in_light_conflicts", int),
        out_light_conflicts=opt("out_light_conflicts", int),
        wall_time_ms=opt("wall_time_ms", float),
    )


def read_records(path_or_text: str | os.PathLike, is_text: bool = False) -> list[TrialRecord]:
    text = path_or_text if is_text else Path(path_or_text).read_text(encoding="utf-8")
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != RECORD_HEADER:
        raise ValueError(f"unexpected header {reader.fieldnames}")
    return [_record_from_row(row) for row in reader]


def records_csv(records: Iterable[TrialRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(RECORD_HEADER)
    for r in records:
        w.writerow(r.row())
    return buf.getvalue()


def summary_csv(rows: Iterable[SummaryRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SUMMARY_HEADER)
    for r in rows:
        w.writerow(r.row())
    return buf.getvalue()


# -- sweep ---------------------------------------------------------------------


@dataclass
class SweepResult:
    records: list[TrialRecord]
    summary: list[SummaryRow]


def sweep(config: ExperimentConfig) -> SweepResult:
    """Run every ``(n, trial)`` pair, streaming rows to ``records_path``.

    Rows go to ``<records_path>.partial`` first, flushed per row, and the
    file is renamed into place only after the last trial; an aborted sweep
    leaves the ``.partial`` file behind.
    """
    records: list[TrialRecord] = []
    sink = None
    if config.records_path:
        partial = Path(config.records_path + ".partial")
        partial.parent.mkdir(parents=True, exist_ok=True)
        sink = open(partial, "w", encoding="utf-8", newline="")
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(RECORD_HEADER)
    try:
        for rec in iter_trials(config):
            records.append(rec)
            if sink:
                writer.writerow(rec.row())
                sink.flush()
    finally:
        if sink:
            sink.close()
    if config.records_path:
        os.replace(partial, config.records_path)
    summary = summarize(records)
    if config.summary_path:
        Path(config.summary_path).write_text(summary_csv(summary), encoding="utf-8", newline="")
    if config.svg_path:
        from .svg import fraction_chart

        Path(config.svg_path).write_text(fraction_chart(summary), encoding="utf-8")
    return SweepResult(records, summary)


def without_timing(config: ExperimentConfig) -> ExperimentConfig:
    return replace(config, record_timing=False)
