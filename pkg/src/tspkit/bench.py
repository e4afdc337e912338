"""Benchmark harness: run solvers over instances, normalize by a random baseline.

Every (instance, algorithm, trial) cell times one solver call (wall clock
around the call only; the distance matrix is pre-warmed). Lengths are also
reported as a ratio against the instance's baseline: the mean length of
`baseline_trials` uniformly random tours, the upper-bound reference.

Seed derivation, documented: trial t of a randomized algorithm uses
``base_seed ^ t``; baseline draw k uses ``base_seed ^ 0x9E3779B97F4A7C15 ^ k``
(a golden-gamma salt keeps baseline streams disjoint from trial streams).
Deterministic algorithms (greedy) run once regardless of `trials`.

Record content (lengths, tours, ratios) is deterministic for a fixed config;
wall times are measured and are not. Cells are independent; with workers > 1
they run in a thread pool and results are sorted back into the deterministic
(instance, algorithm, trial) order.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from statistics import fmean

from tspkit.core import Instance
from tspkit.data import FIXTURE_NAMES, fixture, parse_instance
from tspkit.errors import ConfigurationError, DomainError
from tspkit.solvers import GaParams, Seed, TwoOptParams, genetic, greedy_tour, random_tour, two_opt

ALGORITHMS = ("genetic", "greedy", "random", "two_opt")
DETERMINISTIC_ALGORITHMS = frozenset({"greedy"})

BASELINE_SEED_SALT = 0x9E3779B97F4A7C15

# Exact column order of the records CSV; the JSON-lines mirror uses the same keys.
RECORD_FIELDS = (
    "instance",
    "n",
    "algorithm",
    "trial",
    "length",
    "baseline_length",
    "ratio",
    "wall_time_s",
    "iterations",
    "seed",
    "status",
    "message",
)


@dataclass(frozen=True)
class BenchConfig:
    algorithms: tuple[str, ...]
    instances: tuple[str, ...]
    trials: int = 3
    seed: Seed = 0
    baseline_trials: int = 32
    two_opt_params: TwoOptParams = field(default_factory=TwoOptParams)
    ga_params: GaParams = field(default_factory=GaParams)
    workers: int = 1

    def validate(self) -> None:
        if not self.algorithms:
            raise ConfigurationError("algorithms must be non-empty")
        for a in self.algorithms:
            if a not in ALGORITHMS:
                raise ConfigurationError(
                    f"algorithms: unknown algorithm {a!r} (choose from {', '.join(ALGORITHMS)})"
                )
        if not self.instances:
            raise ConfigurationError("instances must be non-empty")
        if self.trials < 1:
            raise ConfigurationError(f"trials must be >= 1, got {self.trials}")
        if self.baseline_trials < 1:
            raise ConfigurationError(f"baseline_trials must be >= 1, got {self.baseline_trials}")
        if self.workers < 1:
            raise ConfigurationError(f"workers must be >= 1, got {self.workers}")
        self.two_opt_params.validate()
        self.ga_params.validate()


@dataclass(frozen=True)
class BenchRecord:
    """One measurement row. Failed cells keep their slot with status='failed'
    and empty measurement fields."""

    instance: str
    n: int
    algorithm: str
    trial: int
    length: float | None
    baseline_length: float
    ratio: float | None
    wall_time: float | None
    iterations: int | None
    seed: Seed | None
    status: str = "ok"
    message: str = ""


@dataclass(frozen=True)
class SummaryRow:
    instance: str
    n: int
    algorithm: str
    trials: int
    failures: int
    min_length: float | None
    mean_length: float | None
    max_length: float | None
    mean_ratio: float | None
    mean_wall_time: float | None
    best_length: float | None


def resolve_instance(spec: str) -> Instance:
    """A path to an instance file, or a bundled fixture name."""
    if os.path.isfile(spec):
        with open(spec, encoding="utf-8") as f:
            text = f.read()
        name_hint = os.path.splitext(os.path.basename(spec))[0]
        return parse_instance(text, name_hint)
    if spec.strip().lower() in FIXTURE_NAMES:
        return fixture(spec)
    raise DomainError(f"cannot resolve instance {spec!r}: not a file and not one of {', '.join(FIXTURE_NAMES)}")


def _baseline_length(inst: Instance, base_seed: Seed, draws: int) -> float:
    lengths = [
        random_tour(inst, (base_seed ^ BASELINE_SEED_SALT) ^ k).length for k in range(draws)
    ]
    return fmean(lengths)


def _run_cell(
    inst: Instance, baseline: float, algorithm: str, trial: int, config: BenchConfig
) -> BenchRecord:
    derived = config.seed ^ trial
    seed: Seed | None = None if algorithm in DETERMINISTIC_ALGORITHMS else derived
    try:
        if algorithm == "random":
            res = random_tour(inst, derived)
        elif algorithm == "greedy":
            res = greedy_tour(inst)
        elif algorithm == "two_opt":
            initial = random_tour(inst, derived).tour
            res = two_opt(inst, initial, config.two_opt_params)
        elif algorithm == "genetic":
            res = genetic(inst, config.ga_params, derived)
        else:  # pragma: no cover - validate() rejects earlier
            raise ConfigurationError(f"unknown algorithm {algorithm!r}")
    except Exception as exc:
        return BenchRecord(
            inst.name, inst.n, algorithm, trial, None, baseline, None, None, None, seed,
            status="failed", message=str(exc),
        )
    return BenchRecord(
        inst.name,
        inst.n,
        algorithm,
        trial,
        res.length,
        baseline,
        res.length / baseline,
        res.wall_time,
        res.iterations,
        seed,
    )


def run_benchmark(config: BenchConfig) -> list[BenchRecord]:
    """All cells of the config, in (instance, algorithm, trial) order.

    Unresolvable instances fail before any cell runs; a solver error inside
    a cell produces a failed record and the run continues.
    """
    config.validate()
    instances = [resolve_instance(s) for s in config.instances]

    cells: list[tuple[Instance, float, str, int]] = []
    for inst in instances:
        inst.distance_matrix()  # pre-warm so cell timing excludes it
        baseline = _baseline_length(inst, config.seed, config.baseline_trials)
        for algorithm in config.algorithms:
            runs = 1 if algorithm in DETERMINISTIC_ALGORITHMS else config.trials
            for trial in range(runs):
                cells.append((inst, baseline, algorithm, trial))

    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            records = list(pool.map(lambda c: _run_cell(*c, config), cells))
    else:
        records = [_run_cell(*c, config) for c in cells]
    records.sort(key=lambda r: (r.instance, r.algorithm, r.trial))
    return records


def summarize(records: list[BenchRecord]) -> list[SummaryRow]:
    """Per (instance, algorithm) aggregates over successful trials,
    sorted by (n ascending, algorithm, instance)."""
    if not records:
        raise DomainError("summarize needs at least one record")
    groups: dict[tuple[str, int, str], list[BenchRecord]] = {}
    for r in records:
        groups.setdefault((r.instance, r.n, r.algorithm), []).append(r)
    rows = []
    for (instance, n, algorithm), group in groups.items():
        ok = [r for r in group if r.status == "ok"]
        failures = len(group) - len(ok)
        if ok:
            lengths = [r.length for r in ok]
            rows.append(
                SummaryRow(
                    instance, n, algorithm, len(group), failures,
                    min(lengths), fmean(lengths), max(lengths),
                    fmean(r.ratio for r in ok), fmean(r.wall_time for r in ok),
                    min(lengths),
                )
            )
        else:
            rows.append(
                SummaryRow(instance, n, algorithm, len(group), failures,
                           None, None, None, None, None, None)
            )
    rows.sort(key=lambda s: (s.n, s.algorithm, s.instance))
    return rows


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _record_values(r: BenchRecord) -> list:
    return [r.instance, r.n, r.algorithm, r.trial, r.length, r.baseline_length,
            r.ratio, r.wall_time, r.iterations, r.seed, r.status, r.message]


SUMMARY_FIELDS = (
    "instance", "n", "algorithm", "trials", "failures", "min_length", "mean_length",
    "max_length", "mean_ratio", "mean_wall_time_s", "best_length",
)


def _summary_values(s: SummaryRow) -> list:
    return [s.instance, s.n, s.algorithm, s.trials, s.failures, s.min_length,
            s.mean_length, s.max_length, s.mean_ratio, s.mean_wall_time, s.best_length]


def emit(records: list[BenchRecord], summary: list[SummaryRow], format: str) -> dict[str, str]:
    """Serialize to named character streams: filename -> content.

    csv and json-lines produce a records table and a summary table;
    plot-data produces runtime_<algorithm>.tsv and ratio_<algorithm>.tsv
    series (columns: n<TAB>value, one point per instance/algorithm pair).
    """
    if format == "csv":
        return {
            "records.csv": _csv_text(RECORD_FIELDS, map(_record_values, records)),
            "summary.csv": _csv_text(SUMMARY_FIELDS, map(_summary_values, summary)),
        }
    if format == "json-lines":
        return {
            "records.jsonl": _jsonl_text(RECORD_FIELDS, map(_record_values, records)),
            "summary.jsonl": _jsonl_text(SUMMARY_FIELDS, map(_summary_values, summary)),
        }
    if format == "plot-data":
        out: dict[str, str] = {}
        for algorithm in sorted({s.algorithm for s in summary}):
            rows = [s for s in summary if s.algorithm == algorithm and s.mean_wall_time is not None]
            out[f"runtime_{algorithm}.tsv"] = "".join(
                f"{s.n}\t{_fmt(s.mean_wall_time)}\n" for s in rows
            )
            out[f"ratio_{algorithm}.tsv"] = "".join(f"{s.n}\t{_fmt(s.mean_ratio)}\n" for s in rows)
        return out
    raise ConfigurationError(f"unknown emit format {format!r} (csv, json-lines, plot-data)")


def _csv_text(fields, value_rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for values in value_rows:
        writer.writerow([_fmt(v) for v in values])
    return buf.getvalue()


def _jsonl_text(fields, value_rows) -> str:
    lines = []
    for values in value_rows:
        lines.append(json.dumps(dict(zip(fields, values)), ensure_ascii=False))
    return "".join(line + "\n" for line in lines)


def parse_records_csv(text: str) -> list[BenchRecord]:
    """Inverse of the csv emit for records; exact field round-trip."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != list(RECORD_FIELDS):
        raise ConfigurationError(f"unexpected records header: {header}")
    out = []
    for row in reader:
        (instance, n, algorithm, trial, length, baseline, ratio, wall, iters, seed,
         status, message) = row
        out.append(
            BenchRecord(
                instance, int(n), algorithm, int(trial),
                float(length) if length else None,
                float(baseline),
                float(ratio) if ratio else None,
                float(wall) if wall else None,
                int(iters) if iters else None,
                int(seed) if seed else None,
                status, message,
            )
        )
    return out


def format_summary_table(summary: list[SummaryRow]) -> str:
    """Human-readable fixed-width table for terminal output."""
    header = ["instance", "n", "algorithm", "trials", "fail", "min", "mean", "max", "ratio", "time_s"]
    body = []
    for s in summary:
        body.append([
            s.instance, str(s.n), s.algorithm, str(s.trials), str(s.failures),
            _short(s.min_length), _short(s.mean_length), _short(s.max_length),
            _short(s.mean_ratio, 4), _short(s.mean_wall_time, 4),
        ])
    widths = [max(len(header[i]), *(len(row[i]) for row in body)) if body else len(header[i])
              for i in range(len(header))]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    for row in body:
        lines.append("  ".join(cell.rjust(w) if i else cell.ljust(w)
                               for i, (cell, w) in enumerate(zip(row, widths))))
    return "\n".join(lines)


def _short(value: float | None, places: int = 2) -> str:
    return "-" if value is None else f"{value:.{places}f}"
