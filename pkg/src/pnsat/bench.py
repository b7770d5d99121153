"""Experiment harness: paired heuristic comparisons, the PN-product regression, and summaries."""
from __future__ import annotations

import csv
import io
import logging
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from scipy import stats as sps

from .cdcl import Indeterminate, Status, solve
from .formula import generate_ksat
from .heuristics import HeuristicConfig
from .pn_metrics import RegressionResult, ols_simple, pn_product

log = logging.getLogger(__name__)

CSV_HEADER = ("heuristic,instance_seed,status,final_clauses,conflicts,decisions,"
              "initial_pn_product,wall_time_s")
DEFAULT_BUDGET = 500_000


@dataclass(frozen=True)
class BenchRecord:
    instance_seed: int
    heuristic: str
    status: Status
    final_clause_count: int
    conflicts: int
    decisions: int
    initial_pn_product: int
    wall_time: float

    def csv_fields(self) -> list[str]:
        return [self.heuristic, str(self.instance_seed), self.status.value,
                str(self.final_clause_count), str(self.conflicts), str(self.decisions),
                str(self.initial_pn_product), f"{self.wall_time:.6f}"]


_warm = False


def warm_up() -> None:
    """Load the jitted kernels once per process so they do not count towards wall time."""
    global _warm
    if not _warm:
        solve(generate_ksat(5, 21, 3, 0), HeuristicConfig())
        _warm = True


def solve_record(formula, config: HeuristicConfig, instance_seed: int, budget: int,
                 learning: str = "1uip", initial_pn: int | None = None) -> BenchRecord:
    if initial_pn is None:
        initial_pn = pn_product(formula)
    warm_up()
    t0 = time.perf_counter()
    try:
        result = solve(formula, config, seed=instance_seed, max_conflicts=budget, learning=learning)
        status, st = result.status, result.stats
    except Indeterminate as exc:
        status, st = Status.INDETERMINATE, exc.stats
    return BenchRecord(instance_seed, config.label, status, st.final_clause_count,
                       st.conflicts, st.decisions, initial_pn, time.perf_counter() - t0)


def _run_repetition(args) -> list[BenchRecord]:
    n, m, k, seed, heuristics, budget, learning = args
    f = generate_ksat(n, m, k, seed)
    initial_pn = pn_product(f)
    return [solve_record(f, h, seed, budget, learning, initial_pn) for h in heuristics]


def run_matrix(n: int, m: int, k: int, repetitions: int, heuristics: Sequence[HeuristicConfig],
               seed0: int = 0, budget: int = DEFAULT_BUDGET, jobs: int = 1,
               learning: str = "1uip",
               on_record: Callable[[BenchRecord], None] | None = None) -> list[BenchRecord]:
    """Solve instance ``seed0 + i`` with every heuristic, for ``i < repetitions``.

    Records come back ordered by repetition, then by position in
    ``heuristics``, regardless of ``jobs``.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    tasks = [(n, m, k, seed0 + i, list(heuristics), budget, learning) for i in range(repetitions)]
    records: list[BenchRecord] = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches: Iterable[list[BenchRecord]] = pool.map(_run_repetition, tasks)
            for batch in batches:
                _collect(batch, records, on_record)
    else:
        for task in tasks:
            _collect(_run_repetition(task), records, on_record)
    return records


def _collect(batch, records, on_record):
    for rec in batch:
        records.append(rec)
        if on_record is not None:
            on_record(rec)


def records_csv(records: Iterable[BenchRecord], comment: str | None = None) -> str:
    buf = io.StringIO()
    if comment:
        buf.write(f"# {comment}\n")
    buf.write(CSV_HEADER + "\n")
    w = csv.writer(buf, lineterminator="\n")
    for r in records:
        w.writerow(r.csv_fields())
    return buf.getvalue()


@dataclass(frozen=True)
class AggregateStats:
    maximum: int | None
    mean: float | None
    median: float | None
    n_runs: int
    excluded: int = 0


def summarize(counts: Sequence[int], excluded: int = 0) -> AggregateStats:
    if not counts:
        return AggregateStats(None, None, None, 0, excluded)
    return AggregateStats(max(counts), statistics.fmean(counts), float(statistics.median(counts)),
                          len(counts), excluded)


def aggregate(records: Iterable[BenchRecord]) -> dict[str, AggregateStats]:
    """Final clause count summaries per heuristic; undecided runs are counted in ``excluded``."""
    groups: dict[str, list[int]] = {}
    excluded: dict[str, int] = {}
    for r in records:
        groups.setdefault(r.heuristic, [])
        excluded.setdefault(r.heuristic, 0)
        if r.status == Status.INDETERMINATE:
            excluded[r.heuristic] += 1
        else:
            groups[r.heuristic].append(r.final_clause_count)
    out = {}
    for label, counts in groups.items():
        out[label] = summarize(counts, excluded[label])
        if not counts:
            log.warning("heuristic %s has no decided runs", label)
    return out


def paired_counts(records: Iterable[BenchRecord], heuristic: str) -> dict[int, int]:
    return {r.instance_seed: r.final_clause_count for r in records
            if r.heuristic == heuristic and r.status != Status.INDETERMINATE}


def markdown_table(agg: dict[str, AggregateStats]) -> str:
    labels = list(agg)
    rows = [
        "| | " + " | ".join(labels) + " |",
        "|---|" + "---|" * len(labels),
    ]

    def fmt(v, spec):
        return "n/a" if v is None else format(v, spec)

    rows.append("| maximum | " + " | ".join(fmt(agg[l].maximum, "d") for l in labels) + " |")
    rows.append("| average | " + " | ".join(fmt(agg[l].mean, ".3f") for l in labels) + " |")
    rows.append("| median | " + " | ".join(fmt(agg[l].median, ".1f") for l in labels) + " |")
    rows.append("| runs | " + " | ".join(str(agg[l].n_runs) for l in labels) + " |")
    if any(a.excluded for a in agg.values()):
        rows.append("| excluded | " + " | ".join(str(agg[l].excluded) for l in labels) + " |")
    return "\n".join(rows) + "\n"


@dataclass(frozen=True)
class SignTest:
    wins_a: int
    wins_b: int
    ties: int
    one_sided_p: float | None  # None when every pair ties


def paired_sign_test(a: Sequence[float], b: Sequence[float]) -> SignTest:
    """Sign test that ``a`` tends to be smaller than ``b`` (a "win" is a strictly smaller value)."""
    if len(a) != len(b):
        raise ValueError("samples must be paired")
    wins_a = sum(x < y for x, y in zip(a, b))
    wins_b = sum(x > y for x, y in zip(a, b))
    ties = len(a) - wins_a - wins_b
    if wins_a + wins_b == 0:
        return SignTest(0, 0, ties, None)
    p = sps.binomtest(wins_a, wins_a + wins_b, 0.5, alternative="greater").pvalue
    return SignTest(wins_a, wins_b, ties, float(p))


@dataclass(frozen=True)
class SolvabilityRegression:
    regression: RegressionResult
    points: list[tuple[int, int, int]]  # (instance_seed, initial_pn_product, solvable)
    excluded: int

    @property
    def too_many_excluded(self) -> bool:
        return self.excluded > 0.1 * (len(self.points) + self.excluded)

    def points_csv(self) -> str:
        lines = ["instance_seed,initial_pn_product,solvable"]
        lines += [f"{s},{pn},{y}" for s, pn, y in self.points]
        return "\n".join(lines) + "\n"

    def regression_csv(self) -> str:
        return RegressionResult.CSV_HEADER + "\n" + self.regression.csv_row() + "\n"


def solvability_regression(n: int, m: int, k: int, instances: int, seed0: int = 0,
                      budget: int = DEFAULT_BUDGET, heuristic: HeuristicConfig | None = None,
                      learning: str = "1uip") -> SolvabilityRegression:
    """Regress solvable (1/0) on the initial PN product over fresh random instances."""
    if instances < 30:
        raise ValueError("need at least 30 instances")
    heuristic = heuristic or HeuristicConfig()
    points = []
    excluded = 0
    for i in range(instances):
        seed = seed0 + i
        f = generate_ksat(n, m, k, seed)
        rec = solve_record(f, heuristic, seed, budget, learning)
        if rec.status == Status.INDETERMINATE:
            excluded += 1
            continue
        points.append((seed, rec.initial_pn_product, int(rec.status == Status.SAT)))
    result = SolvabilityRegression(
        ols_simple([p[1] for p in points], [p[2] for p in points]), points, excluded)
    if result.too_many_excluded:
        log.warning("%d of %d instances hit the budget and were excluded", excluded, instances)
    return result
