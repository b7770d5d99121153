"""Acceptance gate: one test per criterion, each at its stated scale and tolerance.

Every test records a PASS/FAIL line that is printed in the terminal summary.
"""
import csv
import io

import pytest

import invariants
from oracles import all_models, satisfies
from pnsat import bench
from pnsat.cdcl import Status, solve
from pnsat.cli import main
from pnsat.formula import example_formula, generate_ksat
from pnsat.heuristics import comparison_heuristics
from pnsat.pn_metrics import pn_product, pn_sweep, predicted_new_pn_product

pytestmark = pytest.mark.slow


def test_solver_matches_enumeration(criterion):
    mismatches = []
    runs = 0
    for i in range(500):
        n = 5 + i % 16
        f = generate_ksat(n, round(4.26 * n), 3, seed=i)
        clauses = f.as_ints()
        truth = bool(all_models(n, clauses)[0].any())
        for j, cfg in enumerate(invariants.CONFIGS):
            learning = invariants.SCHEMES[(i + j) % 2]
            r = solve(f, cfg, seed=i, learning=learning)
            runs += 1
            ok = (r.status == Status.SAT) == truth
            if ok and r.status == Status.SAT:
                ok = satisfies(clauses, r.model)
            if not ok:
                mismatches.append((i, cfg.label, learning))
    criterion("1 correctness oracle", not mismatches, f"{runs} runs, {len(mismatches)} mismatches")
    assert not mismatches


def test_clause_count_ordering(criterion):
    records = bench.run_matrix(100, 426, 3, 100, comparison_heuristics(), seed0=0)
    agg = bench.aggregate(records)
    med = {label: a.median for label, a in agg.items()}
    excluded = sum(a.excluded for a in agg.values())
    ordering = (med["pnprod-decay"] < med["pnprod"] <= med["psum"]
                < min(med["dlis"], med["vsids"]))
    a = bench.paired_counts(records, "pnprod-decay")
    b = bench.paired_counts(records, "dlis")
    common = sorted(set(a) & set(b))
    st = bench.paired_sign_test([a[s] for s in common], [b[s] for s in common])
    significant = st.one_sided_p is not None and st.one_sided_p < 0.05
    detail = (", ".join(f"{k}={v}" for k, v in med.items())
              + f"; sign test pnprod-decay<dlis wins={st.wins_a} losses={st.wins_b} "
              f"p={st.one_sided_p}; excluded={excluded}")
    criterion("2 clause-count ordering", ordering and significant, detail)
    assert ordering, detail
    assert significant, detail


def test_solvability_falls_with_pn_product(criterion):
    res = bench.solvability_regression(100, 426, 3, instances=1000, seed0=0)
    reg = res.regression
    ok = reg.slope < 0 and reg.t_stat < -2 and not res.too_many_excluded
    criterion("3 regression sign", ok,
              f"slope={reg.slope:.4g} t={reg.t_stat:.3f} n={reg.n_points} excluded={res.excluded}")
    assert ok


def test_pn_product_increases_with_clause_count(criterion):
    points = pn_sweep(100, 3, list(range(100, 801, 100)), 30, 0)
    means = [mean for _, mean in points]
    ok = all(a < b for a, b in zip(means, means[1:]))
    criterion("4 sweep monotone", ok, " ".join(f"{m}:{v:.0f}" for m, v in points))
    assert ok


def test_pn_fixtures(criterion):
    pn = pn_product(example_formula())
    pred = predicted_new_pn_product(10, 5, 2, 1, 3)
    ok = pn == 160 and abs(pred - 128 / 9) <= 1e-9 and abs(pred - 14.2222) < 1e-4
    criterion("5 pn fixtures", ok, f"pn={pn} predicted={pred:.10f}")
    assert ok


def test_property_suites(criterion):
    counts = {
        "tracker": invariants.check_tracker(instances=100, n_lo=10, n_hi=30),
        "asserting": invariants.check_asserting(instances=100, n_lo=10, n_hi=30),
        "implied": invariants.check_implied(instances=100, n_lo=6, n_hi=15),
        "decay": invariants.check_decay_invariance(instances=100),
        "generator": invariants.check_generator(trials=20, literals=10_000),
    }
    criterion("6 property suites", True, " ".join(f"{k}={v}" for k, v in counts.items()))


def _bench_rows(path):
    text = path.read_text()
    lines = text.splitlines()
    rows = list(csv.reader(io.StringIO("\n".join(lines[1:]))))
    col = rows[0].index("wall_time_s")
    return lines[0], [r[:col] + r[col + 1:] for r in rows]


def test_bench_reproducible(criterion, tmp_path):
    out = tmp_path / "bench.csv"
    argv = ["bench", "--reps", "5", "--seed0", "3", "--summary", str(tmp_path / "s.md"),
            "-o", str(out)]
    outs = []
    for _ in range(2):
        assert main(argv) == 0
        outs.append(_bench_rows(out))
    ok = outs[0] == outs[1] and len(outs[0][1]) == 1 + 5 * 7
    criterion("7 bench reproducible", ok, f"{len(outs[0][1]) - 1} rows compared")
    assert ok
