"""Command-line front end: ``pnsat {solve,gen,bench,regress,pn-sweep,pn}``.

Data goes to stdout (or ``-o``), diagnostics to stderr. CSV outputs start
with a ``# cmd:`` comment holding the command line that produced them.
"""
from __future__ import annotations

import argparse
import csv
import logging
import shlex
import sys
from pathlib import Path

from . import bench
from .cdcl import LEARNING_SCHEMES, Indeterminate, Solver, Status
from .formula import DimacsError, InvalidParameters, emit_dimacs, generate_ksat, parse_dimacs
from .heuristics import CLI_NAMES, DECAY_MODES, HeuristicConfig, TieBreak
from .pn_metrics import RegressionError, pn_product, pn_sweep, sweep_csv

EXIT_SAT, EXIT_UNSAT, EXIT_UNKNOWN, EXIT_ERROR = 10, 20, 30, 1
COMPARISON_LABELS = "dlis,vsids,psum,momcombo-32,momcombo-4,pnprod,pnprod-decay"


class CliError(Exception):
    pass


def _add_heuristic_flags(p: argparse.ArgumentParser, single: bool = True) -> None:
    if single:
        p.add_argument("--heuristic", choices=sorted(CLI_NAMES), default="pnprod-decay")
    p.add_argument("--combo-weight", type=float, default=4.0)
    p.add_argument("--mom-k", type=int, default=1)
    p.add_argument("--decay-divisor", type=float, default=2.0)
    p.add_argument("--decay-period", type=int, default=256)
    p.add_argument("--decay-mode", choices=sorted(DECAY_MODES), default="activity")
    p.add_argument("--tie-break", choices=[t.value for t in TieBreak], default=None,
                   help="default: random for vsids, index otherwise")
    p.add_argument("--restart-interval", type=int, default=0)
    p.add_argument("--learning", choices=sorted(LEARNING_SCHEMES), default="1uip")


def _shared_config(args) -> dict:
    return dict(
        decay_divisor=args.decay_divisor, decay_period=args.decay_period,
        decay_mode=args.decay_mode, restart_interval=args.restart_interval,
        tie_break=TieBreak(args.tie_break) if args.tie_break else None,
    )


def _config(args) -> HeuristicConfig:
    return HeuristicConfig(CLI_NAMES[args.heuristic], combo_weight=args.combo_weight,
                           mom_k=args.mom_k, **_shared_config(args))


def _parse_range(text: str) -> list[int]:
    """``a:b:step`` inclusive of ``b``, or a comma list."""
    if ":" in text:
        a, b, step = (int(x) for x in text.split(":"))
        return list(range(a, b + 1, step))
    return [int(x) for x in text.split(",")]


def _write(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _read_formula(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    return parse_dimacs(text)


def cmd_solve(args) -> int:
    f = _read_formula(args.file)
    solver = Solver(f, _config(args), seed=args.seed, learning=args.learning)
    on_event = None
    trace_rows: list[list] = []
    if args.trace:
        def on_event(kind, *payload):
            if kind == "decision":
                trace_rows.append(["decision", solver.decision_level + 1, int(payload[0]), "",
                                   solver.pn_product()])
            else:
                learned, _ = payload
                trace_rows.append(["conflict", solver.decision_level, int(learned.literals[0]),
                                   len(learned), solver.pn_product()])
    try:
        result = solver.solve(args.max_conflicts, args.time_limit, on_event)
        status, stats, model = result.status, result.stats, result.model
    except Indeterminate as exc:
        status, stats, model = Status.INDETERMINATE, exc.stats, None
    if args.trace:
        with open(args.trace, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["event", "level", "literal", "learned_len", "pn_product"])
            w.writerows(trace_rows)
    out = sys.stdout
    for key, value in vars(stats).items():
        out.write(f"c {key}: {value}\n")
    if status == Status.SAT:
        out.write("s SATISFIABLE\n")
        lits = [v if model[v] else -v for v in sorted(model)]
        for i in range(0, len(lits), 10):
            out.write("v " + " ".join(map(str, lits[i:i + 10])) + "\n")
        out.write("v 0\n")
        return EXIT_SAT
    if status == Status.UNSAT:
        out.write("s UNSATISFIABLE\n")
        return EXIT_UNSAT
    out.write("s UNKNOWN\n")
    return EXIT_UNKNOWN


def cmd_gen(args) -> int:
    f = generate_ksat(args.n, args.m, args.k, args.seed)
    comment = f"random {args.k}-SAT n={args.n} m={args.m} seed={args.seed} (xoshiro256**)"
    _write(emit_dimacs(f, [comment]), args.output)
    return 0


def cmd_bench(args, argv) -> int:
    labels = [x.strip() for x in args.heuristics.split(",") if x.strip()]
    configs = [HeuristicConfig.from_label(l, combo_weight=args.combo_weight, mom_k=args.mom_k,
                                          **_shared_config(args)) for l in labels]
    records = bench.run_matrix(args.n, args.m, args.k, args.reps, configs, seed0=args.seed0,
                               budget=args.budget, jobs=args.jobs, learning=args.learning)
    _write(bench.records_csv(records, "cmd: " + shlex.join(["pnsat", *argv])), args.output)
    agg = bench.aggregate(records)
    summary = bench.markdown_table(agg)
    if args.sign_test:
        a, b = args.sign_test.split(",")
        ca, cb = bench.paired_counts(records, a), bench.paired_counts(records, b)
        common = sorted(set(ca) & set(cb))
        st = bench.paired_sign_test([ca[s] for s in common], [cb[s] for s in common])
        summary += (f"\nsign test {a} < {b}: wins {st.wins_a}, losses {st.wins_b}, "
                    f"ties {st.ties}, one-sided p = {st.one_sided_p}\n")
    if args.summary:
        Path(args.summary).write_text(summary)
    else:
        (sys.stdout if args.output else sys.stderr).write(summary)
    return 0


def cmd_regress(args, argv) -> int:
    res = bench.solvability_regression(args.n, args.m, args.k, args.instances, seed0=args.seed0,
                                  budget=args.budget, heuristic=_config(args),
                                  learning=args.learning)
    header = "# cmd: " + shlex.join(["pnsat", *argv]) + "\n"
    _write(header + res.regression_csv(), args.output)
    if args.points:
        Path(args.points).write_text(header + res.points_csv())
    if res.excluded:
        print(f"excluded {res.excluded} undecided instances", file=sys.stderr)
    if res.too_many_excluded:
        print("warning: more than 10% of instances were excluded", file=sys.stderr)
    return 0


def cmd_pn_sweep(args, argv) -> int:
    points = pn_sweep(args.n, args.k, _parse_range(args.m), args.reps, args.seed0)
    _write("# cmd: " + shlex.join(["pnsat", *argv]) + "\n" + sweep_csv(points), args.output)
    return 0


def cmd_pn(args) -> int:
    print(pn_product(_read_formula(args.file)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pnsat", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a DIMACS CNF file")
    p.add_argument("file")
    _add_heuristic_flags(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-conflicts", type=int, default=None)
    p.add_argument("--time-limit", type=float, default=None, help="seconds")
    p.add_argument("--trace", help="write a per-decision/conflict CSV trace here")

    p = sub.add_parser("gen", help="generate a uniform random k-SAT instance")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-k", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")

    p = sub.add_parser("bench", help="paired comparison of branching heuristics")
    p.add_argument("-n", type=int, default=100)
    p.add_argument("-m", type=int, default=426)
    p.add_argument("-k", type=int, default=3)
    p.add_argument("--reps", type=int, default=100)
    p.add_argument("--heuristics", default=COMPARISON_LABELS)
    _add_heuristic_flags(p, single=False)
    p.add_argument("--seed0", type=int, default=0)
    p.add_argument("--budget", type=int, default=bench.DEFAULT_BUDGET, help="conflicts per run")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--sign-test", metavar="A,B", help="test whether A ends with fewer clauses than B")
    p.add_argument("--summary", help="write the markdown summary here")
    p.add_argument("-o", "--output")

    p = sub.add_parser("regress", help="regress solvability on the initial PN product")
    p.add_argument("-n", type=int, default=100)
    p.add_argument("-m", type=int, default=426)
    p.add_argument("-k", type=int, default=3)
    p.add_argument("--instances", type=int, default=1000)
    _add_heuristic_flags(p)
    p.add_argument("--seed0", type=int, default=0)
    p.add_argument("--budget", type=int, default=bench.DEFAULT_BUDGET)
    p.add_argument("--points", help="also write per-instance (pn, solvable) rows here")
    p.add_argument("-o", "--output")

    p = sub.add_parser("pn-sweep", help="mean initial PN product against clause count")
    p.add_argument("-n", type=int, default=100)
    p.add_argument("-k", type=int, default=3)
    p.add_argument("--m", default="100:800:100", help="a:b:step (inclusive) or comma list")
    p.add_argument("--reps", type=int, default=30)
    p.add_argument("--seed0", type=int, default=0)
    p.add_argument("-o", "--output")

    p = sub.add_parser("pn", help="print the PN product of a DIMACS file")
    p.add_argument("file")
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "solve":
            return cmd_solve(args)
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "bench":
            return cmd_bench(args, argv)
        if args.command == "regress":
            return cmd_regress(args, argv)
        if args.command == "pn-sweep":
            return cmd_pn_sweep(args, argv)
        return cmd_pn(args)
    except (CliError, DimacsError, InvalidParameters, RegressionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
