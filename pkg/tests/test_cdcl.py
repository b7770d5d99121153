import numpy as np
import pytest

from oracles import brute_force_sat, naive_counts, satisfies
from pnsat.cdcl import Indeterminate, Solver, SolverInvariantError, Status, solve
from pnsat.formula import Clause, CnfFormula, Literal, generate_ksat
from pnsat.heuristics import HeuristicConfig, HeuristicKind, comparison_heuristics

ALL_CONFIGS = comparison_heuristics() + [
    HeuristicConfig(HeuristicKind.MOM, mom_k=1),
    HeuristicConfig(HeuristicKind.PNPROD_DECAY, decay_mode="weighted"),
]


def lit(v):
    return Literal.from_int(v)


def trail_ints(solver):
    return [int(e.literal) for e in solver.trail()]


class TestPropagate:
    def test_last_free_literal_forced(self):
        s = Solver(CnfFormula.from_ints(3, [[1, 2, 3]]))
        s.decide(lit(-1))
        assert s.propagate() is None and s.value(3) is None
        s.decide(lit(-2))
        assert s.propagate() is None
        assert s.value(3) is True
        assert s.trail()[-1].antecedent == 0

    def test_contradictory_units(self):
        s = Solver(CnfFormula.from_ints(1, [[1], [-1]]))
        assert s.propagate() is not None
        assert s.decision_level == 0
        r = s.solve()
        assert r.status == Status.UNSAT and r.stats.decisions == 0

    def test_eq2_chain(self, example):
        s = Solver(example, HeuristicConfig(HeuristicKind.DLIS))
        s.decide(lit(1))
        assert s.propagate() is None
        assert trail_ints(s) == [1, -2, 3, -4, 5]
        entries = s.trail()
        assert entries[0].antecedent is None
        assert [e.antecedent for e in entries[1:]] == [0, 1, 2, 3]
        assert s.stats().propagations == 4

    def test_empty_original_clause(self):
        r = solve(CnfFormula(2, (Clause(()), Clause.of(1))))
        assert r.status == Status.UNSAT


class TestAnalyze:
    def test_resolution_to_uip(self):
        # a -> b, a -> c, (~b | ~c) conflicts
        s = Solver(CnfFormula.from_ints(3, [[-1, 2], [-1, 3], [-2, -3]]))
        s.decide(lit(1))
        confl = s.propagate()
        assert confl == 2
        learned, level = s.analyze_conflict(confl)
        assert learned.ints() == [-1] and level == 0

    @pytest.mark.parametrize("learning", ["1uip", "decision"])
    def test_single_decision_cut(self, learning):
        s = Solver(CnfFormula.from_ints(2, [[-1, 2], [-1, -2]]), learning=learning)
        s.decide(lit(1))
        learned, level = s.analyze_conflict(s.propagate())
        assert learned.ints() == [-1] and level == 0

    def test_uip_differs_from_decision_cut(self):
        # x1@1, x2@2 -> x3 -> (x4, x5) -> conflict; the UIP is x3, the decision cut is {x1, x2}
        clauses = [[-2, -1, 3], [-3, 4], [-3, 5], [-4, -5]]
        f = CnfFormula.from_ints(5, clauses)
        got = {}
        for learning in ("1uip", "decision"):
            s = Solver(f, learning=learning)
            s.decide(lit(1))
            assert s.propagate() is None
            s.decide(lit(2))
            got[learning] = s.analyze_conflict(s.propagate())
        assert sorted(got["1uip"][0].ints()) == [-3]
        assert got["1uip"][1] == 0
        assert got["decision"][0].ints() == [-2, -1] and got["decision"][1] == 1

    def test_level_zero_conflict_is_not_analyzed(self):
        s = Solver(CnfFormula.from_ints(1, [[1], [-1]]))
        with pytest.raises(SolverInvariantError):
            s.analyze_conflict(s.propagate())

    def test_learned_unit_lands_on_level_zero(self):
        s = Solver(CnfFormula.from_ints(3, [[-1, 2], [-1, 3], [-2, -3], [1, 2, 3]]))
        s.decide(lit(1))
        learned, level = s.analyze_conflict(s.propagate())
        s.backjump(level)
        ci = s.learn()
        entry = s.trail()[-1]
        assert entry.literal == lit(-1) and entry.level == 0 and entry.antecedent == ci
        assert s.clause(ci).learned


class TestBackjump:
    def setup_solver(self):
        s = Solver(CnfFormula.from_ints(4, [[-1, 2], [-3, 4], [1, 3, -4]]))
        s.decide(lit(1))
        s.propagate()
        s.decide(lit(3))
        s.propagate()
        return s

    def test_prefix(self):
        s = self.setup_solver()
        assert [(int(e.literal), e.level) for e in s.trail()] == [(1, 1), (2, 1), (3, 2), (4, 2)]
        s.backjump(1)
        assert trail_ints(s) == [1, 2] and s.decision_level == 1
        assert s.value(3) is None and s.value(4) is None

    def test_to_zero_keeps_root_assignments(self):
        s = Solver(CnfFormula.from_ints(4, [[1], [-1, 2], [3, 4]]))
        assert s.propagate() is None
        s.decide(lit(-3))
        s.propagate()
        assert trail_ints(s) == [1, 2, -3, 4]
        s.backjump(0)
        assert trail_ints(s) == [1, 2] and s.decision_level == 0

    def test_counts_restored(self):
        f = generate_ksat(20, 85, 3, seed=4)
        s = Solver(f)
        before = s.literal_counts()
        nsat, nfalse = s.s.nsat.copy(), s.s.nfalse.copy()
        for v in (1, -5, 9):
            if s.value(abs(v)) is None:
                s.decide(lit(v))
                if s.propagate() is not None:
                    break
        s.backjump(0)
        assert np.array_equal(s.literal_counts(), before)
        assert np.array_equal(s.s.nsat, nsat) and np.array_equal(s.s.nfalse, nfalse)

    def test_rejects_upward_jump(self):
        s = self.setup_solver()
        with pytest.raises(SolverInvariantError):
            s.backjump(2)

    @pytest.mark.parametrize("seed", range(5))
    def test_incremental_pn_matches_recount_after_backjumps(self, seed):
        f = generate_ksat(40, 170, 3, seed)
        s = Solver(f, HeuristicConfig(HeuristicKind.DLIS))
        checked = 0

        def on_event(kind, *payload):
            nonlocal checked
            if kind == "decision":
                counts = naive_counts(f.num_vars, s.current_formula().as_ints(), s.assignment())
                got = {int(l): s.literal_count(l) for l in map(lit, counts)}
                assert got == counts
                checked += 1
        s.solve(on_event=on_event)
        assert checked > 0


class TestSolve:
    def test_eq2_sat(self, example):
        stated = {1: False, 2: True, 3: False, 5: False, 8: False, 10: False, 11: False}
        assert all(any(stated.get(abs(l)) == (l > 0) for l in c) for c in example.as_ints())
        for cfg in ALL_CONFIGS:
            r = solve(example, cfg)
            assert r.status == Status.SAT
            assert satisfies(example.as_ints(), r.model)
            assert len(r.model) == 12

    def test_empty_formula(self):
        r = solve(CnfFormula(3))
        assert r.status == Status.SAT and r.model == {1: False, 2: False, 3: False}

    @pytest.mark.parametrize("cfg", ALL_CONFIGS, ids=lambda c: c.label + "-" + c.decay_mode)
    def test_matches_enumeration(self, cfg):
        for seed in range(40):
            n = 5 + seed % 12
            f = generate_ksat(n, round(4.26 * n), 3, seed)
            r = solve(f, cfg, seed=seed)
            assert (r.status == Status.SAT) == brute_force_sat(n, f.as_ints())
            if r.status == Status.SAT:
                assert satisfies(f.as_ints(), r.model)

    @pytest.mark.parametrize("cfg", ALL_CONFIGS, ids=lambda c: c.label + "-" + c.decay_mode)
    @pytest.mark.parametrize("learning", ["1uip", "decision"])
    def test_kernel_and_stepwise_runs_agree(self, cfg, learning):
        f = generate_ksat(60, 256, 3, seed=11)
        fast = Solver(f, cfg, seed=3, learning=learning).solve()
        slow = Solver(f, cfg, seed=3, learning=learning).solve(on_event=lambda *a: None)
        assert fast.status == slow.status and fast.stats == slow.stats
        assert [c.ints() for c in fast.learned] == [c.ints() for c in slow.learned]

    @pytest.mark.parametrize("cfg", comparison_heuristics(), ids=lambda c: c.label)
    def test_deterministic(self, cfg):
        f = generate_ksat(100, 426, 3, seed=5)
        a, b = solve(f, cfg, seed=8), solve(f, cfg, seed=8)
        assert a.stats == b.stats and a.model == b.model

    def test_stats_bookkeeping(self):
        f = generate_ksat(100, 426, 3, seed=2)
        r = solve(f, HeuristicConfig(HeuristicKind.PNPROD))
        st = r.stats
        assert st.original_clauses == 426
        assert st.final_clause_count == 426 + st.learned_clauses
        assert st.learned_clauses == st.conflicts == len(r.learned)
        assert st.max_decision_level >= 1 and st.decisions >= st.max_decision_level

    def test_database_grows_past_initial_capacity(self):
        f = generate_ksat(100, 426, 3, seed=1)
        s = Solver(f, HeuristicConfig(HeuristicKind.VSIDS))
        cap = s.s.cstart.shape[0]
        r = s.solve()
        assert r.stats.final_clause_count > cap
        assert s.current_formula().clause_count() == r.stats.final_clause_count

    def test_conflict_budget(self):
        f = generate_ksat(100, 426, 3, seed=1)
        with pytest.raises(Indeterminate) as exc:
            solve(f, max_conflicts=5)
        assert exc.value.stats.conflicts == 5 and exc.value.reason == "conflicts"
        assert exc.value.stats.final_clause_count == 431

    def test_time_budget(self):
        # the kernel path checks the clock every 2000 conflicts, the stepwise one every conflict
        f = generate_ksat(100, 426, 3, seed=1)
        with pytest.raises(Indeterminate) as exc:
            Solver(f).solve(time_limit=0.0, on_event=lambda *a: None)
        assert exc.value.reason == "time" and exc.value.stats.conflicts == 1

    def test_restarts_keep_answers_correct(self):
        cfg = HeuristicConfig(HeuristicKind.PNPROD, restart_interval=5)
        restarts = 0
        for seed in range(30):
            f = generate_ksat(15, 64, 3, seed)
            r = solve(f, cfg)
            restarts += r.stats.restarts
            assert (r.status == Status.SAT) == brute_force_sat(15, f.as_ints())
        assert restarts > 0
