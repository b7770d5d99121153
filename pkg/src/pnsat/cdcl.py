"""Conflict-driven clause learning with counter-based propagation.

Each clause keeps counts of its satisfied and falsified literals, and every
literal keeps the number of unresolved clauses in which it occurs unassigned.
Both are updated on assignment and restored in exact reverse order on
backjump, so branching rules read exact dynamic frequencies at no extra cost.

Learning uses the first unique implication point by default, or the cut at
the decisions (``learning="decision"``); learned clauses are never deleted. The hot loop runs in numba over the arrays in ``State``; the
``Solver`` methods expose each step for inspection and testing.
"""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Callable

import numba as nb
import numpy as np

from ._layout import (BUDGET, CONFLICTS, DECAY_DIV, DECAY_PERIOD, DECISIONS, DLEVEL, GROW,
                      KIND, K_PNPROD_DECAY, K_VSIDS, LUSED, MAXLEVEL, MAXOCC, MOM_K, NCFG,
                      NCFGF, NCLS, NCTR, NORIG, NUNRES, NV, PROPS, QHEAD, RESTART_INTERVAL,
                      RESTARTS, SAT, SINCE_DECAY, SINCE_RESTART, STUCK, TIE_RANDOM, TLEN,
                      UNSAT, COMBO_W, LEARNING, L_DECISION, L_FIRST_UIP, W_INC,
                      DECAY_MODE, D_WEIGHTED, State)
from .formula import Clause, CnfFormula, Literal
from .heuristics import DECAY_MODES, HeuristicConfig, TieBreak, bump_clause, decay, pick_branch
from .rng import Xoshiro256


class Status(enum.Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    INDETERMINATE = "INDETERMINATE"


@dataclass
class SolveStats:
    decisions: int = 0
    propagations: int = 0
    conflicts: int = 0
    learned_clauses: int = 0
    final_clause_count: int = 0
    max_decision_level: int = 0
    original_clauses: int = 0
    restarts: int = 0


@dataclass
class SolveResult:
    status: Status
    model: dict[int, bool] | None
    stats: SolveStats
    learned: list[Clause] = field(default_factory=list, repr=False)


class Indeterminate(RuntimeError):
    """The conflict or time budget ran out; ``stats`` describes the partial run."""

    def __init__(self, stats: SolveStats, reason: str):
        super().__init__(f"budget exhausted ({reason}) after {stats.conflicts} conflicts")
        self.stats = stats
        self.reason = reason


class SolverInvariantError(AssertionError):
    pass


LEARNING_SCHEMES = {"1uip": L_FIRST_UIP, "decision": L_DECISION}


def lit_code(lit: Literal) -> int:
    return 2 * lit.var + (0 if lit.positive else 1)


def code_lit(code: int) -> Literal:
    return Literal(int(code) >> 1, not (int(code) & 1))


# ---------------------------------------------------------------- kernels

@nb.njit(cache=True)
def lit_value(s, x):
    val = s.value[x >> 1]
    if x & 1:
        return -val
    return val


@nb.njit(cache=True)
def assign(s, lit, reason):
    v = lit >> 1
    for j in range(s.occ_len[lit]):
        ci = s.occ[lit, j]
        if s.nsat[ci] == 0:
            st = s.cstart[ci]
            for t in range(st, st + s.clen[ci]):
                x = s.lits[t]
                if s.value[x >> 1] == 0:
                    s.count[x] -= 1
                    s.wcount[x] -= s.cw[ci]
            s.ctr[NUNRES] -= 1
        s.nsat[ci] += 1
    f = lit ^ 1
    for j in range(s.occ_len[f]):
        ci = s.occ[f, j]
        if s.nsat[ci] == 0:
            s.count[f] -= 1
            s.wcount[f] -= s.cw[ci]
        s.nfalse[ci] += 1
    s.value[v] = 1 if (lit & 1) == 0 else -1
    s.level[v] = s.ctr[DLEVEL]
    s.reason[v] = reason
    s.trail[s.ctr[TLEN]] = lit
    s.ctr[TLEN] += 1


@nb.njit(cache=True)
def unassign(s, lit):
    v = lit >> 1
    s.value[v] = 0
    s.reason[v] = -1
    f = lit ^ 1
    for j in range(s.occ_len[f]):
        ci = s.occ[f, j]
        s.nfalse[ci] -= 1
        if s.nsat[ci] == 0:
            s.count[f] += 1
            s.wcount[f] += s.cw[ci]
    for j in range(s.occ_len[lit]):
        ci = s.occ[lit, j]
        s.nsat[ci] -= 1
        if s.nsat[ci] == 0:
            st = s.cstart[ci]
            for t in range(st, st + s.clen[ci]):
                x = s.lits[t]
                if s.value[x >> 1] == 0:
                    s.count[x] += 1
                    s.wcount[x] += s.cw[ci]
            s.ctr[NUNRES] += 1


@nb.njit(cache=True)
def add_clause(s, buf, length):
    """Append ``buf[:length]`` to the database; capacity must already suffice."""
    ci = s.ctr[NCLS]
    st = s.ctr[LUSED]
    s.cstart[ci] = st
    s.clen[ci] = length
    ns = 0
    nf = 0
    for i in range(length):
        x = buf[i]
        s.lits[st + i] = x
        val = lit_value(s, x)
        if val > 0:
            ns += 1
        elif val < 0:
            nf += 1
        k = s.occ_len[x]
        s.occ[x, k] = ci
        s.occ_len[x] = k + 1
        if k + 1 > s.ctr[MAXOCC]:
            s.ctr[MAXOCC] = k + 1
    s.nsat[ci] = ns
    s.nfalse[ci] = nf
    w = s.cfgf[W_INC]
    s.cw[ci] = w
    if ns == 0:
        for i in range(length):
            if lit_value(s, buf[i]) == 0:
                s.count[buf[i]] += 1
                s.wcount[buf[i]] += w
        s.ctr[NUNRES] += 1
    s.ctr[LUSED] = st + length
    s.ctr[NCLS] = ci + 1
    bump_clause(s.act, s.lits, st, length)
    return ci


@nb.njit(cache=True)
def root_units(s):
    """Assert the literal of every unit clause at level 0; return a falsified clause or -1."""
    for ci in range(s.ctr[NCLS]):
        if s.nsat[ci] > 0:
            continue
        free = s.clen[ci] - s.nfalse[ci]
        if free == 0:
            return ci
        if free == 1:
            st = s.cstart[ci]
            for t in range(st, st + s.clen[ci]):
                if s.value[s.lits[t] >> 1] == 0:
                    assign(s, s.lits[t], ci)
                    s.ctr[PROPS] += 1
                    break
    return -1


@nb.njit(cache=True)
def propagate(s):
    while s.ctr[QHEAD] < s.ctr[TLEN]:
        lit = s.trail[s.ctr[QHEAD]]
        s.ctr[QHEAD] += 1
        f = lit ^ 1
        for j in range(s.occ_len[f]):
            ci = s.occ[f, j]
            if s.nsat[ci] > 0:
                continue
            free = s.clen[ci] - s.nfalse[ci]
            if free == 0:
                return ci
            if free == 1:
                st = s.cstart[ci]
                for t in range(st, st + s.clen[ci]):
                    x = s.lits[t]
                    if s.value[x >> 1] == 0:
                        assign(s, x, ci)
                        s.ctr[PROPS] += 1
                        break
    return -1


@nb.njit(cache=True)
def analyze(s, confl):
    """First-UIP learning into ``s.learnt``; returns (length, backjump level).

    ``learnt[0]`` is the negated UIP (the only current-level literal) and,
    for non-unit clauses, ``learnt[1]`` carries the backjump level.
    Level-0 literals are dropped since they are false in every model.
    """
    dl = s.ctr[DLEVEL]
    path = 0
    out = 1
    idx = s.ctr[TLEN] - 1
    p = -1
    ci = confl
    while True:
        st = s.cstart[ci]
        for t in range(st, st + s.clen[ci]):
            q = s.lits[t]
            v = q >> 1
            if p >= 0 and v == (p >> 1):
                continue
            if s.seen[v] == 0 and s.level[v] > 0:
                s.seen[v] = 1
                if s.level[v] >= dl:
                    path += 1
                else:
                    s.learnt[out] = q
                    out += 1
        while s.seen[s.trail[idx] >> 1] == 0:
            idx -= 1
        p = s.trail[idx]
        idx -= 1
        s.seen[p >> 1] = 0
        path -= 1
        if path == 0:
            break
        ci = s.reason[p >> 1]
    s.learnt[0] = p ^ 1
    for i in range(1, out):
        s.seen[s.learnt[i] >> 1] = 0
    bj = 0
    if out > 1:
        best = 1
        for i in range(2, out):
            if s.level[s.learnt[i] >> 1] > s.level[s.learnt[best] >> 1]:
                best = i
        tmp = s.learnt[1]
        s.learnt[1] = s.learnt[best]
        s.learnt[best] = tmp
        bj = s.level[s.learnt[1] >> 1]
    return out, bj


@nb.njit(cache=True)
def analyze_decisions(s, confl):
    """Decision-cut learning: negate every decision the conflict depends on.

    Same output convention as ``analyze``; the current level's decision is
    the asserting literal.
    """
    dl = s.ctr[DLEVEL]
    out = 1
    st = s.cstart[confl]
    for t in range(st, st + s.clen[confl]):
        v = s.lits[t] >> 1
        if s.level[v] > 0:
            s.seen[v] = 1
    for idx in range(s.ctr[TLEN] - 1, -1, -1):
        lit = s.trail[idx]
        v = lit >> 1
        if s.seen[v] == 0:
            continue
        s.seen[v] = 0
        r = s.reason[v]
        if r < 0:
            if s.level[v] == dl:
                s.learnt[0] = lit ^ 1
            else:
                s.learnt[out] = lit ^ 1
                out += 1
            continue
        st = s.cstart[r]
        for t in range(st, st + s.clen[r]):
            u = s.lits[t] >> 1
            if u != v and s.level[u] > 0:
                s.seen[u] = 1
    bj = 0
    if out > 1:
        best = 1
        for i in range(2, out):
            if s.level[s.learnt[i] >> 1] > s.level[s.learnt[best] >> 1]:
                best = i
        tmp = s.learnt[1]
        s.learnt[1] = s.learnt[best]
        s.learnt[best] = tmp
        bj = s.level[s.learnt[1] >> 1]
    return out, bj


@nb.njit(cache=True)
def analyze_with(s, confl):
    if s.cfg[LEARNING] == L_DECISION:
        return analyze_decisions(s, confl)
    return analyze(s, confl)


@nb.njit(cache=True)
def backjump(s, target_level):
    stop = s.trail_lim[target_level + 1]
    while s.ctr[TLEN] > stop:
        s.ctr[TLEN] -= 1
        unassign(s, s.trail[s.ctr[TLEN]])
    s.ctr[DLEVEL] = target_level
    s.ctr[QHEAD] = s.ctr[TLEN]


@nb.njit(cache=True)
def decide(s, lit):
    d = s.ctr[DLEVEL] + 1
    s.ctr[DLEVEL] = d
    s.trail_lim[d] = s.ctr[TLEN]
    s.ctr[DECISIONS] += 1
    if d > s.ctr[MAXLEVEL]:
        s.ctr[MAXLEVEL] = d
    assign(s, lit, -1)


@nb.njit(cache=True)
def decay_weights(s):
    """Age every clause by one period: new clauses outweigh older ones by ``divisor``.

    Implemented by growing the weight of future clauses; everything is
    rescaled before the numbers leave a comfortable float range.
    """
    s.cfgf[W_INC] *= s.cfgf[DECAY_DIV]
    if s.cfgf[W_INC] > 1e100:
        scale = 1e-100
        s.cfgf[W_INC] *= scale
        for ci in range(s.ctr[NCLS]):
            s.cw[ci] *= scale
        for i in range(s.wcount.shape[0]):
            s.wcount[i] *= scale


@nb.njit(cache=True)
def learn_and_assert(s, length):
    """Store the analyzed clause, assert its UIP literal, and run periodic decay."""
    ci = add_clause(s, s.learnt, length)
    assign(s, s.learnt[0], ci)
    s.ctr[PROPS] += 1
    kind = s.cfg[KIND]
    if kind == K_VSIDS or kind == K_PNPROD_DECAY:
        s.ctr[SINCE_DECAY] += 1
        if s.ctr[SINCE_DECAY] >= s.cfg[DECAY_PERIOD]:
            s.ctr[SINCE_DECAY] = 0
            if kind == K_PNPROD_DECAY and s.cfg[DECAY_MODE] == D_WEIGHTED:
                decay_weights(s)
            else:
                decay(s.act, s.cfgf[DECAY_DIV])
    s.ctr[SINCE_RESTART] += 1


@nb.njit(cache=True)
def maybe_restart(s):
    interval = s.cfg[RESTART_INTERVAL]
    if interval > 0 and s.ctr[SINCE_RESTART] >= interval:
        s.ctr[SINCE_RESTART] = 0
        s.ctr[RESTARTS] += 1
        if s.ctr[DLEVEL] > 0:
            backjump(s, 0)


@nb.njit(cache=True)
def needs_growth(s):
    return (s.ctr[LUSED] + s.ctr[NV] + 1 > s.lits.shape[0]
            or s.ctr[NCLS] + 1 >= s.cstart.shape[0]
            or s.ctr[MAXOCC] + 1 > s.occ.shape[1])


@nb.njit(cache=True)
def search(s, max_conflicts):
    while True:
        if needs_growth(s):
            return GROW
        confl = propagate(s)
        if confl >= 0:
            if s.ctr[DLEVEL] == 0:
                return UNSAT
            s.ctr[CONFLICTS] += 1
            length, bj = analyze_with(s, confl)
            backjump(s, bj)
            learn_and_assert(s, length)
            if s.ctr[CONFLICTS] >= max_conflicts:
                return BUDGET
            continue
        if s.ctr[NUNRES] == 0:
            return SAT
        maybe_restart(s)
        lit = pick_branch(s)
        if lit < 0:
            return STUCK
        decide(s, lit)


# ---------------------------------------------------------------- driver

@dataclass(frozen=True)
class TrailEntry:
    literal: Literal
    level: int
    antecedent: int | None  # clause index, None for decisions


class Solver:
    """One CDCL run over a private copy of ``formula``."""

    def __init__(self, formula: CnfFormula, heuristic: HeuristicConfig | None = None,
                 seed: int = 0, learning: str = "1uip"):
        self.formula = formula
        self.heuristic = heuristic = heuristic or HeuristicConfig()
        nv = formula.num_vars
        m = len(formula.clauses)
        total = sum(len(c) for c in formula.clauses)
        nl = 2 * nv + 2
        occ_need = np.zeros(nl, dtype=np.int64)
        for c in formula.clauses:
            for lit in c:
                occ_need[lit_code(lit)] += 1
        cls_cap = 2 * m + 64
        ctr = np.zeros(NCTR, dtype=np.int64)
        ctr[NV] = nv
        cfg = np.zeros(NCFG, dtype=np.int64)
        cfg[KIND] = int(heuristic.kind)
        cfg[MOM_K] = heuristic.mom_k
        cfg[DECAY_PERIOD] = heuristic.decay_period
        cfg[TIE_RANDOM] = heuristic.effective_tie_break == TieBreak.SEEDED_RANDOM
        cfg[RESTART_INTERVAL] = heuristic.restart_interval
        cfg[LEARNING] = LEARNING_SCHEMES[learning]
        self.learning = learning
        cfg[DECAY_MODE] = DECAY_MODES[heuristic.decay_mode]
        cfgf = np.zeros(NCFGF, dtype=np.float64)
        cfgf[COMBO_W] = heuristic.combo_weight
        cfgf[DECAY_DIV] = heuristic.decay_divisor
        cfgf[W_INC] = 1.0
        self.s = State(
            lits=np.zeros(2 * total + 4 * nv + 64, dtype=np.int32),
            cstart=np.zeros(cls_cap, dtype=np.int64),
            clen=np.zeros(cls_cap, dtype=np.int32),
            nsat=np.zeros(cls_cap, dtype=np.int32),
            nfalse=np.zeros(cls_cap, dtype=np.int32),
            occ=np.zeros((nl, 2 * int(occ_need.max(initial=0)) + 16), dtype=np.int32),
            occ_len=np.zeros(nl, dtype=np.int32),
            value=np.zeros(nv + 1, dtype=np.int8),
            level=np.zeros(nv + 1, dtype=np.int32),
            reason=np.full(nv + 1, -1, dtype=np.int32),
            trail=np.zeros(nv + 1, dtype=np.int32),
            trail_lim=np.zeros(nv + 2, dtype=np.int32),
            count=np.zeros(nl, dtype=np.int32),
            act=np.zeros(nl, dtype=np.float64),
            seen=np.zeros(nv + 1, dtype=np.uint8),
            learnt=np.zeros(nv + 1, dtype=np.int32),
            mom=np.zeros(nl, dtype=np.float64),
            wcount=np.zeros(nl, dtype=np.float64),
            cw=np.zeros(cls_cap, dtype=np.float64),
            ctr=ctr,
            rng=Xoshiro256(seed).state_array(),
            cfg=cfg,
            cfgf=cfgf,
        )
        buf = np.zeros(max(nv, 1) + 1, dtype=np.int32)
        for c in formula.clauses:
            for i, lit in enumerate(c):
                buf[i] = lit_code(lit)
            add_clause(self.s, buf, len(c))
        ctr[NORIG] = m
        self.root_conflict: int | None = None
        ci = root_units(self.s)
        if ci >= 0:
            self.root_conflict = ci

    # -- inspection

    @property
    def decision_level(self) -> int:
        return int(self.s.ctr[DLEVEL])

    @property
    def num_clauses(self) -> int:
        return int(self.s.ctr[NCLS])

    def value(self, var: int) -> bool | None:
        v = int(self.s.value[var])
        return None if v == 0 else v > 0

    def assignment(self) -> dict[int, bool]:
        return {v: bool(self.s.value[v] > 0) for v in range(1, self.formula.num_vars + 1)
                if self.s.value[v] != 0}

    def trail(self) -> list[TrailEntry]:
        out = []
        for code in self.s.trail[: self.s.ctr[TLEN]]:
            v = int(code) >> 1
            r = int(self.s.reason[v])
            out.append(TrailEntry(code_lit(code), int(self.s.level[v]), None if r < 0 else r))
        return out

    def level_starts(self) -> list[int]:
        return [int(x) for x in self.s.trail_lim[1: self.decision_level + 1]]

    def clause(self, ci: int) -> Clause:
        st, n = int(self.s.cstart[ci]), int(self.s.clen[ci])
        lits = tuple(code_lit(x) for x in self.s.lits[st: st + n])
        return Clause(lits, learned=ci >= self.s.ctr[NORIG])

    def learned_clauses(self) -> list[Clause]:
        return [self.clause(ci) for ci in range(int(self.s.ctr[NORIG]), self.num_clauses)]

    def current_formula(self) -> CnfFormula:
        """Original clauses followed by every clause learned so far."""
        return self.formula.with_clauses(self.learned_clauses())

    def literal_count(self, lit: Literal) -> int:
        """Occurrences of ``lit``, unassigned, in unresolved clauses (incrementally maintained)."""
        return int(self.s.count[lit_code(lit)])

    def literal_counts(self) -> np.ndarray:
        return self.s.count.copy()

    def activity(self, lit: Literal) -> float:
        return float(self.s.act[lit_code(lit)])

    def pn_totals(self) -> tuple[int, int]:
        """(P, N) of the unresolved clauses, read from the incremental counts."""
        c = self.s.count.astype(np.int64)
        unassigned = self.s.value[1:] == 0
        pos, neg = c[2::2], c[3::2]
        P = int(np.maximum(pos, neg)[unassigned].sum())
        N = int(np.minimum(pos, neg)[unassigned].sum())
        return P, N

    def pn_product(self) -> int:
        P, N = self.pn_totals()
        return P * N

    def unresolved_count(self) -> int:
        return int(self.s.ctr[NUNRES])

    def stats(self) -> SolveStats:
        c = self.s.ctr
        return SolveStats(
            decisions=int(c[DECISIONS]), propagations=int(c[PROPS]),
            conflicts=int(c[CONFLICTS]), learned_clauses=int(c[NCLS] - c[NORIG]),
            final_clause_count=int(c[NCLS]), max_decision_level=int(c[MAXLEVEL]),
            original_clauses=int(c[NORIG]), restarts=int(c[RESTARTS]),
        )

    # -- single steps

    def decide(self, lit: Literal) -> None:
        if self.value(lit.var) is not None:
            raise SolverInvariantError(f"{lit!r} is already assigned")
        decide(self.s, lit_code(lit))

    def propagate(self) -> int | None:
        """Unit-propagate to fixpoint; return the index of a falsified clause, if any."""
        if self.root_conflict is not None:
            return self.root_conflict
        ci = propagate(self.s)
        return None if ci < 0 else int(ci)

    def analyze_conflict(self, conflict: int) -> tuple[Clause, int]:
        if self.decision_level == 0:
            raise SolverInvariantError("conflict at level 0 means UNSAT; nothing to analyze")
        length, bj = analyze_with(self.s, conflict)
        self._learnt_len = int(length)
        lits = tuple(code_lit(x) for x in self.s.learnt[:length])
        return Clause(lits, learned=True), int(bj)

    def backjump(self, level: int) -> None:
        if not 0 <= level < self.decision_level:
            raise SolverInvariantError(f"cannot backjump from {self.decision_level} to {level}")
        backjump(self.s, level)

    def learn(self) -> int:
        """Add the clause from the last ``analyze_conflict`` and assert its UIP literal."""
        self._ensure_capacity()
        learn_and_assert(self.s, self._learnt_len)
        return self.num_clauses - 1

    def pick_branch(self) -> Literal | None:
        code = pick_branch(self.s)
        return None if code < 0 else code_lit(code)

    # -- full runs

    def _ensure_capacity(self) -> None:
        if not needs_growth(self.s):
            return
        s = self.s
        nv = int(s.ctr[NV])
        changes = {}
        if s.ctr[LUSED] + nv + 1 > s.lits.shape[0]:
            changes["lits"] = _enlarge(s.lits, 2 * s.lits.shape[0] + nv + 1)
        if s.ctr[NCLS] + 1 >= s.cstart.shape[0]:
            cap = 2 * s.cstart.shape[0]
            for name in ("cstart", "clen", "nsat", "nfalse", "cw"):
                changes[name] = _enlarge(getattr(s, name), cap)
        if s.ctr[MAXOCC] + 1 > s.occ.shape[1]:
            occ = np.zeros((s.occ.shape[0], 2 * s.occ.shape[1]), dtype=s.occ.dtype)
            occ[:, : s.occ.shape[1]] = s.occ
            changes["occ"] = occ
        self.s = s._replace(**changes)

    def _finish(self, code: int) -> SolveResult:
        stats = self.stats()
        if code == SAT:
            model = {v: bool(self.s.value[v] > 0) for v in range(1, self.formula.num_vars + 1)}
            return SolveResult(Status.SAT, model, stats, self.learned_clauses())
        if code == UNSAT:
            return SolveResult(Status.UNSAT, None, stats, self.learned_clauses())
        raise SolverInvariantError(f"search stopped with code {code}")

    def solve(self, max_conflicts: int | None = None, time_limit: float | None = None,
              on_event: Callable[..., None] | None = None) -> SolveResult:
        """Run to completion.

        Raises ``Indeterminate`` when ``max_conflicts`` or ``time_limit``
        (seconds) is exhausted. With ``on_event``, the loop is driven step by
        step from Python and the callback receives ``("decision", literal)``
        before each decision and ``("conflict", learned_clause, backjump_level)``
        after each analysis; the run is otherwise identical.
        """
        if self.root_conflict is not None:
            return self._finish(UNSAT)
        cap = max_conflicts if max_conflicts is not None else np.iinfo(np.int64).max
        deadline = None if time_limit is None else time.monotonic() + time_limit
        if on_event is not None:
            return self._solve_stepwise(cap, deadline, on_event)
        chunk = 2000
        while True:
            target = min(cap, int(self.s.ctr[CONFLICTS]) + chunk) if deadline is not None else cap
            code = search(self.s, target)
            if code == GROW:
                self._ensure_capacity()
                continue
            if code == BUDGET:
                if self.s.ctr[CONFLICTS] >= cap:
                    raise Indeterminate(self.stats(), "conflicts")
                if time.monotonic() > deadline:
                    raise Indeterminate(self.stats(), "time")
                continue
            return self._finish(code)

    def _solve_stepwise(self, cap, deadline, on_event) -> SolveResult:
        while True:
            confl = self.propagate()
            if confl is not None:
                if self.decision_level == 0:
                    return self._finish(UNSAT)
                self.s.ctr[CONFLICTS] += 1
                learned, bj = self.analyze_conflict(confl)
                on_event("conflict", learned, bj)
                backjump(self.s, bj)
                self.learn()
                if self.s.ctr[CONFLICTS] >= cap:
                    raise Indeterminate(self.stats(), "conflicts")
                if deadline is not None and time.monotonic() > deadline:
                    raise Indeterminate(self.stats(), "time")
                continue
            if self.unresolved_count() == 0:
                return self._finish(SAT)
            maybe_restart(self.s)
            code = pick_branch(self.s)
            if code < 0:
                return self._finish(STUCK)
            on_event("decision", code_lit(code))
            decide(self.s, code)


def _enlarge(a: np.ndarray, size: int) -> np.ndarray:
    out = np.zeros(size, dtype=a.dtype)
    out[: a.shape[0]] = a
    return out


def solve(formula: CnfFormula, heuristic: HeuristicConfig | None = None, seed: int = 0,
          max_conflicts: int | None = None, time_limit: float | None = None,
          learning: str = "1uip") -> SolveResult:
    return Solver(formula, heuristic, seed, learning).solve(max_conflicts, time_limit)
