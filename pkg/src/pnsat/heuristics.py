"""Branching rules and the activity bookkeeping behind them.

Every rule scores unassigned variables that still occur in an unresolved
clause. Occurrence-based rules read the solver's dynamic literal counts
(``count``), where for each variable p = max(count(x), count(~x)) and
n = min(...). Activity-based rules (VSIDS and the decaying p*n rule) read
per-literal counters that are bumped for every clause added to the database
and divided by ``decay_divisor`` every ``decay_period`` conflicts.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numba as nb
import numpy as np

from ._layout import (COMBO_W, KIND, MOM_K, NCLS, NV, TIE_RANDOM, K_DLIS, K_MOM,
                      K_MOMCOMBO, K_PNPROD, K_PNPROD_DECAY, K_PSUM, K_VSIDS, K_ACT_SUM,
                      K_WPROD, K_WSUM, DECAY_MODE, D_ACTIVITY, D_WEIGHTED)
from .rng import below_nb


class HeuristicKind(enum.IntEnum):
    DLIS = K_DLIS
    VSIDS = K_VSIDS
    PSUM = K_PSUM
    PNPROD = K_PNPROD
    MOMCOMBO = K_MOMCOMBO
    MOM = K_MOM
    PNPROD_DECAY = K_PNPROD_DECAY


class TieBreak(enum.Enum):
    BY_INDEX = "index"
    SEEDED_RANDOM = "random"


CLI_NAMES = {
    "dlis": HeuristicKind.DLIS,
    "vsids": HeuristicKind.VSIDS,
    "psum": HeuristicKind.PSUM,
    "pnprod": HeuristicKind.PNPROD,
    "momcombo": HeuristicKind.MOMCOMBO,
    "mom": HeuristicKind.MOM,
    "pnprod-decay": HeuristicKind.PNPROD_DECAY,
}
_DECAYING = (HeuristicKind.VSIDS, HeuristicKind.PNPROD_DECAY)
DECAY_MODES = {"activity": D_ACTIVITY, "weighted": D_WEIGHTED}


@dataclass(frozen=True)
class HeuristicConfig:
    kind: HeuristicKind = HeuristicKind.PNPROD_DECAY
    combo_weight: float = 4.0
    mom_k: int = 1
    decay_divisor: float = 2.0
    decay_period: int = 256
    tie_break: TieBreak | None = None  # None: random for VSIDS, by index otherwise
    restart_interval: int = 0  # conflicts between restarts; 0 disables
    decay_mode: str = "activity"  # pnprod-decay only, see DECAY_MODES

    def __post_init__(self):
        if self.decay_divisor <= 1:
            raise ValueError("decay_divisor must be > 1")
        if self.decay_period < 1:
            raise ValueError("decay_period must be >= 1")
        if self.decay_mode not in DECAY_MODES:
            raise ValueError(f"unknown decay mode {self.decay_mode!r}")

    @property
    def decays(self) -> bool:
        return self.kind in _DECAYING

    @property
    def effective_tie_break(self) -> TieBreak:
        if self.tie_break is not None:
            return self.tie_break
        return TieBreak.SEEDED_RANDOM if self.kind == HeuristicKind.VSIDS else TieBreak.BY_INDEX

    @property
    def label(self) -> str:
        k = self.kind
        if k == HeuristicKind.MOMCOMBO:
            return f"momcombo-{self.combo_weight:g}"
        if k == HeuristicKind.MOM:
            return f"mom-{self.mom_k}"
        return next(name for name, kind in CLI_NAMES.items() if kind == k)

    @classmethod
    def from_label(cls, label: str, **overrides) -> HeuristicConfig:
        """Inverse of ``label``: ``momcombo-32``, ``mom-2``, ``pnprod-decay``..."""
        name, _, arg = label.partition("-") if label.startswith("mom") else (label, "", "")
        if name not in CLI_NAMES:
            raise ValueError(f"unknown heuristic {label!r}")
        kind = CLI_NAMES[name]
        if arg:
            if kind == HeuristicKind.MOMCOMBO:
                overrides.setdefault("combo_weight", float(arg))
            elif kind == HeuristicKind.MOM:
                overrides.setdefault("mom_k", int(arg))
        return cls(kind, **overrides)


def comparison_heuristics(**overrides) -> list[HeuristicConfig]:
    """The seven rules compared in the clause-count experiment, in column order."""
    return [
        HeuristicConfig(HeuristicKind.DLIS, **overrides),
        HeuristicConfig(HeuristicKind.VSIDS, **overrides),
        HeuristicConfig(HeuristicKind.PSUM, **overrides),
        HeuristicConfig(HeuristicKind.MOMCOMBO, combo_weight=32.0, **overrides),
        HeuristicConfig(HeuristicKind.MOMCOMBO, combo_weight=4.0, **overrides),
        HeuristicConfig(HeuristicKind.PNPROD, **overrides),
        HeuristicConfig(HeuristicKind.PNPROD_DECAY, **overrides),
    ]


def mom_score(f_pos: float, f_neg: float, k_exp: int) -> float:
    return (f_pos + f_neg) * 2.0 ** k_exp + f_pos * f_neg


# ---------------------------------------------------------------- jitted core

@nb.njit(cache=True)
def bump_clause(act, lits, start, length):
    for t in range(start, start + length):
        act[lits[t]] += 1.0


@nb.njit(cache=True)
def decay(act, divisor):
    for i in range(act.shape[0]):
        act[i] /= divisor


@nb.njit(cache=True)
def mom_frequencies(s):
    """Fill ``s.mom`` with literal frequencies over the smallest unresolved clauses."""
    s.mom[:] = 0.0
    smallest = 1 << 30
    for ci in range(s.ctr[NCLS]):
        if s.nsat[ci] == 0:
            free = s.clen[ci] - s.nfalse[ci]
            if free < smallest:
                smallest = free
    for ci in range(s.ctr[NCLS]):
        if s.nsat[ci] == 0 and s.clen[ci] - s.nfalse[ci] == smallest:
            st = s.cstart[ci]
            for t in range(st, st + s.clen[ci]):
                x = s.lits[t]
                if s.value[x >> 1] == 0:
                    s.mom[x] += 1.0


@nb.njit(cache=True)
def _select(s, kind):
    """Return (literal code, best score); literal is -1 when nothing is eligible."""
    random_ties = s.cfg[TIE_RANDOM] != 0
    w = s.cfgf[COMBO_W]
    kexp = 2.0 ** s.cfg[MOM_K]
    best_lit = -1
    best = -np.inf
    ties = 0
    for v in range(1, s.ctr[NV] + 1):
        if s.value[v] != 0:
            continue
        cp = s.count[2 * v]
        cn = s.count[2 * v + 1]
        if cp + cn == 0:
            continue
        for side in range(2):
            lit = -1
            score = 0.0
            if kind == K_DLIS:
                lit = 2 * v + side
                score = float(s.count[lit])
            elif kind == K_VSIDS:
                lit = 2 * v + side
                score = s.act[lit]
            else:
                if side == 1:
                    break
                if kind == K_MOM:
                    a = s.mom[2 * v]
                    b = s.mom[2 * v + 1]
                    if a + b == 0.0:
                        break
                    score = (a + b) * kexp + a * b
                elif kind == K_PNPROD_DECAY:
                    a = s.act[2 * v]
                    b = s.act[2 * v + 1]
                    score = a * b
                elif kind == K_ACT_SUM:
                    a = s.act[2 * v]
                    b = s.act[2 * v + 1]
                    score = a + b
                elif kind == K_WPROD or kind == K_WSUM:
                    # rescaled float sums can drift a hair below zero
                    a = max(s.wcount[2 * v], 0.0)
                    b = max(s.wcount[2 * v + 1], 0.0)
                    score = a * b if kind == K_WPROD else a + b
                else:
                    a = float(cp)
                    b = float(cn)
                    if kind == K_PSUM:
                        score = a + b
                    elif kind == K_PNPROD:
                        score = a * b
                    else:
                        score = (a + b) * w + a * b
                # assert the more frequent (or more active) polarity; ties positive
                lit = 2 * v if a >= b else 2 * v + 1
            if score > best:
                best = score
                best_lit = lit
                ties = 1
            elif score == best and random_ties:
                ties += 1
                if below_nb(s.rng, ties) == 0:
                    best_lit = lit
    return best_lit, best


@nb.njit(cache=True)
def pick_branch(s):
    kind = s.cfg[KIND]
    if kind == K_PNPROD_DECAY and s.cfg[DECAY_MODE] == D_WEIGHTED:
        kind = K_WPROD
    if kind == K_MOM:
        mom_frequencies(s)
    lit, best = _select(s, kind)
    if lit >= 0 and best == 0.0:
        # p*n vanishes when every candidate is pure; order by p+n instead
        if kind == K_PNPROD:
            lit, best = _select(s, K_PSUM)
        elif kind == K_PNPROD_DECAY:
            lit, best = _select(s, K_ACT_SUM)
        elif kind == K_WPROD:
            lit, best = _select(s, K_WSUM)
    return lit


class ActivityTable:
    """Standalone per-literal activity counters (the solver keeps its own copy in its state)."""

    def __init__(self, num_vars: int, decay_divisor: float = 2.0, decay_period: int = 256):
        if decay_divisor <= 1:
            raise ValueError("decay_divisor must be > 1")
        self.act = np.zeros(2 * num_vars + 2)
        self.decay_divisor = decay_divisor
        self.decay_period = decay_period

    @staticmethod
    def code(lit) -> int:
        return 2 * lit.var + (0 if lit.positive else 1)

    def on_clause_added(self, clause) -> None:
        codes = np.array([self.code(l) for l in clause], dtype=np.int32)
        bump_clause(self.act, codes, 0, len(codes))

    def decay(self) -> None:
        decay(self.act, self.decay_divisor)

    def __getitem__(self, lit) -> float:
        return float(self.act[self.code(lit)])
