"""Array layout of the solver state shared by the jitted kernels.

Literal codes: variable ``v`` (1-based) is ``2*v`` when positive and
``2*v + 1`` when negated, so ``code ^ 1`` is the negation and ``code >> 1``
the variable. Per-literal arrays have length ``2*num_vars + 2``.
"""
from collections import namedtuple

State = namedtuple("State", [
    "lits",       # int32 flat literal pool
    "cstart",     # int64 clause -> offset into lits
    "clen",       # int32 clause length
    "nsat",       # int32 satisfied literals per clause
    "nfalse",     # int32 falsified literals per clause
    "occ",        # int32 [literal, slot] -> clause index
    "occ_len",    # int32 occupied slots per literal
    "value",      # int8 per variable: 0 unassigned, 1 true, -1 false
    "level",      # int32 per variable decision level
    "reason",     # int32 per variable antecedent clause, -1 for decisions
    "trail",      # int32 assigned literal codes in order
    "trail_lim",  # int32 trail index where each decision level starts
    "count",      # int32 per literal: unassigned occurrences in unresolved clauses
    "act",        # float64 per literal activity
    "seen",       # uint8 scratch for conflict analysis
    "learnt",     # int32 scratch holding the last learned clause
    "mom",        # float64 scratch for minimum-size clause frequencies
    "wcount",     # float64 per literal: like count, each clause weighted by cw
    "cw",         # float64 clause weight for wcount
    "ctr",        # int64 counters, indices below
    "rng",        # uint64[4] xoshiro256** state
    "cfg",        # int64 heuristic settings, indices below
    "cfgf",       # float64 heuristic settings, indices below
])

# ctr
NV, NORIG, NCLS, LUSED, TLEN, QHEAD, DLEVEL, NUNRES = range(8)
DECISIONS, PROPS, CONFLICTS, MAXLEVEL, SINCE_DECAY, MAXOCC, SINCE_RESTART, RESTARTS = range(8, 16)
NCTR = 16

# cfg
KIND, MOM_K, DECAY_PERIOD, TIE_RANDOM, RESTART_INTERVAL, LEARNING, DECAY_MODE = range(7)
NCFG = 7

# learning schemes
L_FIRST_UIP, L_DECISION = 0, 1

# cfgf
# W_INC is mutable: the weight given to the next added clause
COMBO_W, DECAY_DIV, W_INC = range(3)
NCFGF = 3

# heuristic kinds
K_DLIS, K_VSIDS, K_PSUM, K_PNPROD, K_MOMCOMBO, K_MOM, K_PNPROD_DECAY = range(7)
# internal fallback for the decaying product rule: a(x) + a(~x)
K_ACT_SUM = 7
# decaying product over clause-weighted dynamic counts, and its fallback
K_WPROD, K_WSUM = 8, 9

# decay modes of the decaying product rule
D_ACTIVITY, D_WEIGHTED = 0, 1

# search return codes
GROW, SAT, UNSAT, BUDGET, STUCK = 1, 10, 20, 30, -1
