"""Positive/negative polarity groups, the PN product, and the OLS fit used to relate it to solvability."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np
from scipy import stats

from .formula import CnfFormula, generate_ksat

Assignment = Mapping[int, bool]


class RegressionError(ValueError):
    pass


@dataclass(frozen=True)
class VarGroup:
    positive_polarity: bool  # True when the un-negated literal is the more frequent one
    pos_count: int
    neg_count: int


@dataclass(frozen=True)
class PolarityGroups:
    per_var: dict[int, VarGroup]
    P: int
    N: int

    def pn_product(self) -> int:
        return self.P * self.N


def literal_counts(f: CnfFormula, assignment: Assignment | None = None) -> tuple[list[int], list[int]]:
    """Occurrences of x and ~x, per variable, among unassigned literals of unresolved clauses."""
    assignment = assignment or {}
    pos = [0] * (f.num_vars + 1)
    neg = [0] * (f.num_vars + 1)
    for clause in f.clauses:
        if any(assignment.get(l.var) == l.positive for l in clause):
            continue
        for lit in clause:
            if lit.var in assignment:
                continue
            if lit.positive:
                pos[lit.var] += 1
            else:
                neg[lit.var] += 1
    return pos, neg


def polarity_groups(f: CnfFormula, assignment: Assignment | None = None) -> PolarityGroups:
    pos, neg = literal_counts(f, assignment)
    per_var = {}
    P = N = 0
    for v in range(1, f.num_vars + 1):
        # ties go to the un-negated polarity
        if pos[v] >= neg[v]:
            g = VarGroup(True, pos[v], neg[v])
        else:
            g = VarGroup(False, neg[v], pos[v])
        per_var[v] = g
        P += g.pos_count
        N += g.neg_count
    return PolarityGroups(per_var, P, N)


def pn_product(f: CnfFormula, assignment: Assignment | None = None) -> int:
    return polarity_groups(f, assignment).pn_product()


def predicted_new_pn_product(P: float, N: float, p: float, n: float, k: float) -> float:
    """Estimated PN product after asserting a variable's positive-group polarity.

    ``p`` and ``n`` are the variable's own positive/negative group counts and
    ``k`` the average clause length. Both factors remove ``p*(k-1)`` literal
    occurrences split in proportion P:N, since that many literals sit in the
    clauses the assignment satisfies. This is an estimate: the result is
    returned as-is and can be negative.
    """
    total = P + N
    if total == 0:
        raise ZeroDivisionError("P + N must be positive")
    resolved = p * (k - 1)
    return (P - p - resolved * P / total) * (N - n - resolved * N / total)


@dataclass(frozen=True)
class RegressionResult:
    slope: float
    intercept: float
    slope_stderr: float
    n_points: int

    CSV_HEADER = "slope,intercept,stderr,t,n"

    @property
    def t_stat(self) -> float:
        """slope / stderr; 0 for a flat exact fit, RegressionError for any other exact fit."""
        if self.slope_stderr > 0:
            return self.slope / self.slope_stderr
        if self.slope == 0:
            return 0.0
        raise RegressionError("residuals are exactly zero; t-statistic is unbounded")

    def csv_row(self) -> str:
        return (f"{self.slope!r},{self.intercept!r},{self.slope_stderr!r},{self.t_stat!r},"
                f"{self.n_points}")


def ols_simple(xs: Sequence[float], ys: Sequence[float]) -> RegressionResult:
    """Fit ``y = a + b*x``; the slope's standard error uses the residual variance with n-2 dof."""
    if len(xs) != len(ys):
        raise RegressionError("xs and ys differ in length")
    if len(xs) < 3:
        raise RegressionError("need at least 3 points")
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if np.ptp(x) == 0:
        raise RegressionError("x has zero variance")
    if np.ptp(y) == 0:
        return RegressionResult(0.0, float(y[0]), 0.0, len(x))
    fit = stats.linregress(x, y)
    return RegressionResult(float(fit.slope), float(fit.intercept), float(fit.stderr), len(x))


def pn_sweep(n: int, k: int, m_values: Sequence[int], seeds_per_point: int,
             seed0: int = 0) -> list[tuple[int, float]]:
    """Mean initial PN product of fresh random instances at each clause count.

    Point ``i`` uses seeds ``seed0 + i*seeds_per_point + j``, so no two points
    share an instance.
    """
    if any(b <= a for a, b in zip(m_values, m_values[1:])):
        raise ValueError("m_values must be strictly increasing")
    out = []
    for i, m in enumerate(m_values):
        total = 0
        for j in range(seeds_per_point):
            total += pn_product(generate_ksat(n, m, k, seed0 + i * seeds_per_point + j))
        out.append((m, total / seeds_per_point))
    return out


def sweep_csv(points: Sequence[tuple[int, float]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "mean_pn_product"])
    for m, mean in points:
        w.writerow([m, repr(float(mean))])
    return buf.getvalue()


def is_strictly_increasing(values: Sequence[float]) -> bool:
    return all(b > a for a, b in zip(values, values[1:])) and not any(math.isnan(v) for v in values)
