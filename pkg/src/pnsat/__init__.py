"""CDCL SAT solving with PN-product branching rules."""
from .cdcl import Indeterminate, SolveResult, SolveStats, Solver, Status, solve
from .formula import (Clause, CnfFormula, DimacsError, InvalidParameters, Literal,
                      avg_clause_len, emit_dimacs, generate_ksat, parse_dimacs)
from .heuristics import HeuristicConfig, HeuristicKind, TieBreak, comparison_heuristics
from .pn_metrics import (RegressionResult, ols_simple, pn_product, pn_sweep, polarity_groups,
                         predicted_new_pn_product)

__all__ = [
    "Clause", "CnfFormula", "DimacsError", "HeuristicConfig", "HeuristicKind", "Indeterminate",
    "InvalidParameters", "Literal", "RegressionResult", "SolveResult", "SolveStats", "Solver",
    "Status", "TieBreak", "avg_clause_len", "emit_dimacs", "generate_ksat", "ols_simple",
    "parse_dimacs", "pn_product", "pn_sweep", "polarity_groups", "predicted_new_pn_product",
    "solve", "comparison_heuristics",
]
