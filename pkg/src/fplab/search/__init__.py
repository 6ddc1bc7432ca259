"""Witness search and bounded threshold verification."""

from .bounds import (BoundProblem, BoundResult, compute_bound, make_problem,
                     problem_names, verify_bound_certificate)
from .coloring import (Coloring, element_key, induced_coloring, rule_coloring,
                       rule_names, table_coloring)
from .kernels import (find_hj_line, find_mono_fp_chain,
                      find_mono_fp_chain_blocked, find_mt_witness,
                      find_mt_witness_blocked)
from .witness import (Budgets, Exhausted, SearchOutcome, Ticker, Unresolved,
                      Witness, verify_chain_witness, verify_hj_witness,
                      verify_mt_witness, verify_witness)

__all__ = [
    "BoundProblem", "BoundResult", "Budgets", "Coloring", "Exhausted",
    "SearchOutcome", "Ticker", "Unresolved", "Witness", "compute_bound",
    "element_key", "find_hj_line", "find_mono_fp_chain",
    "find_mono_fp_chain_blocked", "find_mt_witness",
    "find_mt_witness_blocked", "induced_coloring", "make_problem",
    "problem_names", "rule_coloring", "rule_names", "table_coloring",
    "verify_bound_certificate", "verify_chain_witness", "verify_hj_witness",
    "verify_mt_witness", "verify_witness",
]
