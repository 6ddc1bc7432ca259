"""fplab: finite verification of partition-regularity structure.

Semigroups with canonical forms and budgets, fp-set enumeration under
endomorphism assignments, retraction and covering checks, coded-word
evaluation, block towers, a finite subset-algebra lab, and exhaustive
searches for monochromatic witnesses and partition thresholds.
"""

from . import algebra_lab, fp_engine, instances, search, semigroup_core
from .errors import (BudgetExceededError, ConfigError, FplabError,
                     PreconditionError)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError", "ConfigError", "FplabError", "PreconditionError",
    "algebra_lab", "fp_engine", "instances", "search", "semigroup_core",
    "__version__",
]
