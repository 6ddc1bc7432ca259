"""Words, letter substitutions, and combinatorial lines.

Words over {a, b} plus a variable x form a semigroup under concatenation.
Substituting a letter for every x is a retraction onto the constant words,
and the constant words are a *nice* subsemigroup: a product is constant
only when both factors are.

fp with substitutions closes a chain of variable words under both
concatenation and substitution.  Dropping the members that landed inside
the constant words leaves the extracted variable words — the objects the
line search below colors.

A combinatorial line is the orbit {w(a), w(b)} of a variable word w.  The
search returns the least w whose line is monochromatic.
"""

from __future__ import annotations

from fplab.fp_engine import fp_sigma, fp_sigma_minus
from fplab.instances import make_bundle
from fplab.search.coloring import rule_coloring
from fplab.search.kernels import find_hj_line
from fplab.search.witness import Budgets, verify_hj_witness

bundle = make_bundle("words", alphabet=("a", "b"), variable="x")
inst = bundle.instance
sigmas = tuple(m for m in bundle.morphisms if m.name in ("sub_a", "sub_b"))
constants = next(s for s in bundle.subsemigroups if s.name == "constants")

chain = ("ax", "xb")
full = fp_sigma(inst, chain, sigmas)
trimmed = fp_sigma_minus(inst, chain, sigmas, constants)
print(f"chain {chain} closed under products and substitutions:")
print(f"  {full.elements}")
print(f"still containing the variable ({len(trimmed)} of {len(full)}):")
print(f"  {trimmed.elements}")

coloring = rule_coloring("first_letter", 2, {"order": ["a", "b"]})
print("\ncoloring length-2 constant words by their first letter,")
print("looking for a variable word whose whole line is one color")
outcome = find_hj_line(("a", "b"), "x", 2, coloring,
                       budgets=Budgets(timeout_seconds=10,
                                       max_nodes=100_000))
witness = verify_hj_witness(outcome, alphabet=("a", "b"), variable="x",
                            dimension=2, coloring=coloring)
vw = witness.provenance[0]
print(f"variable word {vw!r} spans the line {witness.chain}, "
      f"color {witness.color}")
print(f"independently re-verified: certified={witness.certified}")
