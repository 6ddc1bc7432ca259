"""Finite sums of naturals: fp sets, provenance, and a monochromatic chain.

The fp set of a chain a_0, ..., a_k collects every sum over a strictly
increasing subsequence of indices.  For (1, 2, 4) those sums are exactly
1..7 — each element remembers which indices produced it, so every member
of the set can be replayed from the chain.

The search then asks the finite form of the classic question: can we find
a chain whose ENTIRE fp set is one color?  Under the parity coloring of
1..16 the least answer of length three is (2, 4, 6).
"""

from __future__ import annotations

from fplab.fp_engine import fp_sigma
from fplab.instances import make_bundle
from fplab.search.coloring import rule_coloring
from fplab.search.kernels import find_mono_fp_chain
from fplab.search.witness import Budgets, verify_chain_witness

bundle = make_bundle("nat_plus")
inst = bundle.instance

chain = (1, 2, 4)
fps = fp_sigma(inst, chain)
print(f"chain {chain} has {len(fps)} finite sums: {fps.elements}")
for e in fps.elements:
    indices, _ = fps.provenance[e]
    terms = " + ".join(str(chain[i]) for i in indices)
    print(f"  {e} = {terms}")

parity = rule_coloring("mod", 2)
pool = tuple(range(1, 17))
print(f"\nsearching 1..16 for a length-3 chain whose sums are one color")
outcome = find_mono_fp_chain(inst, pool, 3, parity,
                             budgets=Budgets(timeout_seconds=10,
                                             max_nodes=1_000_000))
witness = verify_chain_witness(outcome, instance=inst, coloring=parity,
                               pool=pool, distinct=True, length=3)
print(f"found {witness.chain}, all sums have color {witness.color}")
print(f"the monochromatic sums: {witness.provenance}")
print(f"independently re-verified: certified={witness.certified}")
