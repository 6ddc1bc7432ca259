"""FIN_k towers: tetris, merge, and their joint preimage.

FIN_k is the set of finitely supported functions into {0..k} under
pointwise max.  Tetris lowers every value by one (floor zero); merge caps
the value profile monotonically.  Both are homomorphisms FIN_k -> FIN_{k-1}
and they share a one-sided inverse: bumping every value on the support up
by one is a joint preimage, so tetris(bump(a)) == merge(bump(a)) == a.

verify_tower re-checks all of that mechanically at every level, and the
tower packages as a search bundle whose chain search runs on the top level.
"""

from __future__ import annotations

from fplab.instances import towers
from fplab.instances.finfn import bump, merge, tetris
from fplab.search.coloring import rule_coloring
from fplab.search.kernels import find_mono_fp_chain
from fplab.search.witness import Budgets, verify_chain_witness

a = (2, 0, 1)
print(f"a          = {a}")
print(f"tetris(a)  = {tetris(a)}")
print(f"merge(a)   = {merge(a)}")
print(f"bump(a)    = {bump(a)}")
print(f"tetris(bump(a)) == merge(bump(a)) == a: "
      f"{tetris(bump(a)) == merge(bump(a)) == a}")

tower = towers.make_fin_tower(levels=3, max_support=4, variant="composed")
reports = towers.verify_tower(tower)
print(f"\n{tower.name}: {sum(r.passed for r in reports)}/{len(reports)} "
      f"checks passed")
for r in reports:
    print(f"  {r.check}: {'ok' if r.passed else r.violations[:2]}")

bundle = towers.as_search_bundle(tower)
coloring = rule_coloring("support_mod", 2)
sigmas = bundle.morphisms
sub = bundle.subsemigroups[0]
outcome = find_mono_fp_chain(bundle.instance, bundle.pairwise_pool, 2,
                             coloring, sigmas=sigmas, sub=sub,
                             relation=bundle.relations[0],
                             budgets=Budgets(timeout_seconds=30,
                                             max_nodes=2_000_000))
witness = verify_chain_witness(outcome, instance=bundle.instance,
                               coloring=coloring, sigmas=sigmas, sub=sub,
                               relation=bundle.relations[0],
                               pool=bundle.pairwise_pool, distinct=True,
                               length=2)
print(f"\ntop-level chain with block-ordered supports, all composites")
print(f"applied, members outside level 2 all of color {witness.color}:")
print(f"  chain {witness.chain}")
print(f"  kept elements {witness.provenance}")
