"""Towers G_1 ⊆ ... ⊆ G_n of nice subsemigroups with level-dropping
homomorphisms, and the composed Sigma sets they induce.

Two variants: `composed` takes one homomorphism per level and
Sigma = {sigma_i∘...∘sigma_{n-1} : 0 < i < n}; `per_level` (the Remark
variant) takes a finite set Sigma_i per level and composes all formal
products, requiring every g in G_i to have a joint preimage under the whole
of Sigma_i (an h with sigma(h) = g for every sigma in Sigma_i at once).

The concrete tower shipped here is the FIN tower with tetris and, in the
Remark variant, the merge map alongside it; the joint preimage of g is then
g bumped by one on its support.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..errors import ConfigError
from ..semigroup_core import (CheckReport, CoveringRelation, Morphism,
                              SemigroupInstance, Subsemigroup,
                              verify_morphism, verify_niceness)
from . import finfn


@dataclass(frozen=True)
class TowerSpec:
    """A nested chain of instances with per-level homomorphisms.

    instances[i] is G_{i+1} (1-based levels); level_sets[i] is the carrier
    pool of G_{i+1}; sigma_sets[i] are the declared homomorphisms
    G_{i+2} -> G_{i+1}, so len(sigma_sets) == levels - 1.  In the composed
    variant every sigma_sets[i] is a singleton.
    """

    name: str
    variant: str  # "composed" | "per_level"
    instances: tuple[SemigroupInstance, ...]
    level_sets: tuple[tuple, ...]
    sigma_sets: tuple[tuple[Morphism, ...], ...]

    @property
    def levels(self) -> int:
        return len(self.instances)


def compose_tower(t: TowerSpec) -> tuple[Morphism, ...]:
    """All formal composites sigma_i∘...∘sigma_{n-1}, one Morphism per
    composition path (no extensional deduplication), for 0 < i < n."""
    n = t.levels
    composites = []
    for i in range(1, n):
        # choices at levels i .. n-1 (1-based sigma_j : G_{j+1} -> G_j)
        per_level = [t.sigma_sets[j - 1] for j in range(i, n)]
        for picks in itertools.product(*per_level):
            name = "∘".join(m.name for m in picks)

            def composite(a, _picks=picks):
                for m in reversed(_picks):
                    a = m.fn(a)
                return a

            composites.append(Morphism(name=name, fn=composite))
    return tuple(composites)


def joint_preimage_report(t: TowerSpec) -> CheckReport:
    """Remark-variant condition: every g in G_i has one h in the G_{i+1} pool
    with sigma(h) = g for all sigma in Sigma_i simultaneously."""
    violations = []
    checked = 0
    for i in range(t.levels - 1):
        sigmas = t.sigma_sets[i]
        upper = t.level_sets[i + 1]
        for g in t.level_sets[i]:
            checked += 1
            if not any(all(m.fn(h) == g for m in sigmas) for h in upper):
                violations.append((i + 1, g))
    return CheckReport(check="joint-preimage", instance=t.name,
                       pool_size=checked, violations=tuple(violations))


def verify_tower(t: TowerSpec) -> list[CheckReport]:
    """Nicety of each level in the next, homomorphism laws for every declared
    sigma and every composite, and (per_level only) joint preimages."""
    reports = []
    for i in range(t.levels - 1):
        upper_instance = t.instances[i + 1]
        upper_pool = t.level_sets[i + 1]
        lower = Subsemigroup(
            name=f"level_{i + 1}",
            contains=lambda a, _lv=i + 1: finfn.level(a) <= _lv,
            nice=True)
        reports.append(verify_niceness(lower, upper_instance, upper_pool))
        for m in t.sigma_sets[i]:
            reports.append(verify_morphism(upper_instance, m, upper_pool))
    top = t.instances[-1]
    top_pool = t.level_sets[-1]
    for m in compose_tower(t):
        reports.append(verify_morphism(top, m, top_pool))
    if t.variant == "per_level":
        reports.append(joint_preimage_report(t))
    return reports


def as_search_bundle(t: TowerSpec):
    """The tower's top level packaged for fp enumeration and chain search.

    The instance is G_n, the morphisms are the tower's formal composites,
    the excluded subsemigroup is G_{n-1}, and the pool holds the elements of
    level exactly n — the setting where a blocks-chain with a monochromatic
    filtered fp set is the thing to look for.
    """
    from . import InstanceBundle

    n = t.levels
    level_top = tuple(a for a in t.level_sets[-1] if finfn.level(a) == n)
    below = Subsemigroup(name=f"level_{n - 1}",
                         contains=lambda a: finfn.level(a) <= n - 1,
                         nice=True)
    blocks = CoveringRelation(name="blocks", holds=finfn.blocks_below,
                              cover_pool=lambda a: finfn.level(a) == n)
    max_support = max((len(a) for a in t.level_sets[-1]), default=1)
    cover_lo = tuple(a for a in level_top if len(a) <= max_support - 1)
    return InstanceBundle(
        kind="tower",
        instance=t.instances[-1],
        morphisms=compose_tower(t),
        subsemigroups=(below,),
        relations=(blocks,),
        pairwise_pool=level_top,
        cubic_pool=level_top,
        cover_families=(cover_lo[:2],) if len(cover_lo) >= 2 else (),
        to_data=list,
        from_data=lambda d: finfn.canon(tuple(d)),
    )


def make_fin_tower(levels: int = 3, max_support: int = 3,
                   variant: str = "composed") -> TowerSpec:
    """The FIN_1 ⊆ ... ⊆ FIN_levels tower with tetris (and merge) maps."""
    if levels < 2:
        raise ConfigError("tower: need at least two levels")
    if variant not in ("composed", "per_level"):
        raise ConfigError(f"tower: unknown variant {variant!r}")
    instances = tuple(finfn.make_instance(k, max_support)
                      for k in range(1, levels + 1))
    level_sets = tuple(
        tuple(sorted(finfn.all_functions(k, max_support), key=finfn.sort_key))
        for k in range(1, levels + 1))
    sigma_sets = []
    for k in range(2, levels + 1):  # sigma_{k-1} : G_k -> G_{k-1}
        tet = Morphism(name=f"tetris{k - 1}", fn=finfn.tetris)
        if variant == "composed":
            sigma_sets.append((tet,))
        else:
            mer = Morphism(name=f"merge{k - 1}", fn=finfn.merge)
            sigma_sets.append((tet, mer))
    return TowerSpec(
        name=f"fin_tower(n={levels},supp<{max_support},{variant})",
        variant=variant,
        instances=instances,
        level_sets=level_sets,
        sigma_sets=tuple(sigma_sets),
    )
