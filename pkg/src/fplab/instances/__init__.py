"""Concrete semigroups: each shipped example packaged as a SemigroupInstance
with its morphisms, subsemigroups, covering relations, and default
verification pools.

Pairwise axiom checks (morphism laws, niceness) run over the full stated
pools; the cubic checks (associativity, dot-closedness) run over canonical
prefix subpools sized so the whole suite stays at desk scale.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from ..errors import ConfigError
from ..semigroup_core import (CheckReport, CoveringRelation, Element, Morphism,
                              SemigroupInstance, Subsemigroup,
                              verify_associativity, verify_canon_idempotent,
                              verify_closure, verify_covering,
                              verify_dot_closed, verify_morphism,
                              verify_niceness)


@dataclass(frozen=True)
class InstanceBundle:
    """One registered instance plus everything needed to verify and query it.

    pairwise_pool feeds the quadratic checks, cubic_pool the cubic ones,
    cover_families the covering checks.  to_data/from_data are the JSON forms
    of elements for configs and output records.
    """

    kind: str
    instance: SemigroupInstance
    morphisms: tuple[Morphism, ...] = ()
    subsemigroups: tuple[Subsemigroup, ...] = ()
    relations: tuple[CoveringRelation, ...] = ()
    pairwise_pool: tuple[Element, ...] = ()
    cubic_pool: tuple[Element, ...] = ()
    cover_families: tuple[tuple[Element, ...], ...] = ()
    to_data: Callable[[Element], Any] = lambda e: e
    from_data: Callable[[Any], Element] = lambda d: d
    extra_checks: tuple[Callable[[], CheckReport], ...] = ()

    def morphism(self, name: str) -> Morphism:
        for m in self.morphisms:
            if m.name == name:
                return m
        raise ConfigError(f"{self.instance.name}: unknown morphism {name!r}")

    def subsemigroup(self, name: str) -> Subsemigroup:
        for s in self.subsemigroups:
            if s.name == name:
                return s
        raise ConfigError(f"{self.instance.name}: unknown subsemigroup {name!r}")

    def relation(self, name: str) -> CoveringRelation:
        for r in self.relations:
            if r.name == name:
                return r
        raise ConfigError(f"{self.instance.name}: unknown relation {name!r}")


def run_default_verification(bundle: InstanceBundle) -> list[CheckReport]:
    """The registered axiom suite for one bundle; every report must pass."""
    inst = bundle.instance
    reports = [
        verify_associativity(inst, bundle.cubic_pool),
        verify_canon_idempotent(inst, bundle.pairwise_pool),
    ]
    for m in bundle.morphisms:
        reports.append(verify_morphism(inst, m, bundle.pairwise_pool))
    for sub in bundle.subsemigroups:
        reports.append(verify_closure(sub, inst, bundle.pairwise_pool))
        if sub.nice:
            reports.append(verify_niceness(sub, inst, bundle.pairwise_pool))
    for rel in bundle.relations:
        reports.append(verify_dot_closed(rel, inst, bundle.cubic_pool))
        if bundle.cover_families:
            reports.append(verify_covering(rel, inst, bundle.cover_families,
                                           bundle.pairwise_pool))
    for check in bundle.extra_checks:
        reports.append(check())
    return reports


from . import carlson, finfn, freeprod, naturals, towers, words  # noqa: E402

_MAKERS = {
    "nat_plus": naturals.make_bundle,
    "words": words.make_bundle,
    "fin_k": finfn.make_bundle,
    "free_product": freeprod.make_bundle,
    "carlson_code": carlson.make_bundle,
}


def make_bundle(kind: str, **params) -> InstanceBundle:
    """Factory for the named instance kinds (towers are built separately)."""
    try:
        maker = _MAKERS[kind]
    except KeyError:
        raise ConfigError(f"unknown instance kind {kind!r}") from None
    return maker(**params)
