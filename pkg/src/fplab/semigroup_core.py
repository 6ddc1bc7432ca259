"""Abstract semigroup layer: instances, morphisms, subsemigroups, covering
relations, and bounded exhaustive verification of every axiom the rest of the
package relies on.

Carriers are never materialized as infinite objects.  An instance is either a
finite table or a generated carrier with an explicit budget; all verifiers are
exhaustive over the finite pools they are handed, so "pass" means zero
counterexamples among all tuples drawn from the pool.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any

from .errors import BudgetExceededError, ConfigError

# Elements are opaque hashable values.  Each instance supplies a canonical
# total order (via `key`) used everywhere a deterministic choice is needed.
Element = Any


def _identity(e: Element) -> Element:
    return e


def _always(e: Element) -> bool:
    return True


@dataclass(frozen=True)
class SemigroupInstance:
    """A semigroup with a canonical form, a total order, and a budget.

    `mul` is the raw associative operation; use :func:`product` (or the
    `product` method) to get canonicalization and budget enforcement.
    `key` must induce a total order on all representable elements.
    """

    name: str
    mul: Callable[[Element, Element], Element]
    key: Callable[[Element], Any]
    canon: Callable[[Element], Element] = _identity
    in_budget: Callable[[Element], bool] = _always
    carrier: tuple[Element, ...] | None = None  # explicit finite carriers only
    description: str = ""

    def product(self, a: Element, b: Element) -> Element:
        r = self.canon(self.mul(a, b))
        if not self.in_budget(r):
            raise BudgetExceededError(
                f"{self.name}: product left the carrier budget",
                element=r, context=(a, b))
        return r

    def sort(self, elements: Iterable[Element]) -> list[Element]:
        return sorted(elements, key=self.key)


@dataclass(frozen=True)
class Morphism:
    """A named total map on one instance's carrier.

    kind is "endomorphism" or "retraction"; retractions carry the target
    subsemigroup they fix pointwise.
    """

    name: str
    fn: Callable[[Element], Element]
    kind: str = "endomorphism"
    target: "Subsemigroup | None" = None

    def __post_init__(self):
        if self.kind not in ("endomorphism", "retraction"):
            raise ConfigError(f"unknown morphism kind: {self.kind!r}")
        if self.kind == "retraction" and self.target is None:
            raise ConfigError(f"retraction {self.name!r} needs a target")

    def __call__(self, e: Element) -> Element:
        return self.fn(e)


#: The identity morphism; fp^Sigma assignments always include it.
IDENTITY = Morphism(name="id", fn=_identity)


@dataclass(frozen=True)
class Subsemigroup:
    """Membership predicate over a parent carrier, with a niceness claim.

    `nice=True` claims that a*b in C implies both a in C and b in C; the
    claim is checked by :func:`verify_niceness`, never assumed.
    """

    name: str
    contains: Callable[[Element], bool]
    nice: bool = False
    pool: tuple[Element, ...] = ()  # test pool for fixed-point checks


@dataclass(frozen=True)
class CoveringRelation:
    """A binary relation on the carrier, with an optional covering pool B.

    When `cover_pool` is given, covers must be drawn from elements satisfying
    it; when None, any pool element may cover.
    """

    name: str
    holds: Callable[[Element, Element], bool]
    cover_pool: Callable[[Element], bool] | None = None


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one exhaustive verification over a finite pool.

    `violations` holds every counterexample tuple found (empty means pass);
    `details` carries check-specific extras such as the covers found.
    """

    check: str
    instance: str
    pool_size: int
    violations: tuple = ()
    details: tuple = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        state = "pass" if self.passed else f"FAIL ({len(self.violations)} violations)"
        return f"{self.instance}: {self.check} over {self.pool_size} elements: {state}"


def product(instance: SemigroupInstance, a: Element, b: Element) -> Element:
    """Canonical product of two elements, enforcing the carrier budget."""
    return instance.product(a, b)


def verify_associativity(instance: SemigroupInstance,
                         pool: Sequence[Element]) -> CheckReport:
    """Exhaustively check (a*b)*c == a*(b*c) over pool^3."""
    pool = list(pool)
    violations = []
    prod = instance.product
    for b in pool:
        for c in pool:
            bc = prod(b, c)
            for a in pool:
                if prod(prod(a, b), c) != prod(a, bc):
                    violations.append((a, b, c))
    return CheckReport(check="associativity", instance=instance.name,
                       pool_size=len(pool), violations=tuple(violations))


def verify_morphism(instance: SemigroupInstance, m: Morphism,
                    pool: Sequence[Element]) -> CheckReport:
    """Check m(a*b) == m(a)*m(b) over pool^2; retractions additionally get
    m(m(a)) == m(a) on the pool and m(c) == c on the target's pool."""
    pool = list(pool)
    violations = []
    prod = instance.product
    images = {a: m.fn(a) for a in pool}
    for a in pool:
        ma = images[a]
        for b in pool:
            if m.fn(prod(a, b)) != prod(ma, images[b]):
                violations.append(("morphism", a, b))
    if m.kind == "retraction":
        for a in pool:
            if m.fn(images[a]) != images[a]:
                violations.append(("idempotence", a))
        target_pool = m.target.pool or tuple(
            a for a in pool if m.target.contains(a))
        for c in target_pool:
            if m.fn(c) != c:
                violations.append(("fixed-point", c))
    return CheckReport(check=f"morphism:{m.name}", instance=instance.name,
                       pool_size=len(pool), violations=tuple(violations))


def verify_niceness(sub: Subsemigroup, instance: SemigroupInstance,
                    pool: Sequence[Element]) -> CheckReport:
    """Check that a*b in C implies a in C and b in C, over pool^2."""
    pool = list(pool)
    violations = []
    prod = instance.product
    contains = sub.contains
    inside = {a: contains(a) for a in pool}
    for a in pool:
        for b in pool:
            ab = prod(a, b)
            if contains(ab) and not (inside[a] and inside[b]):
                violations.append((a, b, ab))
    return CheckReport(check=f"niceness:{sub.name}", instance=instance.name,
                       pool_size=len(pool), violations=tuple(violations))


def verify_closure(sub: Subsemigroup, instance: SemigroupInstance,
                   pool: Sequence[Element]) -> CheckReport:
    """Check that a, b in C implies a*b in C, over (pool ∩ C)^2."""
    members = [a for a in pool if sub.contains(a)]
    violations = []
    for a in members:
        for b in members:
            ab = instance.product(a, b)
            if not sub.contains(ab):
                violations.append((a, b, ab))
    return CheckReport(check=f"closure:{sub.name}", instance=instance.name,
                       pool_size=len(members), violations=tuple(violations))


def verify_covering(rel: CoveringRelation, instance: SemigroupInstance,
                    finite_sets: Sequence[Iterable[Element]],
                    pool: Sequence[Element]) -> CheckReport:
    """For each finite A, find the canonically least cover c in pool (within
    the relation's covering pool B when declared) with a -< c for all a in A.

    The covering property is about the whole infinite carrier; this checks it
    only for the supplied families and records exactly that scope.
    """
    if not pool:
        raise ConfigError("verify_covering: empty pool")
    ordered = instance.sort(pool)
    if rel.cover_pool is not None:
        candidates = [c for c in ordered if rel.cover_pool(c)]
    else:
        candidates = ordered
    violations = []
    details = []
    for fam in finite_sets:
        fam = tuple(instance.sort(fam))
        cover = next((c for c in candidates
                      if all(rel.holds(a, c) for a in fam)), None)
        if cover is None:
            violations.append(fam)
        details.append((fam, cover))
    return CheckReport(check=f"covering:{rel.name}", instance=instance.name,
                       pool_size=len(candidates), violations=tuple(violations),
                       details=tuple(details))


def verify_dot_closed(rel: CoveringRelation, instance: SemigroupInstance,
                      pool: Sequence[Element]) -> CheckReport:
    """Check a -< b and b -< c implies a -< b*c, over all pool triples."""
    pool = list(pool)
    holds = rel.holds
    # Materialize the relation once; the triple loop then only walks related
    # pairs instead of evaluating the predicate pool^3 times.
    successors = {b: [c for c in pool if holds(b, c)] for b in pool}
    violations = []
    prod = instance.product
    for a in pool:
        for b in successors[a]:
            for c in successors[b]:
                if not holds(a, prod(b, c)):
                    violations.append((a, b, c))
    return CheckReport(check=f"dot-closed:{rel.name}", instance=instance.name,
                       pool_size=len(pool), violations=tuple(violations))


def verify_canon_idempotent(instance: SemigroupInstance,
                            pool: Sequence[Element]) -> CheckReport:
    """canon(canon(x)) == canon(x) for every pool element."""
    violations = tuple(
        (x,) for x in pool if instance.canon(instance.canon(x)) != instance.canon(x))
    return CheckReport(check="canon-idempotent", instance=instance.name,
                       pool_size=len(list(pool)), violations=violations)
