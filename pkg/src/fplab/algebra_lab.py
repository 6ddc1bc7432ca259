"""Finite-semigroup analogue of the idempotent-set machinery.

Over a finite carrier realized in itself, the orbit of an element collapses
to the element and the orbit product collapses to the plain subset product.
In that collapsed form the statements become elementary and exhaustively
checkable:

  * idempotent sets are sets A with A·A ⊆ A; minimal nonempty ones are
    exactly singleton idempotents;
  * c is left-minimal in A iff c ∈ A·g for every g ∈ A·c;
  * every nonempty product-closed A contains a left-minimal idempotent,
    found by the descending iteration B ← A·{b} until stabilization;
  * for left-minimal idempotent c, the idempotents of c·A·c are exactly {c}
    (g ∈ c·A·c idempotent gives g = c·g, and left-minimality gives
    c = a·g for some a, hence c·g = a·g·g = a·g = c, so g = c).

Type-definable sets, coheirs, and the monster model have no finite content
and are deliberately absent; this module houses only the collapsed shadows
above.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import ConfigError, PreconditionError


@dataclass(frozen=True)
class FiniteSemigroup:
    """An explicit operation table on the carrier {0..m-1}."""

    table: tuple[tuple[int, ...], ...]
    name: str = ""

    @property
    def size(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @property
    def carrier(self) -> range:
        return range(self.size)


def from_rows(rows: Sequence[Sequence[int]], name: str = "") -> FiniteSemigroup:
    """Build and validate a table; entries must index the carrier."""
    m = len(rows)
    if m == 0 or any(len(r) != m for r in rows):
        raise ConfigError("operation table must be square and nonempty")
    table = tuple(tuple(int(v) for v in r) for r in rows)
    if any(not 0 <= v < m for r in table for v in r):
        raise ConfigError("table entries must lie in the carrier 0..m-1")
    return FiniteSemigroup(table=table, name=name or f"table_{m}")


def associativity_violations(s: FiniteSemigroup) -> list[tuple[int, int, int]]:
    t = s.table
    return [(a, b, c)
            for a in s.carrier for b in s.carrier for c in s.carrier
            if t[t[a][b]][c] != t[a][t[b][c]]]


def is_associative(s: FiniteSemigroup) -> bool:
    return not associativity_violations(s)


def idempotents(s: FiniteSemigroup) -> tuple[int, ...]:
    """All e with e·e = e; nonempty for every finite associative table."""
    return tuple(e for e in s.carrier if s.table[e][e] == e)


def subset_product(s: FiniteSemigroup, a: Iterable[int],
                   b: Iterable[int]) -> frozenset[int]:
    """{x·y : x in A, y in B}; exactly associative on subsets."""
    t = s.table
    return frozenset(t[x][y] for x in a for y in b)


def closed_subsets(s: FiniteSemigroup) -> list[frozenset[int]]:
    """All nonempty X with X·X ⊆ X, by bitmask enumeration."""
    m = s.size
    out = []
    for mask in range(1, 1 << m):
        members = [i for i in range(m) if mask >> i & 1]
        prod = subset_product(s, members, members)
        if all(mask >> p & 1 for p in prod):
            out.append(frozenset(members))
    return out


def minimal_subsemigroups(s: FiniteSemigroup) -> tuple[frozenset[int], ...]:
    """Minimal nonempty product-closed subsets, by inclusion."""
    closed = closed_subsets(s)
    minimal = [x for x in closed
               if not any(y < x for y in closed)]
    return tuple(sorted(minimal, key=sorted))


def is_left_minimal(s: FiniteSemigroup, a: Iterable[int], c: int) -> bool:
    """c ∈ A·g for every g ∈ A·c."""
    a = frozenset(a)
    if c not in a:
        raise PreconditionError(f"is_left_minimal: {c} not in the set")
    if not subset_product(s, a, a) <= a:
        raise PreconditionError("is_left_minimal: the set is not product-closed")
    return all(c in subset_product(s, a, [g])
               for g in subset_product(s, a, [c]))


def find_left_minimal_idempotent(s: FiniteSemigroup, a: Iterable[int]) -> int:
    """The descending iteration B ← A·{b} until stabilization, then the least
    idempotent of the stable set.

    At stabilization A·{b} = B for every b in B, so B is product-closed and
    any idempotent in it is left-minimal with respect to A.
    """
    a = frozenset(a)
    if not a:
        raise PreconditionError("find_left_minimal_idempotent: empty set")
    if not subset_product(s, a, a) <= a:
        raise PreconditionError("find_left_minimal_idempotent: "
                                "the set is not product-closed")
    b_set = a
    while True:
        for b in sorted(b_set):
            shrunk = subset_product(s, a, [b])
            if shrunk < b_set:
                b_set = shrunk
                break
        else:
            break
    for e in sorted(b_set):
        if s.table[e][e] == e:
            return e
    raise AssertionError("a finite nonempty closed set holds an idempotent")


def sandwich_idempotents(s: FiniteSemigroup, a: Iterable[int],
                         c: int) -> tuple[int, ...]:
    """All idempotents of c·A·c.

    Preconditions (each reported when violated): c idempotent, {c}·A ⊆ A,
    A·{c} ⊆ A.  Always nonempty when c ∈ A; equals (c,) exactly when c is
    left-minimal with respect to A.
    """
    a = frozenset(a)
    if s.table[c][c] != c:
        raise PreconditionError(f"sandwich_idempotents: {c} is not idempotent")
    if not subset_product(s, [c], a) <= a:
        raise PreconditionError("sandwich_idempotents: {c}·A ⊈ A")
    if not subset_product(s, a, [c]) <= a:
        raise PreconditionError("sandwich_idempotents: A·{c} ⊈ A")
    cac = subset_product(s, [c], subset_product(s, a, [c]))
    return tuple(e for e in sorted(cac) if s.table[e][e] == e)


@dataclass(frozen=True)
class SubsetAlgebraReport:
    """Everything the algebra subcommand reports for one table."""

    name: str
    size: int
    associative: bool
    idempotent_elements: tuple[int, ...]
    minimal_sets: tuple[tuple[int, ...], ...]
    left_minimal_idempotent: int | None
    left_minimal_ok: bool
    sandwich: tuple[int, ...]

    def to_data(self) -> dict:
        return {
            "name": self.name,
            "size": self.size,
            "associative": self.associative,
            "idempotents": list(self.idempotent_elements),
            "minimal_subsemigroups": [list(m) for m in self.minimal_sets],
            "left_minimal_idempotent": self.left_minimal_idempotent,
            "left_minimal_ok": self.left_minimal_ok,
            "sandwich_idempotents": list(self.sandwich),
        }


def build_report(s: FiniteSemigroup) -> SubsetAlgebraReport:
    """Run every algebra-lab operation on the full carrier."""
    assoc = is_associative(s)
    if not assoc:
        return SubsetAlgebraReport(
            name=s.name, size=s.size, associative=False,
            idempotent_elements=(), minimal_sets=(),
            left_minimal_idempotent=None, left_minimal_ok=False, sandwich=())
    whole = frozenset(s.carrier)
    c = find_left_minimal_idempotent(s, whole)
    return SubsetAlgebraReport(
        name=s.name, size=s.size, associative=True,
        idempotent_elements=idempotents(s),
        minimal_sets=tuple(tuple(sorted(m)) for m in minimal_subsemigroups(s)),
        left_minimal_idempotent=c,
        left_minimal_ok=is_left_minimal(s, whole, c),
        sandwich=sandwich_idempotents(s, whole, c),
    )


# ---------------------------------------------------------------------------
# Deterministic test family: associative by construction, carriers small.

def cyclic_monoid(index: int, period: int) -> FiniteSemigroup:
    """The cyclic semigroup <x | x^(index+period) = x^index>, carrier =
    powers x^1..x^(index+period-1) labeled 0..m-1."""
    m = index + period - 1

    def reduce(n: int) -> int:
        return n if n <= m else index + (n - index) % period

    table = tuple(tuple(reduce(i + j + 2) - 1 for j in range(m))
                  for i in range(m))
    return FiniteSemigroup(table=table, name=f"cyclic({index},{period})")


def zmod(m: int) -> FiniteSemigroup:
    table = tuple(tuple((i + j) % m for j in range(m)) for i in range(m))
    return FiniteSemigroup(table=table, name=f"z{m}")


def max_semilattice(m: int) -> FiniteSemigroup:
    table = tuple(tuple(max(i, j) for j in range(m)) for i in range(m))
    return FiniteSemigroup(table=table, name=f"max{m}")


def min_semilattice(m: int) -> FiniteSemigroup:
    table = tuple(tuple(min(i, j) for j in range(m)) for i in range(m))
    return FiniteSemigroup(table=table, name=f"min{m}")


def left_zero(m: int) -> FiniteSemigroup:
    table = tuple(tuple(i for _ in range(m)) for i in range(m))
    return FiniteSemigroup(table=table, name=f"leftzero{m}")


def right_zero(m: int) -> FiniteSemigroup:
    table = tuple(tuple(j for j in range(m)) for _ in range(m))
    return FiniteSemigroup(table=table, name=f"rightzero{m}")


def null_semigroup(m: int) -> FiniteSemigroup:
    """Every product equals 0."""
    table = tuple(tuple(0 for _ in range(m)) for _ in range(m))
    return FiniteSemigroup(table=table, name=f"null{m}")


def direct_product(s: FiniteSemigroup, t: FiniteSemigroup) -> FiniteSemigroup:
    pairs = [(i, j) for i in s.carrier for j in t.carrier]
    idx = {p: n for n, p in enumerate(pairs)}
    table = tuple(
        tuple(idx[(s.table[i1][i2], t.table[j1][j2])] for (i2, j2) in pairs)
        for (i1, j1) in pairs)
    return FiniteSemigroup(table=table, name=f"{s.name}x{t.name}")


def transformation_semigroup(maps: Sequence[tuple[int, ...]],
                             points: int) -> FiniteSemigroup | None:
    """Closure of the given self-maps of {0..points-1} under composition,
    realized as an operation table; None if the closure is empty."""
    seen: dict[tuple[int, ...], int] = {}
    frontier = [tuple(m) for m in maps]
    closure: list[tuple[int, ...]] = []
    for f in frontier:
        if f not in seen:
            seen[f] = len(closure)
            closure.append(f)
    i = 0
    while i < len(closure):
        f = closure[i]
        i += 1
        for g in list(closure):
            for h in (tuple(f[g[p]] for p in range(points)),
                      tuple(g[f[p]] for p in range(points))):
                if h not in seen:
                    seen[h] = len(closure)
                    closure.append(h)
    if not closure:
        return None
    order = sorted(closure)
    idx = {f: n for n, f in enumerate(order)}
    table = tuple(
        tuple(idx[tuple(f[g[p]] for p in range(points))] for g in order)
        for f in order)
    return FiniteSemigroup(table=table, name=f"transf{points}_{len(order)}")


def generate_test_family(seed: int = 0, count: int = 120,
                         max_size: int = 6) -> list[FiniteSemigroup]:
    """A deterministic family of associative tables with carriers <= max_size:
    cyclic monoids, lattices, groups, left/right-zero and null semigroups,
    direct products, and closures of random transformations."""
    rng = random.Random(seed)
    family: list[FiniteSemigroup] = []

    for index in range(1, 5):
        for period in range(1, 5):
            if index + period - 1 <= max_size:
                family.append(cyclic_monoid(index, period))
    for m in range(1, max_size + 1):
        family.append(zmod(m))
        family.append(max_semilattice(m))
        family.append(min_semilattice(m))
        family.append(left_zero(m))
        family.append(right_zero(m))
        family.append(null_semigroup(m))
    small = [zmod(2), zmod(3), max_semilattice(2), left_zero(2)]
    for s in small:
        for t in small:
            if s.size * t.size <= max_size:
                family.append(direct_product(s, t))

    while len(family) < count:
        points = rng.choice((2, 3))
        n_maps = rng.choice((1, 2))
        maps = [tuple(rng.randrange(points) for _ in range(points))
                for _ in range(n_maps)]
        s = transformation_semigroup(maps, points)
        if s is not None and s.size <= max_size:
            family.append(s)
    return family[:max(count, len(family))]
