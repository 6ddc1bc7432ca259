"""FIN_k: finitely supported functions omega -> {0..k} under pointwise max.

A function is stored densely as a tuple of values with no trailing zeros, so
the empty tuple is the zero function.  The zero function is representable and
flagged, but excluded from carriers and pools by default: the partition
chains never use it.  The tetris operation drops every value by one.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator

from ..errors import ConfigError
from ..semigroup_core import (CoveringRelation, Morphism, SemigroupInstance,
                              Subsemigroup)

FinFn = tuple[int, ...]


def canon(a: FinFn) -> FinFn:
    """Strip trailing zeros; the dense prefix is the canonical form."""
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return tuple(a[:i])


def pointwise_max(a: FinFn, b: FinFn) -> FinFn:
    if len(a) < len(b):
        a, b = b, a
    return tuple(max(x, y) for x, y in itertools.zip_longest(a, b, fillvalue=0))


def supp(a: FinFn) -> tuple[int, ...]:
    return tuple(i for i, v in enumerate(a) if v)


def level(a: FinFn) -> int:
    """The least i with a in FIN_i; 0 exactly for the zero function."""
    return max(a, default=0)


def is_zero(a: FinFn) -> bool:
    return not a


def sort_key(a: FinFn) -> tuple:
    return (supp(a), tuple(v for v in a if v))


def tetris(a: FinFn) -> FinFn:
    """Pointwise max(value - 1, 0); maps FIN_k into FIN_{k-1}."""
    return canon(tuple(max(v - 1, 0) for v in a))


def merge(a: FinFn) -> FinFn:
    """The monotone value map 0,1,1,2,...: like tetris but floored at 1 on
    the support.  Also maps FIN_k into FIN_{k-1}; paired with tetris it keeps
    joint preimages (bump every supported value by one)."""
    return canon(tuple(0 if v == 0 else max(v - 1, 1) for v in a))


def bump(a: FinFn) -> FinFn:
    """Add one on the support: the joint preimage of a under tetris+merge."""
    return tuple(v + 1 if v else 0 for v in a)


def blocks_below(a: FinFn, b: FinFn) -> bool:
    """supp(a) < supp(b): every support point of a below every one of b."""
    if is_zero(a) or is_zero(b):
        return False
    first_b = next(i for i, v in enumerate(b) if v)
    return len(a) - 1 < first_b


def all_functions(k: int, max_support: int,
                  include_zero: bool = False) -> Iterator[FinFn]:
    """Every FIN_k element with support inside [0, max_support)."""
    for n in range(0, max_support + 1):
        for tup in itertools.product(range(k + 1), repeat=n):
            if n == 0 or tup[-1] != 0:
                if tup or include_zero:
                    yield tuple(tup)


def make_instance(k: int, max_support: int) -> SemigroupInstance:
    return SemigroupInstance(
        name=f"fin_{k}(supp<{max_support})",
        mul=pointwise_max,
        key=sort_key,
        canon=canon,
        in_budget=lambda a: len(a) <= max_support and level(a) <= k,
        description=f"FIN_{k} with support inside [0, {max_support})",
    )


def make_bundle(k: int = 2, max_support: int = 4, include_zero: bool = False):
    from . import InstanceBundle

    if k < 1:
        raise ConfigError("fin_k: k must be at least 1")
    instance = make_instance(k, max_support)
    carrier = tuple(sorted(all_functions(k, max_support, include_zero),
                           key=sort_key))
    subsemigroups = tuple(
        Subsemigroup(name=f"level_{i}",
                     contains=lambda a, _i=i: level(a) <= _i,
                     nice=True)
        for i in range(1, k))
    blocks = CoveringRelation(
        name="blocks",
        holds=blocks_below,
        cover_pool=lambda a: level(a) == k,
    )
    # A family with supports strictly below max_support - 1, so a full-level
    # cover above them exists inside the pool.
    cover_lo = tuple(a for a in carrier if len(a) <= max(1, max_support - 2))
    return InstanceBundle(
        kind="fin_k",
        instance=instance,
        morphisms=(Morphism(name="tetris", fn=tetris),),
        subsemigroups=subsemigroups,
        relations=(blocks,),
        pairwise_pool=carrier,
        cubic_pool=carrier,
        cover_families=(cover_lo[:2],) if len(cover_lo) >= 2 else (),
        to_data=list,
        from_data=lambda d: canon(tuple(d)),
    )
