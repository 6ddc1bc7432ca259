"""Positive integers under addition, with strict < as the covering relation.

The classical Hindman instance: fp(a_bar) is the set of finite sums of a
strictly increasing subsequence.
"""

from __future__ import annotations

import operator

from ..semigroup_core import (CoveringRelation, Morphism, SemigroupInstance,
                              Subsemigroup)


def multiply_by(m: int) -> Morphism:
    """a -> m*a, an endomorphism of (N+, +)."""
    return Morphism(name=f"times_{m}", fn=lambda a: m * a)


def make_bundle(max_value: int = 1_000_000, pool_max: int = 30,
                factors: tuple[int, ...] = (2, 3)):
    from . import InstanceBundle

    instance = SemigroupInstance(
        name=f"nat_plus(max={max_value})",
        mul=operator.add,
        key=lambda a: a,
        in_budget=lambda a: 1 <= a <= max_value,
        description=f"positive integers <= {max_value} under addition",
    )
    evens = Subsemigroup(name="evens", contains=lambda a: a % 2 == 0,
                         nice=False)
    lt = CoveringRelation(name="lt", holds=operator.lt)
    pool = tuple(range(1, pool_max + 1))
    return InstanceBundle(
        kind="nat_plus",
        instance=instance,
        morphisms=tuple(multiply_by(m) for m in factors),
        subsemigroups=(evens,),
        relations=(lt,),
        pairwise_pool=pool,
        cubic_pool=pool,
        cover_families=((1, 2, 3),),
        to_data=int,
        from_data=int,
    )
