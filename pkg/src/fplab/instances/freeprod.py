"""The free product C * <x>: alternating sequences of C-words and powers of
the variable, written C[x].

The normal form merges adjacent items from the same side, so equality is
equality of normal forms.  Substituting a concrete C-word for x evaluates a
"polynomial" w(x) at that word; every such evaluation is a retraction of
C[x] onto (the embedded copy of) C.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator

from ..errors import ConfigError
from ..semigroup_core import (CoveringRelation, Morphism, SemigroupInstance,
                              Subsemigroup)

# An item is ("c", word over the C-generators) or ("x", positive power).
FreeProductWord = tuple[tuple[str, object], ...]


def embed_c(word: str) -> FreeProductWord:
    return (("c", word),)


def x_power(p: int = 1) -> FreeProductWord:
    return (("x", p),)


def normalize(items) -> FreeProductWord:
    """Merge adjacent same-side items into the alternating normal form."""
    out: list = []
    for side, payload in items:
        if out and out[-1][0] == side:
            prev = out.pop()[1]
            payload = prev + payload
        out.append((side, payload))
    return tuple(out)


def freeproduct_mul(u: FreeProductWord, v: FreeProductWord) -> FreeProductWord:
    """Concatenate and merge at the seam."""
    return normalize(u + v)


def total_length(u: FreeProductWord) -> int:
    return sum(len(p) if side == "c" else p for side, p in u)


def flatten(u: FreeProductWord, variable: str = "x") -> str:
    """The word over generators + variable that spells u; it determines u."""
    return "".join(p if side == "c" else variable * p for side, p in u)


def sort_key(u: FreeProductWord) -> tuple:
    return (total_length(u), flatten(u))


def polynomial_eval(w: FreeProductWord, a: str) -> str:
    """Replace x by the C-word a and multiply out; lands in C."""
    return "".join(p if side == "c" else a * p for side, p in w)


def substitute_x(w: FreeProductWord, a: str) -> FreeProductWord:
    """The retraction sending x to the C-word a, as a map C[x] -> C[x]."""
    return embed_c(polynomial_eval(w, a))


def is_constant(u: FreeProductWord) -> bool:
    return len(u) == 1 and u[0][0] == "c"


def all_elements(c_generators: tuple[str, ...],
                 max_total: int) -> Iterator[FreeProductWord]:
    """Every normal form of total length <= max_total."""
    gens = tuple(sorted(c_generators))

    def items_for(side: str, length: int):
        if side == "c":
            for tup in itertools.product(gens, repeat=length):
                yield ("c", "".join(tup))
        else:
            yield ("x", length)

    def rec(remaining: int, last_side: str | None):
        yield ()
        sides = [s for s in ("c", "x") if s != last_side]
        for side in sides:
            for length in range(1, remaining + 1):
                for item in items_for(side, length):
                    for tail in rec(remaining - length, side):
                        yield (item,) + tail

    for u in rec(max_total, None):
        if u:
            yield u


def make_instance(c_generators: tuple[str, ...],
                  max_length: int) -> SemigroupInstance:
    gens = frozenset(c_generators)

    def in_budget(u: FreeProductWord) -> bool:
        if not u or total_length(u) > max_length:
            return False
        return all(set(p) <= gens if side == "c" else p > 0
                   for side, p in u)

    return SemigroupInstance(
        name=f"free_product({''.join(sorted(c_generators))}*x;max={max_length})",
        mul=freeproduct_mul,
        key=sort_key,
        in_budget=in_budget,
        description=f"free product of words over {sorted(c_generators)} with "
                    f"powers of x, total length <= {max_length}",
    )


def make_bundle(c_generators: tuple[str, ...] = ("c", "d"),
                max_length: int = 18, pairwise_len: int = 4,
                cubic_len: int = 3):
    from . import InstanceBundle

    c_generators = tuple(c_generators)
    if "x" in c_generators:
        raise ConfigError("'x' is reserved for the variable side")
    instance = make_instance(c_generators, max_length)
    c_side = Subsemigroup(name="constants", contains=is_constant, nice=True)
    retractions = tuple(
        Morphism(name=f"sub_{g}",
                 fn=lambda u, _g=g: substitute_x(u, _g),
                 kind="retraction", target=c_side)
        for g in c_generators)
    longer = CoveringRelation(
        name="shorter",
        holds=lambda u, v: total_length(u) < total_length(v),
        cover_pool=lambda u: not is_constant(u),
    )
    pairwise_pool = tuple(sorted(all_elements(c_generators, pairwise_len),
                                 key=sort_key))
    cubic_pool = tuple(sorted(all_elements(c_generators, cubic_len),
                              key=sort_key))
    return InstanceBundle(
        kind="free_product",
        instance=instance,
        morphisms=retractions,
        subsemigroups=(c_side,),
        relations=(longer,),
        pairwise_pool=pairwise_pool,
        cubic_pool=cubic_pool,
        cover_families=((embed_c(c_generators[0]), x_power(1)),),
        to_data=lambda u: [[side, p] for side, p in u],
        from_data=lambda d: normalize((side, p if side == "c" else int(p))
                                      for side, p in d),
    )
