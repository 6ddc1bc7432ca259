"""Words over a finite alphabet plus one distinguished variable symbol.

Concatenation is the product.  Substituting a letter for every occurrence of
the variable is a retraction onto the constant words, which form a nice
subsemigroup.  The word-length preorder (strictly shorter) is the default
covering relation, with covers drawn from the variable words.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator

from ..errors import ConfigError
from ..semigroup_core import (CoveringRelation, Morphism, SemigroupInstance,
                              Subsemigroup)

Word = str


def all_words(symbols: tuple[str, ...], max_len: int,
              min_len: int = 1) -> Iterator[Word]:
    """Every word over the symbols, by length then lexicographically."""
    symbols = tuple(sorted(symbols))
    for n in range(min_len, max_len + 1):
        for tup in itertools.product(symbols, repeat=n):
            yield "".join(tup)


def substitute(w: Word, a: str, variable: str = "x",
               alphabet: tuple[str, ...] | None = None) -> Word:
    """Replace every occurrence of the variable by the letter a."""
    if alphabet is not None and a not in alphabet:
        raise ValueError(f"substitute: {a!r} is not in the alphabet")
    return w.replace(variable, a)


def is_variable_word(w: Word, variable: str = "x") -> bool:
    return variable in w


def make_instance(alphabet: tuple[str, ...], variable: str = "x",
                  max_length: int = 24) -> SemigroupInstance:
    symbols = frozenset(alphabet) | {variable}
    return SemigroupInstance(
        name=f"words({''.join(sorted(alphabet))};{variable};max={max_length})",
        mul=lambda u, v: u + v,
        key=lambda w: (len(w), w),
        in_budget=lambda w: 0 < len(w) <= max_length and set(w) <= symbols,
        description=f"words over {sorted(alphabet)} + variable {variable!r}, "
                    f"length <= {max_length}",
    )


def make_bundle(alphabet: tuple[str, ...] = ("a", "b", "c"),
                variable: str = "x", max_length: int = 24,
                pairwise_len: int = 4, cubic_len: int = 3):
    from . import InstanceBundle

    alphabet = tuple(alphabet)
    if variable in alphabet:
        raise ConfigError("the variable symbol must not be an alphabet letter")
    if any(len(s) != 1 for s in alphabet + (variable,)):
        raise ConfigError("alphabet symbols must be single characters")
    if max_length < 3 * cubic_len:
        raise ConfigError("max_length must cover triple products of the "
                          "cubic pool")
    instance = make_instance(alphabet, variable, max_length)
    symbols = alphabet + (variable,)

    constants = Subsemigroup(
        name="constants",
        contains=lambda w: variable not in w,
        nice=True,
        pool=tuple(all_words(alphabet, pairwise_len)),
    )
    retractions = tuple(
        Morphism(name=f"sub_{a}",
                 fn=lambda w, _a=a: w.replace(variable, _a),
                 kind="retraction", target=constants)
        for a in alphabet)
    shorter = CoveringRelation(
        name="shorter",
        holds=lambda u, v: len(u) < len(v),
        cover_pool=lambda w: variable in w,
    )
    pairwise_pool = tuple(all_words(symbols, pairwise_len))
    return InstanceBundle(
        kind="words",
        instance=instance,
        morphisms=retractions,
        subsemigroups=(constants,),
        relations=(shorter,),
        pairwise_pool=pairwise_pool,
        cubic_pool=tuple(all_words(symbols, cubic_len)),
        cover_families=(("a", alphabet[min(1, len(alphabet) - 1)] + variable),),
        to_data=str,
        from_data=str,
    )
