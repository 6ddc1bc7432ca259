"""The coding semigroup behind Carlson's theorem.

G_* is the free semigroup on pairs <sigma, g> with sigma drawn from
Sigma ∪ {id} and g from the base carrier outside the nice subsemigroup C.
C_* is the set of coded words with no id tags (a nice subsemigroup); the
star retraction sigma_* replaces every id tag by sigma.  Evaluation maps a
coded word to the product sigma_1 g_1 * ... * sigma_n g_n in the base, and
satisfies eval(sigma_* g_*) = sigma(eval(g_*)) because retractions onto the
same C compose as tau∘sigma = sigma.

Well-formedness is relative to a fixed base sequence s_bar: the g-components
must match s_bar at strictly increasing indices.  Greedy leftmost matching
decides this (the standard subsequence test), which is sound and complete
even when s_bar has repeated entries.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from ..errors import ConfigError
from ..semigroup_core import (CoveringRelation, Element, Morphism,
                              SemigroupInstance, Subsemigroup)
from . import InstanceBundle
from . import words as words_mod

# A coded word is a nonempty tuple of (sigma name, base element) pairs.
CodedWord = tuple[tuple[str, Element], ...]

ID_TAG = "id"


def pair(tag: str, g: Element) -> CodedWord:
    return ((tag, g),)


def in_c_star(g_star: CodedWord) -> bool:
    return all(tag != ID_TAG for tag, _ in g_star)


def star_retraction_map(g_star: CodedWord, sigma_name: str) -> CodedWord:
    """Replace every id tag by the named sigma; lands in C_*."""
    return tuple((sigma_name if tag == ID_TAG else tag, g)
                 for tag, g in g_star)


def make_star_retraction(sigma_name: str, c_star: Subsemigroup) -> Morphism:
    return Morphism(name=f"star_{sigma_name}",
                    fn=lambda u, _s=sigma_name: star_retraction_map(u, _s),
                    kind="retraction", target=c_star)


def eval_star(g_star: CodedWord, base: SemigroupInstance,
              base_morphisms: dict[str, Morphism]) -> Element:
    """The evaluation sigma_1 g_1 * ... * sigma_n g_n in the base instance."""
    def apply(tag: str, g: Element) -> Element:
        if tag == ID_TAG:
            return g
        return base_morphisms[tag].fn(g)

    (tag0, g0), *rest = g_star
    out = apply(tag0, g0)
    for tag, g in rest:
        out = base.product(out, apply(tag, g))
    return out


def well_formed(g_star: CodedWord, s_bar: Sequence[Element]) -> bool:
    """True iff the g-components match s_bar at strictly increasing indices."""
    pos = 0
    for _, g in g_star:
        while pos < len(s_bar) and s_bar[pos] != g:
            pos += 1
        if pos == len(s_bar):
            return False
        pos += 1
    return True


def star_covering(h_star: CodedWord, g_star: CodedWord,
                  s_bar: Sequence[Element]) -> bool:
    """h_* -< g_* : either h_* is ill-formed while g_* is well-formed, or the
    concatenation h_* g_* is well-formed."""
    wf_h = well_formed(h_star, s_bar)
    wf_g = well_formed(g_star, s_bar)
    if not wf_h and wf_g:
        return True
    return well_formed(h_star + g_star, s_bar)


def coded_words(letters: Sequence[tuple[str, Element]],
                max_len: int) -> Iterator[CodedWord]:
    for n in range(1, max_len + 1):
        yield from itertools.product(letters, repeat=n)


@dataclass(frozen=True)
class CarlsonBundle(InstanceBundle):
    """An InstanceBundle plus the base words bundle and the fixed s_bar."""

    base_bundle: InstanceBundle | None = None
    s_bar: tuple[Element, ...] = ()

    def base_morphisms(self) -> dict[str, Morphism]:
        return {m.name: m for m in self.base_bundle.morphisms}

    def evaluate(self, g_star: CodedWord) -> Element:
        return eval_star(g_star, self.base_bundle.instance,
                         self.base_morphisms())


def make_bundle(alphabet: tuple[str, ...] = ("a",), variable: str = "x",
                g_max_length: int = 2, coded_max_length: int = 3,
                s_bar: tuple[Element, ...] | None = None,
                base_max_length: int = 64,
                cubic_len: int | None = None) -> CarlsonBundle:
    """The Carlson coding instance over a word base.

    The base is the words instance over `alphabet` + `variable`; Sigma is the
    full set of letter substitutions (all retractions onto the constant
    words), and the coded letters range over the variable words of length at
    most g_max_length.
    """
    base_bundle = words_mod.make_bundle(
        alphabet=tuple(alphabet), variable=variable,
        max_length=base_max_length,
        pairwise_len=g_max_length, cubic_len=g_max_length)
    base_sigmas = {m.name: m for m in base_bundle.morphisms}

    g_pool = tuple(w for w in base_bundle.pairwise_pool if variable in w)
    if s_bar is None:
        s_bar = g_pool
    else:
        s_bar = tuple(s_bar)
        if any(variable not in g for g in s_bar):
            raise ConfigError("carlson_code: every s_bar entry must lie "
                              "outside the constant words")
    tags = tuple(sorted(base_sigmas)) + (ID_TAG,)
    letters = tuple((tag, g) for tag in tags for g in g_pool)

    budget = 2 * coded_max_length
    instance = SemigroupInstance(
        name=f"carlson({''.join(sorted(alphabet))};{variable};max={budget})",
        mul=lambda u, v: u + v,
        key=lambda u: (len(u), u),
        in_budget=lambda u: 0 < len(u) <= budget,
        description=f"free semigroup on <sigma, g> pairs over "
                    f"{len(g_pool)} variable words, coded length <= {budget}",
    )
    c_star = Subsemigroup(name="c_star", contains=in_c_star, nice=True)
    star_retractions = tuple(make_star_retraction(name, c_star)
                             for name in sorted(base_sigmas))
    star = CoveringRelation(
        name="star",
        holds=lambda h, g, _s=s_bar: star_covering(h, g, _s),
        cover_pool=lambda u: not in_c_star(u),
    )
    cubic = cubic_len if cubic_len is not None else max(1, coded_max_length - 1)
    cover_families = ()
    if len(s_bar) >= 2 and s_bar[0] != s_bar[-1]:
        # Reversed indices cannot be matched increasingly: ill-formed.
        ill = pair(ID_TAG, s_bar[-1]) + pair(ID_TAG, s_bar[0])
        cover_families = ((ill,),)

    return CarlsonBundle(
        kind="carlson_code",
        instance=instance,
        morphisms=star_retractions,
        subsemigroups=(c_star,),
        relations=(star,),
        pairwise_pool=tuple(coded_words(letters, coded_max_length)),
        cubic_pool=tuple(coded_words(letters, cubic)),
        cover_families=cover_families,
        to_data=lambda u: [[tag, base_bundle.to_data(g)] for tag, g in u],
        from_data=lambda d: tuple((tag, base_bundle.from_data(g))
                                  for tag, g in d),
        base_bundle=base_bundle,
        s_bar=s_bar,
    )
