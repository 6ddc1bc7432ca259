"""Colorings of semigroup elements and of finite edge sets.

A coloring is a total map from elements to {0..k-1}.  Three construction
routes: named rules (parameterized arithmetic on the element shape), explicit
tables keyed by the element's data form, and colorings of coded words induced
through evaluation into the base semigroup.
"""

from __future__ import annotations

import json
from collections.abc import Callable, Mapping
from dataclasses import dataclass
from typing import Any

from ..errors import ConfigError
from ..instances import carlson, finfn, freeprod


@dataclass(frozen=True)
class Coloring:
    """A total map from elements to colors 0..k-1."""

    name: str
    k: int
    fn: Callable[[Any], int]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ConfigError(f"coloring {self.name!r} needs at least one color")

    def __call__(self, element: Any) -> int:
        c = self.fn(element)
        if not isinstance(c, int) or not 0 <= c < self.k:
            raise ConfigError(
                f"coloring {self.name!r} returned {c!r} for {element!r}, "
                f"outside 0..{self.k - 1}")
        return int(c)


def _require(params: Mapping[str, Any], key: str, rule: str) -> Any:
    try:
        return params[key]
    except KeyError:
        raise ConfigError(f"rule {rule!r} needs parameter {key!r}") from None


def _first_letter(k: int, params: Mapping[str, Any]) -> Callable[[str], int]:
    order = tuple(_require(params, "order", "first_letter"))

    def fn(w: str) -> int:
        if not w:
            raise ConfigError("first_letter: cannot color the empty word")
        try:
            return order.index(w[0]) % k
        except ValueError:
            raise ConfigError(
                f"first_letter: symbol {w[0]!r} not in order {order}") from None

    return fn


def _count_mod(k: int, params: Mapping[str, Any]) -> Callable[[str], int]:
    symbol = _require(params, "symbol", "count_mod")
    return lambda w: w.count(symbol) % k


# Each factory takes (k, params) and yields the underlying color function.
_RULES: dict[str, Callable[[int, Mapping[str, Any]], Callable[[Any], int]]] = {
    # natural numbers
    "mod": lambda k, p: lambda n: n % k,
    # words over a fixed alphabet
    "length_mod": lambda k, p: lambda w: len(w) % k,
    "first_letter": _first_letter,
    "count_mod": _count_mod,
    # finitely supported functions
    "support_mod": lambda k, p: lambda f: len(finfn.supp(f)) % k,
    "level_mod": lambda k, p: lambda f: finfn.level(f) % k,
    "value_sum_mod": lambda k, p: lambda f: sum(f) % k,
    # free-product words
    "total_length_mod": lambda k, p: lambda w: freeprod.total_length(w) % k,
    # coded words
    "id_tag_mod": lambda k, p: (
        lambda u: sum(1 for tag, _ in u if tag == carlson.ID_TAG) % k),
    # finite vertex sets
    "edge_sum_mod": lambda k, p: lambda e: sum(e) % k,
    "edge_min_mod": lambda k, p: lambda e: min(e) % k,
}


def rule_names() -> tuple[str, ...]:
    return tuple(sorted(_RULES))


def rule_coloring(rule: str, k: int, params: Mapping[str, Any] | None = None,
                  name: str | None = None) -> Coloring:
    """Build a coloring from a named rule."""
    try:
        factory = _RULES[rule]
    except KeyError:
        raise ConfigError(
            f"unknown coloring rule {rule!r}; known: {', '.join(rule_names())}"
        ) from None
    return Coloring(name=name or rule, k=k, fn=factory(k, dict(params or {})))


def element_key(data: Any) -> str:
    """The string key an element's data form gets in a table coloring."""
    if isinstance(data, str):
        return data
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def table_coloring(mapping: Mapping[str, int], k: int, *,
                   to_data: Callable[[Any], Any] = lambda e: e,
                   default: int | None = None,
                   name: str = "table") -> Coloring:
    """Color by explicit lookup on the element's data form."""
    table = dict(mapping)
    for key, c in table.items():
        if not isinstance(c, int) or not 0 <= c < k:
            raise ConfigError(f"table coloring: entry {key!r} -> {c!r} "
                              f"outside 0..{k - 1}")
    if default is not None and not 0 <= default < k:
        raise ConfigError(f"table coloring: default {default} outside 0..{k - 1}")

    def fn(e: Any) -> int:
        key = element_key(to_data(e))
        if key in table:
            return table[key]
        if default is None:
            raise ConfigError(f"table coloring has no entry for {key!r}")
        return default

    return Coloring(name=name, k=k, fn=fn)


def induced_coloring(bundle: Any, base: Coloring,
                     name: str | None = None) -> Coloring:
    """Color coded words by the base color of their evaluation.

    Monochromatic sets of coded words under this coloring evaluate to
    monochromatic sets in the base semigroup, which is what makes statements
    about coded words transfer down.
    """
    evaluate = getattr(bundle, "evaluate", None)
    if evaluate is None:
        raise ConfigError(
            "induced colorings need a coded-word bundle with an evaluator")
    return Coloring(name=name or f"{base.name}_induced", k=base.k,
                    fn=lambda u: base(evaluate(u)))
