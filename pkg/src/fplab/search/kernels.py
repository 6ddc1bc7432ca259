"""Search kernels: monochromatic fp chains, combinatorial lines, edge systems.

All kernels walk their candidate space in canonical order and return the
first witness encountered, so results are reproducible: the reported witness
is the least one in the documented order.  Chains are grown left to right
with an incrementally maintained fp set and monochromatic-prefix pruning —
a prefix whose fp set already shows two colors cannot be completed.

Candidates whose fp set leaves the instance budget are skipped, not errors:
the search space is silently truncated to what the budget can represent.
"""

from __future__ import annotations

import itertools
from typing import Any

from ..errors import BudgetExceededError, ConfigError
from ..fp_engine import _sigma_choices, mt_edges
from ..instances import words as words_mod
from ..semigroup_core import (CoveringRelation, Morphism, SemigroupInstance,
                              Subsemigroup)
from . import parallel
from .coloring import Coloring
from .witness import (Budgets, BudgetStop, Exhausted, SearchOutcome, Ticker,
                      Unresolved, Witness)


def _prepare_pool(instance: SemigroupInstance,
                  pool: tuple[Any, ...]) -> tuple[Any, ...]:
    if not pool:
        raise ConfigError("search pool is empty")
    seen = set()
    out = []
    for e in instance.sort(pool):
        k = instance.key(e)
        if k not in seen:
            seen.add(k)
            out.append(e)
    return tuple(out)


def find_mono_fp_chain(instance: SemigroupInstance, pool: tuple[Any, ...],
                       length: int, coloring: Coloring, *,
                       sigmas: tuple[Morphism, ...] = (),
                       sub: Subsemigroup | None = None,
                       relation: CoveringRelation | None = None,
                       distinct: bool = True,
                       budgets: Budgets | None = None,
                       ticker: Ticker | None = None,
                       first_index: int | None = None) -> SearchOutcome:
    """Least chain from the pool whose fp set (minus `sub`) is one color.

    The fp set is grown incrementally: appending a to a chain with fp set P
    contributes sigma(a) and p * sigma(a) for every p in P and every sigma
    in the assignment alphabet.  A chain only counts as a witness when at
    least one fp element survives the subsemigroup filter.
    """
    if length < 1:
        raise ConfigError("chain length must be at least 1")
    pool = _prepare_pool(instance, pool)
    if ticker is None:
        if budgets is None:
            raise ConfigError("a search needs budgets")
        ticker = Ticker(budgets)
    choices = _sigma_choices(sigmas)

    def extend(chosen: list[Any], used: set, elems: list[Any],
               color: int | None) -> Witness | None:
        depth = len(chosen)
        if depth == length:
            if color is None:
                return None
            kept = [e for e in elems
                    if sub is None or not sub.contains(e)]
            return Witness(task="chain", chain=tuple(chosen), color=color,
                           provenance=tuple(instance.sort(kept)),
                           nodes=ticker.nodes)
        candidates = (pool[first_index:first_index + 1]
                      if depth == 0 and first_index is not None else pool)
        for a in candidates:
            key = instance.key(a)
            if distinct and key in used:
                continue
            if chosen and relation is not None \
                    and not relation.holds(chosen[-1], a):
                continue
            ticker.tick()
            new_elems: list[Any] = []
            new_color = color
            known = set(elems)
            ok = True
            try:
                for sigma in choices:
                    sa = instance.canon(sigma.fn(a))
                    for e in itertools.chain(
                            [sa], (instance.product(p, sa) for p in elems)):
                        if e in known:
                            continue
                        known.add(e)
                        new_elems.append(e)
                        if sub is not None and sub.contains(e):
                            continue
                        c = coloring(e)
                        if new_color is None:
                            new_color = c
                        elif c != new_color:
                            ok = False
                            break
                    if not ok:
                        break
            except BudgetExceededError:
                continue  # fp set left the carrier budget: skip candidate
            if not ok:
                continue
            found = extend(chosen + [a], used | {key}, elems + new_elems,
                           new_color)
            if found is not None:
                return found
        return None

    try:
        found = extend([], set(), [], None)
    except BudgetStop as stop:
        return Unresolved(task="chain", reason=stop.reason, nodes=stop.nodes)
    if found is None:
        return Exhausted(task="chain", nodes=ticker.nodes)
    return found


def find_hj_line(alphabet: tuple[str, ...], variable: str, dimension: int,
                 coloring: Coloring, *,
                 budgets: Budgets | None = None,
                 ticker: Ticker | None = None) -> SearchOutcome:
    """Least variable word of the given length whose substitution line is
    monochromatic.

    Candidate words are enumerated with the alphabet in its given order and
    the variable as the last symbol, so the reported word is lexicographically
    least under that symbol order.
    """
    if dimension < 1:
        raise ConfigError("line dimension must be at least 1")
    if variable in alphabet:
        raise ConfigError("the variable must not be an alphabet symbol")
    if ticker is None:
        if budgets is None:
            raise ConfigError("a search needs budgets")
        ticker = Ticker(budgets)
    symbols = tuple(alphabet) + (variable,)
    try:
        for combo in itertools.product(symbols, repeat=dimension):
            if variable not in combo:
                continue
            ticker.tick()
            vw = "".join(combo)
            line = tuple(words_mod.substitute(vw, s, variable=variable)
                         for s in alphabet)
            color = coloring(line[0])
            if all(coloring(p) == color for p in line[1:]):
                return Witness(task="hj_line", chain=line, color=color,
                               provenance=(vw,), nodes=ticker.nodes)
    except BudgetStop as stop:
        return Unresolved(task="hj_line", reason=stop.reason,
                          nodes=stop.nodes)
    return Exhausted(task="hj_line", nodes=ticker.nodes)


def find_mt_witness(instance: SemigroupInstance, pool: tuple[Any, ...],
                    length: int, arity: int, coloring: Coloring, *,
                    relation: CoveringRelation | None = None,
                    distinct: bool = True,
                    budgets: Budgets | None = None,
                    ticker: Ticker | None = None,
                    first_index: int | None = None) -> SearchOutcome:
    """Least chain whose whole edge system at the given arity is one color.

    Extending a chain only adds edges, so a prefix already showing two edge
    colors is pruned.  The edge color is taken on the vertex set.
    """
    if not 1 <= arity <= length:
        raise ConfigError("need 1 <= arity <= chain length")
    pool = _prepare_pool(instance, pool)
    if ticker is None:
        if budgets is None:
            raise ConfigError("a search needs budgets")
        ticker = Ticker(budgets)

    def edge_color(chosen: list[Any]) -> tuple[bool, int | None,
                                               tuple[tuple[Any, ...], ...]]:
        """(all edges one color?, that color or None, sorted vertex sets)"""
        if len(chosen) < arity:
            return True, None, ()
        try:
            edges = mt_edges(instance, tuple(chosen), arity)
        except BudgetExceededError:
            return False, None, ()
        vertex_sets = sorted(tuple(sorted(e.vertices)) for e in edges)
        color: int | None = None
        for vs in vertex_sets:
            c = coloring(frozenset(vs))
            if color is None:
                color = c
            elif c != color:
                return False, None, ()
        return True, color, tuple(vertex_sets)

    def extend(chosen: list[Any], used: set) -> Witness | None:
        depth = len(chosen)
        if depth == length:
            ok, color, vertex_sets = edge_color(chosen)
            if ok and color is not None:
                return Witness(task="mt", chain=tuple(chosen), color=color,
                               provenance=vertex_sets, nodes=ticker.nodes)
            return None
        candidates = (pool[first_index:first_index + 1]
                      if depth == 0 and first_index is not None else pool)
        for a in candidates:
            key = instance.key(a)
            if distinct and key in used:
                continue
            if chosen and relation is not None \
                    and not relation.holds(chosen[-1], a):
                continue
            ticker.tick()
            next_chain = chosen + [a]
            if len(next_chain) < length:
                ok, _, _ = edge_color(next_chain)
                if not ok:
                    continue
            found = extend(next_chain, used | {key})
            if found is not None:
                return found
        return None

    try:
        found = extend([], set())
    except BudgetStop as stop:
        return Unresolved(task="mt", reason=stop.reason, nodes=stop.nodes)
    if found is None:
        return Exhausted(task="mt", nodes=ticker.nodes)
    return found


# ---------------------------------------------------------------------------
# Blocked drivers: fixed work split by first chain element, independent of
# the parallelism degree, consumed in block order.  The CLI always goes
# through these so records are identical at any parallelism.

def _chain_block(ctx: dict[str, Any], first_index: int) -> SearchOutcome:
    return find_mono_fp_chain(first_index=first_index, **ctx)


def _mt_block(ctx: dict[str, Any], first_index: int) -> SearchOutcome:
    return find_mt_witness(first_index=first_index, **ctx)


def _run_blocked(worker, ctx: dict[str, Any], task: str,
                 parallelism: int) -> SearchOutcome:
    pool = _prepare_pool(ctx["instance"], ctx["pool"])
    ctx = dict(ctx, pool=pool)
    results = parallel.run_blocks(
        worker, ctx, list(range(len(pool))), parallelism,
        stop=lambda r: not isinstance(r, Exhausted))
    nodes = 0
    for r in results:
        nodes += r.nodes
        if isinstance(r, Witness):
            return r
        if isinstance(r, Unresolved):
            return r
    return Exhausted(task=task, nodes=nodes)


def find_mono_fp_chain_blocked(instance: SemigroupInstance,
                               pool: tuple[Any, ...], length: int,
                               coloring: Coloring, *,
                               sigmas: tuple[Morphism, ...] = (),
                               sub: Subsemigroup | None = None,
                               relation: CoveringRelation | None = None,
                               distinct: bool = True, budgets: Budgets,
                               parallelism: int = 1) -> SearchOutcome:
    """find_mono_fp_chain, split into one block per first element.

    Budgets apply per block.  The selected outcome is the same at every
    parallelism degree: the first block in pool order that yields a witness
    or runs out of budget decides.
    """
    ctx = dict(instance=instance, pool=pool, length=length, coloring=coloring,
               sigmas=sigmas, sub=sub, relation=relation, distinct=distinct,
               budgets=budgets)
    return _run_blocked(_chain_block, ctx, "chain", parallelism)


def find_mt_witness_blocked(instance: SemigroupInstance,
                            pool: tuple[Any, ...], length: int, arity: int,
                            coloring: Coloring, *,
                            relation: CoveringRelation | None = None,
                            distinct: bool = True, budgets: Budgets,
                            parallelism: int = 1) -> SearchOutcome:
    """find_mt_witness with the same per-first-element block split."""
    ctx = dict(instance=instance, pool=pool, length=length, arity=arity,
               coloring=coloring, relation=relation, distinct=distinct,
               budgets=budgets)
    return _run_blocked(_mt_block, ctx, "mt", parallelism)
