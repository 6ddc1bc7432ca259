"""Search outcomes, budgets, and independent witness replay.

Every search kernel returns one of three outcomes: a Witness (the object it
was asked for), Exhausted (the whole space was traversed and no witness
exists), or Unresolved (a budget ran out first).  Witnesses start uncertified;
`verify_witness` replays one from scratch against the reference fp-set
builder and the declared coloring, returning a certified copy or raising.
The replay shares no state with the kernels, so a kernel bug that fabricates
a witness is caught here rather than propagated.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from typing import Any

from .. import fp_engine
from ..errors import ConfigError, PreconditionError
from ..instances import words as words_mod
from ..semigroup_core import (CoveringRelation, Morphism, SemigroupInstance,
                              Subsemigroup)
from .coloring import Coloring


@dataclass(frozen=True)
class Budgets:
    """Mandatory limits for every search: wall-clock seconds and node count."""

    timeout_seconds: float
    max_nodes: int

    def __post_init__(self) -> None:
        if self.timeout_seconds <= 0:
            raise ConfigError("timeout_seconds must be positive")
        if self.max_nodes < 1:
            raise ConfigError("max_nodes must be at least 1")


class BudgetStop(Exception):
    """Internal signal: a search budget ran out (reason: timeout|node_budget)."""

    def __init__(self, reason: str, nodes: int) -> None:
        super().__init__(reason)
        self.reason = reason
        self.nodes = nodes


class Ticker:
    """Node counter with a wall-clock deadline.

    One ticker per work block; the node budget is therefore a per-block
    limit, which keeps blocked serial and parallel runs identical.
    """

    __slots__ = ("nodes", "max_nodes", "deadline")

    def __init__(self, budgets: Budgets) -> None:
        self.nodes = 0
        self.max_nodes = budgets.max_nodes
        self.deadline = time.monotonic() + budgets.timeout_seconds

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise BudgetStop("node_budget", self.nodes)
        if self.nodes & 0x3FF == 0 and time.monotonic() > self.deadline:
            raise BudgetStop("timeout", self.nodes)


@dataclass(frozen=True)
class Witness:
    """A found object: the generator tuple, its color, and replay data.

    provenance carries what the replay needs beyond the chain itself —
    the monochromatic fp elements for chain searches, the variable word for
    line searches, the vertex sets for edge-system searches.
    """

    task: str
    chain: tuple[Any, ...]
    color: int
    provenance: tuple[Any, ...] = ()
    certified: bool = False
    nodes: int = 0


@dataclass(frozen=True)
class Exhausted:
    task: str
    nodes: int = 0


@dataclass(frozen=True)
class Unresolved:
    task: str
    reason: str  # "timeout" | "node_budget" | "n_max"
    nodes: int = 0


SearchOutcome = Witness | Exhausted | Unresolved


def _fail(why: str) -> None:
    raise PreconditionError(f"witness replay failed: {why}")


def _check_chain_shape(w: Witness, instance: SemigroupInstance,
                       pool: tuple[Any, ...] | None,
                       relation: CoveringRelation | None,
                       distinct: bool, length: int | None) -> None:
    if length is not None and len(w.chain) != length:
        _fail(f"chain has length {len(w.chain)}, expected {length}")
    if not w.chain:
        _fail("empty chain")
    keys = [instance.key(a) for a in w.chain]
    if distinct and len(set(keys)) != len(keys):
        _fail("chain elements are not distinct")
    if pool is not None:
        allowed = {instance.key(p) for p in pool}
        for a, key in zip(w.chain, keys):
            if key not in allowed:
                _fail(f"chain element {a!r} is not in the declared pool")
    if relation is not None:
        for a, b in zip(w.chain, w.chain[1:]):
            if not relation.holds(a, b):
                _fail(f"relation {relation.name} fails on consecutive "
                      f"pair ({a!r}, {b!r})")


def verify_chain_witness(w: Witness, *, instance: SemigroupInstance,
                         coloring: Coloring,
                         sigmas: tuple[Morphism, ...] = (),
                         sub: Subsemigroup | None = None,
                         relation: CoveringRelation | None = None,
                         pool: tuple[Any, ...] | None = None,
                         distinct: bool = True,
                         length: int | None = None) -> Witness:
    """Recompute the full fp set of the chain and recheck everything."""
    _check_chain_shape(w, instance, pool, relation, distinct, length)
    fps = fp_engine.fp_sigma_minus(instance, w.chain, sigmas, sub)
    kept = tuple(instance.sort(fps.elements))
    if not kept:
        _fail("every product lands in the excluded subsemigroup")
    for e in kept:
        c = coloring(e)
        if c != w.color:
            _fail(f"element {e!r} has color {c}, witness claims {w.color}")
    if w.provenance:
        claimed = {instance.key(e) for e in w.provenance}
        actual = {instance.key(e) for e in kept}
        if claimed != actual:
            _fail("declared fp elements do not match the recomputed fp set")
    return replace(w, provenance=kept, certified=True)


def verify_hj_witness(w: Witness, *, alphabet: tuple[str, ...], variable: str,
                      dimension: int, coloring: Coloring) -> Witness:
    """Recheck that the line really is the variable word's substitution orbit."""
    if len(w.provenance) != 1:
        _fail("line witness must carry exactly the variable word")
    vw = w.provenance[0]
    if len(vw) != dimension:
        _fail(f"variable word {vw!r} has length {len(vw)}, "
              f"expected {dimension}")
    if variable not in vw:
        _fail(f"{vw!r} does not contain the variable {variable!r}")
    if any(s not in (*alphabet, variable) for s in vw):
        _fail(f"{vw!r} uses symbols outside the alphabet")
    line = tuple(words_mod.substitute(vw, s, variable=variable)
                 for s in alphabet)
    if line != w.chain:
        _fail("chain does not equal the substitution orbit of the "
              "variable word")
    for p in line:
        c = coloring(p)
        if c != w.color:
            _fail(f"point {p!r} has color {c}, witness claims {w.color}")
    return replace(w, certified=True)


def verify_mt_witness(w: Witness, *, instance: SemigroupInstance,
                      coloring: Coloring, arity: int,
                      relation: CoveringRelation | None = None,
                      pool: tuple[Any, ...] | None = None,
                      distinct: bool = True,
                      length: int | None = None) -> Witness:
    """Recompute the edge system over the chain and recheck every edge."""
    _check_chain_shape(w, instance, pool, relation, distinct, length)
    edges = fp_engine.mt_edges(instance, w.chain, arity)
    if not edges:
        _fail("the chain spans no edges at this arity")
    actual = {tuple(sorted(e.vertices)) for e in edges}
    if w.provenance and set(w.provenance) != actual:
        _fail("declared edges do not match the recomputed edge system")
    for vertices in sorted(actual):
        c = coloring(frozenset(vertices))
        if c != w.color:
            _fail(f"edge {vertices} has color {c}, witness claims {w.color}")
    return replace(w, provenance=tuple(sorted(actual)), certified=True)


def verify_witness(w: Witness, **context: Any) -> Witness:
    """Dispatch to the replay for the witness's task."""
    if w.task == "chain":
        return verify_chain_witness(w, **context)
    if w.task == "hj_line":
        return verify_hj_witness(w, **context)
    if w.task == "mt":
        return verify_mt_witness(w, **context)
    raise ConfigError(f"unknown witness task {w.task!r}")
