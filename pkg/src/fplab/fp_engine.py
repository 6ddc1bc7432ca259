"""Enumeration of fp(a) and fp^Sigma(a), chain validation, extracted blocks,
and the Milliken-Taylor hypergraph.

fp^Sigma(a) is the set of all products sigma_0 a_{i_0} * ... * sigma_k a_{i_k}
over strictly increasing index tuples i_0 < ... < i_k and assignments
sigma_j in Sigma ∪ {id}.  The identity-everywhere assignment is allowed, so
fp^Sigma with empty Sigma degenerates to plain fp.

Enumeration order is pinned for reproducible provenance: index tuples in
colexicographic order (= numeric order of their bitmasks), sigma assignments
with the identity last in each position, first witness wins on duplicates.
"""

from __future__ import annotations

import itertools
import threading
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

from .errors import ConfigError
from .semigroup_core import (CoveringRelation, Element, IDENTITY, Morphism,
                             SemigroupInstance, Subsemigroup)


@dataclass(frozen=True)
class FpSet:
    """A deduplicated fp-set with one witnessing recipe per element.

    `elements` is canonically ordered.  `provenance[e]` is a pair
    (index tuple into the chain, sigma-name tuple) from which e is
    reproducible via instance products.
    """

    elements: tuple[Element, ...]
    provenance: dict[Element, tuple[tuple[int, ...], tuple[str, ...]]]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, e: Element) -> bool:
        return e in self.provenance

    def as_set(self) -> frozenset:
        return frozenset(self.elements)


@dataclass(frozen=True)
class Chain:
    """A tuple of elements claimed to satisfy a covering relation."""

    elements: tuple[Element, ...]
    relation: CoveringRelation

    def is_valid(self) -> bool:
        return is_chain(self.elements, self.relation)


@dataclass(frozen=True)
class MTEdge:
    """One Milliken-Taylor edge: an n-element vertex set plus its witness.

    blocks are the index sets I_1 < ... < I_n into the chain; witnesses[j]
    is the pair (h_j, indices) with h_j the product over the recorded index
    tuple (a subset of blocks[j]).
    """

    vertices: frozenset
    blocks: tuple[tuple[int, ...], ...]
    witnesses: tuple[tuple[Element, tuple[int, ...]], ...]


_memo_lock = threading.Lock()
_fp_memo: dict[tuple, FpSet] = {}


def clear_fp_memo() -> None:
    with _memo_lock:
        _fp_memo.clear()


def _sigma_choices(sigmas: Sequence[Morphism]) -> tuple[Morphism, ...]:
    """Fixed assignment order: declared Sigma sorted by name, identity last."""
    named = sorted(sigmas, key=lambda m: m.name)
    return tuple(named) + (IDENTITY,)


def fp_sigma(instance: SemigroupInstance, a_bar: Sequence[Element],
             sigmas: Sequence[Morphism] = ()) -> FpSet:
    """Enumerate fp^Sigma(a_bar) with provenance.  Memoized."""
    a_bar = tuple(a_bar)
    if not a_bar:
        raise ConfigError("fp_sigma: empty chain")
    key = (instance.name, a_bar, tuple(m.name for m in sigmas))
    with _memo_lock:
        hit = _fp_memo.get(key)
    if hit is not None:
        return hit

    choices = _sigma_choices(sigmas)
    n = len(a_bar)
    provenance: dict[Element, tuple[tuple[int, ...], tuple[str, ...]]] = {}
    # Bitmask numeric order is exactly colex order on the index tuples.
    for mask in range(1, 1 << n):
        indices = tuple(i for i in range(n) if mask >> i & 1)
        for assignment in itertools.product(choices, repeat=len(indices)):
            e = assignment[0].fn(a_bar[indices[0]])
            for j in range(1, len(indices)):
                e = instance.product(e, assignment[j].fn(a_bar[indices[j]]))
            e = instance.canon(e)
            if e not in provenance:
                provenance[e] = (indices, tuple(m.name for m in assignment))
    result = FpSet(elements=tuple(instance.sort(provenance)),
                   provenance=provenance)
    with _memo_lock:
        _fp_memo[key] = result
    return result


def fp(instance: SemigroupInstance, a_bar: Sequence[Element]) -> FpSet:
    """fp(a_bar): all ordered-subsequence products (empty Sigma)."""
    return fp_sigma(instance, a_bar, ())


def fp_sigma_minus(instance: SemigroupInstance, a_bar: Sequence[Element],
                   sigmas: Sequence[Morphism],
                   sub: Subsemigroup | None) -> FpSet:
    """fp^Sigma(a_bar) filtered by non-membership in the subsemigroup."""
    full = fp_sigma(instance, a_bar, sigmas)
    if sub is None:
        return full
    kept = {e: w for e, w in full.provenance.items() if not sub.contains(e)}
    return FpSet(elements=tuple(e for e in full.elements if e in kept),
                 provenance=kept)


def is_chain(a_bar: Sequence[Element], rel: CoveringRelation) -> bool:
    """True iff consecutive entries satisfy the relation."""
    return all(rel.holds(a, b) for a, b in zip(a_bar, a_bar[1:]))


def extracted_blocks(instance: SemigroupInstance, s_bar: Sequence[Element],
                     sigmas: Sequence[Morphism],
                     cuts: Sequence[int]) -> tuple[FpSet, ...]:
    """fp^Sigma of each consecutive block s_bar[cuts[i]:cuts[i+1]).

    Cuts must be strictly increasing within [0, len(s_bar)]; strictness is
    what rules out empty blocks.
    """
    s_bar = tuple(s_bar)
    cuts = tuple(cuts)
    if len(cuts) < 2:
        raise ConfigError("extracted_blocks: need at least two cut points")
    if any(b <= a for a, b in zip(cuts, cuts[1:])):
        raise ConfigError("extracted_blocks: cuts must be strictly increasing "
                          "(an equal pair would give an empty block)")
    if cuts[0] < 0 or cuts[-1] > len(s_bar):
        raise ConfigError("extracted_blocks: cuts out of range")
    return tuple(fp_sigma(instance, s_bar[a:b], sigmas)
                 for a, b in zip(cuts, cuts[1:]))


def fp_sigma_prefixes(instance: SemigroupInstance,
                      elements: Iterable[Element],
                      sigmas: Sequence[Morphism],
                      max_prefix: int) -> Iterator[tuple[int, FpSet]]:
    """Lazy fp^Sigma over growing prefixes of a (possibly unbounded) stream.

    Yields (prefix length, FpSet).  Consumers must pass a finite prefix
    bound; the stream itself is never exhausted past it.
    """
    if max_prefix < 1:
        raise ConfigError("fp_sigma_prefixes: max_prefix must be positive")
    prefix: list[Element] = []
    for e in itertools.islice(elements, max_prefix):
        prefix.append(e)
        yield len(prefix), fp_sigma(instance, tuple(prefix), sigmas)


def _block_tuples(n_indices: int, n_blocks: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All tuples (I_1 < ... < I_n) of nonempty index sets, order-separated
    as sets, in lexicographic order of their flattened form."""
    def rec(start: int, blocks_left: int):
        if blocks_left == 0:
            yield ()
            return
        # smallest index of this block ranges over [start, ...)
        for lo in range(start, n_indices - blocks_left + 1):
            for extra in _subsets_of(range(lo + 1, n_indices)):
                block = (lo,) + extra
                hi = block[-1]
                if n_indices - (hi + 1) < blocks_left - 1:
                    continue
                for tail in rec(hi + 1, blocks_left - 1):
                    yield (block,) + tail
    yield from rec(0, n_blocks)


def _subsets_of(rng: range) -> Iterator[tuple[int, ...]]:
    items = list(rng)
    for r in range(0, len(items) + 1):
        yield from itertools.combinations(items, r)


def mt_edges(instance: SemigroupInstance, a_bar: Sequence[Element],
             n: int) -> tuple[MTEdge, ...]:
    """The Milliken-Taylor n-uniform edges of the chain.

    Each edge takes h_j from fp(a restricted to I_j) for order-separated
    blocks I_1 < ... < I_n; edges are deduplicated by vertex set (first
    witnessing block tuple wins) and only n-element vertex sets count.
    """
    a_bar = tuple(a_bar)
    if not 1 <= n <= len(a_bar):
        raise ConfigError(f"mt_edges: need 1 <= n <= {len(a_bar)}, got {n}")
    seen: dict[frozenset, MTEdge] = {}
    for blocks in _block_tuples(len(a_bar), n):
        block_fps = [fp(instance, tuple(a_bar[i] for i in block))
                     for block in blocks]
        for picks in itertools.product(*(f.elements for f in block_fps)):
            vertices = frozenset(picks)
            if len(vertices) != n or vertices in seen:
                continue
            witnesses = []
            for j, h in enumerate(picks):
                local_idx, _ = block_fps[j].provenance[h]
                witnesses.append((h, tuple(blocks[j][i] for i in local_idx)))
            seen[vertices] = MTEdge(vertices=vertices, blocks=blocks,
                                    witnesses=tuple(witnesses))
    return tuple(seen.values())
