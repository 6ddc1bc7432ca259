"""Bounded exhaustive verification of partition thresholds.

A bound problem assigns to each size n a canonically ordered tuple of items
and a set of obligations — index sets that must not become monochromatic.
The threshold is the least n at which *every* k-coloring of the items makes
some obligation monochromatic; the certificate is an explicit avoiding
coloring at n-1 together with the exhausted search at n.

Colorings are enumerated as base-k strings over the item order.  With
symmetry pruning, only restricted-growth strings are visited (color names
are interchangeable, so every coloring has exactly one such representative);
with witness pruning, a branch dies as soon as an obligation whose last item
was just colored is monochromatic.  The exhaustive mode disables both and
counts every coloring — slow, but a direct complete enumeration.

Work is split into blocks by a fixed-depth color prefix.  The block list
depends only on the problem, never on the parallelism degree, and budgets
apply per block, so serial and parallel runs produce identical results.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Mapping
from dataclasses import dataclass
from typing import Any

from ..errors import ConfigError
from ..instances import finfn
from . import parallel
from .witness import Budgets, BudgetStop, Ticker, Unresolved

_BLOCK_TARGET = 16


@dataclass(frozen=True)
class BoundProblem:
    """Items and obligations as functions of the size parameter n."""

    name: str
    default_colors: int
    items: Callable[[int], tuple[Any, ...]]
    obligations: Callable[[int, tuple[Any, ...]], tuple[tuple[int, ...], ...]]
    description: str = ""


@dataclass(frozen=True)
class BoundResult:
    """A resolved threshold with its two-sided certificate.

    avoiding_coloring colors certificate_items (the items at threshold - 1)
    and violates no obligation there; at the threshold itself the search
    space was exhausted without finding such a coloring.  stats rows are
    (n, colorings_checked, avoiding_count) and only appear in exhaustive
    mode, where they are exact counts.
    """

    problem: str
    colors: int
    threshold: int
    certificate_n: int
    avoiding_coloring: tuple[int, ...]
    certificate_items: tuple[Any, ...]
    stats: tuple[tuple[int, int, int], ...] = ()
    nodes: int = 0


# ---------------------------------------------------------------------------
# Problem library

def _schur() -> BoundProblem:
    def items(n: int) -> tuple[int, ...]:
        return tuple(range(1, n + 1))

    def obligations(n: int, _items) -> tuple[tuple[int, ...], ...]:
        obs = set()
        for x in range(1, n + 1):
            for y in range(x, n + 1):
                if x + y <= n:
                    obs.add(tuple(sorted({x - 1, y - 1, x + y - 1})))
        return tuple(sorted(obs))

    return BoundProblem(
        name="schur", default_colors=2, items=items, obligations=obligations,
        description="x, y, x+y in 1..n all one color (x = y allowed)")


def _vdw(length: int) -> BoundProblem:
    if length < 2:
        raise ConfigError("vdw: progression length must be at least 2")

    def items(n: int) -> tuple[int, ...]:
        return tuple(range(1, n + 1))

    def obligations(n: int, _items) -> tuple[tuple[int, ...], ...]:
        obs = []
        for d in range(1, n):
            for a in range(1, n + 1 - (length - 1) * d):
                obs.append(tuple(a - 1 + j * d for j in range(length)))
        return tuple(sorted(obs))

    return BoundProblem(
        name="vdw", default_colors=2, items=items, obligations=obligations,
        description=f"monochromatic {length}-term arithmetic progression")


def _hj(alphabet: tuple[str, ...]) -> BoundProblem:
    if len(alphabet) < 2 or len(set(alphabet)) != len(alphabet):
        raise ConfigError("hj: need at least two distinct symbols")

    def items(n: int) -> tuple[str, ...]:
        return tuple("".join(c)
                     for c in itertools.product(alphabet, repeat=n))

    def obligations(n: int, items) -> tuple[tuple[int, ...], ...]:
        index = {w: i for i, w in enumerate(items)}
        obs = set()
        for combo in itertools.product((*alphabet, None), repeat=n):
            if None not in combo:
                continue
            line = {index["".join(s if c is None else c for c in combo)]
                    for s in alphabet}
            obs.add(tuple(sorted(line)))
        return tuple(sorted(obs))

    return BoundProblem(
        name="hj", default_colors=2, items=items, obligations=obligations,
        description="monochromatic combinatorial line in the n-cube")


def _finite_unions(sets: int) -> BoundProblem:
    if sets < 2:
        raise ConfigError("finite_unions: need at least two sets")

    def items(n: int) -> tuple[tuple[int, ...], ...]:
        subs = [tuple(i + 1 for i in range(n) if mask >> i & 1)
                for mask in range(1, 1 << n)]
        # all subsets of 1..m precede anything containing m+1, so an
        # obligation completes as soon as its union is colored
        subs.sort(key=lambda s: (s[-1], len(s), s))
        return tuple(subs)

    def obligations(n: int, items) -> tuple[tuple[int, ...], ...]:
        index = {s: i for i, s in enumerate(items)}
        obs = set()
        for family in itertools.combinations(items, sets):
            fsets = [set(s) for s in family]
            if any(fsets[i] & fsets[j]
                   for i in range(sets) for j in range(i + 1, sets)):
                continue
            ids = set()
            for r in range(1, sets + 1):
                for chosen in itertools.combinations(range(sets), r):
                    union = set().union(*(fsets[i] for i in chosen))
                    ids.add(index[tuple(sorted(union))])
            obs.add(tuple(sorted(ids)))
        return tuple(sorted(obs))

    return BoundProblem(
        name="finite_unions", default_colors=2, items=items,
        obligations=obligations,
        description=f"{sets} disjoint sets with all unions one color")


def _gowers(k: int, sets: int) -> BoundProblem:
    if k < 1:
        raise ConfigError("gowers_fin_k: k must be at least 1")
    if sets < 2:
        raise ConfigError("gowers_fin_k: need at least two blocks")

    def items(n: int) -> tuple[finfn.FinFn, ...]:
        fns = [f for f in finfn.all_functions(k, n) if finfn.level(f) == k]
        fns.sort(key=lambda f: (finfn.supp(f)[-1], finfn.sort_key(f)))
        return tuple(fns)

    def obligations(n: int, items) -> tuple[tuple[int, ...], ...]:
        index = {f: i for i, f in enumerate(items)}
        pows = []
        for f in items:
            row = [f]
            for _ in range(k - 1):
                row.append(finfn.tetris(row[-1]))
            pows.append(row)
        obs = set()
        for chain in itertools.combinations(range(len(items)), sets):
            if not all(finfn.blocks_below(items[chain[t]], items[chain[t + 1]])
                       for t in range(sets - 1)):
                continue
            ids = set()
            for r in range(1, sets + 1):
                for subseq in itertools.combinations(chain, r):
                    for jvec in itertools.product(range(k), repeat=r):
                        if 0 not in jvec:
                            continue  # all dropped: the combo leaves level k
                        combo = pows[subseq[0]][jvec[0]]
                        for t in range(1, r):
                            combo = finfn.pointwise_max(
                                combo, pows[subseq[t]][jvec[t]])
                        ids.add(index[combo])
            obs.add(tuple(sorted(ids)))
        return tuple(sorted(obs))

    return BoundProblem(
        name="gowers_fin_k", default_colors=2, items=items,
        obligations=obligations,
        description=f"block chain in FIN_{k} with all tetris combinations "
                    "one color")


def _ramsey(clique: int) -> BoundProblem:
    if clique < 3:
        raise ConfigError("ramsey: clique size must be at least 3")

    def items(n: int) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i in range(n) for j in range(i + 1, n))

    def obligations(n: int, items) -> tuple[tuple[int, ...], ...]:
        index = {e: i for i, e in enumerate(items)}
        obs = []
        for verts in itertools.combinations(range(n), clique):
            obs.append(tuple(sorted(
                index[(verts[i], verts[j])]
                for i in range(clique) for j in range(i + 1, clique))))
        return tuple(sorted(obs))

    return BoundProblem(
        name="ramsey", default_colors=2, items=items,
        obligations=obligations,
        description=f"monochromatic K_{clique} in a colored complete graph")


def problem_names() -> tuple[str, ...]:
    return ("finite_unions", "gowers_fin_k", "hj", "ramsey", "schur", "vdw")


def make_problem(name: str,
                 params: Mapping[str, Any] | None = None) -> BoundProblem:
    p = dict(params or {})
    if name == "schur":
        return _schur()
    if name == "vdw":
        return _vdw(int(p.get("length", 3)))
    if name == "hj":
        return _hj(tuple(p.get("alphabet", ("a", "b"))))
    if name == "finite_unions":
        return _finite_unions(int(p.get("sets", 2)))
    if name == "gowers_fin_k":
        return _gowers(int(p.get("k", 1)), int(p.get("sets", 2)))
    if name == "ramsey":
        return _ramsey(int(p.get("clique", 3)))
    raise ConfigError(f"unknown bound problem {name!r}; "
                      f"known: {', '.join(problem_names())}")


# ---------------------------------------------------------------------------
# Engine

def _blocks(m: int, k: int, symmetry: bool) -> list[tuple[int, ...]]:
    """Color prefixes splitting the assignment space, in assignment order."""
    prefixes: list[tuple[int, ...]] = [()]
    depth = 0
    while depth < m and len(prefixes) < _BLOCK_TARGET:
        nxt = []
        for p in prefixes:
            top = (max(p, default=-1) + 2) if symmetry else k
            nxt.extend(p + (c,) for c in range(min(k, top)))
        prefixes = nxt
        depth += 1
    return prefixes


def _mono(ob: tuple[int, ...], colors: list[int]) -> bool:
    c0 = colors[ob[0]]
    return all(colors[j] == c0 for j in ob[1:])


def _avoid_block(ctx: tuple, prefix: tuple[int, ...]) -> tuple:
    """Search one prefix block.

    Returns ("done", first_avoiding | None, nodes, checked, avoiding_count)
    or ("budget", reason, nodes).
    """
    m, k, by_last, all_obs, symmetry, pruning, budgets = ctx
    ticker = Ticker(budgets)
    colors = list(prefix) + [0] * (m - len(prefix))
    if pruning:
        for i in range(len(prefix)):
            if any(_mono(ob, colors) for ob in by_last[i]):
                return ("done", None, ticker.nodes, 0, 0)

    first: tuple[int, ...] | None = None
    checked = 0
    avoiding = 0

    def dfs(depth: int, max_used: int) -> tuple[int, ...] | None:
        nonlocal first, checked, avoiding
        if depth == m:
            if pruning:
                return tuple(colors)
            checked += 1
            if not any(_mono(ob, colors) for ob in all_obs):
                avoiding += 1
                if first is None:
                    first = tuple(colors)
            return None
        top = min(k, max_used + 2) if symmetry else k
        for c in range(top):
            ticker.tick()
            colors[depth] = c
            if pruning and any(_mono(ob, colors) for ob in by_last[depth]):
                continue
            found = dfs(depth + 1, max(max_used, c))
            if found is not None:
                return found
        return None

    try:
        found = dfs(len(prefix), max(prefix, default=-1))
    except BudgetStop as stop:
        return ("budget", stop.reason, stop.nodes)
    if pruning and found is not None:
        first = found
    return ("done", first, ticker.nodes, checked, avoiding)


def _search_avoiding(m: int, obligations: tuple[tuple[int, ...], ...], k: int,
                     symmetry: bool, pruning: bool, budgets: Budgets,
                     parallelism: int) -> tuple:
    """("done", first_avoiding | None, nodes, checked, avoiding_count)
    or ("budget", reason, nodes) — merged over all blocks in order."""
    by_last: list[list[tuple[int, ...]]] = [[] for _ in range(m)]
    for ob in obligations:
        by_last[ob[-1]].append(ob)
    ctx = (m, k, tuple(tuple(row) for row in by_last), obligations,
           symmetry, pruning, budgets)
    stop = ((lambda r: r[0] == "budget" or r[1] is not None) if pruning
            else (lambda r: r[0] == "budget"))
    results = parallel.run_blocks(_avoid_block, ctx, _blocks(m, k, symmetry),
                                  parallelism, stop=stop)
    nodes = checked = avoiding = 0
    first: tuple[int, ...] | None = None
    for r in results:
        if r[0] == "budget":
            return ("budget", r[1], nodes + r[2])
        nodes += r[2]
        checked += r[3]
        avoiding += r[4]
        if first is None and r[1] is not None:
            first = r[1]
    return ("done", first, nodes, checked, avoiding)


def compute_bound(problem: BoundProblem, *, colors: int | None = None,
                  n_min: int = 1, n_max: int, budgets: Budgets,
                  symmetry: bool = True, witness_pruning: bool = True,
                  parallelism: int = 1) -> BoundResult | Unresolved:
    """Least n in [n_min, n_max] with no avoiding coloring, with certificate.

    Exhaustive mode (witness_pruning=False) also forces symmetry off, so the
    reported stats count every coloring exactly once.
    """
    k = problem.default_colors if colors is None else colors
    if k < 1:
        raise ConfigError("need at least one color")
    if n_max < n_min or n_min < 0:
        raise ConfigError(f"bad size range [{n_min}, {n_max}]")
    if not witness_pruning:
        symmetry = False

    total_nodes = 0
    stats: list[tuple[int, int, int]] = []
    last: tuple[int, tuple[int, ...], tuple[Any, ...]] | None = None
    for n in range(n_min, n_max + 1):
        items = problem.items(n)
        obligations = problem.obligations(n, items)
        outcome = _search_avoiding(len(items), obligations, k, symmetry,
                                   witness_pruning, budgets, parallelism)
        if outcome[0] == "budget":
            return Unresolved(task="bound", reason=outcome[1],
                              nodes=total_nodes + outcome[2])
        _, first, nodes, checked, avoiding = outcome
        total_nodes += nodes
        if not witness_pruning:
            stats.append((n, checked, avoiding))
        if first is not None:
            last = (n, first, items)
            continue
        if last is None:
            cert_n, cert_coloring, cert_items = n_min - 1, (), ()
        else:
            cert_n, cert_coloring, cert_items = last
        return BoundResult(problem=problem.name, colors=k, threshold=n,
                           certificate_n=cert_n,
                           avoiding_coloring=cert_coloring,
                           certificate_items=cert_items,
                           stats=tuple(stats), nodes=total_nodes)
    return Unresolved(task="bound", reason="n_max", nodes=total_nodes)


def verify_bound_certificate(problem: BoundProblem, colors: int, n: int,
                             coloring: tuple[int, ...]) -> bool:
    """Replay an avoiding coloring against freshly built obligations."""
    items = problem.items(n)
    if len(coloring) != len(items):
        return False
    if any(not 0 <= c < colors for c in coloring):
        return False
    cl = list(coloring)
    return not any(_mono(ob, cl)
                   for ob in problem.obligations(n, items))
