"""Partition thresholds: problem construction, the pruned search, and the
exact exhaustive counts."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from fplab.errors import ConfigError
from fplab.search.bounds import (_blocks, compute_bound, make_problem,
                                 problem_names, verify_bound_certificate)
from fplab.search.witness import Budgets, Unresolved

from oracles import naive_avoiding

FIXTURES = Path(__file__).parent / "fixtures"
BIG = Budgets(timeout_seconds=300, max_nodes=500_000_000)


def fixture_rows():
    data = json.loads((FIXTURES / "bound_values.json").read_text())
    return [(name, spec) for name, spec in data.items()
            if isinstance(spec, dict)]


def test_problem_catalog():
    assert problem_names() == ("finite_unions", "gowers_fin_k", "hj",
                               "ramsey", "schur", "vdw")
    for name in problem_names():
        assert make_problem(name).default_colors == 2


def test_problem_validation():
    with pytest.raises(ConfigError):
        make_problem("unicorn")
    with pytest.raises(ConfigError):
        make_problem("vdw", {"length": 1})
    with pytest.raises(ConfigError):
        make_problem("hj", {"alphabet": ("a",)})
    with pytest.raises(ConfigError):
        make_problem("hj", {"alphabet": ("a", "a")})
    with pytest.raises(ConfigError):
        make_problem("finite_unions", {"sets": 1})
    with pytest.raises(ConfigError):
        make_problem("gowers_fin_k", {"k": 0})
    with pytest.raises(ConfigError):
        make_problem("gowers_fin_k", {"sets": 1})
    with pytest.raises(ConfigError):
        make_problem("ramsey", {"clique": 2})


def test_compute_bound_validation():
    schur = make_problem("schur")
    with pytest.raises(ConfigError):
        compute_bound(schur, colors=0, n_max=3, budgets=BIG)
    with pytest.raises(ConfigError):
        compute_bound(schur, n_min=5, n_max=3, budgets=BIG)


def test_sum_triple_obligations():
    schur = make_problem("schur")
    assert schur.items(3) == (1, 2, 3)
    assert schur.obligations(2, schur.items(2)) == ((0, 1),)
    assert schur.obligations(3, schur.items(3)) == ((0, 1), (0, 1, 2))


def test_progression_obligations():
    vdw = make_problem("vdw", {"length": 3})
    obs = vdw.obligations(9, vdw.items(9))
    assert len(obs) == 16
    assert (0, 1, 2) in obs       # 1,2,3 step 1
    assert (0, 4, 8) in obs       # 1,5,9 step 4
    assert all(b - a == c - b for a, b, c in obs)


def test_line_obligations_include_the_diagonal():
    hj = make_problem("hj")
    items = hj.items(2)
    assert items == ("aa", "ab", "ba", "bb")
    obs = hj.obligations(2, items)
    assert len(obs) == 5
    assert (0, 3) in obs  # the variable-everywhere line aa/bb


def test_disjoint_union_obligations():
    fu = make_problem("finite_unions")
    items = fu.items(3)
    assert items == ((1,), (2,), (1, 2), (3,), (1, 3), (2, 3), (1, 2, 3))
    obs = fu.obligations(3, items)
    assert (0, 1, 2) in obs  # {1}, {2}, {1,2}
    # every obligation is {A, B, A∪B} by index, so has three members
    assert all(len(ob) == 3 for ob in obs)


def test_block_chain_obligations():
    gowers = make_problem("gowers_fin_k")
    items = gowers.items(2)
    assert items == ((1,), (1, 1), (0, 1))
    assert gowers.obligations(2, items) == ((0, 1, 2),)


def test_clique_obligations():
    ramsey = make_problem("ramsey")
    items = ramsey.items(4)
    assert len(items) == 6
    obs = ramsey.obligations(4, items)
    assert len(obs) == 4  # the four triangles of K4
    assert all(len(ob) == 3 for ob in obs)


@pytest.mark.parametrize("name,spec", fixture_rows())
def test_thresholds_match_the_frozen_values(name, spec):
    problem = make_problem(name, spec["params"])
    result = compute_bound(problem, colors=spec["colors"],
                           n_max=spec["threshold"] + 1, budgets=BIG)
    assert result.threshold == spec["threshold"]
    assert result.certificate_n == spec["threshold"] - 1
    assert len(result.avoiding_coloring) == len(
        problem.items(result.certificate_n))
    assert verify_bound_certificate(problem, spec["colors"],
                                    result.certificate_n,
                                    result.avoiding_coloring)


def test_certificate_replay_rejects_bad_colorings():
    schur = make_problem("schur")
    assert verify_bound_certificate(schur, 2, 2, (0, 1))
    assert not verify_bound_certificate(schur, 2, 2, (0,))      # wrong length
    assert not verify_bound_certificate(schur, 2, 2, (0, 2))    # bad color
    assert not verify_bound_certificate(schur, 2, 2, (0, 0))    # 1+1=2 mono
    assert not verify_bound_certificate(schur, 2, 4, (0, 1, 1, 0, 0))


def test_triangle_enumeration_is_exact():
    ramsey = make_problem("ramsey")
    result = compute_bound(ramsey, n_min=5, n_max=6, budgets=BIG,
                           witness_pruning=False)
    assert result.threshold == 6
    assert result.stats == ((5, 1024, 12), (6, 32768, 0))
    count, first = naive_avoiding(ramsey, 5, 2)
    assert count == 12
    assert result.avoiding_coloring == first


def test_exhaustive_counts_match_brute_force():
    schur = make_problem("schur")
    result = compute_bound(schur, n_min=1, n_max=5, budgets=BIG,
                           witness_pruning=False)
    assert result.threshold == 5
    for n, checked, avoiding in result.stats:
        assert checked == 2 ** n
        count, first = naive_avoiding(schur, n, 2)
        assert avoiding == count
        if n == result.certificate_n:
            assert result.avoiding_coloring == first


def test_pruning_does_not_change_thresholds():
    for name, params in (("schur", {}), ("hj", {})):
        problem = make_problem(name, params)
        results = [compute_bound(problem, n_max=10, budgets=BIG,
                                 symmetry=sym)
                   for sym in (True, False)]
        assert results[0].threshold == results[1].threshold
        assert results[0].certificate_n == results[1].certificate_n


def test_bound_results_are_parallelism_invariant():
    schur = make_problem("schur")
    one = compute_bound(schur, n_max=6, budgets=BIG, parallelism=1)
    four = compute_bound(schur, n_max=6, budgets=BIG, parallelism=4)
    assert one == four
    ramsey = make_problem("ramsey")
    ex1 = compute_bound(ramsey, n_min=5, n_max=6, budgets=BIG,
                        witness_pruning=False, parallelism=1)
    ex4 = compute_bound(ramsey, n_min=5, n_max=6, budgets=BIG,
                        witness_pruning=False, parallelism=4)
    assert ex1 == ex4


def test_unreached_threshold_reports_n_max():
    schur = make_problem("schur")
    outcome = compute_bound(schur, n_max=3, budgets=BIG)
    assert isinstance(outcome, Unresolved)
    assert outcome.reason == "n_max"


def test_node_budget_reports_unresolved():
    # at n=7 the items outnumber the block-prefix depth, so any block that
    # survives prefix pruning must tick at least twice before completing
    vdw = make_problem("vdw", {"length": 3})
    outcome = compute_bound(vdw, n_min=7, n_max=9,
                            budgets=Budgets(timeout_seconds=60, max_nodes=1))
    assert isinstance(outcome, Unresolved)
    assert outcome.reason == "node_budget"


def test_block_split_is_parallelism_independent():
    prefixes = _blocks(10, 2, True)
    assert len(prefixes) == 16
    assert all(p[0] == 0 for p in prefixes)  # symmetry pins the first color
    assert len(set(prefixes)) == 16
    free = _blocks(10, 2, False)
    assert len(free) == 16
    assert {p[0] for p in free} == {0, 1}
