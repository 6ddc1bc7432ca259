"""fp-set enumeration: pinned examples, provenance replay, and equivalence
with the brute-force reference."""

from __future__ import annotations

import itertools
import random

import pytest

from fplab.errors import ConfigError
from fplab.fp_engine import (Chain, clear_fp_memo, extracted_blocks, fp,
                             fp_sigma, fp_sigma_minus, fp_sigma_prefixes,
                             is_chain, mt_edges)
from fplab.instances import make_bundle
from fplab.semigroup_core import IDENTITY

from oracles import naive_fp_sigma, naive_mt_vertex_sets


def replay(instance, a_bar, sigmas, witness):
    """Recompute an element from its provenance recipe."""
    by_name = {m.name: m for m in sigmas}
    by_name[IDENTITY.name] = IDENTITY
    indices, names = witness
    e = by_name[names[0]].fn(a_bar[indices[0]])
    for i, name in zip(indices[1:], names[1:]):
        e = instance.product(e, by_name[name].fn(a_bar[i]))
    return instance.canon(e)


def test_fp_of_distinct_powers_fills_an_interval():
    bundle = make_bundle("nat_plus")
    result = fp(bundle.instance, (1, 2, 4))
    assert result.elements == (1, 2, 3, 4, 5, 6, 7)
    assert len(result) == 7
    assert 5 in result and 8 not in result
    assert result.as_set() == frozenset(range(1, 8))


def test_first_witness_wins_on_duplicates():
    bundle = make_bundle("nat_plus")
    result = fp(bundle.instance, (1, 1, 2))
    assert result.elements == (1, 2, 3, 4)
    # 2 arises both as a_0 + a_1 and as a_2 alone; the earlier index tuple
    # in colex order is (0, 1)
    assert result.provenance[2] == ((0, 1), ("id", "id"))
    assert result.provenance[1] == ((0,), ("id",))


def test_provenance_replays_to_its_element():
    bundle = make_bundle("words", alphabet=("a", "b"))
    sigmas = bundle.morphisms
    chain = ("ax", "xb")
    result = fp_sigma(bundle.instance, chain, sigmas)
    for e, witness in result.provenance.items():
        assert replay(bundle.instance, chain, sigmas, witness) == e


def test_variable_word_fp_set_matches_the_pinned_example():
    bundle = make_bundle("words", alphabet=("a", "b"))
    result = fp_sigma(bundle.instance, ("ax", "xb"), bundle.morphisms)
    assert result.elements == (
        "aa", "ab", "ax", "bb", "xb",
        "aaab", "aabb", "aaxb", "abab", "abbb", "abxb",
        "axab", "axbb", "axxb",
    )


def test_filtering_out_constants_keeps_the_variable_words():
    bundle = make_bundle("words", alphabet=("a", "b"))
    constants = bundle.subsemigroups[0]
    kept = fp_sigma_minus(bundle.instance, ("ax", "xb"), bundle.morphisms,
                          constants)
    assert len(kept) == 7
    assert all("x" in w for w in kept.elements)
    assert set(kept.provenance) == set(kept.elements)


def test_filtering_with_no_subsemigroup_is_a_no_op():
    bundle = make_bundle("nat_plus")
    full = fp(bundle.instance, (1, 2))
    assert fp_sigma_minus(bundle.instance, (1, 2), (), None) is full


def test_filtering_does_not_corrupt_the_memo():
    clear_fp_memo()
    bundle = make_bundle("words", alphabet=("a", "b"))
    full = fp_sigma(bundle.instance, ("ax", "xb"), bundle.morphisms)
    fp_sigma_minus(bundle.instance, ("ax", "xb"), bundle.morphisms,
                   bundle.subsemigroups[0])
    again = fp_sigma(bundle.instance, ("ax", "xb"), bundle.morphisms)
    assert again is full
    assert len(again) == 14


def test_memo_is_keyed_and_clearable():
    clear_fp_memo()
    bundle = make_bundle("nat_plus")
    first = fp(bundle.instance, (1, 2, 4))
    assert fp(bundle.instance, (1, 2, 4)) is first
    clear_fp_memo()
    rebuilt = fp(bundle.instance, (1, 2, 4))
    assert rebuilt is not first
    assert rebuilt == first


def test_instances_with_different_budgets_do_not_share_memo_entries():
    small = make_bundle("nat_plus", max_value=10)
    large = make_bundle("nat_plus", max_value=100)
    assert small.instance.name != large.instance.name
    assert fp(large.instance, (5, 6)).as_set() == {5, 6, 11}
    from fplab.errors import BudgetExceededError
    with pytest.raises(BudgetExceededError):
        fp(small.instance, (5, 6))


def test_empty_chain_is_rejected():
    bundle = make_bundle("nat_plus")
    with pytest.raises(ConfigError):
        fp_sigma(bundle.instance, (), ())


def test_fp_matches_the_reference_on_random_chains():
    rng = random.Random(20260816)
    nat = make_bundle("nat_plus")
    words = make_bundle("words", alphabet=("a", "b"))
    fink = make_bundle("fin_k")
    cases = [
        (nat, tuple(range(1, 16)), ()),
        (words, tuple(w for w in words.pairwise_pool if len(w) <= 2),
         words.morphisms),
        (fink, fink.pairwise_pool, fink.morphisms),
    ]
    for bundle, pool, all_sigmas in cases:
        for _ in range(25):
            chain = tuple(rng.choice(pool)
                          for _ in range(rng.randint(1, 4)))
            sigmas = tuple(rng.sample(all_sigmas,
                                      rng.randint(0, min(2, len(all_sigmas)))))
            got = fp_sigma(bundle.instance, chain, sigmas)
            want = naive_fp_sigma(bundle.instance, chain, sigmas)
            assert got.as_set() == want, (bundle.kind, chain)


def test_chain_validation():
    bundle = make_bundle("nat_plus")
    lt = bundle.relation("lt")
    assert is_chain((1, 2, 4), lt)
    assert not is_chain((1, 4, 2), lt)
    assert is_chain((), lt) and is_chain((7,), lt)
    assert Chain(elements=(2, 3, 9), relation=lt).is_valid()
    assert not Chain(elements=(3, 2), relation=lt).is_valid()


def test_extracted_blocks_are_blockwise_fp_sets():
    bundle = make_bundle("words", alphabet=("a", "b"))
    sigmas = bundle.morphisms
    s_bar = ("ax", "xb", "xx")
    blocks = extracted_blocks(bundle.instance, s_bar, sigmas, (0, 1, 3))
    assert blocks == (fp_sigma(bundle.instance, ("ax",), sigmas),
                      fp_sigma(bundle.instance, ("xb", "xx"), sigmas))


def test_extracted_blocks_validate_cuts():
    bundle = make_bundle("nat_plus")
    for cuts in ((), (1,), (1, 1), (2, 1), (-1, 2), (0, 4)):
        with pytest.raises(ConfigError):
            extracted_blocks(bundle.instance, (1, 2, 4), (), cuts)


def test_prefix_stream_grows_one_element_at_a_time():
    bundle = make_bundle("nat_plus")
    seen = list(fp_sigma_prefixes(bundle.instance, iter((1, 2, 4, 8)), (), 3))
    assert [k for k, _ in seen] == [1, 2, 3]
    assert seen[-1][1] == fp(bundle.instance, (1, 2, 4))
    assert seen[0][1].elements == (1,)


def test_prefix_stream_never_exhausts_an_unbounded_source():
    bundle = make_bundle("nat_plus")
    stream = itertools.count(1)
    seen = list(fp_sigma_prefixes(bundle.instance, stream, (), 4))
    assert len(seen) == 4
    assert next(stream) == 5


def test_prefix_bound_must_be_positive():
    bundle = make_bundle("nat_plus")
    with pytest.raises(ConfigError):
        list(fp_sigma_prefixes(bundle.instance, iter((1,)), (), 0))


def test_mt_edges_of_the_three_term_chain():
    bundle = make_bundle("nat_plus")
    edges = mt_edges(bundle.instance, (1, 2, 4), 2)
    vertex_sets = {e.vertices for e in edges}
    assert vertex_sets == {frozenset(s) for s in
                           ((1, 2), (1, 4), (1, 6), (2, 4), (3, 4))}
    assert len(edges) == len(vertex_sets)


def test_mt_edges_carry_replayable_witnesses():
    bundle = make_bundle("nat_plus")
    for edge in mt_edges(bundle.instance, (1, 2, 4), 2):
        assert len(edge.blocks) == 2
        # blocks are order-separated: every index in I_1 below every in I_2
        assert max(edge.blocks[0]) < min(edge.blocks[1])
        assert {h for h, _ in edge.witnesses} == set(edge.vertices)
        chain = (1, 2, 4)
        for h, indices in edge.witnesses:
            assert sum(chain[i] for i in indices) == h


def test_mt_arity_is_validated():
    bundle = make_bundle("nat_plus")
    for n in (0, 4):
        with pytest.raises(ConfigError):
            mt_edges(bundle.instance, (1, 2, 4), n)


def test_mt_arity_one_vertices_are_the_fp_set():
    bundle = make_bundle("nat_plus")
    edges = mt_edges(bundle.instance, (1, 2, 4), 1)
    assert {v for e in edges for v in e.vertices} == set(range(1, 8))


def test_mt_edges_match_the_reference_on_random_chains():
    rng = random.Random(7)
    bundle = make_bundle("nat_plus")
    for _ in range(20):
        chain = tuple(rng.choice(range(1, 12))
                      for _ in range(rng.randint(2, 4)))
        n = rng.randint(1, len(chain))
        got = {e.vertices for e in mt_edges(bundle.instance, chain, n)}
        assert got == naive_mt_vertex_sets(bundle.instance, chain, n)
