"""Coded words over a word base: the evaluation law, well-formedness, and
the star retractions."""

from __future__ import annotations

import itertools

import pytest

from fplab.errors import BudgetExceededError, ConfigError
from fplab.instances import make_bundle
from fplab.instances.carlson import (ID_TAG, coded_words, in_c_star, pair,
                                     star_covering, star_retraction_map,
                                     well_formed)


def bundle_1():
    return make_bundle("carlson_code")


def bundle_2():
    return make_bundle("carlson_code", alphabet=("a", "b"))


def test_letter_pool_and_sizes():
    b = bundle_1()
    assert b.s_bar == ("x", "ax", "xa", "xx")
    assert len(b.pairwise_pool) == 8 + 8**2 + 8**3
    assert all(1 <= len(u) <= 3 for u in b.pairwise_pool)


def test_c_star_membership():
    assert in_c_star((("sub_a", "x"), ("sub_a", "xx")))
    assert not in_c_star((("sub_a", "x"), (ID_TAG, "xx")))


def test_star_retraction_replaces_only_id_tags():
    u = (("sub_a", "x"), (ID_TAG, "xa"), (ID_TAG, "x"))
    assert star_retraction_map(u, "sub_b") == (
        ("sub_a", "x"), ("sub_b", "xa"), ("sub_b", "x"))
    assert in_c_star(star_retraction_map(u, "sub_b"))


def test_star_retractions_are_registered_retractions():
    b = bundle_1()
    (star_a,) = b.morphisms
    assert star_a.name == "star_sub_a"
    assert star_a.kind == "retraction"
    u = pair(ID_TAG, "xx")
    assert star_a(star_a(u)) == star_a(u)


def test_evaluation_of_a_pinned_word():
    b = bundle_1()
    assert b.evaluate((("sub_a", "x"), (ID_TAG, "ax"))) == "aax"
    assert b.evaluate(pair(ID_TAG, "xx")) == "xx"
    assert b.evaluate(pair("sub_a", "xx")) == "aa"


def test_evaluation_commutes_with_star_retractions():
    # eval(sigma_* applied to u) == sigma applied to eval(u)
    for b in (bundle_1(), bundle_2()):
        base = b.base_morphisms()
        short = [u for u in b.pairwise_pool if len(u) <= 2]
        for star in b.morphisms:
            sigma = base[star.name.removeprefix("star_")]
            for u in short:
                assert b.evaluate(star(u)) == sigma(b.evaluate(u))


def test_well_formedness_is_subsequence_matching():
    s_bar = ("x", "ax", "xa", "xx")
    assert well_formed((("t", "x"), ("t", "xx")), s_bar)
    assert well_formed((("t", "ax"), ("t", "xa"), ("t", "xx")), s_bar)
    assert not well_formed((("t", "xx"), ("t", "x")), s_bar)
    assert not well_formed((("t", "x"), ("t", "x")), s_bar)
    assert not well_formed((("t", "qq"),), s_bar)


def test_greedy_matching_handles_repeated_base_entries():
    s_bar = ("x", "x")
    assert well_formed((("t", "x"), ("t", "x")), s_bar)
    assert not well_formed((("t", "x"), ("t", "x"), ("t", "x")), s_bar)


def test_star_covering_cases():
    s_bar = ("x", "ax", "xa", "xx")
    ill = (("t", "xx"), ("t", "x"))
    wf = pair("t", "xa")
    assert star_covering(ill, wf, s_bar)          # ill-formed -< well-formed
    assert star_covering(pair("t", "x"), wf, s_bar)   # concatenation matches
    assert not star_covering(pair("t", "xx"), wf, s_bar)  # xx then xa: no
    assert not star_covering(wf, ill, s_bar)


def test_s_bar_entries_must_be_variable_words():
    with pytest.raises(ConfigError):
        make_bundle("carlson_code", s_bar=("x", "a"))


def test_coded_word_budget():
    b = bundle_1()
    u = tuple(itertools.repeat((ID_TAG, "x"), 3))
    assert b.instance.product(u, u) == u + u
    with pytest.raises(BudgetExceededError):
        b.instance.product(u + u, u)


def test_coded_word_enumeration_order():
    letters = (("t", "x"), ("t", "y"))
    got = list(coded_words(letters, 2))
    assert got[0] == (("t", "x"),)
    assert len(got) == 2 + 4
    assert got[2] == (("t", "x"), ("t", "x"))
