"""Exhaustive-verifier behavior: passes on sound structures, reports every
counterexample on corrupted ones."""

from __future__ import annotations

import pytest

from fplab.errors import BudgetExceededError, ConfigError
from fplab.instances import make_bundle
from fplab.semigroup_core import (CoveringRelation, IDENTITY, Morphism,
                                  SemigroupInstance, Subsemigroup,
                                  verify_associativity,
                                  verify_canon_idempotent, verify_closure,
                                  verify_covering, verify_dot_closed,
                                  verify_morphism, verify_niceness)

# z3 addition with t(0,1) corrupted from 1 to 0.
CORRUPTED_ROWS = ((0, 0, 2), (1, 2, 0), (2, 0, 1))


def table_instance(rows, name):
    return SemigroupInstance(name=name, mul=lambda a, b: rows[a][b],
                             key=lambda a: a)


def nat():
    return make_bundle("nat_plus")


def words():
    return make_bundle("words", alphabet=("a", "b"))


def test_associativity_passes_on_sound_instances():
    for bundle in (nat(), words()):
        report = verify_associativity(bundle.instance, bundle.cubic_pool)
        assert report.passed
        assert report.pool_size == len(bundle.cubic_pool)
        assert "pass" in report.summary()


def test_associativity_flags_the_corrupted_table():
    inst = table_instance(CORRUPTED_ROWS, "corrupted3")
    report = verify_associativity(inst, range(3))
    assert not report.passed
    # confirmed by scanning all 27 triples by hand: t(t(0,1),1)=0, t(0,t(1,1))=2
    assert (0, 1, 1) in report.violations
    assert "FAIL" in report.summary()


def test_z3_table_is_associative():
    rows = tuple(tuple((i + j) % 3 for j in range(3)) for i in range(3))
    report = verify_associativity(table_instance(rows, "z3"), range(3))
    assert report.passed


def test_morphism_law_holds_for_scaling_maps():
    bundle = nat()
    for m in bundle.morphisms:
        report = verify_morphism(bundle.instance, m, bundle.pairwise_pool)
        assert report.passed


def test_identity_is_always_a_morphism():
    bundle = words()
    report = verify_morphism(bundle.instance, IDENTITY, bundle.pairwise_pool)
    assert report.passed


def test_broken_morphism_is_reported_on_every_pair():
    bundle = nat()
    shift = Morphism(name="shift", fn=lambda a: a + 1)
    report = verify_morphism(bundle.instance, shift, (1, 2, 3, 4))
    # f(a+b) = a+b+1 but f(a)+f(b) = a+b+2: every pair violates
    assert len(report.violations) == 16
    assert ("morphism", 1, 1) in report.violations


def test_retraction_checks_idempotence():
    bundle = words()
    constants = bundle.subsemigroups[0]
    # replaces only the first occurrence: applying twice keeps shrinking
    sloppy = Morphism(name="first_only",
                      fn=lambda w: w.replace("x", "a", 1),
                      kind="retraction", target=constants)
    report = verify_morphism(bundle.instance, sloppy, ("xx", "ax", "a"))
    assert ("idempotence", "xx") in report.violations


def test_retraction_checks_fixed_points():
    bundle = words()
    moved = Subsemigroup(name="moved", contains=lambda w: False,
                         pool=("b", "ab"))
    swap = Morphism(name="swap_all",
                    fn=lambda w: w.replace("b", "a"),
                    kind="retraction", target=moved)
    report = verify_morphism(bundle.instance, swap, ("a", "aa"))
    assert ("fixed-point", "b") in report.violations
    assert ("fixed-point", "ab") in report.violations


def test_morphism_kind_is_validated():
    with pytest.raises(ConfigError):
        Morphism(name="bad", fn=lambda a: a, kind="projection")
    with pytest.raises(ConfigError):
        Morphism(name="bad", fn=lambda a: a, kind="retraction")


def test_constants_are_nice_in_words():
    bundle = words()
    report = verify_niceness(bundle.subsemigroups[0], bundle.instance,
                             bundle.pairwise_pool)
    assert report.passed


def test_evens_are_not_nice_in_naturals():
    bundle = nat()
    evens = bundle.subsemigroup("evens")
    report = verify_niceness(evens, bundle.instance, bundle.pairwise_pool)
    assert not report.passed
    assert (1, 1, 2) in report.violations


def test_evens_are_closed_but_odds_are_not():
    bundle = nat()
    evens = bundle.subsemigroup("evens")
    assert verify_closure(evens, bundle.instance, range(1, 11)).passed
    odds = Subsemigroup(name="odds", contains=lambda a: a % 2 == 1)
    report = verify_closure(odds, bundle.instance, range(1, 11))
    assert (1, 1, 2) in report.violations


def test_covering_finds_least_cover():
    bundle = nat()
    lt = bundle.relation("lt")
    report = verify_covering(lt, bundle.instance, [(1, 2, 3)], range(1, 11))
    assert report.passed
    assert report.details == (((1, 2, 3), 4),)


def test_covering_records_uncoverable_families():
    bundle = nat()
    lt = bundle.relation("lt")
    report = verify_covering(lt, bundle.instance, [(9, 10)], range(1, 11))
    assert not report.passed
    assert report.violations == ((9, 10),)


def test_covering_respects_the_cover_pool():
    bundle = make_bundle("words")
    shorter = bundle.relation("shorter")
    report = verify_covering(shorter, bundle.instance, [("a", "bx")],
                             bundle.pairwise_pool)
    assert report.passed
    # covers must be variable words; the least long-enough one is "aax"
    ((_, cover),) = report.details
    assert cover == "aax"


def test_covering_needs_a_pool():
    bundle = nat()
    with pytest.raises(ConfigError):
        verify_covering(bundle.relation("lt"), bundle.instance, [(1,)], ())


def test_dot_closure_of_strict_order():
    bundle = nat()
    report = verify_dot_closed(bundle.relation("lt"), bundle.instance,
                               range(1, 9))
    assert report.passed


def test_dot_closure_failure_is_reported():
    bundle = nat()
    succ = CoveringRelation(name="succ", holds=lambda a, b: a + 1 == b)
    report = verify_dot_closed(succ, bundle.instance, range(1, 9))
    assert not report.passed
    assert (1, 2, 3) in report.violations  # 1 -< 2 -< 3 but 1+1 != 5


def test_canon_idempotence_check():
    good = make_bundle("fin_k")
    assert verify_canon_idempotent(good.instance,
                                   good.pairwise_pool).passed
    drifting = SemigroupInstance(name="drift", mul=lambda a, b: a + b,
                                 key=lambda a: a, canon=lambda a: a + 1)
    report = verify_canon_idempotent(drifting, (1, 2, 3))
    assert len(report.violations) == 3


def test_products_canonicalize():
    bundle = make_bundle("fin_k")
    assert bundle.instance.product((0, 2, 1), (1, 0, 2)) == (1, 2, 2)
    # trailing zeros are stripped from the canonical form
    assert bundle.instance.product((1, 0), (0, 1, 0)) == (1, 1)


def test_budget_violations_raise_with_context():
    bundle = make_bundle("nat_plus", max_value=10)
    with pytest.raises(BudgetExceededError) as exc:
        bundle.instance.product(6, 7)
    assert exc.value.element == 13
    assert exc.value.context == (6, 7)


def test_sort_uses_the_instance_order():
    bundle = make_bundle("words")
    assert bundle.instance.sort(["ba", "c", "ab"]) == ["c", "ab", "ba"]
