from itertools import product

import pytest

from ringlab.constructors import evaluate, is_isomorphism
from ringlab.deciders import decide_on_algebra, structural_verdicts
from ringlab.fpalgebra import (NonMonomialRelation, TruncatedAlgebra, WordAlgebra, build_algebra,
                               realize_as_finite_ring, verify_poly_identity)
from ringlab.presentation import PresentationError, parse_presentation
from ringlab.verdicts import Property, Status


def test_presentation_round_trip():
    text = "algebra p=3 gens=[a,b] truncate=3\nrel ab - ba"
    pres = parse_presentation(text)
    assert pres.p == 3 and pres.gens == ("a", "b") and pres.truncate == 3
    assert parse_presentation(pres.to_text()).to_text() == pres.to_text()


@pytest.mark.parametrize("text", [
    "algebra p=4 gens=[a]",
    "algebra p=2 gens=[a] unital\nrel a^2 + 1",
    "ring p=2 gens=[a]",
    "algebra p=2 gens=[a]\nrel q",
])
def test_bad_presentations(text):
    with pytest.raises(PresentationError):
        build_algebra(text)


def test_patterns_need_monomial_relations():
    with pytest.raises(NonMonomialRelation):
        build_algebra("algebra p=2 gens=[a,b]\nrel ab+ba\npattern aa")


def test_monomial_word_algebra():
    alg = build_algebra("algebra p=2 gens=[a,b] unital\nrel ab")
    assert isinstance(alg, WordAlgebra) and not alg.finite_dimensional
    assert alg.element("a*b").is_zero()
    assert not alg.element("b*a").is_zero()
    assert alg.element("b*a*a*b").is_zero()


def test_gap_pattern_membership():
    alg = build_algebra("algebra p=2 gens=[a,b,c] unital\nrel cc\nrel ac\npattern c%+c")
    for word, zero in [("cbc", True), ("cabbc", True), ("abc", False), ("cb", False), ("bcb", False)]:
        assert alg.element(word).is_zero() is zero, word


def test_single_monomial_periodicity():
    alg = build_algebra("algebra p=2 gens=[a,b] unital\npattern aa")
    nil, k, why = alg.nilpotency(alg.element("baba"))
    assert nil is False and k is None
    nil, k, _ = alg.nilpotency(alg.element("ab*a"))
    assert nil is True


def test_commutative_truncation_matches_table_ring():
    alg = build_algebra("algebra p=2 gens=[x] commutative unital\nrel x^3")
    assert isinstance(alg, TruncatedAlgebra) and alg.dimension == 3
    R = realize_as_finite_ring(alg)
    S = evaluate("TruncPoly(Z(2),3)")
    assert R.order == S.order == 8
    # basis 1, x, x^2 on both sides, coordinates line up
    assert is_isomorphism(R, S, list(range(8))) or R.same_tables(S)


def test_truncated_ideal_is_two_sided():
    alg = build_algebra("algebra p=2 gens=[a,b] unital truncate=4\nrel ab\nrel a{r}b")
    assert alg.verify_two_sided()
    assert alg.in_ideal("aab") and alg.in_ideal("abb") and alg.in_ideal("abab")
    assert not alg.in_ideal("ba")


def test_truncation_dimension_by_counting():
    alg = build_algebra("algebra p=3 gens=[a,b] truncate=3\nrel ab - ba")
    assert alg.ambient_dimension == 6
    # words of length 1 and 2 modulo ab = ba
    assert alg.dimension == 5
    assert alg.in_ideal("ab-ba") and not alg.in_ideal("ab")


def test_poly_identity_over_field():
    alg = build_algebra("algebra p=7 gens=[x,y] commutative unital\nrel x^3\nrel x^2y^2\nrel y^3")
    ok, bad = verify_poly_identity(alg, ["x", "y"], ["3x^2", "4xy", "3y^2"])
    assert ok and bad == []
    ok, bad = verify_poly_identity(alg, ["x", "y"], ["x", "y"])
    assert not ok and bad


def test_realized_product_table_agrees_with_algebra():
    alg = build_algebra("algebra p=3 gens=[a,b] commutative\nrel a^2\nrel ab\nrel b^2")
    R = realize_as_finite_ring(alg)
    assert R.order == 9 and R.one is None
    assert (R.mul_table == R.zero).all()


def test_approximate_truncation_is_not_exact():
    text = ("algebra p=3 gens=[a0,a1,b0,b1] unital truncate=5 approximate\n"
            "rel a0b0\nrel a0b1 + a1b0\nrel a1b1")
    alg = build_algebra(text)
    assert alg.exact_zero is False
    assert build_algebra(text.replace(" approximate", "")).exact_zero is True


def test_decide_on_algebra_uses_witness_only_for_fails():
    alg = build_algebra("algebra p=2 gens=[a,b] unital\npattern aa")
    w = {"a": "ba", "b": "a", "r": "b"}
    v = decide_on_algebra(alg, Property.WEAKLY_SEMICOMMUTATIVE, [w])
    assert v.status is Status.FAILS
    v = decide_on_algebra(alg, Property.WEAKLY_SEMICOMMUTATIVE, [{"a": "a", "b": "a", "r": "b"}])
    assert v.status is Status.UNKNOWN


def test_structural_verdicts_of_commutative_algebra():
    alg = build_algebra("algebra p=7 gens=[x,y] commutative unital\nrel x^3\nrel x^2y^2\nrel y^3")
    v = structural_verdicts(alg)
    assert v[Property.COMMUTATIVE].status is Status.HOLDS
    assert Property.ARMENDARIZ not in v or v[Property.ARMENDARIZ].status is not Status.HOLDS


@pytest.mark.parametrize("p", [2, 3])
def test_multiplication_is_associative_on_basis(p):
    alg = build_algebra(f"algebra p={p} gens=[a,b] unital truncate=4\nrel ab + ba\nrel aa")
    words = ["a", "b", "ab", "ba", "bb", "bab"]
    for x, y, z in product(words, repeat=3):
        X, Y, Z = (alg.element(w) for w in (x, y, z))
        lhs = alg.multiply(alg.multiply(X, Y), Z)
        rhs = alg.multiply(X, alg.multiply(Y, Z))
        assert alg.render(lhs) == alg.render(rhs)
