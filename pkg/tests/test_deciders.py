from itertools import product

import pytest

from ringlab.constructors import evaluate
from ringlab.deciders import convolve, decide, decide_all, replay, zero_product_pairs
from ringlab.verdicts import Property, Status

from . import oracle

P = Property
SMALL = ["Z(4)", "Z(6)", "GF(2,2)", "U(2,Z(2))", "T(Z(2))", "D(3,Z(2))", "V(3,Z(2))",
         "Product(Z(2),Z(2))", "TruncPoly(Z(2),3)", "Dorroh(T(Z(2)),2)",
         "Subring(M(2,Z(3)),gens=[(1,0,0,0),(0,1,0,0)])"]


# frozen from the pure-python enumeration in tests/oracle.py
@pytest.mark.parametrize("expr,d,count", [
    ("Z(4)", 2, 176), ("U(2,Z(2))", 1, 376), ("T(Z(2))", 1, 40), ("Z(6)", 1, 119)])
def test_zero_product_pair_counts(expr, d, count):
    R = evaluate(expr)
    pairs = sorted(zero_product_pairs(R, d))
    assert len(pairs) == count
    assert pairs == oracle.zero_product_pairs(R, d)


def _trim(c):
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def test_convolve_matches_schoolbook():
    R = evaluate("U(2,Z(2))")
    for f in product(range(8), repeat=2):
        for g in [(1, 3), (5, 0), (7, 7)]:
            assert _trim(convolve(R, f, g)) == _trim(oracle.poly_mul(R, f, g))


@pytest.mark.parametrize("expr", SMALL + ["M(2,Z(2))"])
def test_elementwise_deciders_agree_with_oracle(expr):
    R = evaluate(expr)
    for prop, ref in [(P.SEMICOMMUTATIVE, oracle.semicommutative), (P.REVERSIBLE, oracle.reversible),
                      (P.ABELIAN, oracle.abelian), (P.REDUCED, oracle.reduced)]:
        v = decide(R, prop)
        assert v.bound is None
        assert (v.status is Status.HOLDS) == ref(R), (expr, prop)


@pytest.mark.parametrize("expr", ["Z(4)", "U(2,Z(2))", "T(Z(2))", "Z(6)", "M(2,Z(2))",
                                  "Product(Z(2),Z(2))"])
def test_armendariz_degree_one_agrees_with_oracle(expr):
    R = evaluate(expr)
    v = decide(R, P.ARMENDARIZ, 1)
    assert (v.status is Status.HOLDS) == oracle.armendariz(R, 1)
    if v.status is Status.HOLDS:
        assert v.bound == 1 and v.label() == "Holds(deg<=1)"


def test_reversible_witness_is_lexicographically_least():
    R = evaluate("M(2,Z(2))")
    v = decide(R, P.REVERSIBLE)
    assert v.status is Status.FAILS and v.witness == {"a": 1, "b": 4}
    M = R.mul_table
    first = next((a, b) for a in range(16) for b in range(16) if M[a, b] == 0 and M[b, a] != 0)
    assert first == (1, 4)


def test_matrix_ring_fails_everything_but_bounded_index():
    v = decide_all(evaluate("M(2,Z(2))"), 1)
    holds = {p for p, x in v.items() if x.status is Status.HOLDS}
    assert holds == {P.BOUNDED_INDEX_2}


@pytest.mark.parametrize("expr", SMALL)
def test_fail_witnesses_replay(expr):
    R = evaluate(expr)
    for prop, v in decide_all(R, 2).items():
        if v.status is Status.FAILS and v.witness is not None:
            assert replay(R, prop, v.witness), (expr, prop)


def test_replay_rejects_a_bogus_witness():
    R = evaluate("Z(6)")
    assert not replay(R, P.REVERSIBLE, {"a": 2, "b": 3})
    assert not replay(R, P.ARMENDARIZ, {"f": [2, 3], "g": [3, 2], "i": 0, "j": 0})


def test_budget_overrun_gives_unknown_not_holds():
    v = decide_all(evaluate("U(2,Z(2))"), 2, budget=10)
    for p in Property:
        if p.bounded:
            assert v[p].status is Status.UNKNOWN
            assert v[p].search_bounds["budget"] == 10


def test_budget_overrun_keeps_fails_found_earlier():
    v = decide_all(evaluate("U(2,Z(2))"), 2, budget=1000)
    assert v[P.IDEAL_ARMENDARIZ].status is Status.FAILS
    assert v[P.ARMENDARIZ].status is Status.UNKNOWN


def test_degree_zero_is_bound_stamped():
    v = decide_all(evaluate("Z(4)"), 0)
    assert v[P.WEAK_IDEAL_ARMENDARIZ].label() == "Holds(deg<=0)"


def test_bounded_family_is_monotone_in_degree():
    R = evaluate("Z(4)")
    low, high = decide_all(R, 1), decide_all(R, 2)
    for p in Property:
        if p.bounded and low[p].status is Status.FAILS:
            assert high[p].status is Status.FAILS


def test_reduced_rings_are_armendariz():
    for expr in ("Z(6)", "GF(2,2)", "Product(Z(2),Z(3))"):
        v = decide_all(evaluate(expr), 2)
        assert v[P.REDUCED].status is Status.HOLDS
        assert v[P.ARMENDARIZ].status is Status.HOLDS


def test_property_aliases():
    assert Property.parse("snifp") is P.STRONGLY_NIL_IFP
    assert Property.parse("wia") is P.WEAK_IDEAL_ARMENDARIZ
    assert Property.parse("2primal") is P.TWO_PRIMAL
    with pytest.raises(ValueError):
        Property.parse("noetherian")
