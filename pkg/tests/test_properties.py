"""Property-based checks over randomly assembled small constructions."""
import numpy as np
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ringlab.constructors import evaluate
from ringlab.deciders import decide_all, replay
from ringlab.inference import infer
from ringlab.radicals import radical_report
from ringlab.verdicts import Property, Status

BASES = ["Z(2)", "Z(3)", "Z(4)", "GF(2,2)"]


def _order(expr):
    return evaluate(expr, validate=False).order


@st.composite
def small_rings(draw, cap=32):
    base = draw(st.sampled_from(BASES))
    shape = draw(st.sampled_from(["{b}", "T({b})", "U(2,{b})", "D(2,{b})", "V(2,{b})",
                                  "TruncPoly({b},2)", "Product({b},Z(2))", "Dorroh(T(Z(2)),2)"]))
    expr = shape.format(b=base)
    assume(_order(expr) <= cap)
    return expr


@settings(max_examples=25, deadline=None)
@given(small_rings(), st.data())
def test_ring_axioms(expr, data):
    R = evaluate(expr)
    A, M = R.add_table, R.mul_table
    n = R.order
    a, b, c = (data.draw(st.integers(0, n - 1)) for _ in range(3))
    assert A[a, b] == A[b, a]
    assert M[M[a, b], c] == M[a, M[b, c]]
    assert M[a, A[b, c]] == A[M[a, b], M[a, c]]
    assert M[A[a, b], c] == A[M[a, c], M[b, c]]
    if R.one is not None:
        assert M[R.one, a] == a == M[a, R.one]


@settings(max_examples=20, deadline=None)
@given(small_rings(cap=16))
def test_failure_witnesses_replay(expr):
    R = evaluate(expr)
    for prop, v in decide_all(R, 1).items():
        if v.status is Status.FAILS and v.witness is not None:
            assert replay(R, prop, v.witness), (expr, prop)


@settings(max_examples=20, deadline=None)
@given(small_rings(cap=16))
def test_inference_is_consistent_with_search(expr):
    R = evaluate(expr)
    raw = decide_all(R, 1)
    verdicts, events, _ = infer(raw, R, expr)
    assert events == []
    for prop, v in raw.items():
        if v.status is not Status.UNKNOWN:
            assert verdicts[prop].status is v.status


@settings(max_examples=20, deadline=None)
@given(small_rings())
def test_radical_inclusions(expr):
    R = evaluate(expr)
    rep = radical_report(R)
    assert rep.prime_radical <= rep.upper_nilradical <= rep.nil_set
    assert rep.prime_radical.is_ideal
    if R.one is not None:
        assert rep.prime_radical == rep.jacobson


@settings(max_examples=30, deadline=None)
@given(small_rings(), st.lists(st.integers(0, 63), min_size=1, max_size=3))
def test_generated_ideal_is_least(expr, gens):
    R = evaluate(expr)
    gens = [g % R.order for g in gens]
    I = R.ideal(gens)
    assert I.is_ideal and set(gens) <= set(I.members)
    mask = I.mask
    assert mask[R.mul_table[np.ix_(range(R.order), I.members)]].all()
    assert R.ideal(I.members) == I


@settings(max_examples=20, deadline=None)
@given(small_rings(cap=16))
def test_reduced_implies_every_finer_property(expr):
    v = decide_all(evaluate(expr), 1)
    if v[Property.REDUCED].status is Status.HOLDS:
        for p in (Property.ARMENDARIZ, Property.WEAKLY_SEMICOMMUTATIVE, Property.REVERSIBLE,
                  Property.STRONGLY_NIL_IFP, Property.ABELIAN):
            assert v[p].status is Status.HOLDS, p
