import pytest

from ringlab.constructors import evaluate
from ringlab.radicals import (ideal_nilpotency, jacobson_radical, nil_set, prime_radical,
                              radical_report, upper_nilradical)

from . import oracle

RINGS = ["Z(8)", "Z(12)", "GF(2,2)", "U(2,Z(2))", "U(2,Z(4))", "M(2,Z(2))", "T(Z(3))",
         "D(3,Z(2))", "V(3,Z(2))", "TruncPoly(Z(4),2)", "Dorroh(T(Z(2)),2)",
         "Product(Z(2),Z(4))"]


def test_cyclic_radicals():
    R = evaluate("Z(8)")
    assert sorted(prime_radical(R).members) == [0, 2, 4, 6]
    assert prime_radical(R) == jacobson_radical(R) == nil_set(R)
    assert ideal_nilpotency(R, prime_radical(R)) == (True, 3)


def test_upper_triangular_radical_is_strict_part():
    R = evaluate("U(2,Z(2))")
    J = jacobson_radical(R)
    assert len(J) == 2 and J.is_ideal
    assert ideal_nilpotency(R, J) == (True, 2)


def test_full_matrix_ring_is_semisimple_but_not_reduced():
    R = evaluate("M(2,Z(2))")
    rep = radical_report(R)
    assert len(rep.prime_radical) == 1 and len(rep.jacobson) == 1
    assert len(rep.nil_set) > 1
    assert not rep.two_primal and not rep.ni and not rep.nil_set_is_ideal


@pytest.mark.parametrize("expr", RINGS)
def test_prime_radical_equals_jacobson_and_oracle(expr):
    R = evaluate(expr)
    J = jacobson_radical(R)
    assert prime_radical(R) == J
    assert frozenset(J.members) == oracle.jacobson_by_ideals(R)


@pytest.mark.parametrize("expr", RINGS)
def test_radical_chain(expr):
    R = evaluate(expr)
    rep = radical_report(R)
    assert rep.prime_radical <= rep.upper_nilradical <= rep.nil_set
    assert rep.two_primal == rep.ni
    assert upper_nilradical(R).is_ideal


def test_non_unital_nil_ring_is_its_own_radical():
    R = evaluate("Subring(TruncPoly(Z(2),3),gens=[(0,1,0)])")
    assert R.one is None
    whole = R.subset(range(R.order))
    assert prime_radical(R) == whole == nil_set(R)
    ok, k = ideal_nilpotency(R, whole)
    assert ok and k == 3


def test_nilpotency_of_non_nil_ideal():
    R = evaluate("Z(6)")
    assert ideal_nilpotency(R, R.ideal([2])) == (False, None)
