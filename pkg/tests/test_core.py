import numpy as np
import pytest

from ringlab.constructors import evaluate, finite_field, is_irreducible, parse_expr
from ringlab.core import (BadIdentity, FiniteRing, NotAssociative, NotDistributive, RingError,
                          TableFormatError)

from . import oracle


def cyclic_tables(n):
    idx = np.arange(n)
    return (idx[:, None] + idx[None, :]) % n, (idx[:, None] * idx[None, :]) % n


def test_cyclic_ring_from_tables():
    add, mul = cyclic_tables(6)
    R = FiniteRing(add, mul, one=1)
    assert R.order == 6 and R.zero == 0 and R.is_unital
    assert R.characteristic == 6
    assert sorted(R.units.members) == [1, 5]
    assert sorted(R.idempotents.members) == [0, 1, 3, 4]


def test_rejects_non_associative_multiplication():
    add, _ = cyclic_tables(2)
    mul = np.array([[0, 0], [0, 0]])
    mul_bad = np.array([[0, 1], [1, 1]])
    FiniteRing(add, mul)
    with pytest.raises((NotAssociative, NotDistributive)):
        FiniteRing(add, mul_bad)


def test_rejects_false_identity():
    add, mul = cyclic_tables(4)
    with pytest.raises(BadIdentity):
        FiniteRing(add, mul, one=3)


def test_rejects_mismatched_tables():
    add, _ = cyclic_tables(3)
    with pytest.raises(TableFormatError):
        FiniteRing(add, np.zeros((2, 2), dtype=int))


def test_text_round_trip():
    R = evaluate("U(2,Z(3))")
    S = FiniteRing.from_text(R.to_text())
    assert S.same_tables(R) and S.one == R.one


@pytest.mark.parametrize("expr,order,unital", [
    ("Z(12)", 12, True),
    ("GF(2,2)", 4, True),
    ("GF(3,2)", 9, True),
    ("M(2,Z(2))", 16, True),
    ("U(2,Z(2))", 8, True),
    ("D(3,Z(2))", 16, True),
    ("V(3,Z(2))", 8, True),
    ("T(Z(3))", 9, True),
    ("Dorroh(T(Z(2)),2)", 8, True),
    ("Product(Z(2),Z(3))", 6, True),
    ("TruncPoly(Z(2),3)", 8, True),
    ("Quotient(Z(8),gens=[4])", 4, True),
    ("Subring(M(2,Z(3)),gens=[(1,0,0,0),(0,1,0,0)])", 9, False),
])
def test_constructions_are_rings(expr, order, unital):
    R = evaluate(expr)
    assert R.order == order
    assert (R.one is not None) == unital
    assert not R.partially_validated


def test_field_has_no_zero_divisors():
    F = finite_field(2, 3)
    M = F.mul_table
    nonzero = [x for x in range(F.order) if x != F.zero]
    assert all(M[a, b] != F.zero for a in nonzero for b in nonzero)
    assert len(F.units) == 7


def test_irreducibility():
    assert is_irreducible([1, 1, 1], 2)
    assert not is_irreducible([1, 0, 1], 2)


def test_matrix_ring_is_noncommutative():
    R = evaluate("M(2,Z(2))")
    assert not (R.mul_table == R.mul_table.T).all()


def test_product_matches_isomorphic_cyclic():
    R = evaluate("Product(Z(2),Z(3))")
    assert oracle.reduced(R) and len(R.units) == 2


def test_quotient_and_ideal():
    R = evaluate("Z(8)")
    I = R.ideal([4])
    assert sorted(I.members) == [0, 4] and I.is_ideal
    assert R.ideal([2]) <= R.ideal([1])


def test_restrict_needs_closed_subset():
    R = evaluate("Z(6)")
    S = R.restrict(R.closure([2]))
    assert S.order == 3
    with pytest.raises(RingError):
        R.restrict(R.subset([0, 1]))


def test_parse_round_trip():
    text = "Dorroh(U(2,Product(Z(2),Z(2))),2)"
    assert str(parse_expr(text)) == text


@pytest.mark.parametrize("bad", ["Z(", "Q(3)", "M(2,Z(2)", "GF(4,1)", "U(0,Z(2))"])
def test_bad_expressions(bad):
    with pytest.raises(RingError):
        evaluate(bad)


def test_element_arithmetic():
    R = evaluate("Z(9)")
    x = R.element(3)
    assert (x * x).is_zero()
    assert x.is_nilpotent() == (True, 2)
    assert (-x + x).is_zero()


def test_regular_elements_are_units_in_unital_rings():
    for expr in ("Z(8)", "U(2,Z(2))", "M(2,Z(2))", "T(Z(3))"):
        R = evaluate(expr)
        assert R.regular_elements == R.units
