"""Nil set, prime radical, upper nilradical and Jacobson radical of finite rings.

In a finite ring every nil ideal is nilpotent, so the prime radical, the
upper nilradical and the Jacobson radical all coincide with the largest
nilpotent ideal.  They are nevertheless computed by three unrelated
procedures so that the coincidence is a check, not an assumption.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ElementSubset, FiniteRing, RingError


class NotAnIdeal(RingError):
    pass


def nil_set(R: FiniteRing) -> ElementSubset:
    return ElementSubset(R, np.flatnonzero(R.nilpotent_mask))


def _product_span(R: FiniteRing, X: ElementSubset, Y: ElementSubset) -> ElementSubset:
    prods = R.mul_table[np.ix_(list(X.members), list(Y.members))].ravel()
    return R.closure(np.unique(prods), "additive")


def ideal_nilpotency(R: FiniteRing, I: ElementSubset) -> tuple[bool, int | None]:
    """Least ``k`` with ``I^k = 0``; ``(False, None)`` if the powers stabilize above zero."""
    if not I.is_ideal:
        raise NotAnIdeal(f"{I} is not an ideal of {R.label}")
    power, k = I, 1
    while True:
        if len(power) == 1:
            return True, k
        nxt = _product_span(R, power, I)
        if nxt == power:
            return False, None
        power, k = nxt, k + 1


def _principal_ideals(R: FiniteRing, candidates) -> dict[int, ElementSubset]:
    cache: dict[frozenset, ElementSubset] = {}
    out = {}
    for x in candidates:
        ideal = R.ideal([int(x)])
        key = frozenset(ideal.members)
        out[int(x)] = cache.setdefault(key, ideal)
    return out


def prime_radical(R: FiniteRing) -> ElementSubset:
    """Largest nilpotent ideal: the ideal sum of all nilpotent principal ideals."""
    N = nil_set(R)
    principal = _principal_ideals(R, N.members)
    verdicts: dict[int, bool] = {}
    gens = []
    for x, ideal in principal.items():
        key = id(ideal)
        if key not in verdicts:
            verdicts[key] = ideal_nilpotency(R, ideal)[0]
        if verdicts[key]:
            gens.append(x)
    radical = R.ideal(gens)
    if not ideal_nilpotency(R, radical)[0]:
        raise AssertionError(f"sum of nilpotent ideals of {R.label} is not nilpotent")
    return radical


def upper_nilradical(R: FiniteRing) -> ElementSubset:
    """Largest nil ideal: elements whose principal ideal consists of nilpotents."""
    nil = R.nilpotent_mask
    N = nil_set(R)
    members = [x for x, ideal in _principal_ideals(R, N.members).items()
               if nil[list(ideal.members)].all()]
    return ElementSubset(R, members)


def left_quasi_regular_mask(R: FiniteRing) -> np.ndarray:
    """``a`` such that ``y + a + y a = 0`` for some ``y``."""
    A, M = R.add_table, R.mul_table
    idx = np.arange(R.order)
    circ = A[A[idx[:, None], idx[None, :]], M[idx[:, None], idx[None, :]]]  # circ[y, a]
    return (circ == R.zero).any(axis=0)


def jacobson_radical(R: FiniteRing) -> ElementSubset:
    A, M = R.add_table, R.mul_table
    idx = np.arange(R.order)
    if R.one is not None:
        left_invertible = (M == R.one).any(axis=0)  # some y with y*a = 1
        one_minus = A[R.one, R.neg_table[M]]  # one_minus[r, x] = 1 - r x
        return ElementSubset(R, np.flatnonzero(left_invertible[one_minus].all(axis=0)))
    lqr = left_quasi_regular_mask(R)
    multiples = [np.full(R.order, R.zero)]
    for _ in range(R.characteristic - 1):
        multiples.append(A[multiples[-1], idx])
    ok = np.ones(R.order, dtype=bool)
    for kx in multiples:
        ok &= lqr[A[kx[None, :], M]].all(axis=0)  # k x + r x over all r (rows)
    return ElementSubset(R, np.flatnonzero(ok))


@dataclass
class RadicalReport:
    nil_set: ElementSubset
    prime_radical: ElementSubset
    upper_nilradical: ElementSubset
    jacobson: ElementSubset
    jacobson_index: int | None
    two_primal: bool
    ni: bool
    nil_set_is_ideal: bool

    def to_dict(self) -> dict:
        return {
            "nil_set": self.nil_set.names(),
            "prime_radical": self.prime_radical.names(),
            "upper_nilradical": self.upper_nilradical.names(),
            "jacobson": self.jacobson.names(),
            "jacobson_index": self.jacobson_index,
            "two_primal": self.two_primal,
            "ni": self.ni,
            "nil_set_is_ideal": self.nil_set_is_ideal,
        }


def radical_report(R: FiniteRing) -> RadicalReport:
    cached = getattr(R, "_radical_report", None)
    if cached is not None:
        return cached
    N = nil_set(R)
    lower = prime_radical(R)
    upper = upper_nilradical(R)
    J = jacobson_radical(R)
    index = ideal_nilpotency(R, J)[1] if J.is_ideal else None
    report = RadicalReport(
        nil_set=N, prime_radical=lower, upper_nilradical=upper, jacobson=J, jacobson_index=index,
        two_primal=lower == N, ni=upper == N, nil_set_is_ideal=N.is_ideal,
    )
    R._radical_report = report
    return report
