"""Decision procedures for ring-class predicates on table rings.

Elementwise properties are decided exactly by scanning pairs and triples.
Polynomial properties (Armendariz and its relatives) are decided up to a
degree bound by enumerating zero-product pairs ``f(x) g(x) = 0`` with a
prefix-pruned search; every ``Fails`` carries a minimal, replayable witness.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Iterator, Sequence

import numpy as np

from .core import FiniteRing
from .radicals import radical_report
from .verdicts import Property, Status, Verdict, fails, holds, unknown

DEFAULT_DEGREE = 2
DEFAULT_BUDGET = 10**8
CHUNK_ROWS = 1 << 19
TRIPLE_CHUNK = 1 << 22

FAMILY = (Property.ARMENDARIZ, Property.WEAK_ARMENDARIZ, Property.IDEAL_ARMENDARIZ,
          Property.STRONGLY_NIL_IFP)


class BudgetExceeded(RuntimeError):
    pass


# ----------------------------------------------------------------------
# polynomials
@dataclass(frozen=True)
class BoundedPolynomial:
    ring: FiniteRing
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = list(self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == self.ring.zero:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs) or (self.ring.zero,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient_set(self) -> set[int]:
        return set(self.coeffs)

    def __mul__(self, other: "BoundedPolynomial") -> "BoundedPolynomial":
        R = self.ring
        out = [R.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = R.add(out[i + j], R.mul(a, b))
        return BoundedPolynomial(R, tuple(out))

    def is_zero(self) -> bool:
        return self.coeffs == (self.ring.zero,)


def convolve(R: FiniteRing, f: Sequence[int], g: Sequence[int]) -> list[int]:
    return list((BoundedPolynomial(R, tuple(f)) * BoundedPolynomial(R, tuple(g))).coeffs)


# ----------------------------------------------------------------------
# elementwise properties
def _first_true(mask: np.ndarray):
    hits = np.argwhere(mask)
    return None if len(hits) == 0 else tuple(int(v) for v in hits[0])


def _triple_scan(R: FiniteRing, bad_value) -> tuple[int, int, int] | None:
    """Lexicographically least ``(a, b, r)`` with ``ab = 0`` and ``bad_value(a r b)``."""
    n = R.order
    M = R.mul_table
    zero_pair = M == R.zero
    step = max(1, TRIPLE_CHUNK // (n * n))
    idx = np.arange(n)
    for start in range(0, n, step):
        a = idx[start:start + step]
        arb = M[M[a][:, None, :], idx[None, :, None]]  # [a, b, r] = (a r) b
        mask = bad_value(arb) & zero_pair[a][:, :, None]
        w = _first_true(mask)
        if w is not None:
            return (int(a[w[0]]), w[1], w[2])
    return None


def decide_elementwise(R: FiniteRing, prop: Property) -> Verdict:
    M, zero = R.mul_table, R.zero
    idx = np.arange(R.order)
    where = f"exhaustive scan of {R.order} elements"
    if prop is Property.REDUCED:
        nil = R.nilpotent_mask.copy()
        nil[zero] = False
        w = _first_true(nil)
        return holds(where) if w is None else fails({"a": w[0]})
    if prop is Property.COMMUTATIVE:
        w = _first_true(M != M.T)
        return holds(where) if w is None else fails({"a": w[0], "b": w[1]})
    if prop is Property.REVERSIBLE:
        Z = M == zero
        w = _first_true(Z & ~Z.T)
        return holds(where) if w is None else fails({"a": w[0], "b": w[1]})
    if prop is Property.ABELIAN:
        idem = M[idx, idx] == idx
        w = _first_true(idem[:, None] & (M != M.T))
        return holds(where) if w is None else fails({"e": w[0], "r": w[1]})
    if prop is Property.SEMICOMMUTATIVE:
        w = _triple_scan(R, lambda v: v != zero)
        return holds(where) if w is None else fails({"a": w[0], "b": w[1], "r": w[2]})
    if prop is Property.WEAKLY_SEMICOMMUTATIVE:
        nil = R.nilpotent_mask
        w = _triple_scan(R, lambda v: ~nil[v])
        return holds(where) if w is None else fails({"a": w[0], "b": w[1], "r": w[2]})
    rad = radical_report(R)
    if prop is Property.QRPR:
        lower = rad.prime_radical.mask
        w = _first_true((M == zero) & ~lower[M.T])
        return holds(where) if w is None else fails({"a": w[0], "b": w[1]})
    if prop is Property.TWO_PRIMAL:
        extra = sorted(set(rad.nil_set) - set(rad.prime_radical))
        return holds(where) if not extra else fails({"a": extra[0]})
    if prop is Property.NI:
        extra = sorted(set(rad.nil_set) - set(rad.upper_nilradical))
        return holds(where) if not extra else fails({"a": extra[0]})
    if prop is Property.BOUNDED_INDEX_2:
        w = _first_true(R.nilpotent_mask & (M[idx, idx] != zero))
        return holds(where) if w is None else fails({"a": w[0]})
    raise ValueError(f"{prop} is not an elementwise property")


def replay_elementwise(R: FiniteRing, prop: Property, w: dict) -> bool:
    """Re-evaluate an elementwise Fails witness through plain ring operations."""
    mul, zero = R.mul, R.zero
    if prop is Property.REDUCED:
        return w["a"] != zero and R.is_nilpotent(w["a"])[0]
    if prop is Property.COMMUTATIVE:
        return mul(w["a"], w["b"]) != mul(w["b"], w["a"])
    if prop is Property.REVERSIBLE:
        return mul(w["a"], w["b"]) == zero and mul(w["b"], w["a"]) != zero
    if prop is Property.ABELIAN:
        return mul(w["e"], w["e"]) == w["e"] and mul(w["e"], w["r"]) != mul(w["r"], w["e"])
    if prop is Property.SEMICOMMUTATIVE:
        return mul(w["a"], w["b"]) == zero and mul(mul(w["a"], w["r"]), w["b"]) != zero
    if prop is Property.WEAKLY_SEMICOMMUTATIVE:
        arb = mul(mul(w["a"], w["r"]), w["b"])
        return mul(w["a"], w["b"]) == zero and not R.is_nilpotent(arb)[0]
    rad = radical_report(R)
    if prop is Property.QRPR:
        return mul(w["a"], w["b"]) == zero and mul(w["b"], w["a"]) not in rad.prime_radical
    if prop is Property.TWO_PRIMAL:
        return w["a"] in rad.nil_set and w["a"] not in rad.prime_radical
    if prop is Property.NI:
        return w["a"] in rad.nil_set and w["a"] not in rad.upper_nilradical
    if prop is Property.BOUNDED_INDEX_2:
        return R.is_nilpotent(w["a"])[0] and mul(w["a"], w["a"]) != zero
    raise ValueError(prop)


# ----------------------------------------------------------------------
# zero-product search
def _coefficient_conditions(R: FiniteRing) -> dict[Property, tuple[np.ndarray, np.ndarray | None]]:
    """For each polynomial property: ``bad[x, y]`` and, if probed, the least probe ``r``."""
    M, zero = R.mul_table, R.zero
    nil = R.nilpotent_mask
    n = R.order
    out = {
        Property.ARMENDARIZ: (M != zero, None),
        Property.WEAK_ARMENDARIZ: (~nil[M], None),
    }
    ideal_bad = np.zeros((n, n), dtype=bool)
    ideal_probe = np.full((n, n), -1, dtype=np.int64)
    snifp_bad = np.zeros((n, n), dtype=bool)
    snifp_probe = np.full((n, n), -1, dtype=np.int64)
    for r in range(n - 1, -1, -1):
        xry = M[M[:, r][:, None], np.arange(n)[None, :]]  # [x, y] = (x r) y
        hit = xry != zero
        ideal_bad |= hit
        ideal_probe[hit] = r
        hit = ~nil[xry]
        snifp_bad |= hit
        snifp_probe[hit] = r
    out[Property.IDEAL_ARMENDARIZ] = (ideal_bad, ideal_probe)
    out[Property.STRONGLY_NIL_IFP] = (snifp_bad, snifp_probe)
    return out


def _fibers(R: FiniteRing):
    """``part[a, t]`` = least ``y`` with ``a y = t`` (or -1); ``ann[a]`` = right annihilator."""
    n = R.order
    M = R.mul_table
    part = np.full((n, n), n, dtype=np.int64)
    rows = np.repeat(np.arange(n), n)
    cols = np.tile(np.arange(n), n)
    np.minimum.at(part, (rows, M.ravel()), cols)
    part[part == n] = -1
    ann = [np.flatnonzero(M[a] == R.zero) for a in range(n)]
    return part, ann


class _Search:
    def __init__(self, R: FiniteRing, budget: int):
        self.R = R
        self.budget = budget
        self.work = 0
        self.part, self.ann = _fibers(R)
        self.lzd = np.flatnonzero(R.left_zero_divisor_mask)
        self.rzd = R.right_zero_divisor_mask

    def spend(self, k: int) -> None:
        self.work += int(k)
        if self.work > self.budget:
            raise BudgetExceeded(f"search exceeded budget of {self.budget} checks")

    def kernel(self, F: np.ndarray, e: int, exact: bool = True) -> tuple[np.ndarray, np.ndarray]:
        """Rows ``(fid, g)`` with ``f g = 0``, ``deg g <= e``, all ``f`` sharing ``a_0``.

        With ``exact``: ``b_0 != 0`` and ``b_e != 0`` (used by the minimal-witness search).
        """
        R = self.R
        A, M, zero = R.add_table, R.mul_table, R.zero
        neg = R.neg_table
        k = F.shape[1] - 1
        a0 = int(F[0, 0])
        ann = self.ann[a0]
        if exact:
            ann0 = ann[ann != zero]
        else:
            ann0 = ann
        fid = np.repeat(np.arange(len(F)), len(ann0))
        G = np.tile(ann0, len(F))[:, None]
        self.spend(len(fid))
        for j in range(1, e + 1):
            if len(fid) == 0:
                break
            acc = np.full(len(fid), zero, dtype=np.int64)
            for i in range(1, min(j, k) + 1):
                acc = A[acc, M[F[fid, i], G[:, j - i]]]
            base = self.part[a0, neg[acc]]
            ok = base >= 0
            fid, G, base = fid[ok], G[ok], base[ok]
            reps = len(ann)
            fid = np.repeat(fid, reps)
            G = np.repeat(G, reps, axis=0)
            bj = A[np.repeat(base, reps), np.tile(ann, len(base))]
            G = np.concatenate([G, bj[:, None]], axis=1)
            self.spend(len(fid))
        if len(fid) and G.shape[1] < e + 1:
            return fid[:0], G[:0]
        if exact and len(fid):
            keep = G[:, e] != zero
            fid, G = fid[keep], G[keep]
        for l in range(e + 1, k + e + 1):
            if len(fid) == 0:
                break
            acc = np.full(len(fid), zero, dtype=np.int64)
            for i in range(max(0, l - e), min(l, k) + 1):
                acc = A[acc, M[F[fid, i], G[:, l - i]]]
            keep = acc == zero
            fid, G = fid[keep], G[keep]
        return fid, G

    def f_blocks(self, k: int, e: int) -> Iterator[np.ndarray]:
        """Polynomials of exact degree ``k`` in lex order, ``a_0`` and ``a_k`` left zero divisors."""
        R = self.R
        n = R.order
        for a0 in self.lzd:
            if k == 0:
                yield np.array([[a0]], dtype=np.int64)
                continue
            ann_size = max(1, len(self.ann[a0]))
            per_f = ann_size ** (e + 1)
            chunk = max(1, CHUNK_ROWS // per_f)
            mids = n ** (k - 1)
            lead = self.lzd
            total = mids * len(lead)
            for start in range(0, total, chunk):
                flat = np.arange(start, min(total, start + chunk))
                mid, lead_pos = np.divmod(flat, len(lead))
                cols = [np.full(len(flat), a0, dtype=np.int64)]
                if k > 1:
                    digits = np.stack(np.unravel_index(mid, (n,) * (k - 1)), axis=-1)
                    cols.extend(digits.T)
                cols.append(lead[lead_pos])
                yield np.stack(cols, axis=1)


def _family_search(R: FiniteRing, d: int, budget: int, props,
                   found: dict[Property, dict | None]) -> dict[Property, dict | None]:
    """Least witness per property over all pairs with degrees <= d, written into ``found``.

    Levels ``(deg f, deg g)`` run in lexicographic order, so a witness recorded
    before a budget overrun is still the global minimum.
    """
    conds = _coefficient_conditions(R)
    search = _Search(R, budget)
    for p in props:
        found.setdefault(p, None)
    for k in range(d + 1):
        for e in range(d + 1):
            active = [p for p in props if found[p] is None]
            if not active:
                return found
            for F in search.f_blocks(k, e):
                active = [p for p in active if found[p] is None]
                if not active:
                    break
                fid, G = search.kernel(F, e)
                if len(fid) == 0:
                    continue
                for p in active:
                    bad, probe = conds[p]
                    viol = np.zeros(len(fid), dtype=bool)
                    for i in range(k + 1):
                        for j in range(e + 1):
                            viol |= bad[F[fid, i], G[:, j]]
                    rows = np.flatnonzero(viol)
                    if len(rows) == 0:
                        continue
                    first_f = fid[rows[0]]
                    rows = rows[fid[rows] == first_f]
                    Gs = G[rows]
                    order = np.lexsort(Gs.T[::-1])
                    g = Gs[order[0]]
                    f = F[first_f]
                    for i, j in iproduct(range(k + 1), range(e + 1)):
                        if bad[f[i], g[j]]:
                            r = None if probe is None else int(probe[f[i], g[j]])
                            found[p] = {"f": [int(c) for c in f], "g": [int(c) for c in g],
                                        "i": i, "j": j, "r": r}
                            break
    return found


def family_verdicts(R: FiniteRing, d: int = DEFAULT_DEGREE, budget: int = DEFAULT_BUDGET,
                    ) -> dict[Property, Verdict]:
    """Decide every polynomial property at degree bound ``d`` in one shared sweep."""
    cache = R.__dict__.setdefault("_family_cache", {})
    key = (d, budget)
    if key in cache:
        return cache[key]
    bounds = {"degree": d, "budget": budget}
    found: dict[Property, dict | None] = {}
    overrun = None
    try:
        _family_search(R, d, budget, FAMILY, found)
    except BudgetExceeded as exc:
        overrun = str(exc)
    out = {}
    for p in FAMILY:
        w = found.get(p)
        if w is None and overrun:
            out[p] = unknown(overrun, search_bounds=bounds)
        elif w is None:
            out[p] = holds(f"exhaustive at degree <= {d}", bound=d, search_bounds=bounds)
        else:
            w = dict(w)
            if p not in (Property.IDEAL_ARMENDARIZ, Property.STRONGLY_NIL_IFP):
                w.pop("r")
            out[p] = fails(w, search_bounds=bounds)
    arm = out[Property.ARMENDARIZ]
    wsc = decide_elementwise(R, Property.WEAKLY_SEMICOMMUTATIVE)
    if arm.status is Status.FAILS:
        wia = fails(dict(arm.witness, part=Property.ARMENDARIZ.value), search_bounds=bounds)
    elif wsc.status is Status.FAILS:
        wia = fails(dict(wsc.witness, part=Property.WEAKLY_SEMICOMMUTATIVE.value),
                    search_bounds=bounds)
    elif arm.status is Status.UNKNOWN:
        wia = unknown(arm.certificate, search_bounds=bounds)
    else:
        wia = holds(f"exhaustive at degree <= {d}", bound=d, search_bounds=bounds)
    out[Property.WEAK_IDEAL_ARMENDARIZ] = wia
    cache[key] = out
    return out


def decide_armendariz_family(R: FiniteRing, variant: Property, d: int = DEFAULT_DEGREE,
                             budget: int = DEFAULT_BUDGET) -> Verdict:
    return family_verdicts(R, d, budget)[variant]


def replay_polynomial(R: FiniteRing, prop: Property, w: dict) -> bool:
    """Recompute ``f g`` and the coefficient condition of a polynomial Fails witness."""
    if prop is Property.WEAK_IDEAL_ARMENDARIZ:
        part = Property(w["part"])
        inner = {k: v for k, v in w.items() if k != "part"}
        if part is Property.ARMENDARIZ:
            return replay_polynomial(R, part, inner)
        return replay_elementwise(R, part, inner)
    f, g = w["f"], w["g"]
    if not BoundedPolynomial(R, tuple(f)).__mul__(BoundedPolynomial(R, tuple(g))).is_zero():
        return False
    a, b = f[w["i"]], g[w["j"]]
    if prop is Property.ARMENDARIZ:
        return R.mul(a, b) != R.zero
    if prop is Property.WEAK_ARMENDARIZ:
        return not R.is_nilpotent(R.mul(a, b))[0]
    arb = R.mul(R.mul(a, w["r"]), b)
    if prop is Property.IDEAL_ARMENDARIZ:
        return arb != R.zero
    if prop is Property.STRONGLY_NIL_IFP:
        return not R.is_nilpotent(arb)[0]
    raise ValueError(prop)


def replay(R: FiniteRing, prop: Property, w: dict) -> bool:
    if prop.bounded:
        return replay_polynomial(R, prop, w)
    return replay_elementwise(R, prop, w)


def zero_product_pairs(R: FiniteRing, d: int, budget: int = DEFAULT_BUDGET,
                       ) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All ``(f, g)`` with ``deg f, deg g <= d`` and ``f g = 0``, as padded coefficient tuples.

    ``f`` runs in lexicographic order; for each ``f`` the ``g`` are lexicographic.
    """
    search = _Search(R, budget)
    n = R.order
    every_g = None
    for f in iproduct(range(n), repeat=d + 1):
        shift = next((s for s, c in enumerate(f) if c != R.zero), None)
        if shift is None:
            if every_g is None:
                every_g = list(iproduct(range(n), repeat=d + 1))
            search.spend(len(every_g))
            gs = every_g
        else:
            # x^s f' g = 0 exactly when f' g = 0
            F = np.array([f[shift:]], dtype=np.int64)
            _, G = search.kernel(F, d, exact=False)
            gs = sorted(tuple(int(c) for c in row) for row in G)
        for g in gs:
            yield tuple(f), g


def decide(R: FiniteRing, prop: Property, d: int = DEFAULT_DEGREE,
           budget: int = DEFAULT_BUDGET) -> Verdict:
    if prop.bounded:
        return family_verdicts(R, d, budget)[prop]
    return decide_elementwise(R, prop)


def decide_all(R: FiniteRing, d: int = DEFAULT_DEGREE, budget: int = DEFAULT_BUDGET,
               ) -> dict[Property, Verdict]:
    out = {p: decide_elementwise(R, p) for p in Property if not p.bounded}
    out.update(family_verdicts(R, d, budget))
    return {p: out[p] for p in Property}


# ----------------------------------------------------------------------
# presented algebras
def _replay_on_algebra(alg, prop: Property, w: dict, power_bound: int) -> tuple[bool | None, str]:
    """``(True, why)`` if the witness replays, ``(False, why)`` if refuted, ``(None, why)`` if open."""
    from .fpalgebra import verify_poly_identity

    el = alg.element

    def zero(x) -> bool | None:
        if not x.is_zero():
            return False
        return True if alg.exact_zero else None

    def not_nil(x) -> bool | None:
        nil, _, _ = alg.nilpotency(x, power_bound)
        return None if nil is None else not nil

    if prop.bounded:
        if prop is Property.WEAK_IDEAL_ARMENDARIZ:
            part = Property(w.get("part", Property.ARMENDARIZ.value))
            inner = {k: v for k, v in w.items() if k != "part"}
            return _replay_on_algebra(alg, part, inner, power_bound)
        ok, bad = verify_poly_identity(alg, w["f"], w["g"])
        if not ok:
            return False, f"f g has nonzero coefficients {bad}"
        if not alg.exact_zero:
            return None, "f g vanishes only modulo the truncation"
        a, b = el(w["f"][w["i"]]), el(w["g"][w["j"]])
        if prop is Property.ARMENDARIZ:
            return (True, f"{a * b} != 0") if not (a * b).is_zero() else (False, "a b = 0")
        if prop is Property.WEAK_ARMENDARIZ:
            res = not_nil(a * b)
            return res, f"a b = {a * b}"
        arb = a * el(w["r"]) * b
        if prop is Property.IDEAL_ARMENDARIZ:
            return (True, f"a r b = {arb} != 0") if not arb.is_zero() else (False, "a r b = 0")
        res = not_nil(arb)
        return res, f"a r b = {arb} " + ("is not nilpotent" if res else "may be nilpotent")
    if prop is Property.COMMUTATIVE:
        a, b = el(w["a"]), el(w["b"])
        return (a * b != b * a), f"ab = {a * b}, ba = {b * a}"
    if prop is Property.REDUCED:
        a = el(w["a"])
        if a.is_zero():
            return False, "a = 0"
        nil, k, why = alg.nilpotency(a, power_bound)
        return nil, why
    if prop is Property.ABELIAN:
        e, r = el(w["e"]), el(w["r"])
        if e * e != e:
            return False, "e is not idempotent"
        return (e * r != r * e), f"er = {e * r}, re = {r * e}"
    if prop in (Property.SEMICOMMUTATIVE, Property.WEAKLY_SEMICOMMUTATIVE, Property.REVERSIBLE):
        a, b = el(w["a"]), el(w["b"])
        z = zero(a * b)
        if z is not True:
            return (False if z is False else None), f"ab = {a * b}"
        if prop is Property.REVERSIBLE:
            return (not (b * a).is_zero()), f"ba = {b * a}"
        arb = a * el(w["r"]) * b
        if prop is Property.SEMICOMMUTATIVE:
            return (not arb.is_zero()), f"arb = {arb}"
        return not_nil(arb), f"arb = {arb}"
    return None, f"no algebra replay for {prop.value}"


def replay_on_algebra(alg, prop: Property, w: dict, power_bound: int = 64):
    return _replay_on_algebra(alg, prop, w, power_bound)


def decide_on_algebra(alg, variant: Property, witnesses: list[dict], power_bound: int = 64,
                      ) -> Verdict:
    """Fails if a supplied witness replays exactly; otherwise Unknown, never Holds."""
    reasons = []
    for w in witnesses:
        ok, why = _replay_on_algebra(alg, variant, w, power_bound)
        if ok:
            return fails(dict(w), certificate=why, source="witness")
        reasons.append(why)
    note = "; ".join(reasons) if reasons else "no witness supplied"
    return unknown(note, source="witness")


def structural_verdicts(alg) -> dict[Property, Verdict]:
    """Exact verdicts that follow from the shape of a presented algebra."""
    from .fpalgebra import TruncatedAlgebra, WordAlgebra

    out: dict[Property, Verdict] = {}
    names = alg.gens
    if isinstance(alg, TruncatedAlgebra) and alg.exact_zero:
        comm, pair = alg.is_commutative()
        out[Property.COMMUTATIVE] = (holds("generators commute modulo the ideal", source="structure")
                                     if comm else fails({"a": pair[0], "b": pair[1]},
                                                        source="structure"))
        live = [g for g in names if not alg.gen(g).is_zero()]
        out[Property.REDUCED] = (fails({"a": live[0]}, "nonzero generator in a nilpotent ideal",
                                       source="structure")
                                 if live else holds("the augmentation ideal is zero", source="structure"))
        why = ("the elements without scalar part form a nilpotent ideal containing every nilpotent"
               if alg.unital else "the whole algebra is a nilpotent ideal")
        for prop in (Property.TWO_PRIMAL, Property.NI, Property.QRPR, Property.ABELIAN):
            out[prop] = holds(why, source="structure")
    elif isinstance(alg, WordAlgebra):
        for a in names:
            for b in names:
                if a < b and alg.element(a) * alg.element(b) != alg.element(b) * alg.element(a):
                    out[Property.COMMUTATIVE] = fails({"a": a, "b": b}, source="structure")
                    break
            if Property.COMMUTATIVE in out:
                break
        for g in names:
            x = alg.element(g)
            if not x.is_zero() and alg.nilpotency(x)[0] is True:
                out[Property.REDUCED] = fails({"a": g}, "nonzero nilpotent generator",
                                              source="structure")
                break
    return out
