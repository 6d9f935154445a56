"""Constructions of finite rings as validated tables.

Every constructor fixes a coordinate layout (mixed radix, first coordinate
most significant) so that element indices, and hence witnesses, are
reproducible.  Layouts:

* ``Z(n)``: the residue ``k`` is index ``k``.
* ``GF(p,k)``: index ``sum c_i p^i`` for the polynomial ``sum c_i x^i``.
* matrix rings: free entries in row-major order (``D``: the shared diagonal
  entry first, then the strictly upper entries; ``V``: the first row).
* ``T(R)``: ``(r, m)``; ``Dorroh(R,p)``: ``(r, s)``; products: ``(x_1..x_k)``;
  ``TruncPoly(R,n)``: ``(a_0..a_{n-1})``.
* quotients: cosets ordered by their least representative.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Callable, Sequence

import numpy as np

from . import core
from .core import ElementSubset, FiniteRing, RingError, SizeCap

ROW_CHUNK_ELEMENTS = 2_000_000


class NotPrime(RingError):
    pass


class NotIrreducible(RingError):
    pass


class NoBuiltinPolynomial(RingError):
    pass


class NotPAlgebra(RingError):
    pass


class NotAnIdeal(RingError):
    pass


def _check_cap(order: int, what: str) -> None:
    if order > core.SIZE_CAP:
        raise SizeCap(f"{what} would have {order} elements (cap {core.SIZE_CAP})")


def _all_coords(layout: Sequence[int]) -> np.ndarray:
    n = int(np.prod(layout))
    return np.stack(np.unravel_index(np.arange(n), tuple(layout)), axis=-1).astype(np.int64)


def _ravel(coords: np.ndarray, layout: Sequence[int]) -> np.ndarray:
    idx = np.zeros(coords.shape[:-1], dtype=np.int64)
    for pos, radix in enumerate(layout):
        idx = idx * radix + coords[..., pos]
    return idx


def _tables_from_coords(layout, add_fn: Callable, mul_fn: Callable):
    """Build tables from vectorized coordinate operations.

    ``add_fn``/``mul_fn`` take coordinate arrays of shape ``(a, b, k)`` and
    return the same shape.
    """
    coords = _all_coords(layout)
    n, k = coords.shape
    add = np.empty((n, n), dtype=np.int32)
    mul = np.empty((n, n), dtype=np.int32)
    step = max(1, ROW_CHUNK_ELEMENTS // max(1, n * k))
    Y = np.broadcast_to(coords[None, :, :], (1, n, k))
    for start in range(0, n, step):
        X = coords[start:start + step, None, :]
        Xb = np.broadcast_to(X, (X.shape[0], n, k))
        Yb = np.broadcast_to(Y, (X.shape[0], n, k))
        add[start:start + step] = _ravel(add_fn(Xb, Yb), layout)
        mul[start:start + step] = _ravel(mul_fn(Xb, Yb), layout)
    return add, mul


def _finish(add, mul, *, one, label, layout, validate, expr=None) -> FiniteRing:
    ring = FiniteRing(add, mul, one=one, label=label,
                      layout=layout, validate=validate)
    ring.construction = expr
    return ring


# ----------------------------------------------------------------------
# cyclic rings and fields
def cyclic_ring(n: int, *, validate: bool = True) -> FiniteRing:
    if n < 1:
        raise RingError("Z(n) needs n >= 1")
    _check_cap(n, f"Z({n})")
    idx = np.arange(n)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return _finish(add, mul, one=1 % n, label=f"Z({n})", layout=None, validate=validate,
                   expr=Expr("Z", (n,)))


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = [c % p for c in a]
    inv_lead = pow(m[-1], -1, p)
    while len(a) >= len(m):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * c) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = [c % p for c in poly]
    while poly and poly[-1] == 0:
        poly.pop()
    k = len(poly) - 1
    if k < 1:
        return False
    for deg in range(1, k // 2 + 1):
        for low in iproduct(range(p), repeat=deg):
            if not _poly_mod(poly, list(low) + [1], p):
                return False
    return True


def builtin_irreducible(p: int, k: int) -> list[int]:
    """Lexicographically least monic irreducible of degree ``k`` (``p^k <= 64``)."""
    if p**k > 64:
        raise NoBuiltinPolynomial(f"no built-in polynomial for GF({p}^{k}); supply one")
    for rev in iproduct(range(p), repeat=k):
        cand = list(reversed(rev)) + [1]
        if is_irreducible(cand, p):
            return cand
    raise NoBuiltinPolynomial(f"GF({p}^{k})")


def finite_field(p: int, k: int = 1, irreducible: Sequence[int] | None = None, *,
                 validate: bool = True) -> FiniteRing:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise RingError("GF(p,k) needs k >= 1")
    q = p**k
    _check_cap(q, f"GF({p},{k})")
    if k == 1:
        ring = cyclic_ring(p, validate=validate)
        ring.label = f"GF({p},1)"
        ring.construction = Expr("GF", (p, 1))
        return ring
    if irreducible is None:
        poly = builtin_irreducible(p, k)
    else:
        poly = [int(c) % p for c in irreducible]
        if len(poly) != k + 1 or poly[-1] == 0:
            raise NotIrreducible(f"polynomial must have degree {k}")
        if not is_irreducible(poly, p):
            raise NotIrreducible(f"{poly} is reducible over Z_{p}")
    digits = np.array([[(i // p**j) % p for j in range(k)] for i in range(q)], dtype=np.int64)
    weights = p ** np.arange(k)
    add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
    # x^j mod poly for j < 2k-1
    powers = []
    for j in range(2 * k - 1):
        r = _poly_mod([0] * j + [1], poly, p)
        powers.append(r + [0] * (k - len(r)))
    reduce = np.array(powers, dtype=np.int64)  # (2k-1, k)
    conv = np.zeros((q, q, 2 * k - 1), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            conv[:, :, i + j] += digits[:, None, i] * digits[None, :, j]
    mul = ((conv @ reduce) % p) @ weights
    label = f"GF({p},{k})"
    ring = FiniteRing(add, mul, zero=0, one=1, label=label, validate=validate)
    ring.field_polynomial = poly
    ring.construction = Expr("GF", (p, k) if irreducible is None else (p, k, tuple(poly)))
    return ring


# ----------------------------------------------------------------------
# matrix rings
def matrix_positions(n: int, shape: str) -> np.ndarray:
    """``pos[i, j]`` = free-entry index of matrix entry ``(i, j)``, or -1 for forced zero."""
    pos = -np.ones((n, n), dtype=np.int64)
    if shape == "M":
        pos[:] = np.arange(n * n).reshape(n, n)
    elif shape == "U":
        k = 0
        for i in range(n):
            for j in range(i, n):
                pos[i, j] = k
                k += 1
    elif shape == "D":
        k = 1
        for i in range(n):
            pos[i, i] = 0
            for j in range(i + 1, n):
                pos[i, j] = k
                k += 1
    elif shape == "V":
        for i in range(n):
            for j in range(i, n):
                pos[i, j] = j - i
    else:
        raise RingError(f"unknown matrix shape {shape!r}")
    return pos


def free_entries(n: int, shape: str) -> int:
    return {"M": n * n, "U": n * (n + 1) // 2, "D": n * (n - 1) // 2 + 1, "V": n}[shape]


def matrix_ring(R: FiniteRing, n: int, shape: str = "M", *, validate: bool = True) -> FiniteRing:
    if n < 1:
        raise RingError("matrix size must be >= 1")
    k = free_entries(n, shape)
    order = R.order**k
    _check_cap(order, f"{shape}({n},{R.label})")
    pos = matrix_positions(n, shape)
    # representative matrix position for each free entry (first in row-major order)
    rep = [tuple(int(v) for v in np.argwhere(pos == f)[0]) for f in range(k)]
    A, Mt, zero = R.add_table, R.mul_table, R.zero

    def to_matrix(X):
        padded = np.concatenate([X, np.full(X.shape[:-1] + (1,), zero)], axis=-1)
        return padded[..., pos]  # (..., n, n), -1 maps to the padded zero column

    def add_fn(X, Y):
        return A[X, Y]

    def mul_fn(X, Y):
        MX, MY = to_matrix(X), to_matrix(Y)
        out = np.empty(X.shape, dtype=np.int64)
        for f, (i, j) in enumerate(rep):
            acc = np.full(X.shape[:-1], zero, dtype=np.int64)
            for m in range(n):
                acc = A[acc, Mt[MX[..., i, m], MY[..., m, j]]]
            out[..., f] = acc
        return out

    layout = (R.order,) * k
    add, mul = _tables_from_coords(layout, add_fn, mul_fn)
    one = None
    if R.one is not None:
        ident = []
        for (i, j) in rep:
            ident.append(R.one if i == j else zero)
        one = int(_ravel(np.array(ident), layout))
    return _finish(add, mul, one=one, label=f"{shape}({n},{R.label})", layout=layout,
                   validate=validate, expr=_expr_of(shape, (n,), R))


def matrix_element(R_shape: FiniteRing, entries) -> int:
    """Index of a matrix (given as a full n x n nested list of base indices) in a matrix ring."""
    expr = R_shape.construction
    shape, n = expr.kind, expr.params[0]
    pos = matrix_positions(n, shape)
    k = free_entries(n, shape)
    coords = [None] * k
    for i in range(n):
        for j in range(n):
            f = pos[i, j]
            if f >= 0 and coords[f] is None:
                coords[f] = int(entries[i][j])
    return R_shape.index_of(coords)


# ----------------------------------------------------------------------
# extensions and products
def _scalar_mult_table(R: FiniteRing, p: int) -> np.ndarray:
    """``S[s, r] = s * r`` (integer multiple) for ``s in 0..p-1``."""
    out = np.empty((p, R.order), dtype=np.int64)
    acc = np.full(R.order, R.zero, dtype=np.int64)
    for s in range(p):
        out[s] = acc
        acc = R.add_table[acc, np.arange(R.order)]
    return out


def trivial_extension(R: FiniteRing, *, validate: bool = True) -> FiniteRing:
    _check_cap(R.order**2, f"T({R.label})")
    A, M = R.add_table, R.mul_table

    def add_fn(X, Y):
        return A[X, Y]

    def mul_fn(X, Y):
        r = M[X[..., 0], Y[..., 0]]
        m = A[M[X[..., 0], Y[..., 1]], M[X[..., 1], Y[..., 0]]]
        return np.stack([r, m], axis=-1)

    layout = (R.order, R.order)
    add, mul = _tables_from_coords(layout, add_fn, mul_fn)
    one = None if R.one is None else R.one * R.order + R.zero
    return _finish(add, mul, one=one, label=f"T({R.label})", layout=layout, validate=validate,
                   expr=_expr_of("T", (), R))


def dorroh_extension(R: FiniteRing, p: int, *, validate: bool = True) -> FiniteRing:
    """Unitalization ``R (+) Z_p`` with ``(r1,s1)(r2,s2) = (r1 r2 + s1 r2 + s2 r1, s1 s2)``."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    S = _scalar_mult_table(R, p + 1)
    bad = np.flatnonzero(S[p] != R.zero)
    if len(bad):
        raise NotPAlgebra(f"{p}*{R.name(int(bad[0]))} != 0 in {R.label}")
    _check_cap(R.order * p, f"Dorroh({R.label},{p})")
    A, M = R.add_table, R.mul_table

    def add_fn(X, Y):
        return np.stack([A[X[..., 0], Y[..., 0]], (X[..., 1] + Y[..., 1]) % p], axis=-1)

    def mul_fn(X, Y):
        r1, s1, r2, s2 = X[..., 0], X[..., 1], Y[..., 0], Y[..., 1]
        r = A[A[M[r1, r2], S[s1, r2]], S[s2, r1]]
        return np.stack([r, (s1 * s2) % p], axis=-1)

    layout = (R.order, p)
    add, mul = _tables_from_coords(layout, add_fn, mul_fn)
    one = R.zero * p + 1
    return _finish(add, mul, one=one, label=f"Dorroh({R.label},{p})", layout=layout,
                   validate=validate, expr=_expr_of("Dorroh", (p,), R))


def direct_product(rings: Sequence[FiniteRing], *, validate: bool = True) -> FiniteRing:
    if not rings:
        raise RingError("Product needs at least one factor")
    layout = tuple(r.order for r in rings)
    _check_cap(int(np.prod(layout)), "Product")
    label = "Product(" + ",".join(r.label for r in rings) + ")"
    if len(rings) == 1:
        R = rings[0]
        ring = _finish(R.add_table, R.mul_table, one=R.one, label=label, layout=layout,
                       validate=False, expr=_expr_of("Product", (), *rings))
        return ring

    def add_fn(X, Y):
        return np.stack([r.add_table[X[..., i], Y[..., i]] for i, r in enumerate(rings)], axis=-1)

    def mul_fn(X, Y):
        return np.stack([r.mul_table[X[..., i], Y[..., i]] for i, r in enumerate(rings)], axis=-1)

    add, mul = _tables_from_coords(layout, add_fn, mul_fn)
    one = None
    if all(r.one is not None for r in rings):
        one = int(_ravel(np.array([r.one for r in rings]), layout))
    zero_coords = np.array([r.zero for r in rings])
    ring = FiniteRing(add, mul, zero=int(_ravel(zero_coords, layout)), one=one, label=label,
                      layout=layout, validate=validate)
    ring.construction = _expr_of("Product", (), *rings)
    return ring


def truncated_poly(R: FiniteRing, n: int, *, validate: bool = True) -> FiniteRing:
    """``R[x]/<x^n>`` on coefficient tuples ``(a_0, ..., a_{n-1})``."""
    if n < 1:
        raise RingError("TruncPoly needs n >= 1")
    _check_cap(R.order**n, f"TruncPoly({R.label},{n})")
    A, M, zero = R.add_table, R.mul_table, R.zero

    def add_fn(X, Y):
        return A[X, Y]

    def mul_fn(X, Y):
        out = np.empty(X.shape, dtype=np.int64)
        for k in range(n):
            acc = np.full(X.shape[:-1], zero, dtype=np.int64)
            for i in range(k + 1):
                acc = A[acc, M[X[..., i], Y[..., k - i]]]
            out[..., k] = acc
        return out

    layout = (R.order,) * n
    add, mul = _tables_from_coords(layout, add_fn, mul_fn)
    one = None
    if R.one is not None:
        one = int(_ravel(np.array([R.one] + [zero] * (n - 1)), layout))
    zero_idx = int(_ravel(np.array([zero] * n), layout))
    ring = FiniteRing(add, mul, zero=zero_idx, one=one, label=f"TruncPoly({R.label},{n})",
                      layout=layout, validate=validate)
    ring.construction = _expr_of("TruncPoly", (n,), R)
    return ring


class Quotient:
    """``R/I`` together with the projection ``R -> R/I``."""

    def __init__(self, ring: FiniteRing, projection: np.ndarray, representatives: np.ndarray):
        self.ring = ring
        self.projection = projection
        self.representatives = representatives

    def project(self, a: int) -> int:
        return int(self.projection[a])

    def lift(self, coset: int) -> int:
        return int(self.representatives[coset])


def quotient_ring(R: FiniteRing, I: ElementSubset, *, label: str | None = None) -> Quotient:
    if not I.is_ideal:
        raise NotAnIdeal(f"{I} is not a two-sided ideal of {R.label}")
    members = np.array(I.members)
    cosets = R.add_table[:, members]  # row a: the coset a + I
    rep_of = cosets.min(axis=1)
    reps = np.unique(rep_of)
    relabel = np.full(R.order, -1, dtype=np.int64)
    relabel[reps] = np.arange(len(reps))
    proj = relabel[rep_of]
    add = proj[R.add_table[np.ix_(reps, reps)]]
    mul = proj[R.mul_table[np.ix_(reps, reps)]]
    one = None if R.one is None else int(proj[R.one])
    ring = FiniteRing(add, mul, zero=int(proj[R.zero]), one=one,
                      label=label or f"{R.label}/I", validate=True)
    ring.coset_representatives = reps
    ring.quotient_parent = R
    return Quotient(ring, proj, reps)


def subring(R: FiniteRing, generators, *, label: str | None = None) -> FiniteRing:
    S = R.closure(generators, "subring")
    ring = R.restrict(S, label=label)
    return ring


# ----------------------------------------------------------------------
# construction expressions
@dataclass(frozen=True)
class Expr:
    """A node of the construction language; ``args`` are sub-expressions."""

    kind: str
    params: tuple = ()
    args: tuple = ()
    gens: tuple = ()

    def __str__(self) -> str:
        def fmt_gen(g):
            if isinstance(g, tuple):
                return "(" + ",".join(str(c) for c in g) + ")"
            return str(g)

        if self.kind == "Z":
            return f"Z({self.params[0]})"
        if self.kind == "GF":
            p, k = self.params[:2]
            if len(self.params) > 2:
                return f"GF({p},{k},[{','.join(str(c) for c in self.params[2])}])"
            return f"GF({p},{k})"
        if self.kind in ("M", "U", "D", "V"):
            return f"{self.kind}({self.params[0]},{self.args[0]})"
        if self.kind == "T":
            return f"T({self.args[0]})"
        if self.kind == "Dorroh":
            return f"Dorroh({self.args[0]},{self.params[0]})"
        if self.kind == "Product":
            return "Product(" + ",".join(str(a) for a in self.args) + ")"
        if self.kind == "TruncPoly":
            return f"TruncPoly({self.args[0]},{self.params[0]})"
        if self.kind in ("Quotient", "Subring"):
            return f"{self.kind}({self.args[0]},gens=[{','.join(fmt_gen(g) for g in self.gens)}])"
        if self.kind == "Table":
            return f"Table({self.params[0]})"
        raise RingError(f"unknown expression kind {self.kind}")


def _expr_of(kind: str, params: tuple, *rings: FiniteRing) -> Expr | None:
    args = tuple(r.construction for r in rings)
    if any(a is None for a in args):
        args = tuple(a if a is not None else Expr("Table", (r.label,)) for a, r in zip(args, rings))
    return Expr(kind, params, args)


class ExprSyntaxError(RingError):
    pass


_KINDS = {"Z", "GF", "M", "U", "D", "V", "T", "Dorroh", "Product", "TruncPoly", "Quotient",
          "Subring"}


class _Parser:
    def __init__(self, text: str):
        import re

        self.text = text
        self.tokens = re.findall(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|[(),=\[\]])", text)
        joined = "".join(self.tokens)
        if joined != "".join(text.split()):
            raise ExprSyntaxError(f"unexpected characters in {text!r}")
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ExprSyntaxError(f"expected {expected or 'token'} at {self.pos} in {self.text!r}, got {tok!r}")
        self.pos += 1
        return tok

    def integer(self) -> int:
        tok = self.take()
        if not tok.isdigit():
            raise ExprSyntaxError(f"expected integer, got {tok!r}")
        return int(tok)

    def int_list(self, close: str) -> tuple:
        vals = []
        while self.peek() != close:
            vals.append(self.integer())
            if self.peek() == ",":
                self.take(",")
        self.take(close)
        return tuple(vals)

    def gens(self) -> tuple:
        self.take("gens")
        self.take("=")
        self.take("[")
        out = []
        while self.peek() != "]":
            if self.peek() == "(":
                self.take("(")
                out.append(self.int_list(")"))
            else:
                out.append(self.integer())
            if self.peek() == ",":
                self.take(",")
        self.take("]")
        return tuple(out)

    def expr(self) -> Expr:
        kind = self.take()
        if kind not in _KINDS:
            raise ExprSyntaxError(f"unknown constructor {kind!r}")
        self.take("(")
        if kind == "Z":
            node = Expr("Z", (self.integer(),))
        elif kind == "GF":
            p = self.integer()
            self.take(",")
            k = self.integer()
            if self.peek() == ",":
                self.take(",")
                self.take("[")
                node = Expr("GF", (p, k, self.int_list("]")))
            else:
                node = Expr("GF", (p, k))
        elif kind in ("M", "U", "D", "V"):
            n = self.integer()
            self.take(",")
            node = Expr(kind, (n,), (self.expr(),))
        elif kind == "T":
            node = Expr("T", (), (self.expr(),))
        elif kind == "Dorroh":
            inner = self.expr()
            self.take(",")
            node = Expr("Dorroh", (self.integer(),), (inner,))
        elif kind == "TruncPoly":
            inner = self.expr()
            self.take(",")
            node = Expr("TruncPoly", (self.integer(),), (inner,))
        elif kind == "Product":
            args = [self.expr()]
            while self.peek() == ",":
                self.take(",")
                args.append(self.expr())
            node = Expr("Product", (), tuple(args))
        else:
            inner = self.expr()
            self.take(",")
            node = Expr(kind, (), (inner,), self.gens())
        self.take(")")
        return node


def parse_expr(text: str) -> Expr:
    parser = _Parser(text)
    node = parser.expr()
    if parser.peek() is not None:
        raise ExprSyntaxError(f"trailing input in {text!r}")
    return node


def resolve_gens(R: FiniteRing, gens: Sequence) -> list[int]:
    out = []
    for g in gens:
        out.append(R.index_of(g) if isinstance(g, tuple) else int(g))
        if not 0 <= out[-1] < R.order:
            raise RingError(f"generator {g} outside {R.label}")
    return out


def evaluate(expr: Expr | str, *, validate: bool = True, cache: dict | None = None) -> FiniteRing:
    """Evaluate a construction expression to a ring; sub-results are memoized in ``cache``."""
    if isinstance(expr, str):
        expr = parse_expr(expr)
    key = str(expr)
    if cache is not None and key in cache:
        return cache[key]
    k = expr.kind
    sub = [evaluate(a, validate=validate, cache=cache) for a in expr.args]
    if k == "Z":
        ring = cyclic_ring(expr.params[0], validate=validate)
    elif k == "GF":
        poly = expr.params[2] if len(expr.params) > 2 else None
        ring = finite_field(expr.params[0], expr.params[1], poly, validate=validate)
    elif k in ("M", "U", "D", "V"):
        ring = matrix_ring(sub[0], expr.params[0], k, validate=validate)
    elif k == "T":
        ring = trivial_extension(sub[0], validate=validate)
    elif k == "Dorroh":
        ring = dorroh_extension(sub[0], expr.params[0], validate=validate)
    elif k == "Product":
        ring = direct_product(sub, validate=validate)
    elif k == "TruncPoly":
        ring = truncated_poly(sub[0], expr.params[0], validate=validate)
    elif k == "Quotient":
        I = sub[0].ideal(resolve_gens(sub[0], expr.gens))
        q = quotient_ring(sub[0], I, label=key)
        ring = q.ring
        ring.projection = q.projection
        ring.quotient_ideal = I
    elif k == "Subring":
        ring = subring(sub[0], resolve_gens(sub[0], expr.gens), label=key)
    else:
        raise RingError(f"cannot evaluate {k}")
    ring.label = key
    ring.construction = expr
    if cache is not None:
        cache[key] = ring
    return ring


def is_isomorphism(R: FiniteRing, S: FiniteRing, mapping: Sequence[int]) -> bool:
    """Check that ``mapping`` (index in R -> index in S) is a ring isomorphism."""
    f = np.asarray(mapping)
    if R.order != S.order or len(set(f.tolist())) != R.order:
        return False
    return bool(np.array_equal(f[R.add_table], S.add_table[np.ix_(f, f)])
                and np.array_equal(f[R.mul_table], S.mul_table[np.ix_(f, f)]))
