"""Finitely presented algebras over F_p.

Three engines share one element type:

* ``WordAlgebra``: untruncated free algebra modulo monomial patterns and/or a
  confluent set of rewriting rules; normal forms are exact.
* ``TruncatedAlgebra``: words (or commutative monomials) of length below ``L``
  modulo the F_p row space spanned by all multiples of the relations.
* commutative presentations with monomial relations get ``L`` inferred, so
  they are finite-dimensional truncated algebras as well.
"""
from __future__ import annotations

import math
import re
from itertools import product as iproduct
from typing import Iterable, Iterator

import numpy as np

from .core import FiniteRing, RingError, SizeCap
from .presentation import (Presentation, PresentationError, SymPoly, parse_poly,
                           parse_presentation)

DIMENSION_CAP = 10_000
REALIZE_CAP = 4096
DEFAULT_POWER_BOUND = 64
TERM_CAP = 20_000


class NonMonomialRelation(RingError):
    pass


class NotConfluent(RingError):
    pass


class DimensionCap(RingError):
    pass


class InconsistentPresentation(RingError):
    pass


class NoUnit(RingError):
    pass


Key = tuple  # word of generator indices, or exponent vector when commutative


class AlgebraElement:
    """Sparse F_p combination of normal-form keys."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: "Algebra", terms: dict):
        self.alg = alg
        self.terms = {k: c % alg.p for k, c in terms.items() if c % alg.p}

    def _coerce(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            if other.alg is not self.alg:
                raise RingError("elements of different algebras")
            return other
        if isinstance(other, int):
            return self.alg.scalar(other)
        if isinstance(other, str):
            return self.alg.element(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return AlgebraElement(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return AlgebraElement(self.alg, {k: c * other for k, c in self.terms.items()})
        other = self._coerce(other)
        return self.alg.multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return self._coerce(other) * self

    def __pow__(self, k: int):
        if k == 0:
            return self.alg.one()
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (RingError, PresentationError):
            return False
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def scalar_part(self) -> int:
        return self.terms.get(self.alg.unit_key, 0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __str__(self):
        return self.alg.render(self)

    __repr__ = __str__


class Algebra:
    """Common interface; subclasses provide ``_reduce`` and key arithmetic."""

    exact_zero = True  # False when a truncation only approximates the ideal

    def __init__(self, pres: Presentation):
        self.pres = pres
        self.p = pres.p
        self.gens = pres.gens
        self.unital = pres.unital
        self.commutative = pres.commutative
        self.label = pres.label

    # -- keys
    @property
    def unit_key(self) -> Key:
        return (0,) * len(self.gens) if self.commutative else ()

    def key_mul(self, a: Key, b: Key) -> Key:
        if self.commutative:
            return tuple(x + y for x, y in zip(a, b))
        return a + b

    def key_len(self, k: Key) -> int:
        return sum(k) if self.commutative else len(k)

    def order_key(self, k: Key):
        return (self.key_len(k), k)

    def word_key(self, word: tuple[int, ...]) -> Key:
        if not self.commutative:
            return tuple(word)
        exps = [0] * len(self.gens)
        for g in word:
            exps[g] += 1
        return tuple(exps)

    # -- elements
    def _reduce(self, terms: dict) -> dict:
        raise NotImplementedError

    def make(self, terms: dict) -> AlgebraElement:
        return AlgebraElement(self, self._reduce({k: c % self.p for k, c in terms.items()
                                                  if c % self.p}))

    def scalar(self, c: int) -> AlgebraElement:
        if c % self.p == 0:
            return AlgebraElement(self, {})
        if not self.unital:
            raise NoUnit(f"{self.label} has no identity")
        return AlgebraElement(self, {self.unit_key: c})

    def one(self) -> AlgebraElement:
        return self.scalar(1)

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def gen(self, name: str) -> AlgebraElement:
        return self.make({self.word_key((self.gens.index(name),)): 1})

    def element(self, text: str | AlgebraElement) -> AlgebraElement:
        if isinstance(text, AlgebraElement):
            return text
        poly, _ = parse_poly(str(text), self.gens, self.p)
        return self.from_sympoly(poly)

    def from_sympoly(self, poly: SymPoly) -> AlgebraElement:
        if () in poly and not self.unital:
            raise NoUnit(f"{self.label} has no identity; constant term not allowed")
        terms: dict = {}
        for w, c in poly.items():
            k = self.word_key(w)
            terms[k] = terms.get(k, 0) + c
        return self.make(terms)

    def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        terms: dict = {}
        for k1, c1 in x.terms.items():
            for k2, c2 in y.terms.items():
                k = self.key_mul(k1, k2)
                terms[k] = (terms.get(k, 0) + c1 * c2) % self.p
        return self.make(terms)

    def render_key(self, k: Key) -> str:
        if self.commutative:
            parts = []
            for g, e in zip(self.gens, k):
                if e == 1:
                    parts.append(g)
                elif e > 1:
                    parts.append(f"{g}^{e}")
            return "".join(parts) or "1"
        return "".join(self.gens[g] for g in k) or "1"

    def render(self, x: AlgebraElement) -> str:
        if not x.terms:
            return "0"
        parts = []
        for k in sorted(x.terms, key=self.order_key):
            c = x.terms[k]
            body = self.render_key(k)
            parts.append(body if c == 1 else (str(c) if body == "1" else f"{c}{body}"))
        return " + ".join(parts)

    def in_ideal(self, x: AlgebraElement | str | dict) -> bool:
        """True when the (unreduced) combination lies in the defining ideal."""
        if isinstance(x, str):
            x = self.element(x)
        if isinstance(x, AlgebraElement):
            return x.is_zero()
        return not self._reduce(dict(x))

    def nilpotency(self, x: AlgebraElement, power_bound: int = DEFAULT_POWER_BOUND,
                   ) -> tuple[bool | None, int | None, str]:
        """``(nilpotent?, index, reason)``; ``None`` means undecided within the bound."""
        raise NotImplementedError

    # structural summary used by the classifier
    @property
    def finite_dimensional(self) -> bool:
        return False


# ----------------------------------------------------------------------
# untruncated word algebras
def _pattern_regex(pattern: str, gens: tuple[str, ...]) -> tuple[re.Pattern, list[int], int]:
    """Regex over generator code points; also literal piece lengths and gap count."""
    pieces = re.split(r"(%\+|%)", pattern.replace(" ", ""))
    by_len = sorted(gens, key=len, reverse=True)
    regex, lengths, gaps = "", [], 0
    for piece in pieces:
        if piece == "%":
            regex += ".*"
            gaps += 1
        elif piece == "%+":
            regex += ".+"
            gaps += 1
        elif piece:
            codes, i = [], 0
            while i < len(piece):
                for g in by_len:
                    if piece.startswith(g, i):
                        codes.append(gens.index(g))
                        i += len(g)
                        break
                else:
                    raise PresentationError(f"cannot split pattern piece {piece!r}")
            regex += re.escape("".join(chr(0x100 + c) for c in codes))
            lengths.append(len(codes))
    if not lengths:
        raise PresentationError(f"pattern {pattern!r} has no literal letters")
    return re.compile(regex, re.DOTALL), lengths, gaps


def _code(word: Key) -> str:
    return "".join(chr(0x100 + g) for g in word)


class WordAlgebra(Algebra):
    """Free algebra modulo zero patterns and a confluent rewriting system."""

    def __init__(self, pres: Presentation):
        if pres.commutative or pres.truncate is not None:
            raise PresentationError("word algebras are untruncated and noncommutative")
        super().__init__(pres)
        self.patterns = [_pattern_regex(pat, self.gens) for pat in pres.patterns]
        self.rules: dict[Key, dict] = {}
        for rel in pres.relations:
            if rel.placeholders:
                raise NonMonomialRelation(
                    f"placeholder relation {rel.source!r} needs a pattern or a truncation")
            lead = max(rel.poly, key=self.order_key)
            inv = pow(rel.poly[lead], -1, self.p)
            rhs = {w: (-c * inv) % self.p for w, c in rel.poly.items() if w != lead}
            if lead in self.rules:
                raise NotConfluent(f"two relations share leading word {self.render_key(lead)}")
            self.rules[lead] = rhs
        self.rule_regex = None
        if self.rules:
            alternatives = sorted((_code(w) for w in self.rules), key=len, reverse=True)
            self.rule_regex = re.compile("|".join(re.escape(a) for a in alternatives))
        self.monomial = all(not rhs for rhs in self.rules.values())
        if not self.monomial and self.patterns:
            raise NonMonomialRelation("gap patterns combine only with monomial relations")
        self._check_confluence()

    def _match(self, word: Key):
        """First reducible factor: ``(start, end, replacement-or-None)``."""
        code = _code(word)
        best = None
        for regex, _, _ in self.patterns:
            m = regex.search(code)
            if m and (best is None or m.start() < best[0]):
                best = (m.start(), m.end(), None)
        if self.rule_regex is not None:
            m = self.rule_regex.search(code)
            if m and (best is None or m.start() < best[0]):
                best = (m.start(), m.end(), self.rules[tuple(word[m.start():m.end()])])
        return best

    def _reduce(self, terms: dict) -> dict:
        out: dict = {}
        work = dict(terms)
        while work:
            w = max(work, key=self.order_key)
            c = work.pop(w)
            hit = self._match(w)
            if hit is None:
                out[w] = (out.get(w, 0) + c) % self.p
                if not out[w]:
                    del out[w]
                continue
            start, end, rhs = hit
            if rhs is None:
                continue  # a pattern: the word itself lies in the ideal
            for r, rc in rhs.items():
                nw = w[:start] + r + w[end:]
                work[nw] = (work.get(nw, 0) + c * rc) % self.p
                if not work[nw]:
                    del work[nw]
        return out

    def _check_confluence(self) -> None:
        words = list(self.rules)
        for u in words:
            for v in words:
                overlaps = []
                for k in range(1, min(len(u), len(v))):
                    if u[-k:] == v[:k]:
                        overlaps.append((u + v[k:], u, 0, v, len(u) - k))
                if u != v and len(v) < len(u):
                    for s in range(len(u) - len(v) + 1):
                        if u[s:s + len(v)] == v:
                            overlaps.append((u, u, 0, v, s))
                for word, w1, s1, w2, s2 in overlaps:
                    first = self._apply(word, w1, s1)
                    second = self._apply(word, w2, s2)
                    if self._reduce(first) != self._reduce(second):
                        raise NotConfluent(
                            f"overlap {self.render_key(word)} has two normal forms")

    def _apply(self, word: Key, lead: Key, start: int) -> dict:
        out: dict = {}
        for r, rc in self.rules[lead].items():
            nw = word[:start] + r + word[start + len(lead):]
            out[nw] = (out.get(nw, 0) + rc) % self.p
        return {k: v for k, v in out.items() if v}

    def _power_window(self, m: Key) -> int:
        """Power of ``m`` whose factors include every factor any pattern can match in ``m^k``."""
        span = 0
        for _, lengths, gaps in self.patterns:
            span = max(span, sum(lengths) + gaps * len(m))
        for w in self.rules:
            span = max(span, len(w))
        return math.ceil(span / len(m)) + 1 if m else 1

    def nilpotency(self, x, power_bound: int = DEFAULT_POWER_BOUND):
        x = self.element(x)
        if x.is_zero():
            return True, 1, "zero"
        if self.unital and x.scalar_part:
            return False, None, "nonzero scalar part survives in the residue field"
        if x.is_monomial():
            (m, _), = x.terms.items()
            k0 = self._power_window(m)
            if self._match(m * k0) is None:
                return False, None, f"no relation occurs in ({self.render_key(m)})^{k0}, so no power vanishes"
            if self.monomial:
                for k in range(1, k0 + 1):
                    if self._match(m * k) is not None:
                        return True, k, f"a relation occurs in power {k}"
        y = x
        for k in range(1, power_bound + 1):
            if y.is_zero():
                return True, k, f"power {k} reduces to zero"
            if len(y.terms) > TERM_CAP:
                return None, None, f"power {k} has more than {TERM_CAP} terms"
            y = y * x
        return None, None, f"no power up to {power_bound} vanished"

    def normal_words(self, max_len: int) -> Iterator[Key]:
        """Normal words by increasing length (stops early once a level is empty)."""
        level = [()]
        for length in range(1, max_len + 1):
            nxt = []
            for w in level:
                for g in range(len(self.gens)):
                    cand = w + (g,)
                    if self._match(cand) is None:
                        nxt.append(cand)
            if not nxt:
                return
            yield from nxt
            level = nxt

    @property
    def finite_dimensional(self) -> bool:
        """True when normal words run out; more than ``DIMENSION_CAP`` of them counts as infinite."""
        level, seen = [()], 0
        for _ in range(64):
            level = [w + (g,) for w in level for g in range(len(self.gens))
                     if self._match(w + (g,)) is None]
            if not level:
                return True
            seen += len(level)
            if seen > DIMENSION_CAP:
                return False
        return False

    def basis(self) -> list[Key]:
        if not self.monomial or not self.finite_dimensional:
            raise DimensionCap(f"{self.label} is not a finite-dimensional monomial algebra")
        words = list(self.normal_words(64))
        return ([()] if self.unital else []) + words


# ----------------------------------------------------------------------
# truncated algebras
class RowSpace:
    """Incremental reduced row echelon form over F_p with sparse rows.

    Pivots are leading keys under ``order``; every stored row is zero in the
    other pivot columns, so reducing a vector takes one pass.
    """

    def __init__(self, p: int, order):
        self.p = p
        self.order = order
        self.rows: dict[Key, dict] = {}
        self.occ: dict[Key, set] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        p = self.p
        out: dict = {}
        for k, c in vec.items():
            if k not in self.rows:
                out[k] = (out.get(k, 0) + c) % p
        for k, c in vec.items():
            row = self.rows.get(k)
            if row is None:
                continue
            for k2, c2 in row.items():
                if k2 != k:
                    out[k2] = (out.get(k2, 0) - c * c2) % p
        return {k: c for k, c in out.items() if c}

    def insert(self, vec: dict) -> bool:
        res = self.reduce(vec)
        if not res:
            return False
        p = self.p
        lead = max(res, key=self.order)
        inv = pow(res[lead], -1, p)
        res = {k: c * inv % p for k, c in res.items()}
        for pc in list(self.occ.pop(lead, ())):
            row = self.rows[pc]
            a = row.pop(lead)
            for k, c in res.items():
                if k == lead:
                    continue
                v = (row.get(k, 0) - a * c) % p
                if v:
                    if k not in row:
                        self.occ.setdefault(k, set()).add(pc)
                    row[k] = v
                elif k in row:
                    del row[k]
                    self.occ[k].discard(pc)
        self.rows[lead] = res
        for k in res:
            if k != lead:
                self.occ.setdefault(k, set()).add(lead)
        return True

    def canonical(self) -> list[tuple[Key, tuple]]:
        return [(k, tuple(sorted(row.items(), key=lambda kv: self.order(kv[0]))))
                for k, row in sorted(self.rows.items(), key=lambda kv: self.order(kv[0]))]


def _words(n_gens: int, length: int) -> Iterator[tuple[int, ...]]:
    return iproduct(range(n_gens), repeat=length)


def _monomials(n_gens: int, degree: int) -> Iterator[tuple[int, ...]]:
    if n_gens == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in _monomials(n_gens - 1, degree - first):
            yield (first,) + rest


class TruncatedAlgebra(Algebra):
    """Words (or monomials) of length below ``L`` modulo the relation row space.

    With ``approximate`` set, long words are not genuine relations: a nonzero
    result is still exact, but vanishing may be an artifact of truncation.
    """

    def __init__(self, pres: Presentation, dimension_cap: int = DIMENSION_CAP):
        super().__init__(pres)
        self.L = pres.truncate if pres.truncate is not None else self._inferred_length()
        self.exact_zero = not pres.approximate
        self.ambient = self._ambient_keys()
        if len(self.ambient) > dimension_cap:
            raise DimensionCap(f"ambient dimension {len(self.ambient)} exceeds {dimension_cap}")
        self.space = RowSpace(self.p, self.order_key)
        self._build()
        self.basis_keys = [k for k in self.ambient if k not in self.space.rows]
        if self.unital:
            self.basis_keys = [self.unit_key] + self.basis_keys

    # -- construction
    def _inferred_length(self) -> int:
        if not self.commutative:
            raise PresentationError("noncommutative truncated algebras need truncate=<L>")
        pure = {}
        for rel in self.pres.relations:
            if len(rel.poly) == 1 and not rel.placeholders:
                (w, _), = rel.poly.items()
                k = self.word_key(w)
                support = [i for i, e in enumerate(k) if e]
                if len(support) == 1:
                    g = support[0]
                    pure[g] = min(pure.get(g, k[g]), k[g])
        if len(pure) < len(self.gens):
            raise DimensionCap("every generator needs a pure-power relation, or give truncate=<L>")
        return sum(e - 1 for e in pure.values()) + 1

    def _ambient_keys(self) -> list[Key]:
        out = []
        for length in range(1, self.L):
            it = _monomials(len(self.gens), length) if self.commutative else _words(len(self.gens), length)
            out.extend(tuple(k) for k in it)
        if self.commutative:
            return sorted(out, key=lambda k: (sum(k), tuple(-e for e in k)))
        return sorted(out, key=self.order_key)

    def keys_of_length(self, length: int) -> Iterator[Key]:
        if self.commutative:
            return (tuple(k) for k in _monomials(len(self.gens), length))
        return (tuple(k) for k in _words(len(self.gens), length))

    def _truncate(self, terms: dict) -> dict:
        return {k: c for k, c in terms.items() if 0 < self.key_len(k) < self.L or
                (self.key_len(k) == 0 and c)}

    def _instances(self) -> Iterator[dict]:
        """Relations with placeholders replaced by words, as truncated key combinations."""
        for rel in self.pres.relations:
            names = sorted(rel.placeholders)
            if not names:
                inst = self._truncate(self._sym_to_keys(rel.poly))
                if inst:
                    yield inst
                continue
            fixed = []
            for w in rel.poly:
                gens_in = sum(1 for t in w if isinstance(t, int))
                occ = {n: sum(1 for t in w if t == n) for n in names}
                fixed.append((gens_in, occ))
            mins = [1 if rel.placeholders[n].nonempty else 0 for n in names]

            def shortest(lengths):
                return min(g + sum(occ[n] * l for n, l in zip(names, lengths)) for g, occ in fixed)

            for lengths in iproduct(*(range(m, self.L) for m in mins)):
                if shortest(lengths) >= self.L:
                    continue
                for choice in iproduct(*(list(_words(len(self.gens), l)) for l in lengths)):
                    subst = dict(zip(names, choice))
                    poly: dict = {}
                    for w, c in rel.poly.items():
                        word = []
                        for t in w:
                            word.extend(subst[t] if isinstance(t, str) else (t,))
                        k = self.word_key(tuple(word))
                        poly[k] = (poly.get(k, 0) + c) % self.p
                    poly = self._truncate({k: c for k, c in poly.items() if c})
                    if poly:
                        yield poly

    def _sym_to_keys(self, poly: SymPoly) -> dict:
        out: dict = {}
        for w, c in poly.items():
            k = self.word_key(w)
            out[k] = (out.get(k, 0) + c) % self.p
        return {k: c for k, c in out.items() if c}

    def _pattern_instances(self) -> Iterator[dict]:
        if not self.pres.patterns:
            return
        if self.commutative:
            raise PresentationError("patterns are for noncommutative presentations")
        regexes = [_pattern_regex(pat, self.gens)[0] for pat in self.pres.patterns]
        for k in self.ambient:
            code = _code(k)
            if any(r.search(code) for r in regexes):
                yield {k: 1}

    def _build(self) -> None:
        if self.unital is False and any(() in r.poly for r in self.pres.relations):
            raise InconsistentPresentation("constant relation in a non-unital algebra")
        for inst in list(self._instances()):
            if self.unit_key in inst and self.key_len(self.unit_key) == 0 and self.unital:
                raise InconsistentPresentation("identity lies in the ideal")
            shortest = min(self.key_len(k) for k in inst)
            room = self.L - 1 - shortest
            if self.commutative:
                for t in range(room + 1):
                    for m in self.keys_of_length(t):
                        self._insert_multiple(inst, (m,))
            else:
                for t in range(room + 1):
                    for left_len in range(t + 1):
                        for u in _words(len(self.gens), left_len):
                            for v in _words(len(self.gens), t - left_len):
                                self._insert_multiple(inst, (tuple(u), tuple(v)))
        for inst in self._pattern_instances():
            self.space.insert(inst)

    def _insert_multiple(self, inst: dict, ctx) -> None:
        if self.commutative:
            (m,) = ctx
            row = {self.key_mul(m, k): c for k, c in inst.items()}
        else:
            u, v = ctx
            row = {u + k + v: c for k, c in inst.items()}
        row = {k: c for k, c in row.items() if self.key_len(k) < self.L}
        if row:
            self.space.insert(row)

    def verify_two_sided(self) -> bool:
        """Left and right multiples of every ideal row by every generator stay in the ideal."""
        for row in self.space.rows.values():
            for g in range(len(self.gens)):
                gk = self.word_key((g,))
                for side in (0, 1):
                    prod = {}
                    for k, c in row.items():
                        nk = self.key_mul(gk, k) if side == 0 else self.key_mul(k, gk)
                        if self.key_len(nk) < self.L:
                            prod[nk] = (prod.get(nk, 0) + c) % self.p
                    if self.space.reduce({k: c for k, c in prod.items() if c}):
                        return False
        return True

    # -- arithmetic
    def _reduce(self, terms: dict) -> dict:
        return self.space.reduce(self._truncate(terms))

    @property
    def dimension(self) -> int:
        return len(self.basis_keys)

    @property
    def ambient_dimension(self) -> int:
        return len(self.ambient)

    @property
    def finite_dimensional(self) -> bool:
        return True

    def basis(self) -> list[Key]:
        return list(self.basis_keys)

    def nilpotency(self, x, power_bound: int = DEFAULT_POWER_BOUND):
        x = self.element(x)
        if self.unital and x.scalar_part:
            return False, None, "nonzero scalar part survives in the residue field"
        if not self.exact_zero:
            return None, None, "truncation only approximates the ideal; vanishing powers are not conclusive"
        y = x
        for k in range(1, self.L + 1):
            if y.is_zero():
                return True, k, f"power {k} reduces to zero"
            y = y * x
        raise AssertionError("augmentation ideal failed to vanish below the truncation length")

    def is_commutative(self) -> tuple[bool, tuple[str, str] | None]:
        if self.commutative:
            return True, None
        for a in range(len(self.gens)):
            for b in range(a + 1, len(self.gens)):
                ga, gb = self.word_key((a,)), self.word_key((b,))
                comm = self.make({self.key_mul(ga, gb): 1, self.key_mul(gb, ga): -1})
                if not comm.is_zero():
                    return False, (self.gens[a], self.gens[b])
        return True, None


def build_algebra(pres: Presentation | str, dimension_cap: int = DIMENSION_CAP) -> Algebra:
    if isinstance(pres, str):
        pres = parse_presentation(pres)
    if pres.truncate is not None or pres.commutative:
        return TruncatedAlgebra(pres, dimension_cap)
    return WordAlgebra(pres)


build_truncated_algebra = TruncatedAlgebra


def build_pattern_algebra(pres: Presentation | str) -> WordAlgebra:
    if isinstance(pres, str):
        pres = parse_presentation(pres)
    for rel in pres.relations:
        if len(rel.poly) != 1:
            raise NonMonomialRelation(f"{rel.source!r} is not a single word")
    return WordAlgebra(pres)


def ideal_membership(alg: Algebra, elem) -> bool:
    """Whether ``elem`` (written in the free algebra) lies in the defining ideal."""
    if isinstance(elem, AlgebraElement):
        return elem.is_zero()
    return alg.element(elem).is_zero()


def verify_poly_identity(alg: Algebra, f: list, g: list) -> tuple[bool, list[tuple[int, str]]]:
    """Check ``f(t) g(t) = 0``; returns the nonzero coefficients ``(degree, value)`` if not."""
    F = [alg.element(c) for c in f]
    G = [alg.element(c) for c in g]
    coeffs = [alg.zero() for _ in range(len(F) + len(G) - 1)]
    for i, a in enumerate(F):
        for j, b in enumerate(G):
            coeffs[i + j] = coeffs[i + j] + a * b
    bad = [(k, str(c)) for k, c in enumerate(coeffs) if not c.is_zero()]
    return not bad, bad


def nilpotency_in_algebra(alg: Algebra, elem, power_bound: int = DEFAULT_POWER_BOUND):
    return alg.nilpotency(elem, power_bound)


def realize_as_finite_ring(alg: Algebra, size_cap: int = REALIZE_CAP,
                           validate: bool = True) -> FiniteRing:
    """Table ring on all F_p coordinate vectors over the quotient basis."""
    basis = alg.basis()
    dim = len(basis)
    order = alg.p ** dim
    if order > size_cap:
        raise SizeCap(f"{alg.label} has order {alg.p}^{dim} = {order} > {size_cap}")
    pos = {k: i for i, k in enumerate(basis)}
    C = np.zeros((dim, dim, dim), dtype=np.int64)
    for i, ki in enumerate(basis):
        for j, kj in enumerate(basis):
            prod = alg.make({alg.key_mul(ki, kj): 1})
            for k, c in prod.terms.items():
                C[i, j, pos[k]] = c
    p = alg.p
    coords = np.array(list(iproduct(range(p), repeat=dim)), dtype=np.int64).reshape(order, dim)
    weights = p ** np.arange(dim - 1, -1, -1, dtype=np.int64)
    add = ((coords[:, None, :] + coords[None, :, :]) % p) @ weights
    mul = np.empty((order, order), dtype=np.int64)
    step = max(1, (1 << 22) // max(1, order * dim))
    for s in range(0, order, step):
        left = coords[s:s + step]
        partial = np.einsum("ai,ijk->ajk", left, C) % p
        prod = np.einsum("ajk,bj->abk", partial, coords) % p
        mul[s:s + step] = prod @ weights
    one = None
    if alg.unital:
        one = int(weights[pos[alg.unit_key]])
    R = FiniteRing(add.astype(np.int32), mul.astype(np.int32), zero=0, one=one,
                   label=alg.label, layout=(p,) * dim, validate=validate)
    R.basis_names = [alg.render_key(k) for k in basis]
    return R
