"""Finite rings given by explicit addition and multiplication tables.

Elements are dense indices ``0 .. order-1``.  All heavy lifting is done on
numpy tables; a :class:`FiniteRing` is immutable once validated.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

SIZE_CAP = 2**20
FULL_VALIDATION_LIMIT = 256
SAMPLED_TRIPLES = 10**6


class RingError(ValueError):
    """Base class for ring construction and arithmetic errors."""


class AxiomError(RingError):
    def __init__(self, message: str, witness: tuple[int, ...]):
        super().__init__(f"{message}: witness {witness}")
        self.witness = witness


class NotAbelianGroup(AxiomError):
    pass


class NotAssociative(AxiomError):
    pass


class NotDistributive(AxiomError):
    pass


class BadIdentity(AxiomError):
    pass


class RingMismatch(RingError):
    pass


class PowerZeroNonUnital(RingError):
    pass


class RequiresIdentity(RingError):
    pass


class SizeCap(RingError):
    pass


class TableFormatError(RingError):
    pass


def _as_table(raw, name: str) -> np.ndarray:
    table = np.asarray(raw, dtype=np.int64)
    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        raise TableFormatError(f"{name} table must be square, got shape {table.shape}")
    n = table.shape[0]
    if n == 0:
        raise TableFormatError("ring must have at least one element")
    if table.min() < 0 or table.max() >= n:
        raise TableFormatError(f"{name} table has entries outside [0, {n})")
    return table.astype(np.int32)


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(v) for v in hits[0])


class FiniteRing:
    """A finite (not necessarily unital) associative ring.

    ``layout`` optionally records the mixed-radix coordinate system used by
    the constructor so that elements can be written as coordinate tuples.
    """

    def __init__(
        self,
        add_table,
        mul_table,
        *,
        zero: int | None = None,
        one: int | None = None,
        label: str = "R",
        layout: Sequence[int] | None = None,
        validate: bool = True,
        rng_seed: int = 0,
    ):
        self.add_table = _as_table(add_table, "add")
        self.mul_table = _as_table(mul_table, "mul")
        if self.add_table.shape != self.mul_table.shape:
            raise TableFormatError("add and mul tables differ in size")
        self.order = int(self.add_table.shape[0])
        if self.order > SIZE_CAP:
            raise SizeCap(f"order {self.order} exceeds size cap {SIZE_CAP}")
        self.label = label
        self.layout = tuple(layout) if layout is not None else None
        if self.layout is not None and int(np.prod(self.layout)) != self.order:
            raise TableFormatError("layout radices do not multiply to the order")
        self.zero = self._find_zero() if zero is None else int(zero)
        self.one = None if one is None else int(one)
        self.partially_validated = False
        self.construction = None
        self.add_table.setflags(write=False)
        self.mul_table.setflags(write=False)
        if validate:
            self._validate(rng_seed)

    # ------------------------------------------------------------------
    # validation
    def _find_zero(self) -> int:
        idx = np.arange(self.order)
        for z in range(self.order):
            if np.array_equal(self.add_table[z], idx) and np.array_equal(self.add_table[:, z], idx):
                return z
        raise NotAbelianGroup("no additive identity", ())

    def _validate(self, seed: int) -> None:
        n = self.order
        A, M = self.add_table, self.mul_table
        idx = np.arange(n)
        if not (np.array_equal(A[self.zero], idx) and np.array_equal(A[:, self.zero], idx)):
            raise NotAbelianGroup("zero is not an additive identity", (self.zero,))
        w = _first(A != A.T)
        if w is not None:
            raise NotAbelianGroup("addition is not commutative", w)
        has_inverse = (A == self.zero).any(axis=1)
        if not has_inverse.all():
            raise NotAbelianGroup("element without additive inverse", (int(np.argmin(has_inverse)),))
        full = n <= FULL_VALIDATION_LIMIT
        if full:
            triples = None
        else:
            self.partially_validated = True
            gen = np.random.default_rng(seed)
            triples = gen.integers(0, n, size=(SAMPLED_TRIPLES, 3))
        lhs_rhs = [
            (NotAbelianGroup, "addition is not associative",
             lambda a, b, c: A[A[a, b], c], lambda a, b, c: A[a, A[b, c]]),
            (NotAssociative, "multiplication is not associative",
             lambda a, b, c: M[M[a, b], c], lambda a, b, c: M[a, M[b, c]]),
            (NotDistributive, "left distributivity fails",
             lambda a, b, c: M[a, A[b, c]], lambda a, b, c: A[M[a, b], M[a, c]]),
            (NotDistributive, "right distributivity fails",
             lambda a, b, c: M[A[a, b], c], lambda a, b, c: A[M[a, c], M[b, c]]),
        ]
        for exc, message, lhs, rhs in lhs_rhs:
            if full:
                a, b, c = idx[:, None, None], idx[None, :, None], idx[None, None, :]
                w = _first(lhs(a, b, c) != rhs(a, b, c))
            else:
                a, b, c = triples[:, 0], triples[:, 1], triples[:, 2]
                bad = np.flatnonzero(lhs(a, b, c) != rhs(a, b, c))
                w = tuple(int(v) for v in triples[bad[0]]) if len(bad) else None
            if w is not None:
                raise exc(message, w)
        if self.one is not None:
            if not (0 <= self.one < n):
                raise BadIdentity("identity index out of range", (self.one,))
            bad = np.flatnonzero((M[self.one] != idx) | (M[:, self.one] != idx))
            if len(bad):
                raise BadIdentity("claimed identity is not two-sided", (self.one, int(bad[0])))

    # ------------------------------------------------------------------
    # basic structure
    @property
    def is_unital(self) -> bool:
        return self.one is not None

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteRing({self.label!r}, order={self.order}, one={self.one})"

    def elements(self) -> range:
        return range(self.order)

    def element(self, index: int) -> "Element":
        return Element(self, int(index))

    @cached_property
    def neg_table(self) -> np.ndarray:
        rows, cols = np.nonzero(self.add_table == self.zero)
        neg = np.empty(self.order, dtype=np.int32)
        neg[rows] = cols
        neg.setflags(write=False)
        return neg

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def smul(self, k: int, a: int) -> int:
        """Integer multiple ``k * a`` by double-and-add."""
        if k < 0:
            k, a = -k, self.neg(a)
        acc, base = self.zero, a
        while k:
            if k & 1:
                acc = self.add(acc, base)
            base = self.add(base, base)
            k >>= 1
        return acc

    def power(self, a: int, k: int) -> int:
        if k < 0:
            raise RingError("negative powers are not supported")
        if k == 0:
            if self.one is None:
                raise PowerZeroNonUnital(f"a^0 is undefined in non-unital ring {self.label}")
            return self.one
        acc, base = None, a
        while k:
            if k & 1:
                acc = base if acc is None else self.mul(acc, base)
            base = self.mul(base, base)
            k >>= 1
        return acc

    def is_nilpotent(self, a: int) -> tuple[bool, int | None]:
        """Return ``(True, k)`` for the least ``k`` with ``a^k = 0``, else ``(False, None)``."""
        seen = set()
        x, k = int(a), 1
        while True:
            if x == self.zero:
                return True, k
            if x in seen or k > self.order + 1:
                return False, None
            seen.add(x)
            x = self.mul(x, a)
            k += 1

    @cached_property
    def nilpotent_mask(self) -> np.ndarray:
        """Boolean mask of nilpotent elements, by iterated squaring of the whole table.

        ``a`` is nilpotent iff ``a^(2^m) = 0`` for ``2^m >= order``.
        """
        x = np.arange(self.order)
        steps = max(1, int(np.ceil(np.log2(self.order + 1))))
        for _ in range(steps):
            x = self.mul_table[x, x]
        mask = x == self.zero
        mask.setflags(write=False)
        return mask

    @cached_property
    def characteristic(self) -> int:
        """Additive exponent: least ``m > 0`` with ``m * x = 0`` for all ``x``."""
        x = np.arange(self.order)
        acc = x.copy()
        m = 1
        while not (acc == self.zero).all():
            acc = self.add_table[acc, x]
            m += 1
        return m

    # ------------------------------------------------------------------
    # coordinates
    def coords(self, index: int) -> tuple[int, ...]:
        if self.layout is None:
            return (int(index),)
        out = []
        for radix in reversed(self.layout):
            index, digit = divmod(int(index), radix)
            out.append(digit)
        return tuple(reversed(out))

    def index_of(self, coords: Sequence[int]) -> int:
        if self.layout is None:
            if len(coords) != 1:
                raise RingError(f"{self.label} has no coordinate layout")
            return int(coords[0])
        if len(coords) != len(self.layout):
            raise RingError(f"expected {len(self.layout)} coordinates, got {len(coords)}")
        index = 0
        for radix, digit in zip(self.layout, coords):
            if not 0 <= digit < radix:
                raise RingError(f"coordinate {digit} out of range {radix}")
            index = index * radix + int(digit)
        return index

    def name(self, index: int) -> str:
        if self.layout is None:
            parent = getattr(self, "parent_ring", None)
            if parent is not None:
                return parent.name(int(self.embedding[index]))
            reps = getattr(self, "coset_representatives", None)
            if reps is not None:
                return "[" + self.quotient_parent.name(int(reps[index])) + "]"
            return str(int(index))
        return "(" + ",".join(str(c) for c in self.coords(index)) + ")"

    # ------------------------------------------------------------------
    # special subsets
    @cached_property
    def center(self) -> "ElementSubset":
        comm = (self.mul_table == self.mul_table.T).all(axis=1)
        return ElementSubset(self, np.flatnonzero(comm))

    @cached_property
    def idempotents(self) -> "ElementSubset":
        idx = np.arange(self.order)
        return ElementSubset(self, np.flatnonzero(self.mul_table[idx, idx] == idx))

    @cached_property
    def units(self) -> "ElementSubset":
        if self.one is None:
            raise RequiresIdentity(f"units need an identity; {self.label} has none")
        hits = self.mul_table == self.one
        right_inv = hits.any(axis=1)
        left_inv = hits.any(axis=0)
        return ElementSubset(self, np.flatnonzero(right_inv & left_inv))

    @cached_property
    def left_zero_divisor_mask(self) -> np.ndarray:
        """``a`` with ``a*b = 0`` for some ``b != 0``."""
        z = self.mul_table == self.zero
        z[:, self.zero] = False
        return z.any(axis=1)

    @cached_property
    def right_zero_divisor_mask(self) -> np.ndarray:
        z = self.mul_table == self.zero
        z[self.zero, :] = False
        return z.any(axis=0)

    @cached_property
    def regular_elements(self) -> "ElementSubset":
        mask = ~(self.left_zero_divisor_mask | self.right_zero_divisor_mask)
        mask[self.zero] = self.order == 1
        return ElementSubset(self, np.flatnonzero(mask))

    @cached_property
    def central_regular(self) -> "ElementSubset":
        return ElementSubset(self, sorted(set(self.center) & set(self.regular_elements)))

    def subset(self, members: Iterable[int]) -> "ElementSubset":
        return ElementSubset(self, members)

    def closure(self, generators: Iterable[int], mode: str = "subring") -> "ElementSubset":
        """Least subring or two-sided ideal containing ``generators``."""
        if mode not in ("subring", "two_sided_ideal", "additive"):
            raise ValueError(f"unknown closure mode {mode!r}")
        mask = np.zeros(self.order, dtype=bool)
        mask[self.zero] = True
        mask[list(generators)] = True
        A, M = self.add_table, self.mul_table
        while True:
            members = np.flatnonzero(mask)
            new = mask.copy()
            new[A[np.ix_(members, members)].ravel()] = True
            if mode != "additive":
                new[M[np.ix_(members, members)].ravel()] = True
            if mode == "two_sided_ideal":
                new[M[:, members].ravel()] = True
                new[M[members, :].ravel()] = True
            if np.array_equal(new, mask):
                return ElementSubset(self, members)
            mask = new

    def ideal(self, generators: Iterable[int]) -> "ElementSubset":
        return self.closure(generators, "two_sided_ideal")

    def restrict(self, subset: "ElementSubset", label: str | None = None) -> "FiniteRing":
        """The subring on ``subset`` (which must be closed) with renumbered elements."""
        members = np.asarray(subset.members, dtype=np.int64)
        if not subset.is_subring:
            raise RingError("subset is not closed under + and *")
        relabel = np.full(self.order, -1, dtype=np.int64)
        relabel[members] = np.arange(len(members))
        add = relabel[self.add_table[np.ix_(members, members)]]
        mul = relabel[self.mul_table[np.ix_(members, members)]]
        ring = FiniteRing(add, mul, zero=int(relabel[self.zero]),
                          one=_identity_of(mul), label=label or f"sub({self.label})",
                          validate=False)
        ring.embedding = members
        ring.parent_ring = self
        return ring

    # ------------------------------------------------------------------
    # text format
    def to_text(self) -> str:
        label = self.label.replace(" ", "")
        one = "none" if self.one is None else str(self.one)
        lines = [f"ring {label} order={self.order} one={one}", "add:"]
        lines += [" ".join(str(v) for v in row) for row in self.add_table.tolist()]
        lines.append("mul:")
        lines += [" ".join(str(v) for v in row) for row in self.mul_table.tolist()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, validate: bool = True) -> "FiniteRing":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("ring "):
            raise TableFormatError("expected header 'ring <label> order=<n> one=<idx|none>'")
        parts = lines[0].split()
        if len(parts) != 4 or not parts[2].startswith("order=") or not parts[3].startswith("one="):
            raise TableFormatError(f"malformed header: {lines[0]!r}")
        label = parts[1]
        n = int(parts[2][len("order="):])
        one_raw = parts[3][len("one="):]
        one = None if one_raw == "none" else int(one_raw)
        if len(lines) != 2 * n + 3 or lines[1] != "add:" or lines[n + 2] != "mul:":
            raise TableFormatError("expected 'add:' and 'mul:' sections with n rows each")
        add = [[int(v) for v in ln.split()] for ln in lines[2:n + 2]]
        mul = [[int(v) for v in ln.split()] for ln in lines[n + 3:]]
        if any(len(row) != n for row in add + mul):
            raise TableFormatError("every table row must have n entries")
        return cls(add, mul, one=one, label=label, validate=validate)

    def same_tables(self, other: "FiniteRing") -> bool:
        return (self.order == other.order and self.zero == other.zero and self.one == other.one
                and np.array_equal(self.add_table, other.add_table)
                and np.array_equal(self.mul_table, other.mul_table))


def _identity_of(mul: np.ndarray) -> int | None:
    n = mul.shape[0]
    idx = np.arange(n)
    hits = np.flatnonzero((mul == idx[None, :]).all(axis=1) & (mul == idx[:, None]).all(axis=0))
    return int(hits[0]) if len(hits) else None


def validate_ring(add_table, mul_table, *, one: int | None = None, label: str = "R",
                  find_one: bool = False) -> FiniteRing:
    """Check the ring axioms on raw tables and return the ring."""
    add = _as_table(add_table, "add")
    mul = _as_table(mul_table, "mul")
    if one is None and find_one:
        one = _identity_of(mul)
    return FiniteRing(add, mul, one=one, label=label)


@dataclass(frozen=True)
class Element:
    ring: FiniteRing
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.ring.order:
            raise RingError(f"index {self.index} outside ring of order {self.ring.order}")

    def _other(self, other) -> int:
        if isinstance(other, Element):
            if other.ring is not self.ring:
                raise RingMismatch(f"{self.ring.label} vs {other.ring.label}")
            return other.index
        raise TypeError(f"cannot combine ring element with {type(other).__name__}")

    def __add__(self, other):
        return Element(self.ring, self.ring.add(self.index, self._other(other)))

    def __sub__(self, other):
        return Element(self.ring, self.ring.sub(self.index, self._other(other)))

    def __mul__(self, other):
        if isinstance(other, int):
            return Element(self.ring, self.ring.smul(other, self.index))
        return Element(self.ring, self.ring.mul(self.index, self._other(other)))

    def __rmul__(self, other):
        if isinstance(other, int):
            return Element(self.ring, self.ring.smul(other, self.index))
        return NotImplemented

    def __neg__(self):
        return Element(self.ring, self.ring.neg(self.index))

    def __pow__(self, k: int):
        return Element(self.ring, self.ring.power(self.index, k))

    def is_zero(self) -> bool:
        return self.index == self.ring.zero

    def is_nilpotent(self) -> tuple[bool, int | None]:
        return self.ring.is_nilpotent(self.index)

    def __repr__(self) -> str:
        return f"{self.ring.name(self.index)}@{self.ring.label}"


@dataclass(eq=False)
class ElementSubset:
    ring: FiniteRing
    members: tuple[int, ...] = field(default=())

    def __init__(self, ring: FiniteRing, members: Iterable[int]):
        self.ring = ring
        self.members = tuple(sorted({int(m) for m in members}))
        self._set = frozenset(self.members)

    def __contains__(self, item: int) -> bool:
        return int(item) in self._set

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other) -> bool:
        if isinstance(other, ElementSubset):
            return self.ring is other.ring and self._set == other._set
        return self._set == frozenset(other)

    def __hash__(self) -> int:
        return hash((id(self.ring), self._set))

    def __le__(self, other: "ElementSubset") -> bool:
        return self._set <= other._set

    def __repr__(self) -> str:
        return f"ElementSubset({list(self.members)})"

    @property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.ring.order, dtype=bool)
        m[list(self.members)] = True
        return m

    @cached_property
    def is_additive_subgroup(self) -> bool:
        if self.ring.zero not in self._set:
            return False
        mem = list(self.members)
        return bool(self.mask[self.ring.add_table[np.ix_(mem, mem)]].all()
                    and self.mask[self.ring.neg_table[mem]].all())

    @cached_property
    def is_multiplicatively_closed(self) -> bool:
        mem = list(self.members)
        return bool(self.mask[self.ring.mul_table[np.ix_(mem, mem)]].all())

    @cached_property
    def is_subring(self) -> bool:
        return self.is_additive_subgroup and self.is_multiplicatively_closed

    @cached_property
    def is_left_ideal(self) -> bool:
        mem = list(self.members)
        return self.is_additive_subgroup and bool(self.mask[self.ring.mul_table[:, mem]].all())

    @cached_property
    def is_right_ideal(self) -> bool:
        mem = list(self.members)
        return self.is_additive_subgroup and bool(self.mask[self.ring.mul_table[mem, :]].all())

    @property
    def is_ideal(self) -> bool:
        return self.is_left_ideal and self.is_right_ideal

    def names(self) -> list[str]:
        return [self.ring.name(m) for m in self.members]
