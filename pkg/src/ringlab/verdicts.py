"""Property identifiers and tri-state verdicts shared by deciders and inference."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class Status(str, Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    UNKNOWN = "Unknown"


class Property(str, Enum):
    REDUCED = "Reduced"
    COMMUTATIVE = "Commutative"
    REVERSIBLE = "Reversible"
    ABELIAN = "Abelian"
    SEMICOMMUTATIVE = "Semicommutative"
    WEAKLY_SEMICOMMUTATIVE = "WeaklySemicommutative"
    QRPR = "QRPR"
    ARMENDARIZ = "Armendariz"
    WEAK_ARMENDARIZ = "WeakArmendariz"
    IDEAL_ARMENDARIZ = "IdealArmendariz"
    WEAK_IDEAL_ARMENDARIZ = "WeakIdealArmendariz"
    STRONGLY_NIL_IFP = "StronglyNilIFP"
    TWO_PRIMAL = "TwoPrimal"
    NI = "NI"
    BOUNDED_INDEX_2 = "BoundedIndex2"

    @property
    def bounded(self) -> bool:
        """Polynomial-quantified properties; exhaustive checks only reach a degree bound."""
        return self in POLYNOMIAL_PROPERTIES

    @classmethod
    def parse(cls, name: str) -> "Property":
        key = name.replace("-", "").replace("_", "").lower()
        for prop in cls:
            if prop.value.lower() == key or prop.name.replace("_", "").lower() == key:
                return prop
        aliases = {"ifp": cls.SEMICOMMUTATIVE, "sc": cls.SEMICOMMUTATIVE,
                   "wsc": cls.WEAKLY_SEMICOMMUTATIVE, "snifp": cls.STRONGLY_NIL_IFP,
                   "wia": cls.WEAK_IDEAL_ARMENDARIZ, "2primal": cls.TWO_PRIMAL}
        if key in aliases:
            return aliases[key]
        raise ValueError(f"unknown property {name!r}")


POLYNOMIAL_PROPERTIES = frozenset({
    Property.ARMENDARIZ, Property.WEAK_ARMENDARIZ, Property.IDEAL_ARMENDARIZ,
    Property.WEAK_IDEAL_ARMENDARIZ, Property.STRONGLY_NIL_IFP,
})
ELEMENTWISE_PROPERTIES = tuple(p for p in Property if p not in POLYNOMIAL_PROPERTIES)


@dataclass
class Verdict:
    """Result of deciding one property.

    ``bound`` is the polynomial degree bound for a bounded ``Holds``; ``None``
    means the verdict holds for all degrees (or the property is elementwise).
    ``source`` is one of ``exhaustive``, ``witness``, ``structure``,
    ``inference``, ``annotation`` or ``search``.
    """

    status: Status
    witness: dict[str, Any] | None = None
    certificate: str = ""
    bound: int | None = None
    source: str = "exhaustive"
    derivation: Any = None
    search_bounds: dict[str, Any] = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.status is not Status.UNKNOWN and self.bound is None

    def strength(self) -> tuple[int, float]:
        """Order used when merging: Unknown < Holds(d) < Holds(d') < Holds(all degrees)."""
        if self.status is Status.UNKNOWN:
            return (0, 0)
        if self.status is Status.FAILS:
            return (2, 1 if self.witness is not None else 0)
        return (1, float("inf") if self.bound is None else self.bound)

    def label(self) -> str:
        if self.status is Status.HOLDS and self.bound is not None:
            return f"Holds(deg<={self.bound})"
        return self.status.value

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "bound": self.bound,
            "witness": self.witness,
            "certificate": self.certificate,
            "source": self.source,
        }


def holds(certificate: str, bound: int | None = None, source: str = "exhaustive", **kw) -> Verdict:
    return Verdict(Status.HOLDS, None, certificate, bound, source, **kw)


def fails(witness: dict, certificate: str = "witness replays", source: str = "exhaustive",
          **kw) -> Verdict:
    return Verdict(Status.FAILS, witness, certificate, None, source, **kw)


def unknown(certificate: str, source: str = "search", **kw) -> Verdict:
    return Verdict(Status.UNKNOWN, None, certificate, None, source, **kw)
