"""Implication and transfer rules between ring properties, and their closure.

Verdicts flow along two kinds of rules:

* implications inside one ring (``P and Q => T``, optionally guarded by a
  decidable side condition on the ring);
* transfers along construction links between rings (subring, product,
  matrix constructions, extensions, quotient lifts).

Bounded verdicts keep their degree stamp.  An unbounded conclusion from a
bounded premise needs an explicit ``min_degree`` on the rule.  Contrapositives
run only through single-premise rules.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

import numpy as np

from .verdicts import POLYNOMIAL_PROPERTIES, Property, Status, Verdict

P = Property


@dataclass(frozen=True)
class Rule:
    id: str
    premises: tuple[Property, ...]
    target: Property
    statement: str
    side: str | None = None
    min_degree: int | None = None  # elementwise target from a bounded premise

    @property
    def reversible(self) -> bool:
        return len(self.premises) == 1


@dataclass(frozen=True)
class Transfer:
    id: str
    links: tuple[str, ...]
    source: Property
    target: Property
    direction: str  # "up": bases => composite, "down": composite => base
    statement: str
    side: str | None = None
    degreewise: bool = False  # bounded verdicts may cross with the same bound
    min_n: int | None = None


@dataclass(frozen=True)
class Forbidden:
    source: Property
    target: Property
    witnesses: tuple[str, ...]
    note: str


RULES: tuple[Rule, ...] = (
    Rule("commutative-gives-semicommutative", (P.COMMUTATIVE,), P.SEMICOMMUTATIVE,
         "ab = 0 forces arb = rab = 0 when multiplication commutes"),
    Rule("reduced-gives-armendariz", (P.REDUCED,), P.ARMENDARIZ,
         "without nonzero nilpotents every zero product of polynomials has zero coefficient products"),
    Rule("reduced-gives-weak-ideal-armendariz", (P.REDUCED,), P.WEAK_IDEAL_ARMENDARIZ,
         "reduced rings are Armendariz and weakly semicommutative"),
    Rule("armendariz-gives-weak-armendariz", (P.ARMENDARIZ,), P.WEAK_ARMENDARIZ,
         "a zero coefficient product is nilpotent"),
    Rule("ideal-armendariz-from-parts", (P.ARMENDARIZ, P.SEMICOMMUTATIVE), P.IDEAL_ARMENDARIZ,
         "ideal-Armendariz is Armendariz together with insertion of factors"),
    Rule("ideal-armendariz-is-armendariz", (P.IDEAL_ARMENDARIZ,), P.ARMENDARIZ,
         "aRb = 0 contains ab = 0 once r ranges over the products available"),
    Rule("ideal-armendariz-is-semicommutative", (P.IDEAL_ARMENDARIZ,), P.SEMICOMMUTATIVE,
         "constant polynomials already give insertion of factors", min_degree=0),
    Rule("weak-ideal-armendariz-from-parts", (P.ARMENDARIZ, P.WEAKLY_SEMICOMMUTATIVE),
         P.WEAK_IDEAL_ARMENDARIZ, "weak ideal-Armendariz is Armendariz together with weak semicommutativity"),
    Rule("weak-ideal-armendariz-is-armendariz", (P.WEAK_IDEAL_ARMENDARIZ,), P.ARMENDARIZ,
         "first half of the defining conjunction"),
    Rule("weak-ideal-armendariz-is-weakly-semicommutative", (P.WEAK_IDEAL_ARMENDARIZ,),
         P.WEAKLY_SEMICOMMUTATIVE, "second half of the defining conjunction", min_degree=0),
    Rule("semicommutative-gives-weakly-semicommutative", (P.SEMICOMMUTATIVE,), P.WEAKLY_SEMICOMMUTATIVE,
         "a zero product stays zero after inserting a factor, and zero is nilpotent"),
    Rule("semicommutative-gives-two-primal", (P.SEMICOMMUTATIVE,), P.TWO_PRIMAL,
         "insertion of factors makes the nilpotent elements a nil ideal inside the prime radical"),
    Rule("semicommutative-gives-strongly-nil-ifp", (P.SEMICOMMUTATIVE,), P.STRONGLY_NIL_IFP,
         "semicommutative rings are weak Armendariz, and insertion of factors keeps products nilpotent"),
    Rule("two-primal-gives-ni", (P.TWO_PRIMAL,), P.NI,
         "the prime radical sits inside the upper nilradical, which sits inside the nilpotents"),
    Rule("two-primal-gives-strongly-nil-ifp", (P.TWO_PRIMAL,), P.STRONGLY_NIL_IFP,
         "modulo the prime radical the ring is reduced, so coefficient products and their insertions are nilpotent"),
    Rule("ni-gives-strongly-nil-ifp", (P.NI,), P.STRONGLY_NIL_IFP,
         "when the nilpotents form an ideal the reduced quotient argument applies"),
    Rule("reversible-gives-strongly-nil-ifp", (P.REVERSIBLE,), P.STRONGLY_NIL_IFP,
         "reversible rings are semicommutative and weak Armendariz"),
    Rule("weak-ideal-armendariz-gives-strongly-nil-ifp", (P.WEAK_IDEAL_ARMENDARIZ,), P.STRONGLY_NIL_IFP,
         "zero coefficient products become nilpotent after insertion by weak semicommutativity"),
    Rule("armendariz-and-qrpr-give-strongly-nil-ifp", (P.ARMENDARIZ, P.QRPR), P.STRONGLY_NIL_IFP,
         "b a falls in the prime radical, so a r b is nilpotent"),
    Rule("strongly-nil-ifp-gives-weakly-semicommutative", (P.STRONGLY_NIL_IFP,), P.WEAKLY_SEMICOMMUTATIVE,
         "constant polynomials turn the condition into weak semicommutativity", min_degree=0),
    Rule("strongly-nil-ifp-gives-weak-armendariz", (P.STRONGLY_NIL_IFP,), P.WEAK_ARMENDARIZ,
         "take r = 1, or square a(ba)b without an identity"),
    Rule("strongly-nil-ifp-without-nil-ideals-is-reversible", (P.STRONGLY_NIL_IFP,), P.REVERSIBLE,
         "a r b nilpotent makes R b a a nil one-sided ideal, which vanishes without nil ideals",
         side="prime_radical_zero", min_degree=1),
    Rule("bounded-index-two-strongly-nil-ifp-is-ni", (P.BOUNDED_INDEX_2, P.STRONGLY_NIL_IFP), P.NI,
         "with index two, sums and multiples of nilpotents stay nilpotent"),
    Rule("armendariz-unital-is-abelian", (P.ARMENDARIZ,), P.ABELIAN,
         "an idempotent e and the pair (e - er(1-e)x)((1-e) + er(1-e)x) = 0 force er = ere = re",
         side="unital", min_degree=1),
    Rule("square-zero-ideal-with-regular-complement", (), P.WEAK_IDEAL_ARMENDARIZ,
         "an ideal K with K^2 = 0 whose complement is regular makes the ring Armendariz and weakly semicommutative",
         side="square_zero_regular_ideal"),
)

PRODUCT_LIKE = ("upper", "diagonal", "band", "trivial")

TRANSFERS: tuple[Transfer, ...] = (
    Transfer("subring-keeps-armendariz", ("subring",), P.ARMENDARIZ, P.ARMENDARIZ, "up",
             "zero products of polynomials over a subring are zero products over the parent",
             degreewise=True),
    Transfer("subring-keeps-weak-ideal-armendariz", ("subring",), P.WEAK_IDEAL_ARMENDARIZ,
             P.WEAK_IDEAL_ARMENDARIZ, "up", "restricting the conditions to a subring keeps them",
             degreewise=True),
    Transfer("subring-keeps-strongly-nil-ifp", ("subring",), P.STRONGLY_NIL_IFP, P.STRONGLY_NIL_IFP,
             "up", "restricting the conditions to a subring keeps them", degreewise=True),
    Transfer("product-keeps-weak-ideal-armendariz", ("product",), P.WEAK_IDEAL_ARMENDARIZ,
             P.WEAK_IDEAL_ARMENDARIZ, "up", "polynomial identities split componentwise in a finite product",
             degreewise=True),
    Transfer("product-keeps-strongly-nil-ifp", ("product",), P.STRONGLY_NIL_IFP, P.STRONGLY_NIL_IFP,
             "up", "polynomial identities and nilpotency split componentwise", degreewise=True),
    Transfer("matrix-constructions-inherit-strongly-nil-ifp", PRODUCT_LIKE, P.STRONGLY_NIL_IFP,
             P.STRONGLY_NIL_IFP, "up",
             "diagonal entries of a zero product of triangular polynomials give zero products over the base",
             min_n=2),
    Transfer("matrix-constructions-reflect-strongly-nil-ifp", PRODUCT_LIKE, P.STRONGLY_NIL_IFP,
             P.STRONGLY_NIL_IFP, "down", "the base embeds as scalar matrices", min_n=2),
    Transfer("dorroh-inherits-weak-ideal-armendariz", ("dorroh",), P.WEAK_IDEAL_ARMENDARIZ,
             P.WEAK_IDEAL_ARMENDARIZ, "up",
             "zero products in the unitalization reduce to zero products in the algebra"),
    Transfer("dorroh-reflects-weak-ideal-armendariz", ("dorroh",), P.WEAK_IDEAL_ARMENDARIZ,
             P.WEAK_IDEAL_ARMENDARIZ, "down", "the algebra is a subring of its unitalization"),
    Transfer("dorroh-inherits-strongly-nil-ifp", ("dorroh",), P.STRONGLY_NIL_IFP, P.STRONGLY_NIL_IFP,
             "up", "zero products in the unitalization reduce to zero products in the algebra"),
    Transfer("dorroh-reflects-strongly-nil-ifp", ("dorroh",), P.STRONGLY_NIL_IFP, P.STRONGLY_NIL_IFP,
             "down", "the algebra is a subring of its unitalization"),
    Transfer("reduced-base-makes-truncated-polynomials-weak-ideal-armendariz", ("truncpoly",),
             P.REDUCED, P.WEAK_IDEAL_ARMENDARIZ, "up",
             "truncated polynomial rings over reduced rings are Armendariz and weakly semicommutative"),
    Transfer("weak-ideal-armendariz-truncated-polynomials-need-reduced-base", ("truncpoly",),
             P.WEAK_IDEAL_ARMENDARIZ, P.REDUCED, "down",
             "a nonzero nilpotent of the base breaks the Armendariz condition once x is nilpotent",
             min_n=2),
    Transfer("reduced-base-makes-trivial-extension-weak-ideal-armendariz", ("trivial",),
             P.REDUCED, P.WEAK_IDEAL_ARMENDARIZ, "up",
             "the trivial extension is the truncated polynomial ring of length two"),
    Transfer("weak-ideal-armendariz-trivial-extension-needs-reduced-base", ("trivial",),
             P.WEAK_IDEAL_ARMENDARIZ, P.REDUCED, "down",
             "a nonzero nilpotent of the base breaks the Armendariz condition of the extension"),
    Transfer("two-primal-base-makes-truncated-polynomials-strongly-nil-ifp", ("truncpoly",),
             P.TWO_PRIMAL, P.STRONGLY_NIL_IFP, "up",
             "stratifying by powers of x reduces to the two-primal polynomial ring"),
    Transfer("lift-strongly-nil-ifp-over-semicommutative-ideal", ("quotient",), P.STRONGLY_NIL_IFP,
             P.STRONGLY_NIL_IFP, "up", "nilpotency modulo a semicommutative ideal lifts",
             side="ideal_semicommutative"),
    Transfer("lift-strongly-nil-ifp-over-nilpotent-ideal", ("quotient",), P.STRONGLY_NIL_IFP,
             P.STRONGLY_NIL_IFP, "up", "an element nilpotent modulo a nilpotent ideal is nilpotent",
             side="ideal_nilpotent"),
    Transfer("lift-weak-ideal-armendariz-over-reduced-ideal", ("quotient",), P.WEAK_IDEAL_ARMENDARIZ,
             P.WEAK_IDEAL_ARMENDARIZ, "up", "a reduced ideal annihilates the obstruction to lifting",
             side="ideal_reduced"),
    Transfer("subdirect-sum-keeps-strongly-nil-ifp", ("subdirect",), P.STRONGLY_NIL_IFP,
             P.STRONGLY_NIL_IFP, "up", "nilpotency can be read off in each quotient when the ideals meet in zero",
             side="ideals_meet_in_zero"),
)

FORBIDDEN: tuple[Forbidden, ...] = (
    Forbidden(P.WEAKLY_SEMICOMMUTATIVE, P.STRONGLY_NIL_IFP, ("square-gap-four-generator-algebra",),
              "witness lives in an infinite presentation; only bounded truncation checks run"),
    Forbidden(P.ARMENDARIZ, P.STRONGLY_NIL_IFP, ("free-two-generator-square-zero",),
              "f = ba + ba t, g = a + a t and (ba) b (a) is not nilpotent"),
    Forbidden(P.WEAK_ARMENDARIZ, P.STRONGLY_NIL_IFP, ("free-two-generator-square-zero",),
              "same witness as for Armendariz"),
    Forbidden(P.ARMENDARIZ, P.WEAKLY_SEMICOMMUTATIVE, ("free-two-generator-square-zero",),
              "(ba) a = 0 while (ba) b (a) is not nilpotent"),
    Forbidden(P.STRONGLY_NIL_IFP, P.ARMENDARIZ, ("z7-cubic-commutative", "upper-2-z2"),
              "commutative local algebra over Z7 and 2x2 upper triangular matrices"),
    Forbidden(P.STRONGLY_NIL_IFP, P.WEAK_IDEAL_ARMENDARIZ, ("z7-cubic-commutative", "upper-2-z2"),
              "fails through its Armendariz half"),
    Forbidden(P.STRONGLY_NIL_IFP, P.SEMICOMMUTATIVE, ("length-four-truncation-open-middle",),
              "a0 b0 = 0 but a0 b2 b0 survives"),
    Forbidden(P.STRONGLY_NIL_IFP, P.REVERSIBLE, ("length-six-truncation-six-generators",),
              "a0 b0 = 0 but b0 a0 survives"),
    Forbidden(P.ABELIAN, P.STRONGLY_NIL_IFP, ("rewriting-four-generator-algebra",),
              "a0 b1 b1 is never nilpotent"),
    Forbidden(P.WEAK_IDEAL_ARMENDARIZ, P.ABELIAN, ("row-matrices-z3", "column-matrices-z3"),
              "non-unital matrix rings with a non-central idempotent"),
    Forbidden(P.WEAK_IDEAL_ARMENDARIZ, P.SEMICOMMUTATIVE, ("three-generator-gap-pattern",),
              "ac = 0 but abc survives"),
    Forbidden(P.WEAKLY_SEMICOMMUTATIVE, P.ARMENDARIZ, ("strict-diagonal-4-z2",),
              "4x4 matrices with constant diagonal over Z2"),
)


def rule_catalog() -> tuple[tuple[Rule, ...], tuple[Transfer, ...]]:
    return RULES, TRANSFERS


# ----------------------------------------------------------------------
# derivations
@dataclass
class Derivation:
    rule: str
    statement: str
    premises: list[tuple[str, Property]]  # (node id, property)

    def to_dict(self) -> dict:
        return {"rule": self.rule, "premises": [[n, p.value] for n, p in self.premises]}


@dataclass
class Inconsistency:
    node: str
    prop: Property
    existing: str
    derived: str
    rule: str

    def __str__(self):
        return f"{self.node}: {self.prop.value} is {self.existing} but {self.rule} derives {self.derived}"


@dataclass
class Link:
    kind: str
    bases: tuple[str, ...]
    params: dict = field(default_factory=dict)


@dataclass
class Node:
    id: str
    verdicts: dict[Property, Verdict]
    ring: Any = None
    links: list[Link] = field(default_factory=list)
    facts: dict[str, bool] = field(default_factory=dict)  # precomputed side conditions


def _fail_degree(v: Verdict) -> int | None:
    if v.status is not Status.FAILS:
        return None
    if "fail_degree" in v.search_bounds:
        return v.search_bounds["fail_degree"]
    w = v.witness or {}
    if w.get("part") == P.WEAKLY_SEMICOMMUTATIVE.value:
        return 0
    if "f" in w and "g" in w:
        return max(len(w["f"]), len(w["g"])) - 1
    return 0 if w else None


class Network:
    """Rings linked by constructions, closed together under the catalog."""

    def __init__(self, side_conditions: "SideConditions | None" = None):
        self.nodes: dict[str, Node] = {}
        self.events: list[Inconsistency] = []
        self.sides = side_conditions or SideConditions()

    def add(self, node: Node) -> Node:
        self.nodes[node.id] = node
        return node

    def verdict(self, node: str, prop: Property) -> Verdict | None:
        return self.nodes[node].verdicts.get(prop)

    # -- merging
    def offer(self, node: str, prop: Property, new: Verdict, rule: str) -> bool:
        verdicts = self.nodes[node].verdicts
        cur = verdicts.get(prop)
        if cur is None or cur.status is Status.UNKNOWN:
            verdicts[prop] = new
            return True
        if new.status is Status.HOLDS:
            if cur.status is Status.FAILS:
                k = _fail_degree(cur)
                if new.bound is None or (k is not None and k <= new.bound):
                    self._conflict(node, prop, cur, new, rule)
                return False
            if new.strength() > cur.strength():
                verdicts[prop] = new
                return True
            return False
        # new is Fails
        if cur.status is Status.HOLDS:
            k = _fail_degree(new)
            if cur.bound is None or (k is not None and k <= cur.bound):
                self._conflict(node, prop, cur, new, rule)
                return False
            verdicts[prop] = new
            return True
        return False

    def _conflict(self, node, prop, cur, new, rule):
        event = Inconsistency(node, prop, cur.label(), new.label(), rule)
        if all(str(e) != str(event) for e in self.events):
            self.events.append(event)

    # -- rule application
    def _holds(self, node: str, prop: Property) -> Verdict | None:
        v = self.verdict(node, prop)
        return v if v is not None and v.status is Status.HOLDS else None

    def _apply_rule(self, node: Node, rule: Rule) -> bool:
        changed = False
        side_ok = True
        if rule.side is not None:
            side_ok = self.sides.check(rule.side, node, None)
        if side_ok:
            prem = [self._holds(node.id, p) for p in rule.premises]
            if all(prem):
                bound = _combine_bounds(rule.premises, prem, rule.target, rule.min_degree)
                if bound is not _NO:
                    derived = Verdict(Status.HOLDS, None, f"inference: {rule.id}", bound, "inference",
                                      Derivation(rule.id, rule.statement,
                                                 [(node.id, p) for p in rule.premises]))
                    changed |= self.offer(node.id, rule.target, derived, rule.id)
        if rule.reversible and side_ok:
            tv = self.verdict(node.id, rule.target)
            if tv is not None and tv.status is Status.FAILS:
                (src,) = rule.premises
                k = _fail_degree(tv)
                if src in POLYNOMIAL_PROPERTIES:
                    if rule.target in POLYNOMIAL_PROPERTIES:
                        degree = k
                    elif rule.min_degree is not None:
                        degree = rule.min_degree
                    else:
                        degree = None
                else:
                    degree = 0
                derived = Verdict(Status.FAILS, None, f"contrapositive: {rule.id}", None, "inference",
                                  Derivation(f"not {rule.target.value} via {rule.id}", rule.statement,
                                             [(node.id, rule.target)]),
                                  {"fail_degree": degree})
                changed |= self.offer(node.id, src, derived, f"contrapositive of {rule.id}")
        return changed

    def _apply_transfer(self, node: Node, link: Link, tr: Transfer) -> bool:
        if link.kind not in tr.links:
            return False
        if tr.min_n is not None and link.params.get("n", tr.min_n) < tr.min_n:
            return False
        if tr.side is not None and not self.sides.check(tr.side, node, link):
            return False
        if any(b not in self.nodes for b in link.bases):
            return False
        changed = False
        if tr.direction == "up":
            sources = [(b, tr.source) for b in link.bases]
            dest, dest_prop = node.id, tr.target
        else:
            if len(link.bases) != 1:
                return False
            sources = [(node.id, tr.source)]
            dest, dest_prop = link.bases[0], tr.target
        prem = [self._holds(n, p) for n, p in sources]
        if all(prem):
            bounds = [v.bound for v in prem]
            if all(b is None for b in bounds):
                bound = None
            elif tr.degreewise and tr.source is tr.target:
                bound = min(b for b in bounds if b is not None)
            else:
                bound = _NO
            if bound is not _NO:
                derived = Verdict(Status.HOLDS, None, f"inference: {tr.id}", bound, "inference",
                                  Derivation(tr.id, tr.statement, sources))
                changed |= self.offer(dest, dest_prop, derived, tr.id)
        if len(sources) == 1:
            tv = self.verdict(dest, dest_prop)
            if tv is not None and tv.status is Status.FAILS:
                src_node, src_prop = sources[0]
                degree = _fail_degree(tv) if (tr.degreewise and tr.source is tr.target) else None
                if src_prop not in POLYNOMIAL_PROPERTIES:
                    degree = 0
                derived = Verdict(Status.FAILS, None, f"contrapositive: {tr.id}", None, "inference",
                                  Derivation(f"not {dest_prop.value} via {tr.id}", tr.statement,
                                             [(dest, dest_prop)]),
                                  {"fail_degree": degree})
                changed |= self.offer(src_node, src_prop, derived, f"contrapositive of {tr.id}")
        return changed

    def order(self) -> list[str]:
        """Bases before composites, ties by id."""
        rank: dict[str, int] = {}

        def depth(nid, stack=()):
            if nid in rank:
                return rank[nid]
            if nid in stack or nid not in self.nodes:
                return 0
            bases = [b for link in self.nodes[nid].links for b in link.bases]
            rank[nid] = 1 + max((depth(b, stack + (nid,)) for b in bases), default=-1)
            return rank[nid]

        return sorted(self.nodes, key=lambda n: (depth(n), n))

    def close(self, max_rounds: int = 100) -> "Network":
        order = self.order()
        for _ in range(max_rounds):
            changed = False
            for nid in order:
                node = self.nodes[nid]
                for link in node.links:
                    for tr in TRANSFERS:
                        changed |= self._apply_transfer(node, link, tr)
                for rule in RULES:
                    changed |= self._apply_rule(node, rule)
            if not changed:
                return self
        raise RuntimeError("inference did not reach a fixpoint")

    # -- reporting
    def edge_violations(self) -> list[str]:
        """Implications with an exact Holds premise set and a Fails target."""
        out = []
        for nid in sorted(self.nodes):
            node = self.nodes[nid]
            for rule in RULES:
                if rule.side is not None and not self.sides.check(rule.side, node, None):
                    continue
                prem = [self._holds(nid, p) for p in rule.premises]
                if not rule.premises or not all(prem) or any(v.bound is not None for v in prem):
                    continue
                tv = self.verdict(nid, rule.target)
                if tv is not None and tv.status is Status.FAILS:
                    out.append(f"{nid}: {rule.id}")
        return out

    def trace(self, node: str, prop: Property, depth: int = 0, seen=None) -> list[str]:
        v = self.verdict(node, prop)
        if v is None:
            raise NoVerdict(f"no verdict for {prop.value} on {node}")
        seen = set() if seen is None else seen
        pad = "  " * depth
        head = f"{pad}{prop.value} on {node}: {v.label()}"
        d = v.derivation
        if d is None or (node, prop) in seen:
            tag = v.source if d is None else "see above"
            return [f"{head} [{tag}]"]
        seen.add((node, prop))
        lines = [f"{head} by {d.rule}: {d.statement}"]
        for pn, pp in d.premises:
            lines.extend(self.trace(pn, pp, depth + 1, seen))
        return lines

    def chain(self, node: str, prop: Property) -> str:
        """Forward rendering of the first-premise path: ``A [source] => B [rule] => C [rule]``."""
        parts = []
        cur = (node, prop)
        seen = set()
        while cur is not None and cur not in seen:
            seen.add(cur)
            v = self.verdict(*cur)
            d = v.derivation if v is not None else None
            label = cur[1].value if cur[0] == node else f"{cur[1].value}({cur[0]})"
            if d is None:
                parts.append(f"{label} [{v.source if v else 'none'}]")
                break
            parts.append(f"{label} [{d.rule}]")
            cur = d.premises[0] if d.premises else None
        return " => ".join(reversed(parts))


class NoVerdict(KeyError):
    pass


_NO = object()


def _combine_bounds(premises, verdicts, target, min_degree):
    bounds = [v.bound for p, v in zip(premises, verdicts) if p in POLYNOMIAL_PROPERTIES]
    finite = [b for b in bounds if b is not None]
    if not finite:
        return None
    low = min(finite)
    if target in POLYNOMIAL_PROPERTIES:
        return low
    if min_degree is not None and low >= min_degree:
        return None
    return _NO


# ----------------------------------------------------------------------
# side conditions
class SideConditions:
    """Decidable predicates used as rule guards; unknown cases answer False."""

    @staticmethod
    def key(name: str, link: Link | None) -> str:
        return name if link is None else f"{name}:{link.kind}:{','.join(link.bases)}"

    def check(self, name: str, node: Node, link: Link | None) -> bool:
        key = self.key(name, link)
        if key not in node.facts:
            fn: Callable = getattr(self, name)
            try:
                node.facts[key] = bool(fn(node, link))
            except (AttributeError, TypeError, KeyError):
                node.facts[key] = False
        return node.facts[key]

    def precompute(self, node: Node) -> dict[str, bool]:
        """Evaluate every guard that could apply to ``node`` while its ring is at hand."""
        for rule in RULES:
            if rule.side:
                self.check(rule.side, node, None)
        for link in node.links:
            for tr in TRANSFERS:
                if tr.side and link.kind in tr.links:
                    self.check(tr.side, node, link)
        return node.facts

    @staticmethod
    def _table(node: Node):
        from .core import FiniteRing
        return node.ring if isinstance(node.ring, FiniteRing) else None

    def unital(self, node, link):
        ring = node.ring
        if ring is None:
            return False
        return bool(getattr(ring, "unital", None) or getattr(ring, "one", None) is not None)

    def prime_radical_zero(self, node, link):
        from .radicals import radical_report
        R = self._table(node)
        return R is not None and len(radical_report(R).prime_radical) == 1

    def square_zero_regular_ideal(self, node, link):
        from .radicals import radical_report
        R = self._table(node)
        if R is None:
            return False
        K = radical_report(R).nil_set
        if not K.is_ideal:
            return False
        members = list(K.members)
        if (R.mul_table[np.ix_(members, members)] != R.zero).any():
            return False
        outside = ~K.mask
        return bool(R.regular_elements.mask[outside].all())

    def _ideal(self, node, link):
        from .constructors import resolve_gens
        R = self._table(node)
        gens = link.params.get("ideal")
        if R is None or gens is None:
            return None, None
        return R, R.ideal(resolve_gens(R, gens))

    def ideal_semicommutative(self, node, link):
        from .deciders import decide_elementwise
        R, I = self._ideal(node, link)
        if I is None:
            return False
        S = R.restrict(I, label=f"ideal of {R.label}")
        return decide_elementwise(S, P.SEMICOMMUTATIVE).status is Status.HOLDS

    def ideal_nilpotent(self, node, link):
        from .radicals import ideal_nilpotency
        R, I = self._ideal(node, link)
        return I is not None and ideal_nilpotency(R, I)[0]

    def ideal_reduced(self, node, link):
        from .deciders import decide_elementwise
        R, I = self._ideal(node, link)
        if I is None:
            return False
        S = R.restrict(I, label=f"ideal of {R.label}")
        return decide_elementwise(S, P.REDUCED).status is Status.HOLDS

    def ideals_meet_in_zero(self, node, link):
        R = self._table(node)
        ideals = link.params.get("ideals")
        if R is None or not ideals:
            return False
        from .constructors import resolve_gens
        common = set(range(R.order))
        for gens in ideals:
            common &= set(R.ideal(resolve_gens(R, gens)).members)
        return common == {R.zero}


# ----------------------------------------------------------------------
class _AssumeSides(SideConditions):
    """Treats guards of edges as satisfied; guards that stand alone as rules stay off."""

    GUARDS = frozenset(r.side for r in RULES if r.side and r.premises)

    def check(self, name, node, link):
        return name in self.GUARDS


def infer(known: dict[Property, Verdict], ring=None, node_id: str = "R", assume_sides: bool = False,
          ) -> tuple[dict[Property, Verdict], list[Inconsistency], "Network"]:
    """Close one ring's verdicts under the implication rules."""
    net = Network(_AssumeSides() if assume_sides else None)
    net.add(Node(node_id, dict(known), ring))
    net.close()
    return net.nodes[node_id].verdicts, net.events, net


def closure_from(props: Iterable[Property], assume_sides: bool = False) -> set[Property]:
    """Properties reachable from exact Holds of ``props``.

    Guarded rules fire only with ``assume_sides``; otherwise no guard is satisfied.
    """
    known = {p: Verdict(Status.HOLDS, None, "assumed", None, "assumed") for p in props}
    verdicts, _, _ = infer(known, assume_sides=assume_sides)
    return {p for p, v in verdicts.items() if v.status is Status.HOLDS}


def explain(net: Network, node: str, prop: Property) -> str:
    return "\n".join(net.trace(node, prop))


def lattice_dot() -> str:
    """Property graph: solid cited implications, dashed crossed non-implications."""
    lines = ["digraph properties {", "  rankdir=BT;", '  node [shape=box, fontname="Helvetica"];']
    for prop in Property:
        lines.append(f'  "{prop.value}";')
    junction = 0
    for rule in RULES:
        label = rule.id + (f" [{rule.side}]" if rule.side else "")
        if len(rule.premises) == 1:
            lines.append(f'  "{rule.premises[0].value}" -> "{rule.target.value}" [label="{label}"];')
        elif rule.premises:
            junction += 1
            j = f"and{junction}"
            lines.append(f'  "{j}" [shape=point, label=""];')
            for p in rule.premises:
                lines.append(f'  "{p.value}" -> "{j}" [arrowhead=none];')
            lines.append(f'  "{j}" -> "{rule.target.value}" [label="{label}"];')
    for fb in FORBIDDEN:
        wit = ", ".join(fb.witnesses)
        lines.append(f'  "{fb.source.value}" -> "{fb.target.value}" '
                     f'[style=dashed, color=red, arrowhead=tee, label="not: {wit}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
