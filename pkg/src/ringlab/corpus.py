"""Built-in corpus of example rings and algebras with their expected verdicts.

Everything here is data: constructions are expression strings or presentation
texts, witnesses are dictionaries of coefficient words, and scripts are small
checks (``zero``, ``nonzero``, ``nilpotent`` ...) replayed by the harness.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .inference import Link
from .verdicts import Property, Status

P = Property
HOLDS, FAILS = Status.HOLDS, Status.FAILS


@dataclass(frozen=True)
class Expectation:
    prop: Property
    status: Status
    citation: str
    witness: dict | None = None
    annotation: bool = False  # asserted by the source, not decidable here


@dataclass(frozen=True)
class Check:
    kind: str  # zero | nonzero | nilpotent | not_nilpotent | poly_zero | dimension | ...
    args: tuple


@dataclass
class CorpusEntry:
    id: str
    construction: str
    kind: str = "ring"  # ring | algebra | realized
    expectations: tuple[Expectation, ...] = ()
    scripts: tuple[Check, ...] = ()
    links: tuple[Link, ...] = ()
    notes: str = ""
    max_degree: int | None = None

    def expectation(self, prop: Property) -> Expectation | None:
        for e in self.expectations:
            if e.prop is prop:
                return e
        return None


def E(prop, status, citation, witness=None, annotation=False) -> Expectation:
    return Expectation(prop, status, citation, witness, annotation)


def C(kind, *args) -> Check:
    return Check(kind, args)


def _pres(*lines: str) -> str:
    return "\n".join(lines) + "\n"


FINITE_SEMIPRIME = "finite semiprime rings: reduced, Armendariz, semicommutative, weakly semicommutative and weak ideal-Armendariz coincide"
TRIANGULAR = "U_n, D_n, V_n and T(R,R) are strongly nil-IFP exactly when R is"
SQUARE_ZERO = "an ideal K with K^2 = 0 and regular complement gives weak ideal-Armendariz"
REDUCED_BASE = "T(R,R) and R[x]/(x^n) are weak ideal-Armendariz exactly when R is reduced"
DORROH = "the Dorroh extension over F_p inherits weak ideal-Armendariz and strongly nil-IFP"
NIL_RING = "order p^2 ring without identity and N^3 = 0 is commutative Armendariz"


def _table_entries() -> list[CorpusEntry]:
    tri = lambda kind, base, n=2: (Link(kind, (base,), {"n": n}),)  # noqa: E731
    out = [
        CorpusEntry("z2", "Z(2)", expectations=(
            E(P.REDUCED, HOLDS, "a field has no nonzero nilpotents"),
            E(P.WEAK_IDEAL_ARMENDARIZ, HOLDS, "reduced rings are weak ideal-Armendariz"),
        )),
        CorpusEntry("z3", "Z(3)", expectations=(
            E(P.REDUCED, HOLDS, "a field has no nonzero nilpotents"),
        )),
        CorpusEntry("z4", "Z(4)", expectations=(
            E(P.COMMUTATIVE, HOLDS, "Z_n is commutative"),
            E(P.REDUCED, FAILS, "2 squares to zero"),
            E(P.STRONGLY_NIL_IFP, HOLDS, "commutative, hence semicommutative, hence strongly nil-IFP"),
            E(P.WEAK_IDEAL_ARMENDARIZ, HOLDS, SQUARE_ZERO),
        )),
        CorpusEntry("z6", "Z(6)", expectations=tuple(
            E(p, HOLDS, FINITE_SEMIPRIME) for p in (
                P.REDUCED, P.ARMENDARIZ, P.SEMICOMMUTATIVE, P.WEAKLY_SEMICOMMUTATIVE,
                P.WEAK_IDEAL_ARMENDARIZ)),
            links=(Link("subdirect", ("z2", "z3"), {"ideals": [[2], [3]]}),
                   Link("quotient", ("z3",), {"ideal": [3]})),
            notes="Z6 is the subdirect sum of Z6/(2) and Z6/(3); (3) is a reduced ideal"),
        CorpusEntry("z8", "Z(8)", expectations=(
            E(P.COMMUTATIVE, HOLDS, "Z_n is commutative"),
            E(P.STRONGLY_NIL_IFP, HOLDS, "lifts from Z8/(4) = Z4 over the nilpotent ideal (4)"),
        ), links=(Link("quotient", ("z4",), {"ideal": [4]}),)),
        CorpusEntry("z9", "Z(9)", expectations=(
            E(P.WEAK_IDEAL_ARMENDARIZ, HOLDS, SQUARE_ZERO),
        )),
        CorpusEntry("gf4", "GF(2,2)", expectations=(
            E(P.REDUCED, HOLDS, "a field has no nonzero nilpotents"),
            E(P.WEAK_IDEAL_ARMENDARIZ, HOLDS, "reduced rings are weak ideal-Armendariz"),
        )),
        CorpusEntry("m2-z2", "M(2,Z(2))", expectations=tuple(
            E(p, FAILS, FINITE_SEMIPRIME) for p in (
                P.REDUCED, P.ARMENDARIZ, P.SEMICOMMUTATIVE, P.WEAKLY_SEMICOMMUTATIVE,
                P.WEAK_IDEAL_ARMENDARIZ)) + (
            E(P.ABELIAN, FAILS, "matrix units give non-central idempotents"),)),
        CorpusEntry("upper-2-z2", "U(2,Z(2))", expectations=(
            E(P.STRONGLY_NIL_IFP, HOLDS, TRIANGULAR),
            E(P.ARMENDARIZ, FAILS, "upper triangular matrices are not Armendariz"),
        ), links=tri("upper", "z2") + (
            Link("quotient", ("product-z2-z2",), {"ideal": [(0, 1, 0)]}),),
            notes="the strictly upper part is a nilpotent ideal with quotient Z2 x Z2"),
        CorpusEntry("upper-2-z4", "U(2,Z(4))", expectations=(
            E(P.STRONGLY_NIL_IFP, HOLDS, TRIANGULAR),), links=tri("upper", "z4")),
        CorpusEntry("diagonal-2-z4", "D(2,Z(4))", expectations=(
            E(P.STRONGLY_NIL_IFP, HOLDS, TRIANGULAR),), links=tri("diagonal", "z4")),
        CorpusEntry("band-2-z4", "V(2,Z(4))", expectations=(
            E(P.STRONGLY_NIL_IFP, HOLDS, TRIANGULAR),), links=tri("band", "z4")),
        CorpusEntry("trivial-z4", "T(Z(4))", expectations=(
            E(P.STRONGLY_NIL_IFP, HOLDS, TRIANGULAR),
            E(P.WEAK_IDEAL_ARMENDARIZ, FAILS, REDUCED_BASE),
        ), links=tri("trivial", "z4")),
        CorpusEntry("diagonal-2-z2", "D(2,Z(2))", expectations=(
            E(P.STRONGLY_NIL_IFP, HOLDS, TRIANGULAR),), links=tri("diagonal", "z2")),
        CorpusEntry("diagonal-3-z2", "D(3,Z(2))", expectations=(
            E(P.STRONGLY_NIL_IFP, HOLDS, TRIANGULAR),), links=tri("diagonal", "z2", 3)),
        CorpusEntry("band-3-z2", "V(3,Z(2))", expectations=(
            E(P.STRONGLY_NIL_IFP, HOLDS, TRIANGULAR),), links=tri("band", "z2", 3)),
        CorpusEntry("trivial-z2", "T(Z(2))", expectations=(
            E(P.WEAK_IDEAL_ARMENDARIZ, HOLDS, REDUCED_BASE),), links=tri("trivial", "z2")),
        CorpusEntry("trivial-z3", "T(Z(3))", expectations=(
            E(P.WEAK_IDEAL_ARMENDARIZ, HOLDS, REDUCED_BASE),), links=tri("trivial", "z3")),
        CorpusEntry("product-z2-z2", "Product(Z(2),Z(2))", expectations=(
            E(P.STRONGLY_NIL_IFP, HOLDS, "finite products of strongly nil-IFP rings"),
            E(P.WEAK_IDEAL_ARMENDARIZ, HOLDS, "finite products of weak ideal-Armendariz rings"),
        ), links=(Link("product", ("z2", "z2")),)),
        CorpusEntry("upper-2-z2xz2", "U(2,Product(Z(2),Z(2)))", expectations=(
            E(P.STRONGLY_NIL_IFP, HOLDS, TRIANGULAR),), links=tri("upper", "product-z2-z2"),
            max_degree=1, notes="degree 2 search exceeds the budget at order 64"),
        CorpusEntry("diagonal-2-z2xz2", "D(2,Product(Z(2),Z(2)))", expectations=(
            E(P.STRONGLY_NIL_IFP, HOLDS, TRIANGULAR),), links=tri("diagonal", "product-z2-z2")),
        CorpusEntry("band-2-z2xz2", "V(2,Product(Z(2),Z(2)))", expectations=(
            E(P.STRONGLY_NIL_IFP, HOLDS, TRIANGULAR),), links=tri("band", "product-z2-z2")),
        CorpusEntry("trivial-z2xz2", "T(Product(Z(2),Z(2)))", expectations=(
            E(P.STRONGLY_NIL_IFP, HOLDS, TRIANGULAR),
            E(P.WEAK_IDEAL_ARMENDARIZ, HOLDS, REDUCED_BASE),
        ), links=tri("trivial", "product-z2-z2")),
        CorpusEntry("truncpoly-z4-2", "TruncPoly(Z(4),2)", expectations=(
            E(P.WEAK_IDEAL_ARMENDARIZ, FAILS, REDUCED_BASE),
            E(P.STRONGLY_NIL_IFP, HOLDS, "R[x]/(x^n) over a two-primal R is strongly nil-IFP"),
        ), links=tri("truncpoly", "z4")),
        CorpusEntry("truncpoly-z2-3", "TruncPoly(Z(2),3)", expectations=(
            E(P.WEAK_IDEAL_ARMENDARIZ, HOLDS, REDUCED_BASE),), links=tri("truncpoly", "z2", 3)),
        CorpusEntry("dorroh-trivial-z2", "Dorroh(T(Z(2)),2)", expectations=(
            E(P.WEAK_IDEAL_ARMENDARIZ, HOLDS, DORROH),
            E(P.STRONGLY_NIL_IFP, HOLDS, DORROH),
        ), links=(Link("dorroh", ("trivial-z2",)),)),
        CorpusEntry("dorroh-upper-2-z2", "Dorroh(U(2,Z(2)),2)", expectations=(
            E(P.STRONGLY_NIL_IFP, HOLDS, DORROH),
            E(P.WEAK_IDEAL_ARMENDARIZ, FAILS, "the algebra embeds in its unitalization and is not Armendariz"),
        ), links=(Link("dorroh", ("upper-2-z2",)),)),
        CorpusEntry("row-matrices-z3", "Subring(M(2,Z(3)),gens=[(1,0,0,0),(0,1,0,0)])", expectations=(
            E(P.WEAK_IDEAL_ARMENDARIZ, HOLDS, "first-row matrices over a domain are weak ideal-Armendariz"),
            E(P.ABELIAN, FAILS, "the idempotent e11 is not central"),
        ), notes="matrices [[a,b],[0,0]] over Z3, a ring without identity"),
        CorpusEntry("column-matrices-z3", "Subring(M(2,Z(3)),gens=[(0,1,0,0),(0,0,0,1)])", expectations=(
            E(P.WEAK_IDEAL_ARMENDARIZ, HOLDS, "second-column matrices over a domain are weak ideal-Armendariz"),
            E(P.ABELIAN, FAILS, "the idempotent e22 is not central"),
        ), notes="matrices [[0,b],[0,d]] over Z3, a ring without identity"),
        CorpusEntry("strict-diagonal-4-z2", "D(4,Z(2))", expectations=(
            E(P.WEAKLY_SEMICOMMUTATIVE, HOLDS, "D_n over a reduced ring is weakly semicommutative for n >= 4"),
            E(P.ARMENDARIZ, FAILS, "D_n is not Armendariz for n >= 4"),
            E(P.SEMICOMMUTATIVE, FAILS, "D_n is not semicommutative for n >= 4"),
        ), links=tri("diagonal", "z2", 4), max_degree=1,
            notes="degree 2 search exceeds the budget at order 128"),
    ]
    for p in (2, 3):
        out.append(CorpusEntry(
            f"null-square-ring-p{p}",
            _pres(f"algebra p={p} gens=[a,b] commutative", "rel a^2", "rel ab", "rel b^2"),
            kind="realized", expectations=(
                E(P.ARMENDARIZ, HOLDS, NIL_RING), E(P.COMMUTATIVE, HOLDS, NIL_RING)),
            scripts=(C("order", p * p), C("nilpotency_index_at_most", 3)),
            notes="all products of two elements vanish"))
        out.append(CorpusEntry(
            f"cube-zero-ring-p{p}",
            _pres(f"algebra p={p} gens=[a] commutative", "rel a^3"),
            kind="realized", expectations=(
                E(P.ARMENDARIZ, HOLDS, NIL_RING), E(P.COMMUTATIVE, HOLDS, NIL_RING)),
            scripts=(C("order", p * p), C("nilpotency_index_at_most", 3)),
            notes="generated by a with b = a^2 and a^3 = 0"))
    return out


CONV3 = ("rel a0b0", "rel a0b1 + a1b0", "rel a0b2 + a1b1 + a2b0", "rel a1b2 + a2b1", "rel a2b2")
CONV2 = ("rel a0b0", "rel a0b1 + a1b0", "rel a1b1")


def _algebra_entries() -> list[CorpusEntry]:
    f3, g3 = ["a0", "a1", "a2"], ["b0", "b1", "b2"]
    f2, g2 = ["a0", "a1"], ["b0", "b1"]
    return [
        CorpusEntry(
            "z7-cubic-commutative",
            _pres("algebra p=7 gens=[x,y] commutative unital", "rel x^3", "rel x^2y^2", "rel y^3"),
            kind="algebra", expectations=(
                E(P.COMMUTATIVE, HOLDS, "quotient of a commutative polynomial ring"),
                E(P.ARMENDARIZ, FAILS, "f = x + y t, g = 3x^2 + 4xy t + 3y^2 t^2 multiply to zero",
                  {"f": ["x", "y"], "g": ["3x^2", "4xy", "3y^2"], "i": 0, "j": 1}),
                E(P.WEAK_IDEAL_ARMENDARIZ, FAILS, "not Armendariz",
                  {"f": ["x", "y"], "g": ["3x^2", "4xy", "3y^2"], "i": 0, "j": 1,
                   "part": "Armendariz"}),
                E(P.STRONGLY_NIL_IFP, HOLDS, "commutative, hence semicommutative, hence strongly nil-IFP"),
            ),
            scripts=(C("dimension", 8), C("poly_zero", ["x", "y"], ["3x^2", "4xy", "3y^2"]),
                     C("nonzero", "x*4xy")),
            notes="commutative local algebra of dimension 8 over Z7"),
        CorpusEntry(
            "length-four-truncation-semicommutative",
            _pres("algebra p=2 gens=[a0,a1,a2,b0,b1,b2,c] unital truncate=4", *CONV3,
                  "rel a0{r}b0", "rel a2{r}b2", "rel (a0+a1+a2){r}(b0+b1+b2)"),
            kind="algebra", expectations=(
                E(P.SEMICOMMUTATIVE, HOLDS, "semicommutative by the construction it is taken from",
                  annotation=True),
                E(P.ARMENDARIZ, FAILS, "f = a0 + a1 t + a2 t^2 and g = b0 + b1 t + b2 t^2 multiply to zero",
                  {"f": f3, "g": g3, "i": 0, "j": 1}),
                E(P.WEAK_IDEAL_ARMENDARIZ, FAILS, "not Armendariz",
                  {"f": f3, "g": g3, "i": 0, "j": 1, "part": "Armendariz"}),
                E(P.STRONGLY_NIL_IFP, HOLDS, "semicommutative rings are strongly nil-IFP"),
            ),
            scripts=(C("poly_zero", f3, g3), C("nonzero", "a0b1"), C("two_sided",)),
            notes="all words of length 4 vanish; the {r} placeholders range over nonempty words"),
        CorpusEntry(
            "length-four-truncation-open-middle",
            _pres("algebra p=2 gens=[a0,a1,a2,b0,b1,b2,c] unital truncate=4", *CONV3,
                  "rel (a0+a1+a2){r}(b0+b1+b2)"),
            kind="algebra", expectations=(
                E(P.SEMICOMMUTATIVE, FAILS, "a0 b0 = 0 while a0 b2 b0 survives",
                  {"a": "a0", "b": "b0", "r": "b2"}),
                E(P.STRONGLY_NIL_IFP, HOLDS, "every nonscalar element is nilpotent and the nilpotents form an ideal"),
            ),
            scripts=(C("zero", "a0b0"), C("nonzero", "a0b2b0"), C("two_sided",)),
            notes="as the semicommutative truncation without the a0{r}b0 and a2{r}b2 relations"),
        CorpusEntry(
            "length-six-truncation-six-generators",
            _pres("algebra p=2 gens=[a0,a1,a2,b0,b1,b2] unital truncate=6", *CONV3),
            kind="algebra", expectations=(
                E(P.REVERSIBLE, FAILS, "a0 b0 = 0 while b0 a0 survives", {"a": "a0", "b": "b0"}),
                E(P.STRONGLY_NIL_IFP, HOLDS, "every nonscalar element is nilpotent and the nilpotents form an ideal"),
            ),
            scripts=(C("zero", "a0b0"), C("nonzero", "b0a0"), C("ambient_dimension", 9330)),
            notes="all words of length 6 vanish"),
        CorpusEntry(
            "three-generator-gap-pattern",
            _pres("algebra p=2 gens=[a,b,c] unital", "rel cc", "rel ac", "pattern c%+c"),
            kind="algebra", expectations=(
                E(P.SEMICOMMUTATIVE, FAILS, "ac = 0 while abc survives", {"a": "a", "b": "c", "r": "b"}),
                E(P.ARMENDARIZ, HOLDS, "Armendariz by the construction it is taken from", annotation=True),
                E(P.WEAKLY_SEMICOMMUTATIVE, HOLDS,
                  "case analysis over the three relation families; only spot checks run here",
                  annotation=True),
            ),
            scripts=(C("zero", "ac"), C("zero", "cbc"), C("nonzero", "abc"), C("nilpotent", "abc"),
                     C("nilpotent", "abbc")),
            notes="monomial algebra; c r c vanishes for every nonempty word r"),
        CorpusEntry(
            "free-two-generator-square-zero",
            _pres("algebra p=2 gens=[a,b] unital", "pattern aa"),
            kind="algebra", expectations=(
                E(P.ARMENDARIZ, HOLDS, "Armendariz by the construction it is taken from", annotation=True),
                E(P.STRONGLY_NIL_IFP, FAILS, "f = ba + ba t, g = a + a t multiply to zero and (ba) b (a) is not nilpotent",
                  {"f": ["ba", "ba"], "g": ["a", "a"], "i": 0, "j": 0, "r": "b"}),
                E(P.WEAKLY_SEMICOMMUTATIVE, FAILS, "(ba) a = 0 while (ba) b (a) is not nilpotent",
                  {"a": "ba", "b": "a", "r": "b"}),
            ),
            scripts=(C("poly_zero", ["ba", "ba"], ["a", "a"]), C("not_nilpotent", "baba")),
            notes="noncommuting a, b with a^2 = 0; no power of baba contains aa"),
        CorpusEntry(
            "rewriting-four-generator-algebra",
            _pres("algebra p=3 gens=[a0,a1,b0,b1] unital", *CONV2),
            kind="algebra", expectations=(
                E(P.ABELIAN, HOLDS, "abelian by the construction it is taken from", annotation=True),
                E(P.STRONGLY_NIL_IFP, FAILS, "f = a0 + a1 x, g = b0 + b1 x multiply to zero and a0 b1 b1 is not nilpotent",
                  {"f": f2, "g": g2, "i": 0, "j": 1, "r": "b1"}),
            ),
            scripts=(C("poly_zero", f2, g2), C("not_nilpotent", "a0b1b1")),
            notes="field taken as Z3; rewriting a1b0 -> -a0b1 is confluent"),
        CorpusEntry(
            "square-gap-four-generator-algebra",
            _pres("algebra p=3 gens=[a0,a1,b0,b1] unital truncate=6 approximate", *CONV2,
                  "rel ({r1?}a0{r2?}b0{r3?})^2", "rel ({r4?}a1{r5?}b1{r6?})^2",
                  "rel {r7?}(a0+a1){r8?}(b0+b1){r9?}"),
            kind="algebra", expectations=(
                E(P.WEAKLY_SEMICOMMUTATIVE, HOLDS, "weakly semicommutative by construction of the ideal",
                  annotation=True),
                E(P.STRONGLY_NIL_IFP, FAILS,
                  "f = a0 + a1 x, g = b0 + b1 x multiply to zero and a0 a0 b1 is not nilpotent; "
                  "witness not table-realizable, bounded checks only", annotation=True),
            ),
            scripts=(C("poly_zero", f2, g2), C("nonzero", "a0a0b1")),
            notes="infinite-dimensional; truncated at length 6 so only nonvanishing is sound"),
    ]


def builtin_corpus() -> list[CorpusEntry]:
    entries = _table_entries() + _algebra_entries()
    return sorted(entries, key=lambda e: e.id)


def corpus_index() -> dict[str, CorpusEntry]:
    return {e.id: e for e in builtin_corpus()}
