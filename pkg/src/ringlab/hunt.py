"""Grid search for small rings separating two properties."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .constructors import evaluate, is_prime
from .deciders import DEFAULT_BUDGET, decide_all
from .inference import FORBIDDEN, closure_from, infer
from .verdicts import Property, Status

DEFAULT_MAX_ORDER = 16


def _prime_powers(limit: int):
    for q in range(4, limit + 1):
        for p in range(2, q):
            if is_prime(p):
                k = round(math.log(q, p))
                if k >= 2 and p ** k == q:
                    yield p, k


def grid(max_order: int = DEFAULT_MAX_ORDER) -> list[tuple[int, str]]:
    """``(order, expression)`` for every grid construction up to ``max_order``, smallest first."""
    bases = [(n, f"Z({n})") for n in range(2, max_order + 1)]
    bases += [(p ** k, f"GF({p},{k})") for p, k in _prime_powers(max_order)]
    out = dict((e, n) for n, e in bases)
    for n, b in bases:
        shapes = [(n ** 2, f"T({b})"), (n ** 2, f"D(2,{b})"), (n ** 3, f"U(2,{b})"),
                  (n ** 3, f"V(3,{b})"), (n ** 4, f"D(3,{b})"), (n ** 4, f"M(2,{b})"),
                  (n ** 2, f"TruncPoly({b},2)"), (n ** 3, f"TruncPoly({b},3)")]
        if is_prime(n):
            shapes += [(n ** 3, f"Dorroh(T({b}),{n})"), (n ** 4, f"Dorroh(U(2,{b}),{n})"),
                       (n ** 2, f"Subring(M(2,{b}),gens=[(1,0,0,0),(0,1,0,0)])"),
                       (n ** 2, f"Subring(M(2,{b}),gens=[(0,1,0,0),(0,0,0,1)])")]
        for m, c in bases:
            if b <= c:
                shapes.append((n * m, f"Product({b},{c})"))
        for order, expr in shapes:
            if order <= max_order:
                out.setdefault(expr, order)
    return sorted((n, e) for e, n in out.items())


def open_pairs() -> list[tuple[Property, Property]]:
    """Ordered pairs with no derivation P => Q in the rule catalog, guards included."""
    out = []
    for p in Property:
        reach = closure_from([p], assume_sides=True)
        out.extend((p, q) for q in Property if q is not p and q not in reach)
    return out


@dataclass
class PairResult:
    source: Property
    target: Property
    witness: str | None = None
    order: int | None = None
    inconclusive: list[str] = field(default_factory=list)
    cited: tuple[str, ...] = ()
    skipped: bool = False

    def to_dict(self) -> dict:
        return {"source": self.source.value, "target": self.target.value, "witness": self.witness,
                "order": self.order, "inconclusive": self.inconclusive, "cited": list(self.cited),
                "skipped": self.skipped}


def classify_grid(max_order: int, degree: int, budget: int) -> list[tuple[int, str, dict]]:
    out = []
    for order, expr in grid(max_order):
        R = evaluate(expr, validate=False)
        verdicts, _, _ = infer(decide_all(R, degree, budget), R, expr)
        out.append((order, expr, verdicts))
    return out


def hunt(max_order: int = DEFAULT_MAX_ORDER, pairs: list[tuple[Property, Property]] | None = None,
         degree: int = 1, budget: int = DEFAULT_BUDGET) -> list[PairResult]:
    """Smallest grid ring with ``P`` Holds (exact or bounded) and ``Q`` Fails, per pair."""
    allowed = set(open_pairs())
    todo = open_pairs() if pairs is None else list(pairs)
    table = classify_grid(max_order, degree, budget)
    cited = {(f.source, f.target): f.witnesses for f in FORBIDDEN}
    results = []
    for p, q in todo:
        res = PairResult(p, q, cited=cited.get((p, q), ()))
        if (p, q) not in allowed:
            res.skipped = True
            results.append(res)
            continue
        for order, expr, v in table:
            sp, sq = v.get(p), v.get(q)
            if sp is None or sq is None:
                continue
            if sp.status is Status.HOLDS and sq.status is Status.FAILS:
                res.witness, res.order = expr, order
                break
            if sp.status is not Status.FAILS and sq.status is not Status.HOLDS and \
                    Status.UNKNOWN in (sp.status, sq.status):
                res.inconclusive.append(expr)
        results.append(res)
    return results


def render(results: list[PairResult], as_json: bool = False) -> str:
    if as_json:
        return json.dumps([r.to_dict() for r in results], indent=2) + "\n"
    lines = []
    for r in results:
        pair = f"{r.source.value} -/-> {r.target.value}"
        if r.skipped:
            lines.append(f"{pair}: skipped (catalog derives it)")
        elif r.witness:
            lines.append(f"{pair}: {r.witness} (order {r.order})")
        elif r.cited:
            lines.append(f"{pair}: none in grid; corpus witness {', '.join(r.cited)}")
        else:
            lines.append(f"{pair}: none in grid")
    return "\n".join(lines) + "\n"
