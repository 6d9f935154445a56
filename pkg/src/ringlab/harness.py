"""Runs the corpus through deciders and inference and compares with expectations."""
from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any

import numpy as np

from .corpus import Check, CorpusEntry, builtin_corpus
from .deciders import (DEFAULT_BUDGET, DEFAULT_DEGREE, decide_all, decide_on_algebra, replay,
                       structural_verdicts)
from .inference import FORBIDDEN, PRODUCT_LIKE, RULES, Network, Node, SideConditions
from .verdicts import POLYNOMIAL_PROPERTIES, Property, Status, Verdict, unknown

log = logging.getLogger(__name__)

IFF_SNIFP_LINKS = PRODUCT_LIKE + ("dorroh",)


@dataclass(frozen=True)
class Config:
    degree: int = DEFAULT_DEGREE
    budget: int = DEFAULT_BUDGET
    power_bound: int = 64
    strict: bool = False
    workers: int = 1
    only: tuple[str, ...] = ()


@dataclass
class EntryResult:
    id: str
    construction: str
    kind: str
    degree: int
    verdicts: dict[Property, Verdict]
    facts: dict[str, bool]
    scripts: list[tuple[str, bool | None, str]] = field(default_factory=list)
    replays: list[tuple[str, bool | None, str]] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)
    error: str | None = None


def plain(x):
    """Recursively convert numpy scalars and tuples for JSON output."""
    if isinstance(x, dict):
        return {str(k): plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [plain(v) for v in x]
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.bool_):
        return bool(x)
    return x


# ----------------------------------------------------------------------
# scripts
def _sym_product(alg, f: list[str], g: list[str]):
    from .presentation import _add, _mul, parse_poly

    p, gens = alg.p, alg.gens
    F = [parse_poly(s, gens, p)[0] for s in f]
    G = [parse_poly(s, gens, p)[0] for s in g]
    out = []
    for k in range(len(F) + len(G) - 1):
        acc = {}
        for i, fi in enumerate(F):
            if 0 <= k - i < len(G):
                acc = _add(acc, _mul(fi, G[k - i], p), p)
        out.append(acc)
    return out


def _literal_relation_multiple(alg, poly: dict) -> bool:
    """True when ``poly`` is zero or a scalar multiple of a placeholder-free relation."""
    if not poly:
        return True
    p = alg.p
    for rel in alg.pres.relations:
        if rel.placeholders or set(rel.poly) != set(poly):
            continue
        w = next(iter(poly))
        c = poly[w] * pow(rel.poly[w], -1, p) % p
        if all(poly[k] == c * rel.poly[k] % p for k in poly):
            return True
    return False


def run_algebra_check(alg, check: Check, power_bound: int) -> tuple[bool | None, str]:
    from .fpalgebra import verify_poly_identity

    kind, args = check.kind, check.args
    if kind in ("zero", "nonzero", "nilpotent", "not_nilpotent"):
        x = alg.element(args[0])
        if kind == "nonzero":
            return (not x.is_zero()), f"{args[0]} = {x}"
        if kind == "zero":
            if not x.is_zero():
                return False, f"{args[0]} = {x}"
            return (True if alg.exact_zero else None), f"{args[0]} = 0"
        nil, k, why = alg.nilpotency(x, power_bound)
        if nil is None:
            return None, why
        return (nil if kind == "nilpotent" else not nil), why
    if kind == "poly_zero":
        f, g = args
        if not alg.exact_zero:
            coeffs = _sym_product(alg, f, g)
            ok = all(_literal_relation_multiple(alg, c) for c in coeffs)
            return (True if ok else None), "every coefficient of f g is a defining relation"
        ok, bad = verify_poly_identity(alg, f, g)
        return ok, "f g = 0" if ok else f"nonzero coefficients {bad}"
    if kind == "dimension":
        return alg.dimension == args[0], f"dimension {alg.dimension}"
    if kind == "ambient_dimension":
        return alg.ambient_dimension == args[0], f"ambient dimension {alg.ambient_dimension}"
    if kind == "two_sided":
        return alg.verify_two_sided(), "relation space closed under both multiplications"
    return None, f"unknown check {kind}"


def run_ring_check(R, check: Check) -> tuple[bool | None, str]:
    from .radicals import ideal_nilpotency

    kind, args = check.kind, check.args
    if kind == "order":
        return R.order == args[0], f"order {R.order}"
    if kind == "nilpotency_index_at_most":
        ok, k = ideal_nilpotency(R, R.subset(range(R.order)))
        return bool(ok and k <= args[0]), f"R^{k} = 0" if ok else "R is not nilpotent"
    return None, f"unknown check {kind}"


def radical_checks(R) -> dict[str, bool]:
    from .radicals import radical_report

    rep = radical_report(R)
    out = {
        "prime_in_upper": rep.prime_radical <= rep.upper_nilradical,
        "upper_in_nil": rep.upper_nilradical <= rep.nil_set,
        "two_primal_iff_ni": rep.two_primal == rep.ni,
    }
    if R.one is not None:
        out["prime_equals_jacobson"] = rep.prime_radical == rep.jacobson
    return out


# ----------------------------------------------------------------------
# per-entry evaluation (runs in workers)
def _witness_degree(w: dict) -> int:
    return max(len(w["f"]), len(w["g"])) - 1 if "f" in w else 0


def evaluate_entry(entry: CorpusEntry, config: Config) -> EntryResult:
    d = config.degree if entry.max_degree is None else min(config.degree, entry.max_degree)
    res = EntryResult(entry.id, entry.construction, entry.kind, d, {}, {})
    try:
        if entry.kind == "algebra":
            _evaluate_algebra(entry, config, d, res)
        else:
            _evaluate_ring(entry, config, d, res)
    except Exception as exc:  # reported, never raised
        log.exception("entry %s failed", entry.id)
        res.error = f"{type(exc).__name__}: {exc}"
    return res


def _evaluate_ring(entry, config, d, res):
    from .constructors import evaluate
    from .fpalgebra import build_algebra, realize_as_finite_ring

    if entry.kind == "realized":
        R = realize_as_finite_ring(build_algebra(entry.construction))
        R.label = entry.id
    else:
        R = evaluate(entry.construction)
    res.verdicts = decide_all(R, d, config.budget)
    res.info = {"order": R.order, "unital": R.one is not None, "radicals": radical_checks(R)}
    res.facts = SideConditions().precompute(Node(entry.id, {}, R, list(entry.links)))
    for check in entry.scripts:
        ok, why = run_ring_check(R, check)
        res.scripts.append((check.kind, ok, why))
    for exp in entry.expectations:
        if exp.witness is not None:
            ok = replay(R, exp.prop, exp.witness)
            res.replays.append((exp.prop.value, ok, "witness replays" if ok else "witness does not replay"))


def _evaluate_algebra(entry, config, d, res):
    from .fpalgebra import build_algebra

    alg = build_algebra(entry.construction)
    verdicts = structural_verdicts(alg)
    for exp in entry.expectations:
        if exp.annotation:
            verdicts[exp.prop] = Verdict(exp.status, None, exp.citation, None, "annotation")
        elif exp.witness is not None:
            if exp.prop in POLYNOMIAL_PROPERTIES and _witness_degree(exp.witness) > d:
                v = unknown(f"witness needs degree {_witness_degree(exp.witness)} > {d}")
            else:
                v = decide_on_algebra(alg, exp.prop, [exp.witness], config.power_bound)
            res.replays.append((exp.prop.value, v.status is Status.FAILS or None, v.certificate))
            if v.status is Status.FAILS or exp.prop not in verdicts:
                verdicts[exp.prop] = v
    res.verdicts = verdicts
    info = {"unital": alg.unital, "exact": alg.exact_zero}
    if hasattr(alg, "dimension"):
        info["dimension"] = alg.dimension
    res.info = info
    res.facts = SideConditions().precompute(Node(entry.id, {}, alg, list(entry.links)))
    for check in entry.scripts:
        ok, why = run_algebra_check(alg, check, config.power_bound)
        res.scripts.append((check.kind + " " + " ".join(map(str, check.args)), ok, why))


# ----------------------------------------------------------------------
# report
@dataclass
class Row:
    ring: str
    property: str
    status: str
    bound: int | None
    witness: Any
    trace: str
    citation: str
    expected: str | None
    outcome: str  # met | bound-limited | mismatch | annotated | -
    source: str


@dataclass
class Report:
    config: dict
    rows: list[Row]
    entries: list[dict]
    invariants: list[dict]
    events: list[str]
    network: Any = field(default=None, repr=False, compare=False)

    @property
    def mismatches(self) -> list[Row]:
        return [r for r in self.rows if r.outcome == "mismatch"]

    @property
    def failed_invariants(self) -> list[dict]:
        return [i for i in self.invariants if not i["ok"]]

    @property
    def ok(self) -> bool:
        entry_errors = [e for e in self.entries if e["error"]]
        return not (self.mismatches or self.failed_invariants or self.events or entry_errors)

    def to_dict(self) -> dict:
        return plain({
            "config": self.config,
            "summary": self.summary(),
            "entries": self.entries,
            "rows": [asdict(r) for r in self.rows],
            "invariants": self.invariants,
            "inconsistencies": self.events,
        })

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def summary(self) -> dict:
        counts = {}
        for r in self.rows:
            counts[r.outcome] = counts.get(r.outcome, 0) + 1
        return {"entries": len(self.entries), "outcomes": dict(sorted(counts.items())),
                "invariants_failed": len(self.failed_invariants),
                "inconsistencies": len(self.events), "ok": self.ok}

    def to_text(self) -> str:
        lines = [f"config: {json.dumps(plain(self.config), sort_keys=True)}", ""]
        by_ring: dict[str, list[Row]] = {}
        for r in self.rows:
            by_ring.setdefault(r.ring, []).append(r)
        for e in self.entries:
            head = f"== {e['id']}: {e['construction'].strip().splitlines()[0]}"
            lines.append(head + f"  [degree bound {e['degree']}]")
            if e["error"]:
                lines.append(f"   ERROR {e['error']}")
            for r in by_ring.get(e["id"], []):
                exp = f"  expected {r.expected}: {r.outcome}" if r.expected else ""
                lines.append(f"   {r.property:<22} {r.status:<15} {r.source:<11}{exp}")
                if r.witness:
                    lines.append(f"      witness {json.dumps(plain(r.witness), sort_keys=True)}")
                if r.source == "inference":
                    lines.append(f"      trace {r.trace}")
            for name, ok, why in e["scripts"] + e["replays"]:
                lines.append(f"   check {name}: {_ok(ok)} ({why})")
            lines.append("")
        lines.append("invariants:")
        for inv in self.invariants:
            lines.append(f"   {'PASS' if inv['ok'] else 'FAIL'} {inv['name']}: {inv['detail']}")
        lines.append(f"inconsistencies: {len(self.events)}")
        for ev in self.events:
            lines.append(f"   {ev}")
        s = self.summary()
        lines.append(f"summary: {json.dumps(s, sort_keys=True)}")
        return "\n".join(lines) + "\n"


def _ok(flag) -> str:
    return {True: "ok", False: "FAILED", None: "open"}[flag]


def compare(exp_status: Status, v: Verdict | None, degree: int, strict: bool) -> str:
    if v is None or v.status is Status.UNKNOWN:
        return "mismatch" if strict else "bound-limited"
    if exp_status is Status.HOLDS:
        if v.status is Status.FAILS:
            return "mismatch"
        if v.bound is not None and v.bound < degree:
            return "mismatch" if strict else "bound-limited"
        return "met"
    if v.status is Status.FAILS:
        return "met"
    if v.bound is None:
        return "mismatch"
    return "mismatch" if strict else "bound-limited"


def build_network(results: list[EntryResult], entries: dict[str, CorpusEntry]) -> Network:
    net = Network()
    for r in results:
        net.add(Node(r.id, dict(r.verdicts), None, list(entries[r.id].links), dict(r.facts)))
    return net.close()


def verify_paper(config: Config = Config(), corpus: list[CorpusEntry] | None = None) -> Report:
    corpus = builtin_corpus() if corpus is None else corpus
    if config.only:
        corpus = [e for e in corpus if e.id in config.only]
    entries = {e.id: e for e in corpus}
    ordered = sorted(entries.values(), key=lambda e: e.id)
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(evaluate_entry, ordered, [config] * len(ordered)))
    else:
        results = [evaluate_entry(e, config) for e in ordered]
    results.sort(key=lambda r: r.id)
    raw = {r.id: dict(r.verdicts) for r in results}
    net = build_network(results, entries)

    rows = []
    for r in results:
        entry = entries[r.id]
        verdicts = net.nodes[r.id].verdicts
        for prop in Property:
            v = verdicts.get(prop)
            exp = entry.expectation(prop)
            if v is None and exp is None:
                continue
            v = v or unknown("not decided")
            if exp is None:
                outcome, expected = "-", None
            elif exp.annotation:
                outcome, expected = "annotated", exp.status.value
            else:
                outcome, expected = compare(exp.status, v, r.degree, config.strict), exp.status.value
            rows.append(Row(r.id, prop.value, v.label(), v.bound, v.witness,
                            net.chain(r.id, prop), exp.citation if exp else "", expected, outcome,
                            v.source))
    invariants = _invariants(results, raw, net, entries, config.strict)
    entry_dicts = [{"id": r.id, "construction": r.construction, "kind": r.kind, "degree": r.degree,
                    "info": r.info, "error": r.error,
                    "scripts": [list(s) for s in r.scripts], "replays": [list(s) for s in r.replays]}
                   for r in results]
    cfg = {"degree": config.degree, "budget": config.budget, "power_bound": config.power_bound,
           "strict": config.strict}
    return Report(cfg, rows, entry_dicts, invariants, [str(e) for e in net.events], net)


def _invariants(results, raw, net: Network, entries, strict: bool) -> list[dict]:
    out = []

    def add(name, ok, detail):
        out.append({"name": name, "ok": bool(ok), "detail": detail})

    bad = [f"{r.id}: {s[0]}" for r in results for s in r.scripts + r.replays if s[1] is False]
    add("witness scripts replay", not bad, "; ".join(bad) or f"{sum(len(r.scripts) + len(r.replays) for r in results)} checks")
    violations = net.edge_violations()
    add("edge soundness", not violations,
        "; ".join(violations) or f"{len(results)} rings x {sum(1 for r in RULES if r.premises)} edges")
    rad = [f"{r.id}: {k}" for r in results for k, ok in r.info.get("radicals", {}).items() if not ok]
    add("radical inclusions and collapse", not rad, "; ".join(rad) or "all table rings")
    incoherent = []
    checked = 0
    for r in results:
        for link in entries[r.id].links:
            if link.kind not in IFF_SNIFP_LINKS or link.bases[0] not in raw:
                continue
            mine = raw[r.id].get(Property.STRONGLY_NIL_IFP)
            base = raw[link.bases[0]].get(Property.STRONGLY_NIL_IFP)
            if mine is None or base is None or Status.UNKNOWN in (mine.status, base.status):
                continue
            checked += 1
            if mine.status is not base.status:
                incoherent.append(f"{r.id} vs {link.bases[0]}")
    add("transfer coherence", not incoherent, "; ".join(incoherent) or f"{checked} linked pairs agree")
    unwitnessed, limited = [], []
    present = [fb for fb in FORBIDDEN if any(w in net.nodes for w in fb.witnesses)]
    for fb in present:
        ok = open_ = False
        for wid in fb.witnesses:
            if wid not in net.nodes:
                continue
            s, t = net.verdict(wid, fb.source), net.verdict(wid, fb.target)
            if s is None or t is None:
                continue
            if s.status is Status.HOLDS and t.status is Status.FAILS:
                ok = True
            elif Status.UNKNOWN in (s.status, t.status) or t.bound is not None:
                open_ = True
        name = f"{fb.source.value} -/-> {fb.target.value}"
        if not ok:
            (limited if open_ and not strict else unwitnessed).append(name)
    detail = "; ".join(unwitnessed) or f"{len(present) - len(limited)} forbidden edges"
    if limited:
        detail += "; bound-limited: " + "; ".join(limited)
    add("non-implications witnessed", not unwitnessed, detail)
    return out
