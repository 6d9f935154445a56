"""Acceptance criteria, one test per criterion. The summary prints PASS/FAIL per line."""
import time

import pytest

from ringlab.constructors import evaluate
from ringlab.corpus import builtin_corpus, corpus_index
from ringlab.deciders import decide, decide_all, replay
from ringlab.fpalgebra import build_algebra, realize_as_finite_ring, verify_poly_identity
from ringlab.harness import Config, _witness_degree, evaluate_entry, verify_paper
from ringlab.inference import FORBIDDEN, RULES
from ringlab.radicals import ideal_nilpotency, jacobson_radical, prime_radical, radical_report
from ringlab.verdicts import Property, Status

P = Property
CORPUS = corpus_index()


def _row(report, ring, prop):
    rows = [r for r in report.rows if r.ring == ring and r.property == prop.value]
    assert rows, f"no row for {prop.value} on {ring}"
    return rows[0]


def _ring(entry):
    if entry.kind == "realized":
        return realize_as_finite_ring(build_algebra(entry.construction))
    return evaluate(entry.construction)


def test_criterion_01_strict_run_meets_every_expectation(strict_report):
    report = strict_report
    assert report.config["degree"] == 2 and report.config["power_bound"] == 64
    assert not report.mismatches, [(r.ring, r.property, r.expected, r.status) for r in report.mismatches]
    assert not [e for e in report.entries if e["error"]]
    assert report.ok
    outcomes = {r.outcome for r in report.rows if r.expected is not None}
    assert outcomes <= {"met", "annotated"}
    assert report.elapsed < 600


def test_criterion_02_cubic_commutative_algebra(strict_report):
    alg = build_algebra(CORPUS["z7-cubic-commutative"].construction)
    assert alg.p == 7 and alg.dimension == 8
    ok, bad = verify_poly_identity(alg, ["x", "y"], ["3x^2", "4xy", "3y^2"])
    assert ok and not bad
    assert not alg.element("x*4xy").is_zero()
    row = _row(strict_report, "z7-cubic-commutative", P.STRONGLY_NIL_IFP)
    assert row.status == "Holds" and row.bound is None
    assert row.trace.startswith("Commutative")
    assert row.trace.index("Semicommutative") < row.trace.index("StronglyNilIFP")
    assert "semicommutative-gives-strongly-nil-ifp" in row.trace


def test_criterion_03_square_zero_free_algebra():
    alg = build_algebra(CORPUS["free-two-generator-square-zero"].construction)
    ok, _ = verify_poly_identity(alg, ["ba", "ba"], ["a", "a"])
    assert ok
    nil, k, why = alg.nilpotency(alg.element("b*a*b*a"), 64)
    assert nil is False and k is None
    assert "baba" in why


def test_criterion_04_truncated_algebra_witnesses():
    start = time.perf_counter()
    open_middle = build_algebra(CORPUS["length-four-truncation-open-middle"].construction)
    assert open_middle.in_ideal("a0b0")
    assert not open_middle.in_ideal("a0b2b0")
    six = build_algebra(CORPUS["length-six-truncation-six-generators"].construction)
    assert six.p == 2 and six.ambient_dimension == 9330
    assert six.in_ideal("a0b0")
    assert not six.in_ideal("b0a0")
    assert time.perf_counter() - start < 120


def _fail_degree(v):
    if v.witness is not None:
        return _witness_degree(v.witness)
    return (v.search_bounds or {}).get("fail_degree", 0)


def test_criterion_05_no_inconsistency_and_edges_sound(strict_report):
    assert strict_report.events == []
    soundness = next(i for i in strict_report.invariants if i["name"] == "edge soundness")
    assert soundness["ok"], soundness["detail"]
    edges = [r for r in RULES if r.premises]
    assert len(edges) >= 17
    # independent pass over the raw brute-force verdicts, bounded Holds included
    rings = [e for e in builtin_corpus() if e.kind != "algebra"]
    assert len(rings) >= 25
    bad = []
    for entry in rings:
        raw = evaluate_entry(entry, Config()).verdicts
        for rule in edges:
            prem = [raw.get(p) for p in rule.premises]
            if not all(v is not None and v.status is Status.HOLDS for v in prem):
                continue
            tv = raw.get(rule.target)
            if tv is None or tv.status is not Status.FAILS:
                continue
            reach = min((v.bound for v in prem if v.bound is not None), default=None)
            if reach is None or _fail_degree(tv) <= reach:
                if rule.side is None:
                    bad.append(f"{entry.id}: {rule.id}")
    assert bad == []


@pytest.mark.parametrize("base", ["Z(4)", "Product(Z(2),Z(2))"])
def test_criterion_06_matrix_transfers_agree(base):
    want = decide(evaluate(base), P.STRONGLY_NIL_IFP, 1)
    assert want.status is not Status.UNKNOWN
    for shape in (f"U(2,{base})", f"D(2,{base})", f"V(2,{base})", f"T({base})"):
        got = decide(evaluate(shape), P.STRONGLY_NIL_IFP, 1)
        assert got.status is want.status, shape


FINITE_SEMIPRIME = (P.REDUCED, P.ARMENDARIZ, P.SEMICOMMUTATIVE, P.WEAKLY_SEMICOMMUTATIVE,
                    P.WEAK_IDEAL_ARMENDARIZ)


def test_criterion_07_finite_semiprime_specialization():
    for expr, status in (("M(2,Z(2))", Status.FAILS), ("Z(6)", Status.HOLDS)):
        verdicts = decide_all(evaluate(expr), 1)
        assert {verdicts[p].status for p in FINITE_SEMIPRIME} == {status}, expr


def test_criterion_08_radicals_collapse():
    checked = 0
    for entry in builtin_corpus():
        if entry.kind == "algebra":
            continue
        R = _ring(entry)
        rep = radical_report(R)
        assert rep.prime_radical <= rep.upper_nilradical <= rep.nil_set, entry.id
        assert rep.two_primal == rep.ni, entry.id
        if R.one is not None:
            assert prime_radical(R).members == jacobson_radical(R).members, entry.id
            checked += 1
    assert checked >= 20


@pytest.mark.parametrize("eid", ["null-square-ring-p2", "null-square-ring-p3",
                                 "cube-zero-ring-p2", "cube-zero-ring-p3"])
def test_criterion_09_nil_rings_of_order_p_squared(eid):
    entry = CORPUS[eid]
    R = _ring(entry)
    p = build_algebra(entry.construction).p
    assert R.order == p * p and R.one is None
    arm = decide(R, P.ARMENDARIZ, 2)
    assert arm.status is Status.HOLDS and arm.bound == 2
    assert decide(R, P.COMMUTATIVE).status is Status.HOLDS
    ok, k = ideal_nilpotency(R, R.subset(range(R.order)))
    assert ok and k <= 3


def test_criterion_10_reports_identical_across_worker_counts(strict_report):
    parallel = verify_paper(Config(strict=True, workers=2))
    assert parallel.to_json() == strict_report.to_json()
    assert parallel.to_text() == strict_report.to_text()


def test_criterion_11_non_implications_backed_by_witnesses(strict_report):
    assert len(FORBIDDEN) >= 12
    by_id = {e["id"]: e for e in strict_report.entries}
    for fb in FORBIDDEN:
        backed = False
        for wid in fb.witnesses:
            src = _row(strict_report, wid, fb.source)
            tgt = _row(strict_report, wid, fb.target)
            if not src.status.startswith("Holds") or tgt.status != "Fails":
                continue
            checks = by_id[wid]["scripts"] + by_id[wid]["replays"]
            assert all(ok is not False for _, ok, _ in checks), wid
            replayed = any(ok is True for _, ok, _ in checks)
            if CORPUS[wid].kind != "algebra" and tgt.witness is not None:
                replayed = replayed or replay(_ring(CORPUS[wid]), fb.target, tgt.witness)
            backed = backed or replayed or tgt.source == "annotation"
        assert backed, f"{fb.source.value} -/-> {fb.target.value}"
