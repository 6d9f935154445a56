import json
from dataclasses import replace

import pytest

from ringlab.corpus import builtin_corpus, corpus_index
from ringlab.harness import Config, compare, verify_paper
from ringlab.hunt import grid, hunt, open_pairs, render
from ringlab.verdicts import Property, Status, fails, holds, unknown

P = Property


def test_corpus_shape():
    corpus = builtin_corpus()
    ids = [e.id for e in corpus]
    assert len(corpus) >= 25
    assert ids == sorted(ids) and len(set(ids)) == len(ids)
    for e in corpus:
        assert e.expectations
        for exp in e.expectations:
            assert exp.citation, (e.id, exp.prop)


def test_open_middle_truncation_expects_semicommutative_fail():
    e = corpus_index()["length-four-truncation-open-middle"]
    exp = e.expectation(P.SEMICOMMUTATIVE)
    assert exp.status is Status.FAILS
    assert exp.witness == {"a": "a0", "b": "b0", "r": "b2"}


def test_six_generator_truncation_expects_reversible_fail():
    exp = corpus_index()["length-six-truncation-six-generators"].expectation(P.REVERSIBLE)
    assert exp.status is Status.FAILS and exp.witness == {"a": "a0", "b": "b0"}


def test_compare_modes():
    assert compare(Status.HOLDS, holds("x"), 2, True) == "met"
    assert compare(Status.HOLDS, holds("x", bound=2), 2, True) == "met"
    assert compare(Status.HOLDS, holds("x", bound=1), 2, True) == "mismatch"
    assert compare(Status.HOLDS, holds("x", bound=1), 2, False) == "bound-limited"
    assert compare(Status.HOLDS, unknown("x"), 2, False) == "bound-limited"
    assert compare(Status.FAILS, fails({"a": 1}), 2, True) == "met"
    assert compare(Status.FAILS, holds("x"), 2, False) == "mismatch"
    assert compare(Status.HOLDS, fails({"a": 1}), 2, False) == "mismatch"


def test_degree_zero_lenient_run_is_bound_limited_but_ok():
    report = verify_paper(Config(degree=0))
    limited = {(r.ring, r.property) for r in report.rows if r.outcome == "bound-limited"}
    assert ("z7-cubic-commutative", "Armendariz") in limited
    assert not report.mismatches
    assert report.ok
    strict = verify_paper(Config(degree=0, strict=True))
    assert not strict.ok and strict.mismatches


def test_corrupted_expectation_is_reported():
    corpus = [e for e in builtin_corpus() if e.id in ("z6", "m2-z2")]
    z6 = corpus[[e.id for e in corpus].index("z6")]
    bad = [replace(x, status=Status.FAILS) if x.prop is P.REVERSIBLE or x.prop is P.REDUCED else x
           for x in z6.expectations]
    corpus = [replace(z6, expectations=bad) if e.id == "z6" else e for e in corpus]
    report = verify_paper(Config(degree=1), corpus)
    assert not report.ok
    rows = [(r.ring, r.property, r.expected, r.status) for r in report.mismatches]
    assert ("z6", "Reduced", "Fails", "Holds") in rows
    assert "expected Fails: mismatch" in report.to_text()


def test_text_and_json_agree():
    report = verify_paper(Config(degree=1, only=("z4", "upper-2-z4", "trivial-z4")))
    data = json.loads(report.to_json())
    assert set(data) == {"config", "summary", "entries", "rows", "invariants", "inconsistencies"}
    text = report.to_text()
    for row in data["rows"]:
        assert set(row) >= {"ring", "property", "status", "bound", "witness", "trace", "citation"}
        assert f"== {row['ring']}:" in text
        assert row["property"] in text
    assert data["summary"] == report.summary()
    assert "elapsed" not in text and "time" not in data["config"]


def test_reports_repeat_byte_for_byte():
    cfg = Config(degree=1, only=("z4", "upper-2-z2", "m2-z2"))
    assert verify_paper(cfg).to_json() == verify_paper(cfg).to_json()


def test_entry_errors_are_reported_not_raised():
    z4 = corpus_index()["z4"]
    broken = replace(z4, id="broken", construction="Z(")
    report = verify_paper(Config(degree=1), [broken])
    assert report.entries[0]["error"]
    assert not report.ok


# hunter

def test_grid_is_ordered_and_capped():
    g = grid(16)
    assert g == sorted(g)
    assert all(order <= 16 for order, _ in g)
    exprs = {e for _, e in g}
    assert {"Z(2)", "GF(2,2)", "U(2,Z(2))", "M(2,Z(2))", "T(Z(4))"} <= exprs


def test_open_pairs_skip_catalog_edges():
    pairs = set(open_pairs())
    assert (P.ARMENDARIZ, P.WEAK_ARMENDARIZ) not in pairs
    assert (P.ARMENDARIZ, P.ABELIAN) not in pairs
    assert (P.WEAKLY_SEMICOMMUTATIVE, P.SEMICOMMUTATIVE) in pairs


def test_hunt_fixed_pairs():
    pairs = [(P.WEAKLY_SEMICOMMUTATIVE, P.SEMICOMMUTATIVE), (P.ARMENDARIZ, P.ABELIAN),
             (P.ABELIAN, P.STRONGLY_NIL_IFP)]
    wsc, arm, abel = hunt(16, pairs)
    assert wsc.witness == "U(2,Z(2))" and wsc.order == 8
    assert arm.skipped and arm.witness is None
    assert abel.witness is None and "rewriting-four-generator-algebra" in abel.cited
    text = render([wsc, arm, abel])
    assert "skipped" in text and "rewriting-four-generator-algebra" in text
    assert json.loads(render([wsc], as_json=True))[0]["order"] == 8


@pytest.mark.parametrize("max_order", [4, 8])
def test_hunt_witnesses_are_genuine(max_order):
    from ringlab.constructors import evaluate
    from ringlab.deciders import decide_all
    from ringlab.inference import infer

    for res in hunt(max_order):
        if res.witness is None:
            continue
        R = evaluate(res.witness)
        v, _, _ = infer(decide_all(R, 1), R, res.witness)
        assert v[res.source].status is Status.HOLDS
        assert v[res.target].status is Status.FAILS
        assert R.order == res.order <= max_order
