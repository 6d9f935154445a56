import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab.classify import network_for_expr
from ringlab.constructors import evaluate
from ringlab.deciders import decide_all
from ringlab.inference import (FORBIDDEN, RULES, TRANSFERS, Link, Network, Node, NoVerdict,
                               closure_from, explain, infer, lattice_dot, rule_catalog)
from ringlab.verdicts import Property, Status, fails, holds, unknown

P = Property


def test_catalog_size():
    rules, transfers = rule_catalog()
    assert len([r for r in rules if r.premises]) >= 17
    assert len(transfers) >= 10
    assert len({r.id for r in rules}) == len(rules)
    assert len({t.id for t in transfers}) == len(transfers)


def test_every_rule_has_a_statement():
    for r in RULES:
        assert r.statement and r.target not in r.premises
    for t in TRANSFERS:
        assert t.statement and t.direction in ("up", "down")


def test_forbidden_edges_are_not_derivable():
    for fb in FORBIDDEN:
        assert fb.target not in closure_from([fb.source]), fb
        assert fb.witnesses


def test_reduced_closure():
    reach = closure_from([P.REDUCED])
    assert {P.ARMENDARIZ, P.WEAK_IDEAL_ARMENDARIZ, P.STRONGLY_NIL_IFP, P.WEAK_ARMENDARIZ} <= reach
    assert P.COMMUTATIVE not in reach


def test_conjunction_needs_both_premises():
    assert P.WEAK_IDEAL_ARMENDARIZ not in closure_from([P.ARMENDARIZ])
    assert P.WEAK_IDEAL_ARMENDARIZ in closure_from([P.ARMENDARIZ, P.WEAKLY_SEMICOMMUTATIVE])


def test_trace_of_commutative_ring():
    verdicts, events, net = infer({P.COMMUTATIVE: holds("structure", source="structure")})
    assert events == []
    assert verdicts[P.STRONGLY_NIL_IFP].status is Status.HOLDS
    chain = net.chain("R", P.STRONGLY_NIL_IFP)
    assert chain.startswith("Commutative [structure] => Semicommutative")
    assert chain.endswith("StronglyNilIFP [semicommutative-gives-strongly-nil-ifp]")


def test_bounds_propagate():
    verdicts, _, _ = infer({P.ARMENDARIZ: holds("search", bound=2),
                            P.WEAKLY_SEMICOMMUTATIVE: holds("exhaustive")})
    assert verdicts[P.WEAK_IDEAL_ARMENDARIZ].bound == 2
    assert verdicts[P.WEAK_ARMENDARIZ].label() == "Holds(deg<=2)"


def test_contrapositive_on_single_premise_edges():
    w = {"f": [1], "g": [4], "i": 0, "j": 0, "r": 2}
    verdicts, events, _ = infer({P.STRONGLY_NIL_IFP: fails(w)})
    assert events == []
    for p in (P.SEMICOMMUTATIVE, P.REDUCED, P.TWO_PRIMAL, P.NI, P.COMMUTATIVE, P.REVERSIBLE):
        assert verdicts[p].status is Status.FAILS, p
    # two-premise edges do not run backwards
    assert P.ARMENDARIZ not in verdicts or verdicts[P.ARMENDARIZ].status is not Status.FAILS


def test_contradiction_is_recorded_not_overwritten():
    w = {"f": [1], "g": [1], "i": 0, "j": 0, "r": 0}
    verdicts, events, _ = infer({P.SEMICOMMUTATIVE: holds("given"), P.STRONGLY_NIL_IFP: fails(w)})
    assert events
    assert verdicts[P.STRONGLY_NIL_IFP].status is Status.FAILS
    assert verdicts[P.SEMICOMMUTATIVE].status is Status.HOLDS


def test_bounded_holds_does_not_contradict_higher_degree_fail():
    w = {"f": [1, 2, 3], "g": [1, 1, 1], "i": 0, "j": 1}
    verdicts, events, _ = infer({P.ARMENDARIZ: holds("search", bound=1),
                                 P.WEAK_ARMENDARIZ: fails(w)})
    assert events == []


def test_unknowns_are_upgraded():
    verdicts, _, _ = infer({P.REDUCED: holds("given"), P.ARMENDARIZ: unknown("budget")})
    assert verdicts[P.ARMENDARIZ].status is Status.HOLDS
    assert verdicts[P.ARMENDARIZ].source == "inference"


def test_matrix_ring_contrapositives_on_real_ring():
    R = evaluate("M(2,Z(2))")
    verdicts, events, _ = infer(decide_all(R, 1), R)
    assert events == []
    assert verdicts[P.REDUCED].status is Status.FAILS


def test_side_condition_guard():
    R = evaluate("U(2,Z(2))")
    raw = decide_all(R, 1)
    verdicts, events, net = infer(raw, R)
    assert events == []
    assert net.nodes["R"].facts.get("unital") is True
    assert net.nodes["R"].facts.get("prime_radical_zero") is False


def test_transfer_from_base_ring():
    net, root, _ = network_for_expr("U(2,Z(4))", 1)
    v = net.verdict(root, P.STRONGLY_NIL_IFP)
    assert v.status is Status.HOLDS and v.bound is None
    assert "Z(4)" in net.chain(root, P.STRONGLY_NIL_IFP)
    assert net.events == []


def test_reduced_base_gives_trivial_extension():
    net, root, _ = network_for_expr("T(Z(3))", 1)
    v = net.verdict(root, P.WEAK_IDEAL_ARMENDARIZ)
    assert v.status is Status.HOLDS and v.bound is None


def test_explain_and_missing_verdict():
    _, _, net = infer({P.REDUCED: holds("given")})
    text = explain(net, "R", P.WEAK_ARMENDARIZ)
    assert "Reduced on R: Holds" in text
    with pytest.raises(NoVerdict):
        net.trace("R", P.ABELIAN)


def test_lattice_dot():
    dot = lattice_dot()
    assert dot.startswith("digraph")
    for p in Property:
        assert f'"{p.value}"' in dot
    assert '"Armendariz" -> "WeakArmendariz"' in dot
    assert "style=dashed" in dot


def test_fixpoint_is_idempotent_on_network():
    net, root, _ = network_for_expr("Dorroh(T(Z(2)),2)", 1)
    before = {(n, p): v.label() for n, node in net.nodes.items() for p, v in node.verdicts.items()}
    net.close()
    after = {(n, p): v.label() for n, node in net.nodes.items() for p, v in node.verdicts.items()}
    assert before == after


props = st.sets(st.sampled_from(list(Property)), max_size=5)


@settings(max_examples=60, deadline=None)
@given(props)
def test_closure_is_idempotent_and_extensive(start):
    reach = closure_from(start)
    assert set(start) <= reach
    assert closure_from(reach) == reach


@settings(max_examples=60, deadline=None)
@given(props, props)
def test_closure_is_monotone(a, b):
    assert closure_from(a) <= closure_from(a | b)


@settings(max_examples=40, deadline=None)
@given(props)
def test_infer_agrees_with_closure(start):
    verdicts, events, _ = infer({p: holds("given") for p in start})
    derived = {p for p, v in verdicts.items() if v.status is Status.HOLDS}
    assert events == []
    assert derived == closure_from(start)


def test_network_with_explicit_link():
    net = Network()
    base = Node("B", {P.REDUCED: holds("given")})
    top = Node("T", {}, links=[Link("truncpoly", ("B",), {"n": 2})])
    net.add(base)
    net.add(top)
    net.close()
    assert net.verdict("T", P.WEAK_IDEAL_ARMENDARIZ).status is Status.HOLDS
