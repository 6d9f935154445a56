"""Classification of a single ring expression or presentation, with inference."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .constructors import Expr, evaluate, parse_expr
from .core import FiniteRing, RingError
from .deciders import DEFAULT_BUDGET, DEFAULT_DEGREE, decide_all, structural_verdicts
from .harness import plain
from .inference import Link, Network, Node, SideConditions
from .verdicts import Property

_TRANSFER_KINDS = {"U": "upper", "D": "diagonal", "V": "band", "T": "trivial", "Dorroh": "dorroh",
                   "Product": "product", "TruncPoly": "truncpoly", "Subring": "subring"}


def _links(expr: Expr) -> list[Link]:
    kind = _TRANSFER_KINDS.get(expr.kind)
    if kind is None:
        return []
    params = {}
    if expr.kind in ("U", "D", "V", "TruncPoly"):
        params["n"] = expr.params[0]
    return [Link(kind, tuple(str(a) for a in expr.args), params)]


def network_for_expr(expr: Expr | str, degree: int = DEFAULT_DEGREE, budget: int = DEFAULT_BUDGET,
                     ) -> tuple[Network, str, dict[str, FiniteRing]]:
    """Nodes for the expression and each sub-expression, linked by their constructions."""
    if isinstance(expr, str):
        expr = parse_expr(expr)
    cache: dict[str, FiniteRing] = {}
    evaluate(expr, cache=cache)
    nodes: dict[str, Node] = {}

    def visit(e: Expr):
        key = str(e)
        if key in nodes:
            return
        for a in e.args:
            visit(a)
        R = cache[key]
        nodes[key] = Node(key, decide_all(R, degree, budget), R, _links(e))
        if e.kind == "Quotient":
            parent = nodes[str(e.args[0])]
            parent.links.append(Link("quotient", (key,), {"ideal": list(e.gens)}))

    visit(expr)
    net = Network()
    sides = SideConditions()
    for node in nodes.values():
        sides.precompute(node)
        net.add(node)
    return net.close(), str(expr), cache


def load_spec(spec: str) -> str:
    path = Path(spec)
    if path.is_file():
        return path.read_text()
    return spec


def classify(spec: str, degree: int = DEFAULT_DEGREE, budget: int = DEFAULT_BUDGET,
             power_bound: int = 64) -> "Classification":
    """Classify an expression, a presentation text, a file holding either, or a corpus id."""
    from .corpus import corpus_index
    from .fpalgebra import build_algebra, realize_as_finite_ring

    text = load_spec(spec).strip()
    corpus = corpus_index()
    if text in corpus:
        from .harness import Config, verify_paper
        rep = verify_paper(Config(degree=degree, budget=budget, power_bound=power_bound),
                           [corpus[text]] + _corpus_bases(corpus, text))
        return Classification(text, rep.network, None)
    if text.startswith("algebra"):
        alg = build_algebra(text)
        try:
            R = realize_as_finite_ring(alg)
        except RingError:
            R = None
        if R is not None:
            R.label = "realized algebra"
            node = Node("A", decide_all(R, degree, budget), R)
        else:
            node = Node("A", structural_verdicts(alg), alg)
        SideConditions().precompute(node)
        net = Network()
        net.add(node)
        return Classification("A", net.close(), R)
    net, root, cache = network_for_expr(text, degree, budget)
    return Classification(root, net, cache[root])


def _corpus_bases(corpus, eid: str) -> list:
    out, todo, seen = [], [eid], {eid}
    while todo:
        for link in corpus[todo.pop()].links:
            for b in link.bases:
                if b not in seen and b in corpus:
                    seen.add(b)
                    out.append(corpus[b])
                    todo.append(b)
    return out


def name_witness(R: FiniteRing | None, w):
    if R is None or w is None:
        return w
    out = {}
    for k, v in w.items():
        if k in ("f", "g"):
            out[k] = [R.name(int(x)) for x in v]
        elif k in ("a", "b", "r", "e"):
            out[k] = R.name(int(v))
        else:
            out[k] = v
    return out


@dataclass
class Classification:
    root: str
    network: Network
    ring: FiniteRing | None

    def rows(self) -> list[dict]:
        out = []
        verdicts = self.network.nodes[self.root].verdicts
        for prop in Property:
            v = verdicts.get(prop)
            if v is None:
                continue
            d = v.derivation
            out.append({
                "ring": self.root, "property": prop.value, "status": v.status.value,
                "bound": v.bound, "witness": plain(name_witness(self.ring, v.witness)),
                "trace": self.network.chain(self.root, prop),
                "citation": d.statement if d is not None else v.certificate,
            })
        return out

    def to_json(self) -> str:
        return json.dumps(self.rows(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [f"ring {self.root}"]
        for r in self.rows():
            label = r["status"] if r["bound"] is None else f"{r['status']}(deg<={r['bound']})"
            lines.append(f"  {r['property']:<22} {label:<15} {r['trace']}")
            if r["witness"]:
                lines.append(f"  {'':<22} witness {json.dumps(r['witness'], sort_keys=True)}")
        return "\n".join(lines) + "\n"
