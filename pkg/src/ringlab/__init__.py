"""Finite rings and presented algebras: property deciders, radicals and an implication engine."""
from .constructors import evaluate, parse_expr
from .core import FiniteRing, RingError
from .deciders import decide, decide_all
from .inference import explain, infer, rule_catalog
from .verdicts import Property, Status, Verdict

__all__ = ["FiniteRing", "RingError", "evaluate", "parse_expr", "decide", "decide_all",
           "infer", "explain", "rule_catalog", "Property", "Status", "Verdict"]
