"""Text presentations of algebras over F_p and their symbolic relations.

Format::

    algebra p=2 gens=[a0,a1,b0,b1] unital truncate=4
    rel a0b0
    rel a0b1 + a1b0
    rel a0{r}b0          # {r}: any nonempty word, {r?}: any word
    pattern c%+c         # % = any gap, %+ = nonempty gap

Words are written by juxtaposing generator names (longest match wins);
``x^3`` and ``(a+b)^2`` are allowed, as are integer coefficients.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .core import RingError


class PresentationError(RingError):
    pass


Token = int | str  # generator index, or placeholder name
SymPoly = dict[tuple, int]  # word of tokens -> coefficient mod p


@dataclass(frozen=True)
class Placeholder:
    name: str
    nonempty: bool


@dataclass
class Relation:
    source: str
    poly: SymPoly
    placeholders: dict[str, Placeholder]


@dataclass
class Presentation:
    p: int
    gens: tuple[str, ...]
    relations: list[Relation] = field(default_factory=list)
    patterns: list[str] = field(default_factory=list)
    truncate: int | None = None
    unital: bool = False
    commutative: bool = False
    approximate: bool = False
    label: str = "A"

    def to_text(self) -> str:
        flags = []
        if self.commutative:
            flags.append("commutative")
        if self.unital:
            flags.append("unital")
        if self.truncate is not None:
            flags.append(f"truncate={self.truncate}")
        if self.approximate:
            flags.append("approximate")
        head = f"algebra p={self.p} gens=[{','.join(self.gens)}]"
        lines = [" ".join([head] + flags)]
        lines += [f"rel {r.source}" for r in self.relations]
        lines += [f"pattern {pat}" for pat in self.patterns]
        return "\n".join(lines) + "\n"

    @property
    def has_placeholders(self) -> bool:
        return any(r.placeholders for r in self.relations)


# ----------------------------------------------------------------------
# expression parsing
_TOKEN = re.compile(r"\s*(?:(\d+)|(\{[A-Za-z_]\w*\??\})|(\^)|([()+\-*])|([A-Za-z_][A-Za-z_0-9]*))")


class _ExprParser:
    """Recursive descent over sums of products; generator names split by longest match."""

    def __init__(self, text: str, gens: tuple[str, ...], p: int, allow_placeholders: bool):
        self.text = text
        self.gens = gens
        self.p = p
        self.allow = allow_placeholders
        self.placeholders: dict[str, Placeholder] = {}
        self.tokens = self._lex(text)
        self.pos = 0

    def _split_name(self, ident: str) -> list[int]:
        out, i = [], 0
        by_len = sorted(self.gens, key=len, reverse=True)
        while i < len(ident):
            for g in by_len:
                if ident.startswith(g, i):
                    out.append(self.gens.index(g))
                    i += len(g)
                    break
            else:
                raise PresentationError(f"cannot split {ident!r} into generators {list(self.gens)}")
        return out

    def _lex(self, text: str) -> list[tuple[str, object]]:
        toks, pos = [], 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise PresentationError(f"unexpected character in {text!r} at {pos}")
            pos = m.end()
            num, ph, caret, op, ident = m.groups()
            if num is not None:
                toks.append(("num", int(num)))
            elif ph is not None:
                if not self.allow:
                    raise PresentationError(f"placeholder {ph} not allowed here")
                name = ph[1:-1]
                nonempty = not name.endswith("?")
                name = name.rstrip("?")
                prev = self.placeholders.get(name)
                if prev is not None and prev.nonempty != nonempty:
                    raise PresentationError(f"placeholder {name} used with two kinds")
                self.placeholders[name] = Placeholder(name, nonempty)
                toks.append(("ph", name))
            elif caret is not None:
                toks.append(("^", None))
            elif op is not None:
                toks.append((op, None))
            else:
                for g in self._split_name(ident):
                    toks.append(("gen", g))
        return toks

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else ("end", None)

    def take(self, kind=None):
        tok = self.peek()
        if kind is not None and tok[0] != kind:
            raise PresentationError(f"expected {kind} in {self.text!r}, found {tok[0]}")
        self.pos += 1
        return tok

    def parse(self) -> SymPoly:
        out = self.sum()
        if self.peek()[0] != "end":
            raise PresentationError(f"trailing input in {self.text!r}")
        return out

    def sum(self) -> SymPoly:
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        acc = _scale(self.term(), sign, self.p)
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            acc = _add(acc, _scale(self.term(), sign, self.p), self.p)
        return acc

    def term(self) -> SymPoly:
        acc: SymPoly = {(): 1}
        seen = False
        while self.peek()[0] in ("num", "ph", "gen", "("):
            acc = _mul(acc, self.power(), self.p)
            seen = True
            if self.peek()[0] == "*":
                self.take()
        if not seen:
            raise PresentationError(f"empty term in {self.text!r}")
        return acc

    def power(self) -> SymPoly:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            k = self.take("num")[1]
            out: SymPoly = {(): 1}
            for _ in range(k):
                out = _mul(out, base, self.p)
            return out
        return base

    def atom(self) -> SymPoly:
        kind, val = self.take()
        if kind == "num":
            return {(): val % self.p} if val % self.p else {}
        if kind == "gen":
            return {(val,): 1}
        if kind == "ph":
            return {(val,): 1}
        if kind == "(":
            inner = self.sum()
            self.take(")")
            return inner
        raise PresentationError(f"unexpected {kind} in {self.text!r}")


def _add(x: SymPoly, y: SymPoly, p: int) -> SymPoly:
    out = dict(x)
    for w, c in y.items():
        v = (out.get(w, 0) + c) % p
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


def _scale(x: SymPoly, c: int, p: int) -> SymPoly:
    c %= p
    return {w: v * c % p for w, v in x.items()} if c else {}


def _mul(x: SymPoly, y: SymPoly, p: int) -> SymPoly:
    out: SymPoly = {}
    for w1, c1 in x.items():
        for w2, c2 in y.items():
            w = w1 + w2
            v = (out.get(w, 0) + c1 * c2) % p
            if v:
                out[w] = v
            else:
                out.pop(w, None)
    return out


def parse_poly(text: str, gens: tuple[str, ...], p: int, allow_placeholders: bool = False,
               ) -> tuple[SymPoly, dict[str, Placeholder]]:
    parser = _ExprParser(text, gens, p, allow_placeholders)
    return parser.parse(), parser.placeholders


_HEAD = re.compile(r"^algebra\s+(.*)$")


def parse_presentation(text: str, label: str | None = None) -> Presentation:
    lines = [ln.split("#", 1)[0].rstrip() for ln in text.strip().splitlines()]
    lines = [ln for ln in lines if ln.strip()]
    if not lines:
        raise PresentationError("empty presentation")
    m = _HEAD.match(lines[0].strip())
    if not m:
        raise PresentationError("presentation must start with 'algebra'")
    head = m.group(1)
    gm = re.search(r"gens=\[([^\]]*)\]", head)
    pm = re.search(r"\bp=(\d+)", head)
    if not gm or not pm:
        raise PresentationError("header needs p=<prime> and gens=[...]")
    p = int(pm.group(1))
    from .constructors import is_prime
    if not is_prime(p):
        raise PresentationError(f"p={p} is not prime")
    gens = tuple(g.strip() for g in gm.group(1).split(",") if g.strip())
    if len(set(gens)) != len(gens) or not gens:
        raise PresentationError("generator names must be distinct and nonempty")
    rest = re.sub(r"gens=\[[^\]]*\]|\bp=\d+", " ", head)
    tm = re.search(r"truncate=(\d+)", rest)
    rest_flags = set(re.sub(r"truncate=\d+", " ", rest).split())
    unknown = rest_flags - {"commutative", "unital", "approximate"}
    if unknown:
        raise PresentationError(f"unknown header flags {sorted(unknown)}")
    pres = Presentation(
        p=p, gens=gens, truncate=int(tm.group(1)) if tm else None,
        unital="unital" in rest_flags, commutative="commutative" in rest_flags,
        approximate="approximate" in rest_flags, label=label or "A",
    )
    for ln in lines[1:]:
        kind, _, body = ln.strip().partition(" ")
        body = body.strip()
        if kind == "rel":
            poly, phs = parse_poly(body, gens, p, allow_placeholders=True)
            if () in poly:
                raise PresentationError(f"relation {body!r} has a constant term")
            pres.relations.append(Relation(body, poly, phs))
        elif kind == "pattern":
            pres.patterns.append(body)
        else:
            raise PresentationError(f"unknown line kind {kind!r}")
    if pres.approximate and pres.truncate is None:
        raise PresentationError("approximate needs truncate=<L>")
    return pres
