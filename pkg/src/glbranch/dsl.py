"""Text syntax for labels, segments, multisegments, representations and unitary factors.

    rho R dim=1 [dual=S] [unitary]
    pi  = L([1/2,9/2]@R + [7/2,13/2]@R)
    sig = Z([0,1]@R)
    tau = GL0
    u   = speh(R, u=2, v=1, alpha=1/4) x speh(R, u=1, v=1)

``#`` starts a comment. ``[x]@R`` abbreviates ``[x,x]@R``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .core import EMPTY, GL0, CuspidalLabel, IrrRep, Multisegment, Segment
from .unitary import SpehFactor, UnitaryRep

Value = Union[IrrRep, UnitaryRep, Multisegment]


class DSLError(ValueError):
    """A syntax or semantic error, with a 1-based position when one is known."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message, self.line, self.column = message, line, column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


_TOKEN = re.compile(
    r"\s*(?:(?P<num>-?\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[\[\],@+()=]))"
)


@dataclass
class _Tok:
    kind: str
    text: str
    col: int


def _tokenize(text: str, line: int) -> list[_Tok]:
    out, pos = [], 0
    text = text.split("#", 1)[0]
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise DSLError(f"unexpected character {text[col - 1]!r}", line, col)
        kind = m.lastgroup
        out.append(_Tok(kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return out


@dataclass
class Session:
    labels: dict[str, CuspidalLabel] = field(default_factory=dict)
    bindings: dict[str, Value] = field(default_factory=dict)
    # duals created by another label's declaration; one matching explicit declaration is allowed
    implicit: set[str] = field(default_factory=set)

    def declare(self, label: CuspidalLabel, line: int = 0) -> None:
        known = self.labels.get(label.id)
        if known is not None:
            if label.id not in self.implicit:
                raise DSLError(f"label {label.id} declared twice", line, 1)
            if known != label:
                raise DSLError(f"label {label.id} is inconsistent with its implicit declaration", line, 1)
            self.implicit.discard(label.id)
            return
        self.labels[label.id] = label
        if label.dual_id != label.id:
            dual = label.dual
            known = self.labels.get(dual.id)
            if known is None:
                self.labels[dual.id] = dual
                self.implicit.add(dual.id)
            elif known != dual:
                raise DSLError(f"label {dual.id} is inconsistent with the dual of {label.id}", line, 1)

    def label(self, name: str, line: int = 0, col: int = 0) -> CuspidalLabel:
        try:
            return self.labels[name]
        except KeyError:
            raise DSLError(f"undeclared label {name}", line, col) from None


class _Parser:
    def __init__(self, text: str, session: Session, line: int = 1):
        self.toks = _tokenize(text, line)
        self.i = 0
        self.session = session
        self.line = line
        self.width = len(text) + 1

    def peek(self) -> Optional[_Tok]:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def col(self) -> int:
        t = self.peek()
        return t.col if t else self.width

    def fail(self, expected: str):
        t = self.peek()
        got = repr(t.text) if t else "end of input"
        raise DSLError(f"expected {expected}, got {got}", self.line, self.col())

    def take(self, kind: str, text: Optional[str] = None) -> _Tok:
        t = self.peek()
        if t is None or t.kind != kind or (text is not None and t.text != text):
            self.fail(repr(text) if text else kind)
        self.i += 1
        return t

    def accept(self, text: str) -> bool:
        t = self.peek()
        if t is not None and t.text == text:
            self.i += 1
            return True
        return False

    def done(self) -> None:
        if self.peek() is not None:
            self.fail("end of input")

    # grammar ---------------------------------------------------------------
    def number(self) -> Fraction:
        return Fraction(self.take("num").text)

    def segment(self) -> Segment:
        start = self.col()
        self.take("op", "[")
        a = self.number()
        b = self.number() if self.accept(",") else a
        self.take("op", "]")
        self.take("op", "@")
        t = self.take("name")
        label = self.session.label(t.text, self.line, t.col)
        try:
            return Segment(label, a, b)
        except ValueError as e:
            raise DSLError(str(e), self.line, start) from None

    def multisegment(self) -> Multisegment:
        t = self.peek()
        if t is not None and t.text in ("0", "GL0"):
            self.i += 1
            return EMPTY
        segs = [self.segment()]
        while self.accept("+"):
            segs.append(self.segment())
        return Multisegment.of(segs)

    def factor(self) -> SpehFactor:
        self.take("name", "speh")
        self.take("op", "(")
        t = self.take("name")
        label = self.session.label(t.text, self.line, t.col)
        params = {"u": None, "v": None, "alpha": Fraction(0)}
        while self.accept(","):
            key = self.take("name")
            if key.text not in params:
                raise DSLError(f"unknown speh parameter {key.text}", self.line, key.col)
            self.take("op", "=")
            params[key.text] = self.number()
        self.take("op", ")")
        if params["u"] is None or params["v"] is None:
            raise DSLError("speh(...) needs u= and v=", self.line, t.col)
        try:
            return SpehFactor(label, int(params["u"]), int(params["v"]), params["alpha"])
        except ValueError as e:
            raise DSLError(str(e), self.line, t.col) from None

    def value(self) -> Value:
        t = self.peek()
        if t is None:
            self.fail("a value")
        if t.kind == "name" and t.text == "GL0":
            self.i += 1
            return GL0
        if t.kind == "name" and t.text in ("L", "Z"):
            self.i += 1
            self.take("op", "(")
            m = self.multisegment()
            self.take("op", ")")
            return IrrRep.L(m) if t.text == "L" else IrrRep.Z(m)
        if t.kind == "name" and t.text == "speh":
            factors = [self.factor()]
            while self.peek() is not None and self.peek().text == "x":
                self.i += 1
                factors.append(self.factor())
            return UnitaryRep.of(factors)
        if t.kind == "name" and t.text in self.session.bindings:
            self.i += 1
            return self.session.bindings[t.text]
        if t.text == "[" or t.text == "0":
            return self.multisegment()
        self.fail("L(...), Z(...), GL0, speh(...), a multisegment or a bound name")

    def declaration(self) -> CuspidalLabel:
        self.take("name", "rho")
        name = self.take("name").text
        dim, dual, unitary = 1, None, False
        while self.peek() is not None:
            key = self.take("name")
            if key.text == "unitary":
                unitary = True
            elif key.text == "dim":
                self.take("op", "=")
                dim = int(self.take("num").text)
                if dim < 1:
                    raise DSLError("dim must be a positive integer", self.line, key.col)
            elif key.text == "dual":
                self.take("op", "=")
                dual = self.take("name").text
            else:
                raise DSLError(f"unknown label attribute {key.text}", self.line, key.col)
        return CuspidalLabel(name, dim, dual, unitary)


def parse_value(text: str, session: Session, line: int = 1) -> Value:
    p = _Parser(text, session, line)
    v = p.value()
    p.done()
    return v


def parse_multisegment(text: str, session: Session) -> Multisegment:
    p = _Parser(text, session)
    m = p.multisegment()
    p.done()
    return m


def parse_segment(text: str, session: Session) -> Segment:
    p = _Parser(text, session)
    s = p.segment()
    p.done()
    return s


def parse_rep(text: str, session: Session) -> IrrRep:
    v = parse_value(text, session)
    if isinstance(v, Multisegment):
        return IrrRep.L(v)
    if isinstance(v, UnitaryRep):
        return v.irrep()
    return v


def parse_unitary(text: str, session: Session) -> UnitaryRep:
    v = parse_value(text, session)
    if not isinstance(v, UnitaryRep):
        raise DSLError("expected speh(...) factors")
    return v


def parse_statement(text: str, session: Session, line: int = 1) -> None:
    """Apply one declaration or binding to ``session``; blank lines and comments are ignored."""
    p = _Parser(text, session, line)
    t = p.peek()
    if t is None:
        return
    if t.text == "rho":
        session.declare(p.declaration(), line)
        return
    name = p.take("name")
    p.take("op", "=")
    v = p.value()
    p.done()
    if name.text in session.bindings:
        raise DSLError(f"name {name.text} bound twice", line, name.col)
    session.bindings[name.text] = v


def parse_input(text: str, session: Optional[Session] = None) -> Session:
    session = session if session is not None else Session()
    for n, raw in enumerate(text.splitlines(), start=1):
        parse_statement(raw, session, n)
    return session


# printing --------------------------------------------------------------------
def format_value(v) -> str:
    if v is None:
        return "0"
    if isinstance(v, IrrRep):
        return "GL0" if not v.m else f"L({format_value(v.m)})"
    if isinstance(v, Multisegment):
        return " + ".join(map(format_value, v)) if v else "0"
    if isinstance(v, Segment):
        return f"[{v.a},{v.b}]@{v.label.id}"
    if isinstance(v, SpehFactor):
        tail = f", alpha={v.alpha}" if v.alpha else ""
        return f"speh({v.label.id}, u={v.u}, v={v.v}{tail})"
    if isinstance(v, UnitaryRep):
        return " x ".join(map(format_value, v.factors))
    if isinstance(v, CuspidalLabel):
        parts = [f"rho {v.id}", f"dim={v.dim}"]
        if v.dual_id != v.id:
            parts.append(f"dual={v.dual_id}")
        if v.unitary:
            parts.append("unitary")
        return " ".join(parts)
    raise TypeError(f"cannot format {type(v).__name__}")


__all__ = [
    "DSLError",
    "Session",
    "format_value",
    "parse_input",
    "parse_multisegment",
    "parse_rep",
    "parse_segment",
    "parse_statement",
    "parse_unitary",
    "parse_value",
]
