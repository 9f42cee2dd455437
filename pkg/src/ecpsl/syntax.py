"""Text forms of clopen sets, Â elements, tuples and terms.

Grammar (whitespace between tokens is ignored)::

    dyadic  := INT [ "/" INT ]                 denominator a power of two
    clopen  := "0" | "full" | interval { ("u" | "∪") interval }
    interval:= "[" dyadic "," dyadic ")"
    hat     := "T" | "E" | clopen
    tuple   := "(" hat { "," hat } ")" "@" INT  INT = number of components
    term    := factor { ("∧" | "&" | "^") factor }
    factor  := primary { "*" }
    primary := "0" | NAME | "(" term ")"

Printing always emits the normalized form, so ``parse(format(x)) == x``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .clopen import ClopenSet, Dyadic
from .errors import ParseError
from .hat import E, TOP, HatAElem, Tuple, h_str
from .limit import LimitElem, Meet, PComp, Term, Var, Zero

_INT = re.compile(r"\d+")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos : self.pos + 1]

    def startswith(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def take(self, s: str) -> bool:
        if self.startswith(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str) -> None:
        if not self.take(s):
            self.fail(f"expected {s!r}")

    def match(self, pattern: re.Pattern) -> str | None:
        self.skip()
        m = pattern.match(self.text, self.pos)
        if m is None:
            return None
        self.pos = m.end()
        return m.group()

    def integer(self) -> int:
        tok = self.match(_INT)
        if tok is None:
            self.fail("expected an integer")
        return int(tok)

    def end(self) -> None:
        self.skip()
        if self.pos != len(self.text):
            self.fail("unexpected trailing input")

    def fail(self, message: str):
        raise ParseError(message, self.text, self.pos)


def _dyadic(r: _Reader) -> Dyadic:
    start = r.pos
    num = r.integer()
    den = 1
    if r.take("/"):
        den = r.integer()
        if den == 0 or den & (den - 1):
            raise ParseError("denominator must be a power of two", r.text, start)
    q = Fraction(num, den)
    if q > 1:
        raise ParseError("endpoint outside [0,1]", r.text, start)
    return Dyadic.from_rational(q)


def _interval(r: _Reader) -> tuple[Dyadic, Dyadic]:
    start = r.pos
    r.expect("[")
    lo = _dyadic(r)
    r.expect(",")
    hi = _dyadic(r)
    r.expect(")")
    if hi < lo:
        raise ParseError("interval endpoints reversed", r.text, start)
    return lo, hi


def _clopen(r: _Reader) -> ClopenSet:
    if r.take("full"):
        return ClopenSet.full()
    if r.peek() == "0":
        r.expect("0")
        return ClopenSet.empty()
    if r.peek() != "[":
        r.fail("expected '0', 'full' or an interval")
    parts = [_interval(r)]
    while r.take("u") or r.take("∪"):
        parts.append(_interval(r))
    return ClopenSet(parts)


def _hat(r: _Reader) -> HatAElem:
    if r.take("T"):
        return TOP
    if r.take("E"):
        return E
    return _clopen(r)


def _tuple(r: _Reader) -> Tuple:
    r.expect("(")
    comps = [_hat(r)]
    while r.take(","):
        comps.append(_hat(r))
    r.expect(")")
    r.expect("@")
    start = r.pos
    n = r.integer()
    if n != len(comps):
        raise ParseError(f"level @{n} does not match {len(comps)} components", r.text, start)
    return Tuple(n, tuple(comps))


def _whole(text: str, rule):
    r = _Reader(text)
    out = rule(r)
    r.end()
    return out


def parse_clopen(text: str) -> ClopenSet:
    return _whole(text, _clopen)


def parse_hat(text: str) -> HatAElem:
    return _whole(text, _hat)


def parse_tuple(text: str) -> Tuple:
    return _whole(text, _tuple)


def parse_elem(text: str) -> LimitElem:
    return LimitElem(parse_tuple(text))


def format_clopen(s: ClopenSet) -> str:
    return str(s)


def format_hat(x: HatAElem) -> str:
    return h_str(x)


def format_tuple(x: Tuple) -> str:
    return str(x)


def format_elem(x: LimitElem) -> str:
    return str(x.rep)


def _primary(r: _Reader) -> Term:
    if r.take("("):
        t = _term(r)
        r.expect(")")
        return t
    if r.peek() == "0":
        r.expect("0")
        return Zero()
    name = r.match(_NAME)
    if name is None:
        r.fail("expected '0', a variable or '('")
    return Var(name)


def _factor(r: _Reader) -> Term:
    t = _primary(r)
    while r.take("*"):
        t = PComp(t)
    return t


def _term(r: _Reader) -> Term:
    t = _factor(r)
    while r.take("∧") or r.take("&") or r.take("^"):
        t = Meet(t, _factor(r))
    return t


def parse_term(text: str) -> Term:
    return _whole(text, _term)
