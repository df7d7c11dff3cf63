"""
Text grammar for presentations::

    M(e; p1/q1, p2/q2, ...)      Montesinos link
    S2(e; p1/q1, p2/q2, ...)     Seifert invariants (``S²`` also accepted)

Whitespace is ignored; ``M(e)`` and ``M(e;)`` both denote the empty
parameter list.  Errors carry 1-based line and column numbers.
"""
from __future__ import annotations

from .arith import Frac
from .montesinos import MontesinosLink
from .seifert import SeifertInvariants

__all__ = ["ParseError", "parse_montesinos", "parse_seifert", "parse_slope"]

_MINUS = ("-", "−")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.message = message
        super().__init__(f"line {self.line}, column {self.column}: {message}")


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ParseError(msg, self.text, self.pos)

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, s: str):
        self.ws()
        if not self.text.startswith(s, self.pos):
            self.error(f"expected {s!r}")
        self.pos += len(s)

    def integer(self) -> int:
        self.ws()
        start = self.pos
        neg = False
        if self.pos < len(self.text) and self.text[self.pos] in _MINUS:
            neg = True
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            self.error("expected an integer")
        value = int(self.text[digits:self.pos])
        return -value if neg else value

    def fraction(self) -> Frac:
        start = self.pos
        p = self.integer()
        q = 1
        if self.peek() == "/":
            self.pos += 1
            q = self.integer()
        if p == 0 and q == 0:
            self.pos = start
            self.ws()
            self.error("0/0 is not a slope")
        return Frac(p, q)

    def end(self):
        self.ws()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")


def _presentation(text: str, heads: tuple[str, ...]):
    rd = _Reader(text)
    rd.ws()
    for h in heads:
        if text.startswith(h, rd.pos):
            rd.pos += len(h)
            break
    else:
        rd.error(f"expected {heads[0]!r}")
    rd.expect("(")
    e = rd.integer()
    params = []
    if rd.peek() == ";":
        rd.pos += 1
        if rd.peek() != ")":
            params.append(rd.fraction())
            while rd.peek() == ",":
                rd.pos += 1
                params.append(rd.fraction())
    rd.expect(")")
    rd.end()
    return e, tuple(params)


def parse_montesinos(text: str) -> MontesinosLink:
    return MontesinosLink(*_presentation(text, ("M",)))


def parse_seifert(text: str) -> SeifertInvariants:
    return SeifertInvariants(*_presentation(text, ("S2", "S²")))


def parse_slope(text: str) -> Frac:
    rd = _Reader(text)
    x = rd.fraction()
    rd.end()
    return x
