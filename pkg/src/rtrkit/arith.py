"""
Exact extended rationals, continued fractions and the Bezout solve used for
torus-knot Seifert data.

A :class:`Frac` is a reduced fraction ``num/den`` with ``den >= 0``.  The
point at infinity is stored once, as ``1/0``, so two slopes are equal exactly
when their fields are equal.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

__all__ = [
    "Frac",
    "INFINITY",
    "PreconditionError",
    "frac_make",
    "parse_frac",
    "frac_to_cf",
    "cf_evaluate",
    "bezout_bc_ad",
]


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class Frac:
    """Reduced element of Q u {1/0}."""

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        num = int(num)
        den = int(den)
        if num == 0 and den == 0:
            raise PreconditionError("0/0 is not a slope: (num, den) != (0, 0)")
        if den == 0:
            num = 1
        else:
            if den < 0:
                num, den = -num, -den
            g = gcd(num, den)
            if g != 1:
                num //= g
                den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def _reduced(cls, num: int, den: int) -> "Frac":
        # caller guarantees gcd(num, den) == 1 and den > 0, or (1, 0)
        self = object.__new__(cls)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Frac is immutable")

    def __reduce__(self):
        return (Frac, (self.num, self.den))

    def __eq__(self, other):
        if isinstance(other, Frac):
            return self.num == other.num and self.den == other.den
        if isinstance(other, int):
            return self.den == 1 and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"Frac({self.num}, {self.den})"

    def __str__(self):
        return f"{self.num}/{self.den}"

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def __neg__(self) -> "Frac":
        if self.den == 0:
            return self
        return Frac._reduced(-self.num, self.den)

    def to_fraction(self) -> Fraction:
        if self.den == 0:
            raise PreconditionError("1/0 has no finite value")
        return Fraction(self.num, self.den)

    @classmethod
    def from_fraction(cls, x: Fraction) -> "Frac":
        return cls._reduced(x.numerator, x.denominator)

    def __add__(self, other):
        if isinstance(other, int):
            other = Frac._reduced(other, 1)
        if not isinstance(other, Frac):
            return NotImplemented
        return Frac.from_fraction(self.to_fraction() + other.to_fraction())

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Frac._reduced(other, 1)
        if not isinstance(other, Frac):
            return NotImplemented
        return Frac.from_fraction(self.to_fraction() - other.to_fraction())

    def __lt__(self, other: "Frac") -> bool:
        # 1/0 compares above every finite value
        if self.den == 0:
            return False
        if other.den == 0:
            return True
        return self.num * other.den < other.num * self.den

    def __le__(self, other: "Frac") -> bool:
        return self == other or self < other

    def __gt__(self, other: "Frac") -> bool:
        return other < self

    def __ge__(self, other: "Frac") -> bool:
        return other <= self


INFINITY = Frac._reduced(1, 0)


def frac_make(num: int, den: int) -> Frac:
    """Build the canonical reduced fraction; rejects 0/0."""
    return Frac(num, den)


_FRAC_RE = re.compile(r"\s*(-?\d+)\s*(?:/\s*(-?\d+)\s*)?$")


def parse_frac(text: str) -> Frac:
    """Parse ``p/q`` (or a bare integer ``p``). ``1/0`` is accepted."""
    m = _FRAC_RE.match(text)
    if m is None:
        raise ValueError(f"not a fraction: {text!r}")
    den = m.group(2)
    return Frac(int(m.group(1)), int(den) if den is not None else 1)


def frac_to_cf(x: Frac) -> tuple[int, ...]:
    """
    Euclidean continued fraction of a finite slope.

    The terms ``[t0, t1, ..., tn]`` evaluate innermost first by
    ``v -> t_i + 1/v``; ``t1..tn`` are positive and ``tn >= 2`` unless n == 0.
    """
    if x.den == 0:
        raise PreconditionError("1/0 has no finite continued fraction: x != 1/0")
    p, q = x.num, x.den
    terms = []
    while q:
        t, r = divmod(p, q)
        terms.append(t)
        p, q = q, r
    return tuple(terms)


def cf_evaluate(terms) -> Frac:
    """Evaluate a continued fraction; any integer terms are allowed."""
    terms = list(terms)
    if not terms:
        raise ValueError("empty continued fraction")
    num, den = terms[-1], 1
    for t in reversed(terms[:-1]):
        # t + den/num
        num, den = t * num + den, num
    return Frac(num, den)


def bezout_bc_ad(a: int, c: int, eps: int) -> tuple[int, int]:
    """
    Solve ``b*c + a*d == eps`` with the representative ``0 < b < a``.

    These are the exceptional-fibre numerators of torus-knot surgeries,
    where ``b/a + d/c == eps/(a*c)``.
    """
    if eps not in (1, -1):
        raise PreconditionError("eps must be +1 or -1")
    if a < 2 or c < 2:
        raise PreconditionError("a, c >= 2")
    if gcd(a, c) != 1:
        raise PreconditionError(f"gcd(a, c) = 1 required, got gcd({a}, {c}) = {gcd(a, c)}")
    b = (eps * pow(c, -1, a)) % a
    d, rem = divmod(eps - b * c, a)
    assert rem == 0
    return b, d
