"""
Rational tangle calculus.

Slopes are :class:`~rtrkit.arith.Frac` values; ``R(p/q)`` is identified with
its slope, which by Conway's theorem loses nothing.  Twisting follows the
usual build-up rules::

    horizontal:  p/q -> (p +- q)/q
    vertical:    p/q -> p/(q +- p)
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .arith import INFINITY, Frac, PreconditionError, frac_to_cf

__all__ = [
    "Axis",
    "Connectivity",
    "TwistWord",
    "CrossingStep",
    "twist",
    "eval_twist_word",
    "twist_word_from_slope",
    "connectivity",
    "is_proper_rtr",
    "slope_distance",
    "unknotting_sequence",
]


class Axis(str, enum.Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


class Connectivity(str, enum.Enum):
    HORIZONTAL = "horizontal"  # NW-NE, SW-SE
    VERTICAL = "vertical"      # NW-SW, NE-SE
    DIAGONAL = "diagonal"      # NW-SE, NE-SW


ZERO = Frac._reduced(0, 1)


def twist(slope: Frac, axis: Axis, count: int) -> Frac:
    """Apply ``|count|`` twists about ``axis``, in the direction of ``sign(count)``."""
    p, q = slope.num, slope.den
    if Axis(axis) is Axis.HORIZONTAL:
        return Frac(p + count * q, q)
    return Frac(p, q + count * p)


@dataclass(frozen=True)
class TwistWord:
    """A base tangle (0/1 or 1/0) followed by a sequence of twist blocks."""

    base: Frac
    moves: tuple[tuple[Axis, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.base not in (ZERO, INFINITY):
            raise PreconditionError("TwistWord base must be 0/1 or 1/0")
        object.__setattr__(
            self, "moves", tuple((Axis(a), int(n)) for a, n in self.moves)
        )
        if any(n == 0 for _, n in self.moves):
            raise PreconditionError("twist counts must be nonzero")


def eval_twist_word(w: TwistWord) -> Frac:
    x = w.base
    for axis, count in w.moves:
        x = twist(x, axis, count)
    return x


def twist_word_from_slope(x: Frac) -> TwistWord:
    """Inverse of :func:`eval_twist_word`, read off the Euclidean continued fraction."""
    if x.is_infinite:
        return TwistWord(INFINITY)
    terms = frac_to_cf(x)
    n = len(terms) - 1
    # With an even number of inner terms start from 0/1 with a horizontal
    # block, otherwise from 1/0 with a vertical one; blocks then alternate
    # and the outermost term is always horizontal.
    if n % 2 == 0:
        base, axis = ZERO, Axis.HORIZONTAL
    else:
        base, axis = INFINITY, Axis.VERTICAL
    moves = []
    for t in reversed(terms):
        if t:
            moves.append((axis, t))
        axis = Axis.VERTICAL if axis is Axis.HORIZONTAL else Axis.HORIZONTAL
    return TwistWord(base, tuple(moves))


def connectivity(x: Frac) -> Connectivity:
    """Endpoint pairing of ``R(x)``, determined by the parities of num and den."""
    if x.num % 2 == 0:
        return Connectivity.HORIZONTAL
    if x.den % 2 == 0:
        return Connectivity.VERTICAL
    return Connectivity.DIAGONAL


def slope_distance(alpha: Frac, beta: Frac) -> int:
    """Minimal geometric intersection ``|p*s - r*q|`` of slopes p/q and r/s."""
    return abs(alpha.num * beta.den - beta.num * alpha.den)


def is_proper_rtr(old: Frac, new: Frac) -> bool:
    """Replacing ``R(old)`` by ``R(new)`` keeps the endpoint pairing iff the distance is even."""
    return (old.num * new.den - new.num * old.den) % 2 == 0


@dataclass(frozen=True)
class CrossingStep:
    """
    One crossing change turning ``R(before)`` into ``R(after)``.

    With ``reflected`` set, the formula was applied to the mirror slope
    ``-before`` and the result mirrored back, so ``after`` lives in the same
    frame as ``before``.
    """

    before: Frac
    after: Frac
    n: int
    r: int
    reflected: bool = False

    def to_json(self) -> dict:
        return {
            "before": str(self.before),
            "after": str(self.after),
            "n": self.n,
            "r": self.r,
            "reflected": self.reflected,
        }

    @classmethod
    def from_json(cls, d: dict) -> "CrossingStep":
        from .arith import parse_frac

        return cls(
            parse_frac(d["before"]),
            parse_frac(d["after"]),
            int(d["n"]),
            int(d["r"]),
            bool(d["reflected"]),
        )


def unknotting_sequence(x: Frac) -> list[CrossingStep]:
    """
    Crossing changes converting ``R(x)`` into ``R(1/0)``, at most ``den(x)/2`` of them.

    Each step writes the (positive) working slope as ``(n*q + r)/q`` with
    ``0 < r < q`` and changes one crossing of the two-twist block, landing on
    ``(p - 2*n*r)/(q - 2*r)``.
    """
    if x.den % 2:
        raise PreconditionError(f"den(x) must be even, got {x}")
    steps = []
    cur = x
    while cur.den != 0:
        reflected = cur.num < 0
        p, q = (-cur.num if reflected else cur.num), cur.den
        n, r = divmod(p, q)
        after = Frac(p - 2 * n * r, q - 2 * r)
        if reflected:
            after = -after
        steps.append(CrossingStep(cur, after, n, r, reflected))
        cur = after
    return steps
