"""
Seifert fibred spaces over S^2.

``S2(e; p1/q1, ..., pk/qk)`` is the manifold given by surgery on a central
unknot with integer coefficient ``e`` and ``k`` meridians carrying the
fibre data.  The presentation moves are the same as for Montesinos links:
any fibre ``p/q`` may be traded for ``p/(q -+ p)`` while ``e`` goes to
``e +- 1``, and ``1/0`` fibres may be added or removed.  All of them fix the
rational Euler number ``e + sum(q_i/p_i)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

import numpy as np

from .arith import Frac, PreconditionError, bezout_bc_ad

__all__ = [
    "SeifertInvariants",
    "fold_parameter",
    "s_normalize",
    "s_mirror",
    "s_equivalent",
    "homology_order",
    "homology_orders",
    "euler_number",
    "fiber_multiplicities",
    "torus_knot_surgery",
    "cable_surgery_slope",
    "unknot_surgery_equiv",
]


@dataclass(frozen=True)
class SeifertInvariants:
    e: int
    fibers: tuple[Frac, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "e", int(self.e))
        object.__setattr__(self, "fibers", tuple(self.fibers))

    def __str__(self):
        if not self.fibers:
            return f"S2({self.e})"
        return f"S2({self.e}; " + ", ".join(_pair_str(f) for f in self.fibers) + ")"

    def to_json(self) -> dict:
        return {"e": self.e, "fibers": [[f.num, f.den] for f in self.fibers]}

    @classmethod
    def from_json(cls, d: dict) -> "SeifertInvariants":
        return cls(int(d["e"]), tuple(Frac(p, q) for p, q in d["fibers"]))


def _pair_str(f: Frac) -> str:
    return f"{f.num}/{f.den}"


def fold_parameter(x: Frac) -> tuple[int, Optional[Frac]]:
    """
    Reduce one fibre or tangle parameter to ``p/q`` with ``p >= 2``, ``0 < q < p``.

    Returns ``(shift, folded)``: ``shift`` is what must be added to ``e`` and
    ``folded`` is None when the parameter disappears (``1/0``, or ``p == 1``).
    A ``0/1`` parameter cannot be folded and is returned unchanged.
    """
    p, q = x.num, x.den
    if q == 0:
        return 0, None
    if p < 0:
        p, q = -p, -q
    if p == 0:
        return 0, x
    if p == 1:
        return q, None
    r = q % p
    return (q - r) // p, Frac._reduced(p, r)


def _fiber_key(f: Frac):
    return (f.num, f.den)


def s_normalize(S: SeifertInvariants) -> SeifertInvariants:
    e = S.e
    out = []
    for f in S.fibers:
        shift, g = fold_parameter(f)
        e += shift
        if g is not None:
            out.append(g)
    out.sort(key=_fiber_key)
    return SeifertInvariants(e, tuple(out))


def s_mirror(S: SeifertInvariants) -> SeifertInvariants:
    """Orientation reversal: negate ``e`` and every fibre slope."""
    return SeifertInvariants(-S.e, tuple(-f for f in S.fibers))


def s_equivalent(S1: SeifertInvariants, S2: SeifertInvariants, allow_mirror: bool = False) -> bool:
    """Presentation-level equality: same normal form (optionally after mirroring ``S2``)."""
    n1 = s_normalize(S1)
    if n1 == s_normalize(S2):
        return True
    return allow_mirror and n1 == s_normalize(s_mirror(S2))


def _euler_num_den(e, fibers):
    num, den = e, 1
    for f in fibers:
        num, den = num * f.num + f.den * den, den * f.num
    return num, den


def homology_order(S: SeifertInvariants) -> int:
    """``|H_1|`` as ``|p_1...p_k * (e + sum q_i/p_i)|``; 0 means infinite."""
    return abs(_euler_num_den(S.e, S.fibers)[0])


def homology_orders(e, nums, dens) -> np.ndarray:
    """
    Vectorised :func:`homology_order` for a batch of presentations.

    ``e`` has shape ``(n,)``, ``nums`` and ``dens`` shape ``(n, k)``; row ``i``
    is ``S2(e[i]; nums[i, j]/dens[i, j], ...)``.  Pad short rows with ``1/0``.
    Arithmetic is int64, so entries must stay well inside that range.
    """
    e = np.asarray(e, dtype=np.int64)
    nums = np.asarray(nums, dtype=np.int64)
    dens = np.asarray(dens, dtype=np.int64)
    num = e.copy()
    den = np.ones_like(e)
    for j in range(nums.shape[1]):
        num, den = num * nums[:, j] + dens[:, j] * den, den * nums[:, j]
    return np.abs(num)


def euler_number(S: SeifertInvariants) -> Optional[Fraction]:
    """``e + sum q_i/p_i``, or None when some fibre has ``p == 0``."""
    num, den = _euler_num_den(S.e, S.fibers)
    if den == 0:
        return None
    return Fraction(num, den)


def fiber_multiplicities(S: SeifertInvariants) -> list[int]:
    return sorted(abs(f.num) for f in s_normalize(S).fibers)


def torus_knot_surgery(a: int, c: int, slope: Frac, normalize: bool = True) -> SeifertInvariants:
    """
    Seifert data of ``slope``-surgery on the torus knot ``T(a, c)``.

    ``a < 0`` encodes the negative torus knot ``T(-|a|, c)``.  With
    ``b*c + |a|*d == 1`` (``0 < b < |a|``) the result is::

        a > 0:  S2(0; a/b, c/d, slope - a*c)
        a < 0:  S2(0; -|a|/b, -c/d, slope + |a|*c)
    """
    A = abs(a)
    if A < 2 or c < 2:
        raise PreconditionError("|a| >= 2 and c >= 2 required")
    if gcd(A, c) != 1:
        raise PreconditionError(f"gcd(|a|, c) = 1 required, got ({a}, {c})")
    if slope.is_infinite:
        raise PreconditionError("slope != 1/0: the trivial filling is not a surgery")
    b, d = bezout_bc_ad(A, c, 1)
    if a > 0:
        if slope == A * c:
            raise PreconditionError(f"slope != a*c = {A * c}: reducible surgery")
        S = SeifertInvariants(0, (Frac(A, b), Frac(c, d), slope - A * c))
    else:
        if slope == -A * c:
            raise PreconditionError(f"slope != -|a|*c = {-A * c}: reducible surgery")
        S = SeifertInvariants(0, (Frac(-A, b), Frac(-c, d), slope + A * c))
    return s_normalize(S) if normalize else S


def cable_surgery_slope(alpha: int, beta: int, slope: Frac) -> Frac:
    """
    Slope on the companion equivalent to ``slope``-surgery on the ``(alpha, beta)``-cable.

    Only slopes ``alpha*beta +- 1/q`` qualify; they map to ``p/(q*alpha**2)``.
    """
    if abs(alpha) < 2:
        raise PreconditionError("|alpha| >= 2 required")
    if slope.is_infinite:
        raise PreconditionError("slope must be finite")
    p, q = slope.num, slope.den
    if abs(p - alpha * beta * q) != 1:
        raise PreconditionError(
            f"slope must have the form alpha*beta +- 1/q (num = alpha*beta*den +- 1), got {slope}"
        )
    return Frac(p, q * alpha * alpha)


def unknot_surgery_equiv(p: int, q: int) -> Frac:
    """
    The representative ``p/q'`` of ``p/q``-surgery on the unknot with
    ``q' = q + n*p`` even and ``|q'| < |p|``.
    """
    if gcd(p, q) != 1:
        raise PreconditionError(f"gcd(p, q) = 1 required, got ({p}, {q})")
    if p % 2 == 0 or q % 2:
        raise PreconditionError("p odd and q even required")
    m = 2 * abs(p)
    qq = q % m
    if qq > abs(p):
        qq -= m
    return Frac(p, qq)
