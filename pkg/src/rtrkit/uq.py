"""
Bounds on the proper rational unknotting number ``u_q`` of Montesinos knots.

What is decided here:

* a three-tangle knot has ``u_q == 1`` whenever it can be presented as
  ``M(0; a/b, c/d, r/s)`` with ``b*c + a*d == +-1`` and ``s`` even (replacing
  ``r/s`` by ``1/0`` leaves the unknot), see :func:`find_torus_form`;
* a knot with at least four tangles, each ``|p_i| >= 2``, has ``u_q >= 2``
  (its double cover is Haken and not a non-integral surgery);
* ``u_q <= k - 1`` for ``k >= 2`` tangles, with explicit moves from
  :func:`unknotting_moves`.

Lower bound 2 for three-tangle knots without such a presentation needs an
outside hypothesis, either a supplied ``u(K) >= 5`` or the conjecture that
the presentation criterion characterises ``u_q == 1`` for all Montesinos
knots; the verdict records which one was used.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Optional, Union

from .arith import INFINITY, Frac, PreconditionError, bezout_bc_ad
from .montesinos import MontesinosLink, determinant, is_knot, m_equivalent, m_normalize
from .tangle import is_proper_rtr

__all__ = [
    "RtrMove",
    "TorusFormWitness",
    "UqVerdict",
    "HYPOTHESIS_UNKNOTTING_LOWER",
    "HYPOTHESIS_CONJECTURE",
    "find_torus_form",
    "four_tangle_obstruction",
    "two_bridge_move",
    "unknotting_moves",
    "verify_moves",
    "classify_uq",
    "alt_rtr_parameters",
]

HYPOTHESIS_UNKNOTTING_LOWER = "classical unknotting number u(K) >= 5 (user supplied)"
HYPOTHESIS_CONJECTURE = "three-tangle conjecture: u_q(K) = 1 iff K has a torus-surgery presentation"

ONE = Frac._reduced(1, 1)


@dataclass(frozen=True)
class RtrMove:
    """Replace parameter ``index`` of ``link`` (which is ``old``) by ``new``."""

    index: int
    old: Frac
    new: Frac
    link: MontesinosLink

    @property
    def proper(self) -> bool:
        return is_proper_rtr(self.old, self.new)

    def result(self) -> MontesinosLink:
        return self.link.replace_param(self.index, self.new)

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "old": str(self.old),
            "new": str(self.new),
            "link": str(self.link),
        }


@dataclass(frozen=True)
class TorusFormWitness:
    """``K = M(0; a/b, c/d, r/s)`` with ``b*c + a*d == sign`` and ``s`` even."""

    a: int
    b: int
    c: int
    d: int
    r_s: Frac
    sign: int

    def presentation(self) -> MontesinosLink:
        return MontesinosLink(0, (Frac(self.a, self.b), Frac(self.c, self.d), self.r_s))

    def surgery(self) -> tuple[int, int, Frac]:
        """``(a, c, slope)`` for torus_knot_surgery reproducing the double cover."""
        ac = self.a * self.c
        if self.sign == 1:
            return self.a, self.c, self.r_s + ac
        return -self.a, self.c, self.r_s - ac

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "d": self.d,
            "r_s": str(self.r_s),
            "sign": self.sign,
        }


Certificate = Union[TorusFormWitness, tuple[RtrMove, ...]]


@dataclass(frozen=True)
class UqVerdict:
    lower: int
    upper: int
    certificates: tuple = ()
    hypotheses: tuple[str, ...] = ()

    def __post_init__(self):
        if not 0 <= self.lower <= self.upper:
            raise ValueError(f"invalid interval [{self.lower}, {self.upper}]")

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def to_json(self) -> dict:
        certs = []
        for c in self.certificates:
            if isinstance(c, TorusFormWitness):
                certs.append({"type": "torus_form", **c.to_json()})
            else:
                certs.append({"type": "moves", "moves": [m.to_json() for m in c]})
        return {
            "lower": self.lower,
            "upper": self.upper,
            "hypotheses": list(self.hypotheses),
            "certificates": certs,
        }


def _require_tangles(N: MontesinosLink):
    if any(f.num == 0 for f in N.params):
        raise PreconditionError("every parameter must satisfy |p_i| >= 2 after normalization (0/1 found)")


def _require_knot(K: MontesinosLink):
    if not is_knot(K):
        raise PreconditionError(f"is_knot(K) required; {K} has even determinant {determinant(K)}")


def find_torus_form(K: MontesinosLink) -> Optional[TorusFormWitness]:
    """
    Search for a presentation ``M(0; a/b, c/d, r/s)`` of ``K`` with
    ``b/a + d/c = +-1/(a*c)`` and ``s`` even.

    ``a`` and ``c`` must be two of the three fibre multiplicities.  Every
    Bezout solution ``(b + t*a, d - t*c)`` has the same ``b/a + d/c``, so the
    Euler number forces ``s/r`` uniquely for each choice of pair and sign,
    and the search is over at most 12 candidates.  The least witness in
    ``(a, c, sign)`` order is returned.
    """
    N = m_normalize(K)
    _require_tangles(N)
    if len(N.params) != 3:
        raise PreconditionError(
            f"normalized K must have exactly 3 parameters, got {len(N.params)}"
        )
    _require_knot(N)
    euler = _euler(N)
    found = []
    for i, j in itertools.permutations(range(3), 2):
        a, c = N.params[i].num, N.params[j].num
        if gcd(a, c) != 1:
            continue
        for sign in (1, -1):
            b, d = bezout_bc_ad(a, c, sign)
            s_over_r = euler - Frac(sign, a * c)
            if s_over_r.num == 0:
                continue
            r_s = Frac(s_over_r.den, s_over_r.num)
            if r_s.den % 2:
                continue
            w = TorusFormWitness(a, b, c, d, r_s, sign)
            if m_equivalent(w.presentation(), N):
                found.append(w)
    if not found:
        return None
    return min(found, key=lambda w: (w.a, w.c, -w.sign))


def _euler(K: MontesinosLink) -> Frac:
    num, den = K.e, 1
    for f in K.params:
        num, den = num * f.num + f.den * den, den * f.num
    return Frac(num, den)


def four_tangle_obstruction(K: MontesinosLink) -> bool:
    """True when the normal form has ``>= 4`` tangles, which forces ``u_q(K) >= 2``."""
    _require_knot(K)
    return len(m_normalize(K).params) >= 4


def _egcd(x: int, y: int) -> tuple[int, int, int]:
    a0, a1, b0, b1 = 1, 0, 0, 1
    while y:
        t, r = divmod(x, y)
        x, y = y, r
        a0, a1 = a1, a0 - t * a1
        b0, b1 = b1, b0 - t * b1
    if x < 0:
        x, a0, b0 = -x, -a0, -b0
    return x, a0, b0


def two_bridge_move(L: MontesinosLink, index: int) -> RtrMove:
    """
    One proper replacement of parameter ``index`` turning a two-bridge knot
    presentation (at most two parameters) into the unknot.

    With the other parameters fixed, the determinant after putting in ``x/y``
    is ``|x*A + y*B|`` for integers ``A, B``; a Bezout solution of
    ``x*A + y*B = 1`` is shifted by ``(B, -A)`` until it has the parity class
    of the old parameter.
    """
    if len(L.params) > 2:
        raise PreconditionError("at most two parameters required")
    _require_knot(L)
    old = L.params[index]
    A, B = L.e, 1
    for k, f in enumerate(L.params):
        if k != index:
            A, B = A * f.num + f.den * B, B * f.num
    g, x, y = _egcd(A, B)
    if g != 1:
        raise PreconditionError("remaining parameters do not bound a two-bridge knot")
    for _ in range(2):
        new = Frac(x, y)
        if is_proper_rtr(old, new):
            return RtrMove(index, old, new, L)
        x, y = x + B, y - A
    raise AssertionError("no parity-matched replacement; K is not a knot")


def unknotting_moves(K: MontesinosLink) -> tuple[RtrMove, ...]:
    """
    ``k - 1`` proper replacements unknotting a Montesinos knot with ``k >= 2`` tangles.

    While more than two tangles remain, the last one with odd numerator is
    replaced by ``1/1`` (odd denominator) or ``1/0`` (even denominator); the
    first kind folds into ``e + 1``, the second simply disappears.  The last
    move unknots the remaining two-bridge knot.  Each move records the
    presentation it acts on.
    """
    cur = m_normalize(K)
    if len(cur.params) < 2:
        raise PreconditionError(f"normalized parameter count r >= 2 required, got {len(cur.params)}")
    _require_knot(cur)
    moves = []
    while len(cur.params) > 2:
        i = max(k for k, f in enumerate(cur.params) if f.num % 2)
        old = cur.params[i]
        new = ONE if old.den % 2 else INFINITY
        moves.append(RtrMove(i, old, new, cur))
        rest = cur.params[:i] + cur.params[i + 1:]
        cur = MontesinosLink(cur.e + (1 if new is ONE else 0), rest)
    moves.append(two_bridge_move(cur, len(cur.params) - 1))
    return tuple(moves)


def verify_moves(K: MontesinosLink, moves) -> bool:
    """
    Check a move certificate: each move is proper and acts on a presentation
    equivalent to the previous result, the first to ``K``, and the final link
    has determinant 1.
    """
    cur = K
    for m in moves:
        if not m.proper or m.link.params[m.index] != m.old:
            return False
        if not m_equivalent(m.link, cur):
            return False
        cur = m.result()
    return determinant(cur) == 1


def classify_uq(
    K: MontesinosLink,
    classical_unknotting_lower: Optional[int] = None,
    assume_conjecture: bool = False,
) -> UqVerdict:
    """Interval for ``u_q(K)`` with certificates and any hypotheses relied on."""
    _require_knot(K)
    N = m_normalize(K)
    _require_tangles(N)
    k = len(N.params)
    if k <= 2:
        if determinant(N) == 1:
            return UqVerdict(0, 0)
        if k == 2:
            moves = unknotting_moves(N)
        else:
            L = N if k == 1 else MontesinosLink(0, (Frac(1, N.e),))
            moves = (two_bridge_move(L, 0),)
        return UqVerdict(1, 1, (moves,))
    if k == 3:
        w = find_torus_form(N)
        if w is not None:
            P = w.presentation()
            move = RtrMove(2, w.r_s, INFINITY, P)
            return UqVerdict(1, 1, (w, (move,)))
        certs = (unknotting_moves(N),)
        if classical_unknotting_lower is not None and classical_unknotting_lower >= 5:
            return UqVerdict(2, 2, certs, (HYPOTHESIS_UNKNOTTING_LOWER,))
        if assume_conjecture:
            return UqVerdict(2, 2, certs, (HYPOTHESIS_CONJECTURE,))
        return UqVerdict(1, 2, certs)
    return UqVerdict(2, k - 1, (unknotting_moves(N),))


def alt_rtr_parameters(slope: Frac) -> tuple[int, Frac]:
    """
    Write ``p/q = -n + r/q`` with ``1 <= r < q`` and return ``(n, (q - r)/r)``.

    For even ``q`` both ``r`` and ``q - r`` are odd, so swapping a ``-1/1``
    crossing for ``R((q - r)/r)`` is a proper replacement.
    """
    p, q = slope.num, slope.den
    if q == 0 or q % 2:
        raise PreconditionError(f"even denominator q >= 2 required, got {slope}")
    if not p < -q:
        raise PreconditionError(f"slope < -1 required, got {slope}")
    n = -(p // q)
    r = p + n * q
    assert 1 <= r < q
    assert r % 2 == 1 and (q - r) % 2 == 1
    return n, Frac(q - r, r)
