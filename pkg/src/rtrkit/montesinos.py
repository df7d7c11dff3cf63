"""
Montesinos links ``M(e; p1/q1, ..., pk/qk)``.

Presentations differ by the moves in :mod:`rtrkit.moves`; unlike Seifert
fibres, the tangles may only be rotated cyclically or reversed, never
permuted freely.
"""
from __future__ import annotations

from dataclasses import dataclass

from .arith import Frac
from .seifert import SeifertInvariants, fold_parameter, homology_order

__all__ = [
    "MontesinosLink",
    "m_normalize",
    "m_mirror",
    "m_equivalent",
    "is_knot",
    "double_branched_cover",
    "determinant",
]


@dataclass(frozen=True)
class MontesinosLink:
    e: int
    params: tuple[Frac, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "e", int(self.e))
        object.__setattr__(self, "params", tuple(self.params))

    def __str__(self):
        if not self.params:
            return f"M({self.e})"
        return f"M({self.e}; " + ", ".join(f"{f.num}/{f.den}" for f in self.params) + ")"

    def to_json(self) -> dict:
        return {"e": self.e, "params": [[f.num, f.den] for f in self.params]}

    @classmethod
    def from_json(cls, d: dict) -> "MontesinosLink":
        return cls(int(d["e"]), tuple(Frac(p, q) for p, q in d["params"]))

    def replace_param(self, index: int, new: Frac) -> "MontesinosLink":
        params = self.params[:index] + (new,) + self.params[index + 1:]
        return MontesinosLink(self.e, params)


def _dihedral_min(params: tuple[Frac, ...]) -> tuple[Frac, ...]:
    n = len(params)
    if n < 2:
        return params
    keys = [(f.num, f.den) for f in params]
    best = None
    for seq in (keys, keys[::-1]):
        for i in range(n):
            cand = seq[i:] + seq[:i]
            if best is None or cand < best:
                best, src, start = cand, seq, i
    order = list(range(n)) if src is keys else list(range(n - 1, -1, -1))
    order = order[start:] + order[:start]
    return tuple(params[j] for j in order)


def m_normalize(K: MontesinosLink) -> MontesinosLink:
    """
    Canonical presentation: every parameter folded to ``p >= 2, 0 < q < p``
    (or dropped), shifts collected in ``e``, and the cyclic order chosen
    lexicographically least among rotations and the reversal.
    """
    e = K.e
    out = []
    for f in K.params:
        shift, g = fold_parameter(f)
        e += shift
        if g is not None:
            out.append(g)
    return MontesinosLink(e, _dihedral_min(tuple(out)))


def m_mirror(K: MontesinosLink) -> MontesinosLink:
    return MontesinosLink(-K.e, tuple(-f for f in K.params))


def m_equivalent(K1: MontesinosLink, K2: MontesinosLink, allow_mirror: bool = False) -> bool:
    """Equality of normal forms. Sound for isotopy; completeness is not claimed."""
    n1 = m_normalize(K1)
    if n1 == m_normalize(K2):
        return True
    return allow_mirror and n1 == m_normalize(m_mirror(K2))


def double_branched_cover(K: MontesinosLink) -> SeifertInvariants:
    return SeifertInvariants(K.e, K.params)


def determinant(K: MontesinosLink) -> int:
    """``|H_1|`` of the double branched cover (0 if infinite)."""
    return homology_order(double_branched_cover(K))


def is_knot(K: MontesinosLink) -> bool:
    """A Montesinos link is a knot iff its determinant is odd."""
    return determinant(K) % 2 == 1
