"""
Brute-force checks that share no code path with the closed formulas.

* :func:`linking_matrix` expands the surgery picture of a Seifert space into
  an integer plumbing (one chain of unknots per fibre) and
  :func:`homology_order_bruteforce` takes its determinant by fraction-free
  elimination.
* :func:`simulate_twists` evaluates twist words with 2x2 integer matrices.
* :func:`check_step_formula` re-derives a crossing-change step.
"""
from __future__ import annotations

from .arith import Frac
from .seifert import SeifertInvariants
from .tangle import Axis, CrossingStep, TwistWord

__all__ = [
    "negative_cf",
    "linking_matrix",
    "bareiss_det",
    "homology_order_bruteforce",
    "simulate_twists",
    "check_step_formula",
]


def negative_cf(num: int, den: int, rule: str = "ceil") -> list[int]:
    """
    Terms ``[a1, ..., am]`` with ``num/den = a1 - 1/(a2 - 1/(... - 1/am))``.

    ``rule="ceil"`` takes ``a = ceil(x)`` so every term after the first is
    ``>= 2``; ``rule="round"`` takes the nearest integer and gives a different,
    usually shorter, chain for the same value.
    """
    if den == 0:
        raise ValueError("finite value required")
    if den < 0:
        num, den = -num, -den
    terms = []
    while True:
        if rule == "ceil":
            a = -((-num) // den)
        elif rule == "round":
            a = (2 * num + den) // (2 * den)
        else:
            raise ValueError(rule)
        terms.append(a)
        rem = a * den - num  # a - x = rem/den
        if rem == 0:
            return terms
        # next x = 1/(a - x) = den/rem
        num, den = den, rem
        if den < 0:
            num, den = -num, -den


def linking_matrix(S: SeifertInvariants, rule: str = "ceil") -> list[list[int]]:
    """
    Symmetric integer linking matrix of the plumbing for ``S``.

    Vertex 0 is the central curve with framing ``e``.  A fibre ``p/q`` must
    contribute ``+q/p`` to the central coefficient after slam-dunking, so it
    becomes a chain of unknots whose continued fraction is ``p/(-q)``; the
    first unknot of the chain links the central curve once, consecutive
    unknots link once.  ``1/0`` fibres contribute nothing.
    """
    chains = []
    for f in S.fibers:
        if f.den == 0:
            continue
        chains.append(negative_cf(f.num, -f.den, rule))
    n = 1 + sum(len(c) for c in chains)
    M = [[0] * n for _ in range(n)]
    M[0][0] = S.e
    k = 1
    for chain in chains:
        prev = 0
        for w in chain:
            M[k][k] = w
            M[prev][k] = M[k][prev] = 1
            prev = k
            k += 1
    return M


def bareiss_det(M: list[list[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination with row pivoting."""
    A = [row[:] for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        rowk = A[k]
        for i in range(k + 1, n):
            rowi = A[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return sign * A[n - 1][n - 1]


def homology_order_bruteforce(S: SeifertInvariants, rule: str = "ceil") -> int:
    return abs(bareiss_det(linking_matrix(S, rule)))


def simulate_twists(w: TwistWord) -> Frac:
    """Evaluate a twist word by acting on the column ``(p, q)`` with integer matrices."""
    p, q = w.base.num, w.base.den
    for axis, n in w.moves:
        if axis is Axis.HORIZONTAL:
            mat = ((1, n), (0, 1))
        else:
            mat = ((1, 0), (n, 1))
        p, q = mat[0][0] * p + mat[0][1] * q, mat[1][0] * p + mat[1][1] * q
    return Frac(p, q)


def check_step_formula(step: CrossingStep) -> bool:
    """Recompute ``after`` from ``before``, ``n`` and ``r`` and compare."""
    s = -1 if step.reflected else 1
    p, q = s * step.before.num, step.before.den
    if p <= 0 or q <= 0:
        return False
    if not (0 < step.r < q) or p != step.n * q + step.r or step.n < 0:
        return False
    num, den = p - 2 * step.n * step.r, q - 2 * step.r
    # compare (s*num)/den with after by cross-multiplication
    return s * num * step.after.den == step.after.num * den
