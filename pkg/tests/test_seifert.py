import random
from fractions import Fraction
from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rtrkit.arith import INFINITY, Frac, PreconditionError
from rtrkit.moves import random_moves
from rtrkit.oracle import homology_order_bruteforce
from rtrkit.seifert import (
    SeifertInvariants as S,
    cable_surgery_slope,
    euler_number,
    fiber_multiplicities,
    homology_order,
    homology_orders,
    s_equivalent,
    s_mirror,
    s_normalize,
    torus_knot_surgery,
    unknot_surgery_equiv,
)

POINCARE = S(-2, (Frac(2, 1), Frac(3, 2), Frac(5, 4)))

fibers = st.builds(Frac, st.integers(-9, 9).filter(bool), st.integers(-12, 12))
spaces = st.builds(S, st.integers(-3, 3), st.lists(fibers, max_size=4).map(tuple))


def test_s_normalize_examples():
    assert s_normalize(S(0, (Frac(3, -1),))) == S(-1, (Frac(3, 2),))
    assert s_normalize(POINCARE) == POINCARE
    assert s_normalize(S(1, (INFINITY,))) == S(1)
    assert s_normalize(S(0, (Frac(1, 4), Frac(7, 3)))) == S(4, (Frac(7, 3),))


@given(spaces)
def test_s_normalize_properties(sp):
    n = s_normalize(sp)
    assert s_normalize(n) == n
    assert all(f.num >= 2 and 0 < f.den < f.num for f in n.fibers)
    assert list(n.fibers) == sorted(n.fibers, key=lambda f: (f.num, f.den))
    assert homology_order(n) == homology_order(sp)
    assert euler_number(n) == euler_number(sp)


@pytest.mark.parametrize(
    "space, h1",
    [(POINCARE, 1), (S(1), 1), (S(0, (Frac(3, 1),)), 1), (S(0, (Frac(2, 1), Frac(3, -1), Frac(7, 2))), 19)],
)
def test_homology_examples(space, h1):
    assert homology_order_bruteforce(space) == h1
    assert homology_order(space) == h1


def test_homology_zero_means_infinite():
    sp = S(-1, (Frac(2, 1), Frac(2, 1)))
    assert euler_number(sp) == 0
    assert homology_order(sp) == 0 == homology_order_bruteforce(sp)


def test_s_equivalent_examples():
    assert s_equivalent(S(0, (Frac(3, -1),)), S(-1, (Frac(3, 2),)))
    assert s_equivalent(POINCARE, POINCARE)
    other = S(2, (Frac(2, 1), Frac(3, 1), Frac(5, 1)))
    # not a mirror pair: the orders differ (1 vs 91)
    assert homology_order(other) == 91
    assert not s_equivalent(POINCARE, other, True)
    assert s_equivalent(POINCARE, S(-1, (Frac(2, 1), Frac(3, 1), Frac(5, 1))), True)
    assert not s_equivalent(POINCARE, S(-1, (Frac(2, 1), Frac(3, 1), Frac(5, 1))), False)


@settings(max_examples=200)
@given(spaces, st.integers(0, 2**32), st.integers(0, 20))
def test_homology_invariant_under_moves(sp, seed, n):
    moved = random_moves(sp, random.Random(seed), n)
    assert s_equivalent(moved, sp)
    assert homology_order(moved) == homology_order(sp)


@given(spaces)
def test_mirror_involution(sp):
    assert s_mirror(s_mirror(sp)) == sp
    assert homology_order(s_mirror(sp)) == homology_order(sp)


def test_homology_orders_vectorised_matches_scalar():
    rng = random.Random(5)
    rows = []
    for _ in range(500):
        fs = [Frac(rng.randint(1, 9), rng.randint(-20, 20)) for _ in range(rng.randrange(5))]
        rows.append(S(rng.randint(-3, 3), tuple(fs)))
    width = 4
    e = np.array([r.e for r in rows])
    nums = np.ones((len(rows), width), dtype=np.int64)
    dens = np.zeros((len(rows), width), dtype=np.int64)
    for i, r in enumerate(rows):
        for j, f in enumerate(r.fibers):
            nums[i, j], dens[i, j] = f.num, f.den
    assert homology_orders(e, nums, dens).tolist() == [homology_order(r) for r in rows]


@pytest.mark.parametrize(
    "a, c, slope, mult, h1",
    [
        (2, 3, Frac(-1), [2, 3, 7], 1),
        (-2, 3, Frac(-1), [2, 3, 5], 1),
        (2, 3, Frac(1), [2, 3, 5], 1),
        (2, 3, Frac(19, 2), [2, 3, 7], 19),
    ],
)
def test_torus_knot_surgery_examples(a, c, slope, mult, h1):
    out = torus_knot_surgery(a, c, slope)
    assert fiber_multiplicities(out) == mult
    assert homology_order(out) == h1 == homology_order_bruteforce(out)


def test_torus_surgery_third_fibre():
    raw = torus_knot_surgery(2, 3, Frac(19, 2), normalize=False)
    assert raw == S(0, (Frac(2, 1), Frac(3, -1), Frac(7, 2)))


def test_poincare_orientations():
    # -1 on the left-handed trefoil and +1 on the right-handed one are mirror images
    left = torus_knot_surgery(-2, 3, Frac(-1))
    right = torus_knot_surgery(2, 3, Frac(1))
    assert s_equivalent(left, s_mirror(right))
    assert s_equivalent(left, POINCARE, allow_mirror=True)


def test_torus_surgery_preconditions():
    for args in [(2, 4, Frac(1)), (1, 3, Frac(1)), (2, 3, INFINITY), (2, 3, Frac(6)), (-2, 3, Frac(-6))]:
        with pytest.raises(PreconditionError):
            torus_knot_surgery(*args)
    torus_knot_surgery(2, 3, Frac(-6))


@pytest.mark.parametrize("a, c", [(2, 3), (2, 5), (3, 4), (3, 5), (-2, 3), (-2, 5)])
def test_torus_surgery_euler_identity(a, c):
    A = abs(a)
    for q in range(1, 7):
        for p in range(-60, 61):
            if gcd(p, q) != 1 or Frac(p, q) in (Frac(A * c), Frac(-A * c)):
                continue
            out = torus_knot_surgery(a, c, Frac(p, q), normalize=False)
            k = A * c
            expected = Fraction(p, k * (p - k * q)) if a > 0 else Fraction(-p, k * (p + k * q))
            assert euler_number(out) == expected
            mult = fiber_multiplicities(out)
            assert A in mult and c in mult
            third = out.fibers[2]
            assert third.den == q


@pytest.mark.parametrize(
    "alpha, beta, slope, expected",
    [(2, 3, Frac(13, 2), Frac(13, 8)), (2, 3, Frac(11, 2), Frac(11, 8))],
)
def test_cable_slope_examples(alpha, beta, slope, expected):
    out = cable_surgery_slope(alpha, beta, slope)
    assert out == expected
    assert out.num == slope.num and out.den == slope.den * alpha**2


def test_cable_slope_rejects_other_slopes():
    with pytest.raises(PreconditionError):
        cable_surgery_slope(2, 3, Frac(7, 2))
    with pytest.raises(PreconditionError):
        cable_surgery_slope(1, 3, Frac(4))


def enumerate_unknot_equiv(p, q):
    found = set()
    for n in range(-100, 101):
        qq = q + n * p
        if qq % 2 == 0 and abs(qq) < abs(p):
            found.add(qq)
    assert len(found) == 1
    return found.pop()


@pytest.mark.parametrize("p, q, expected", [(3, 4, -2), (5, 2, 2), (7, 10, -4)])
def test_unknot_surgery_examples(p, q, expected):
    assert enumerate_unknot_equiv(p, q) == expected
    assert unknot_surgery_equiv(p, q) == Frac(p, expected)


def test_unknot_surgery_exhaustive():
    for p in range(-41, 42, 2):
        for q in range(-60, 61, 2):
            if gcd(p, q) != 1:
                continue
            x = unknot_surgery_equiv(p, q)
            qq = enumerate_unknot_equiv(p, q)
            assert x == Frac(p, qq)
            # same lens space: q' = q (mod p)
            assert (qq - q) % abs(p) == 0


def test_unknot_surgery_preconditions():
    for p, q in [(4, 2), (3, 3), (6, 4)]:
        with pytest.raises(PreconditionError):
            unknot_surgery_equiv(p, q)
