"""Section data: index enumeration, magnitudes, potentials, the linear flow."""

import math
import random
from fractions import Fraction
from itertools import product as iproduct

import mpmath
import pytest

from mirror_morse.exact import PosExact
from mirror_morse.lagrangian import (hom_indices, magnitude_at, minus_grad,
                                     potential_value)

F = Fraction


def brute_force_count(a: int, b: int, n: int) -> int:
    """Independent lattice enumeration over a bounding box."""
    if a == b:
        return 1
    if a < b:
        d = b - a
        return sum(1 for I in iproduct(range(d + 1), repeat=n) if sum(I) <= d)
    gap = a - b
    box = range(-gap, 0)
    return sum(1 for I in iproduct(box, repeat=n)
               if all(i <= -1 for i in I) and sum(-i for i in I) <= gap - 1)


def test_hom_indices_frozen_examples():
    gens = hom_indices(0, 2, 1)
    assert [(I, v) for I, v, _ in gens] == [
        ((0,), (F(0),)), ((1,), (F(1),)), ((2,), (F(2),))]
    assert all(d == 0 for _, _, d in gens)

    assert len(hom_indices(0, 2, 2)) == 6 == brute_force_count(0, 2, 2)

    gens = hom_indices(3, 0, 1)
    assert [(I, v, d) for I, v, d in gens] == [
        ((-2,), (F(4, 3),), 1), ((-1,), (F(2, 3),), 1)]
    assert len(gens) == math.comb(2, 1)


def test_identity_generator_shape():
    gens = hom_indices(5, 5, 3)
    assert gens == [((0, 0, 0), None, 0)]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_counts_against_brute_force(n):
    for a in range(0, n + 3):
        for b in range(0, n + 3):
            gens = hom_indices(a, b, n)
            assert len(gens) == brute_force_count(a, b, n)
            if a < b:
                assert len(gens) == math.comb(b - a + n, n)
                assert all(d == 0 for _, _, d in gens)
            elif a > b:
                assert all(d == n for _, _, d in gens)


def test_points_boundary_versus_interior():
    # every generator point is on the boundary iff b - a <= n;
    # an interior point appears exactly once b - a >= n + 1
    from mirror_morse.polytope import ProductPolytope
    for n in (1, 2):
        P = ProductPolytope([n])
        for gap in range(1, n + 4):
            kinds = {P.classify(v).kind for _, v, _ in hom_indices(0, gap, n)}
            if gap <= n:
                assert kinds == {"boundary"}
            else:
                assert "interior" in kinds


def test_magnitude_frozen_examples():
    assert magnitude_at(0, 1, (0,), (F(1),)) == PosExact({2: F(-1, 2)})
    assert magnitude_at(0, 2, (1,), (F(1),)) == PosExact.one()
    assert magnitude_at(0, 2, (1,), (F(4, 3),)) == PosExact({2: F(3, 2), 3: F(-1)})


def test_magnitude_zero_outcomes():
    # boundary coordinate raised to a positive power kills the value
    assert magnitude_at(0, 2, (1,), (F(0),)) is None
    assert magnitude_at(0, 2, (0,), (F(2),)) is None
    # zero exponent at the zero coordinate survives (0^0 = 1)
    assert magnitude_at(0, 1, (0,), (F(0),)) == PosExact.one()
    assert magnitude_at(0, 1, (1,), (F(2),)) == PosExact.one()


def test_magnitude_requires_forward_pair():
    with pytest.raises(ValueError):
        magnitude_at(1, 1, (0,), (F(1),))
    with pytest.raises(ValueError):
        magnitude_at(2, 0, (-1,), (F(1),))


def test_magnitude_numeric_oracle():
    # independent high-precision evaluation of the closed form
    cases = [(0, 3, (2,), (F(4, 3),)), (0, 2, (1, 0), (F(1, 2), F(1, 3))),
             (1, 4, (1, 1), (F(1, 5), F(3, 2)))]
    with mpmath.workprec(120):
        for a, b, I, x in cases:
            n = len(I)
            v = [mpmath.mpf(2 * i) / (b - a) for i in I]

            def bare(pt):
                out = mpmath.mpf(1)
                rim = (2 - sum(pt)) / 2
                e = mpmath.mpf(b - a - sum(I)) / 2
                if e != 0:
                    out *= rim ** e
                for i, c in zip(I, pt):
                    if i:
                        out *= (c / 2) ** (mpmath.mpf(i) / 2)
                return out

            want = bare([mpmath.mpf(c.numerator) / c.denominator for c in x]) / bare(v)
            got = magnitude_at(a, b, I, x).to_mpf(120)
            assert abs(got - want) < mpmath.mpf(2) ** -100


def test_max_attained_only_at_v():
    rng = random.Random(11)
    one = PosExact.one()
    for n in (1, 2):
        for a, b in [(0, 1), (0, 2), (1, 3)]:
            for I, v, _ in hom_indices(a, b, n):
                assert magnitude_at(a, b, I, v) == one
                for _ in range(40):
                    x = []
                    remaining = F(2)
                    for _ in range(n):
                        c = F(rng.randint(1, 50), 67)
                        x.append(min(c, remaining / 2))
                        remaining -= x[-1]
                    x = tuple(x)
                    m = magnitude_at(a, b, I, x)
                    if x == v:
                        assert m == one
                    else:
                        assert m is None or m.compare(one) < 0


def test_minus_grad_frozen_examples():
    assert minus_grad(0, 1, (0,), (F(1),)) == (F(1, 2),)
    assert minus_grad(0, 2, (1,), (F(1),)) == (F(0),)
    assert minus_grad(0, 2, (1, 0), (F(2), F(0))) == (F(1), F(0))


def test_minus_grad_vanishes_exactly_at_v():
    for a, b, n in [(0, 2, 1), (0, 3, 2), (1, 4, 2)]:
        for I, v, _ in hom_indices(a, b, n):
            assert all(c == 0 for c in minus_grad(a, b, I, v))
            off = tuple(c + F(1, 97) for c in v)
            assert any(c != 0 for c in minus_grad(a, b, I, off))


def test_potential_frozen_examples():
    assert potential_value(0, 1, (0,), (F(0),)).is_zero()
    p = potential_value(0, 1, (0,), (F(1),))
    assert p.terms == {2: F(-1, 2)}
    p = potential_value(0, 2, (1,), (F(4, 3),))
    assert p.terms == {2: F(3, 2), 3: F(-1)}
    assert potential_value(0, 2, (1,), (F(0),)) is None


def test_potential_nonpositive_on_polytope():
    rng = random.Random(13)
    for _ in range(200):
        x = (F(rng.randint(0, 40), 41), F(rng.randint(0, 40), 41))
        if sum(x) > 2:
            continue
        p = potential_value(0, 3, (1, 1), x)
        if p is not None:
            assert p.sign() <= 0
