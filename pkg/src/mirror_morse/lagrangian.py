"""Lagrangian sections over one simplex factor and their pairwise data.

The section attached to the label a is the graph y = (a/2)x over the open
polytope.  For an ordered pair (a, b) and an integer index vector I the
intersection point is v = 2I/(b-a), the pair potential is the log of the
normalized basis magnitude (zero at v, negative elsewhere), and the flow
-grad is the linear field ((b-a)/2)(x - v).

Degrees follow the stable-manifold rule for this linear flow: expanding
(a < b) gives degree 0 and admits every index with i_j >= 0, |I| <= b - a;
contracting (a > b) gives degree n and admits exactly the indices whose
point lands in the open interior, i.e. i_j <= -1 with sum(-i_j) <= a-b-1.
"""

from __future__ import annotations

from fractions import Fraction

from . import dg
from .exact import LogValue, PosExact
from .polytope import Point, as_point

# one factor-level generator: (index, point or None for the whole factor, degree)
FactorGenerator = tuple[tuple[int, ...], Point | None, int]


def _compositions_at_most(n: int, total: int) -> list[tuple[int, ...]]:
    """All I in Z^n with i_j >= 0 and sum <= total, lexicographically."""
    if n == 0:
        return [()]
    out = []
    for head in range(total + 1):
        for tail in _compositions_at_most(n - 1, total - head):
            out.append((head,) + tail)
    return sorted(out)


def hom_indices(a: int, b: int, n: int) -> list[FactorGenerator]:
    """Basis data of the morphism space L_a -> L_b over one P_n factor."""
    if n < 1:
        raise ValueError("factor dimension must be positive")
    if a == b:
        return [(tuple([0] * n), None, 0)]
    if a < b:
        return [(I, dg.v_point(a, b, I), 0) for I in _compositions_at_most(n, b - a)]
    # a > b: interior points only, stable manifold is everything
    gap = a - b
    out = []
    for K in _compositions_at_most(n, gap - 1 - n):
        I = tuple(-(k + 1) for k in K)
        out.append((I, dg.v_point(a, b, I), n))
    return sorted(out)


def magnitude_at(a: int, b: int, I, x) -> PosExact | None:
    """|e_{ab;I}(x)| as an exact positive value, or None when it vanishes.

    Vanishes exactly when a boundary coordinate is raised to a positive
    power: x^j = 0 with i_j != 0, or sum(x) = 2 with |I| != b - a.
    """
    if a >= b:
        raise ValueError("magnitude_at needs a < b")
    I = tuple(int(i) for i in I)
    bare = dg.bare_magnitude(a, b, I, x)
    if bare is None:
        return None
    return dg.normalization_constant(a, b, I) * bare


def potential_value(a: int, b: int, I, x) -> LogValue | None:
    """f_{ab;I}(x) = log|e_{ab;I}(x)|; None signals the -infinity case.

    Nonpositive on the polytope, zero exactly at v_{ab;I}.
    """
    mag = magnitude_at(a, b, I, x)
    if mag is None:
        return None
    return mag.log()


def minus_grad(a: int, b: int, I, x) -> tuple[Fraction, ...]:
    """-grad(f_{ab;I}) at x: component j is ((b-a)/2) x^j - i_j, exact."""
    x = as_point(x)
    I = tuple(int(i) for i in I)
    if len(x) != len(I):
        raise ValueError("index/point dimension mismatch")
    r = Fraction(b - a, 2)
    return tuple(r * xj - i for xj, i in zip(x, I))


def section_slope(a: int, x) -> tuple[Fraction, ...]:
    """The section L_a over a factor: y^j = (a/2) x^j."""
    x = as_point(x)
    return tuple(Fraction(a, 2) * xj for xj in x)
