"""The holomorphic side at cohomology level: normalized monomial bases.

Morphisms between the line bundles O(a) and O(b) (and their products) are
spanned by monomials w^I of total degree at most b - a.  Transported to the
polytope picture each monomial becomes the function

    c_{ab;I} * ((2 - sum x)/2)^((b-a-|I|)/2) * prod_j (x^j/2)^(i_j/2)

times a phase, where the constant c_{ab;I} is chosen so the sup over the
polytope is exactly 1, attained at v_{ab;I} = 2I/(b-a).  All of that is
exact arithmetic in PosExact.  This module is the independent oracle the
Morse-side composition is checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from .exact import PosExact
from .polytope import Point, as_point


def hom_dimension(a: int, b: int, n: int) -> int:
    """Rank of degree-0 morphisms O(a) -> O(b) on CP^n: C(b-a+n, n), 0 for a > b."""
    if a > b:
        return 0
    return math.comb(b - a + n, n)


def serre_rank(a: int, b: int, n: int) -> int:
    """Rank of the degree-n morphisms for a > b: C(a-b-1, n), 0 unless a-b >= n+1."""
    gap = a - b
    if gap < n + 1:
        return 0
    return math.comb(gap - 1, n)


def monomial_indices(a: int, b: int, n: int) -> list[tuple[int, ...]]:
    """All monomial exponents for O(a) -> O(b): i_j >= 0, |I| <= b - a."""
    if a > b:
        return []
    d = b - a
    return sorted(I for I in iproduct(range(d + 1), repeat=n) if sum(I) <= d)


def v_point(a: int, b: int, I) -> Point:
    """The sup locus v_{ab;I} = 2I/(b-a) of the normalized basis element."""
    if a == b:
        raise ValueError("v_{ab;I} needs a != b")
    return tuple(Fraction(2 * i, b - a) for i in I)


def bare_magnitude(a: int, b: int, I, x) -> PosExact | None:
    """The un-normalized magnitude at x; None when a boundary factor kills it.

    Convention 0^0 = 1 at polytope vertices, matching the limit of the
    closed form.
    """
    if a > b:
        raise ValueError("bare_magnitude needs a <= b")
    x = as_point(x)
    if len(x) != len(I):
        raise ValueError("index/point dimension mismatch")
    cap_exp = Fraction(b - a - sum(I), 2)
    out = PosExact.one()
    rim = (2 - sum(x)) / 2
    if cap_exp != 0:
        if rim == 0:
            return None
        if rim < 0:
            raise ValueError("point outside the polytope")
        out = out * PosExact.from_rational(rim) ** cap_exp
    for i, xj in zip(I, x):
        e = Fraction(i, 2)
        if e == 0:
            continue
        if xj == 0:
            return None
        if xj < 0:
            raise ValueError("point outside the polytope")
        out = out * PosExact.from_rational(xj / 2) ** e
    return out


def normalization_constant(a: int, b: int, I, n: int | None = None) -> PosExact:
    """c_{ab;I}: reciprocal of the bare magnitude at v_{ab;I}, so sup = 1."""
    I = tuple(int(i) for i in I)
    if n is not None and len(I) != n:
        raise ValueError("index length does not match n")
    if a == b:
        if any(I):
            raise ValueError("a = b admits only the zero index")
        return PosExact.one()
    if a > b:
        raise ValueError("normalization is defined for a <= b")
    if any(i < 0 for i in I) or sum(I) > b - a:
        raise ValueError(f"index {I} not admissible for ({a}, {b})")
    v = v_point(a, b, I)
    bare = bare_magnitude(a, b, I, v)
    assert bare is not None  # zero base only ever paired with zero exponent at v
    return bare.inverse()


@dataclass(frozen=True)
class MonomialClass:
    """A monomial morphism class, factor-aware for product spaces."""

    source: tuple[int, ...]
    target: tuple[int, ...]
    index: tuple[int, ...]
    factor_dims: tuple[int, ...]

    def __post_init__(self):
        if len(self.source) != len(self.target) or len(self.source) != len(self.factor_dims):
            raise ValueError("label/dimension length mismatch")
        if len(self.index) != sum(self.factor_dims):
            raise ValueError("index length does not match total dimension")
        for a, b, I in self.per_factor():
            if a > b:
                raise ValueError("monomial classes require a <= b in every factor")
            if any(i < 0 for i in I) or sum(I) > b - a:
                raise ValueError(f"index slice {I} not admissible for ({a}, {b})")

    def per_factor(self):
        off = 0
        for a, b, n in zip(self.source, self.target, self.factor_dims):
            yield a, b, self.index[off:off + n]
            off += n

    @property
    def is_identity(self) -> bool:
        return self.source == self.target


def constant_for(mono: MonomialClass) -> PosExact:
    c = PosExact.one()
    for a, b, I in mono.per_factor():
        c = c * normalization_constant(a, b, I)
    return c


@dataclass(frozen=True)
class NormalizedBasis:
    mono: MonomialClass
    c: PosExact


def basis(factor_dims, source, target, index) -> NormalizedBasis:
    mono = MonomialClass(tuple(source), tuple(target), tuple(index), tuple(factor_dims))
    return NormalizedBasis(mono, constant_for(mono))


def multiply_bases(u: NormalizedBasis, v: NormalizedBasis) -> tuple[PosExact, MonomialClass]:
    """Product of normalized bases: e_u * e_v = coef * e_result, exactly.

    The bare monomials multiply on the nose (half-exponents add), so the
    coefficient is c_u * c_v / c_result.
    """
    if u.mono.target != v.mono.source:
        raise ValueError(f"non-composable: {u.mono.target} != {v.mono.source}")
    result = MonomialClass(
        u.mono.source,
        v.mono.target,
        tuple(i + k for i, k in zip(u.mono.index, v.mono.index)),
        u.mono.factor_dims,
    )
    coef = u.c * v.c / constant_for(result)
    return coef, result


def iota(generator) -> NormalizedBasis:
    """The comparison functor on degree-0 generators: same labels, same index."""
    if generator.degree != 0:
        raise ValueError("iota is defined on degree-0 generators only")
    return basis(generator.factor_dims, generator.source, generator.target,
                 generator.index)


def exceptional_check(collection, factor_dims) -> dict:
    """Strong-exceptionality report for an ordered collection of label vectors.

    Checks, through the rank formulas: endomorphism rank 1, no backward
    morphisms, and no morphisms outside degree 0 for any ordered pair.
    """
    factor_dims = tuple(factor_dims)
    objects = [tuple(L) for L in collection]
    failures = []
    for i, L in enumerate(objects):
        for j, M in enumerate(objects):
            deg0 = 1
            total = 1
            for a, b, n in zip(L, M, factor_dims):
                deg0 *= hom_dimension(a, b, n)
                total *= hom_dimension(a, b, n) if a <= b else serre_rank(a, b, n)
            higher = total - deg0
            if i == j and deg0 != 1:
                failures.append({"pair": [list(L), list(M)], "reason": f"endomorphism rank {deg0} != 1"})
            if i > j and deg0 != 0:
                failures.append({"pair": [list(L), list(M)], "reason": f"backward degree-0 rank {deg0} != 0"})
            if higher != 0:
                failures.append({"pair": [list(L), list(M)], "reason": f"nonzero rank {higher} outside degree 0"})
    return {
        "check": "strongly-exceptional",
        "params": {"collection": [list(L) for L in objects], "dims": list(factor_dims)},
        "failures": failures,
        "pass": not failures,
    }
