"""Monomial model: constants, products, dimensions, iota, exceptionality."""

import math
import random
from fractions import Fraction

import pytest

from mirror_morse import category, dg, lagrangian
from mirror_morse.exact import PosExact
from mirror_morse.polytope import ProductPolytope

F = Fraction


def test_normalization_constant_frozen_examples():
    assert dg.normalization_constant(0, 1, (0,)) == PosExact.one()
    assert dg.normalization_constant(0, 2, (1,)) == PosExact.from_rational(2)
    assert dg.normalization_constant(0, 3, (2,)) == PosExact({2: F(-1), 3: F(3, 2)})
    assert dg.normalization_constant(4, 4, (0, 0)) == PosExact.one()


def test_normalization_rejects_inadmissible():
    with pytest.raises(ValueError):
        dg.normalization_constant(0, 2, (3,))
    with pytest.raises(ValueError):
        dg.normalization_constant(0, 2, (-1,))
    with pytest.raises(ValueError):
        dg.normalization_constant(2, 0, (-1,))
    with pytest.raises(ValueError):
        dg.normalization_constant(3, 3, (1,))


def test_multiply_bases_frozen_examples():
    u = dg.basis((1,), (0,), (1,), (0,))
    v = dg.basis((1,), (1,), (2,), (1,))
    coef, result = dg.multiply_bases(u, v)
    assert coef == PosExact.from_rational(F(1, 2))
    assert result.index == (1,) and result.source == (0,) and result.target == (2,)

    u = dg.basis((1,), (0,), (1,), (1,))
    coef, result = dg.multiply_bases(u, v)
    assert coef == PosExact.one() and result.index == (2,)

    e = dg.basis((1,), (1,), (1,), (0,))
    coef, result = dg.multiply_bases(e, v)
    assert coef == PosExact.one() and result.index == v.mono.index


def test_multiply_bases_non_composable():
    u = dg.basis((1,), (0,), (1,), (0,))
    with pytest.raises(ValueError):
        dg.multiply_bases(u, u)


def _random_monomial(rng, dims, L, M):
    index = []
    for a, b, n in zip(L, M, dims):
        choices = dg.monomial_indices(a, b, n)
        index.extend(choices[rng.randrange(len(choices))])
    return dg.basis(dims, L, M, index)


def test_multiply_bases_random_point_oracle():
    # coef equals the magnitude product at any interior point, since the
    # product of bases is proportional to the result basis
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(1, 2)
        a = rng.randint(0, 2)
        b = a + rng.randint(1, 2)
        c = b + rng.randint(1, 2)
        u = _random_monomial(rng, (n,), (a,), (b,))
        v = _random_monomial(rng, (n,), (b,), (c,))
        coef, result = dg.multiply_bases(u, v)
        x = []
        remaining = F(2)
        for _ in range(n):
            pick = F(rng.randint(1, 30), 61)
            x.append(min(pick, remaining / 2))
            remaining -= x[-1]
        x = tuple(x)
        mu = lagrangian.magnitude_at(a, b, u.mono.index, x)
        mv = lagrangian.magnitude_at(b, c, v.mono.index, x)
        mr = lagrangian.magnitude_at(a, c, result.index, x)
        assert mu is not None and mv is not None and mr is not None
        assert mu * mv == coef * mr


def test_multiply_bases_associative_random():
    rng = random.Random(17)
    for _ in range(1000):
        n = rng.randint(1, 3)
        labels = sorted(rng.randint(0, 5) for _ in range(4))
        a, b, c, d = [(x,) for x in labels]
        u = _random_monomial(rng, (n,), a, b)
        v = _random_monomial(rng, (n,), b, c)
        w = _random_monomial(rng, (n,), c, d)
        c1, uv = dg.multiply_bases(u, v)
        left_c, left = dg.multiply_bases(dg.NormalizedBasis(uv, dg.constant_for(uv)), w)
        c2, vw = dg.multiply_bases(v, w)
        right_c, right = dg.multiply_bases(u, dg.NormalizedBasis(vw, dg.constant_for(vw)))
        assert left == right
        assert c1 * left_c == c2 * right_c


def test_coef_range():
    rng = random.Random(23)
    one = PosExact.one()
    for _ in range(200):
        n = rng.randint(1, 2)
        a = rng.randint(0, 2)
        b = a + rng.randint(0, 2)
        c = b + rng.randint(0, 2)
        u = _random_monomial(rng, (n,), (a,), (b,))
        v = _random_monomial(rng, (n,), (b,), (c,))
        coef, _ = dg.multiply_bases(u, v)
        assert coef.compare(one) <= 0 or coef == one


def test_hom_dimension_and_serre_frozen():
    assert dg.hom_dimension(0, 2, 2) == 6
    assert dg.hom_dimension(2, 0, 1) == 0
    assert dg.serre_rank(2, 0, 1) == math.comb(1, 1) == 1
    for n in (1, 2, 3):
        for q in (-1, 0, 2):
            assert dg.serre_rank(q + n + 1, q, n) == 1
    assert dg.serre_rank(1, 0, 1) == 0
    assert dg.serre_rank(3, 0, 3) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_hom_dimension_matches_lagrangian_enumeration(n):
    for a in range(0, n + 3):
        for b in range(a, n + 3):
            assert dg.hom_dimension(a, b, n) == len(lagrangian.hom_indices(a, b, n))


def test_iota_identity_and_bijection():
    P = ProductPolytope([2])
    hs = category.hom_space(P, (0,), (2,))
    images = {dg.iota(g).mono.index for g in hs.generators}
    assert images == set(dg.monomial_indices(0, 2, 2))
    e = category.identity_generator(P, (1,))
    be = dg.iota(e)
    assert be.mono.is_identity and be.c == PosExact.one()


def test_iota_product_generator():
    P = ProductPolytope([1, 2])
    g = category.hom_space(P, (0, 0), (1, 1)).generators[0]
    basis = dg.iota(g)
    # tensor of per-factor constants
    per = list(basis.mono.per_factor())
    assert len(per) == 2
    want = PosExact.one()
    for a, b, I in per:
        want = want * dg.normalization_constant(a, b, I)
    assert basis.c == want


def test_iota_rejects_degree_n():
    P = ProductPolytope([1])
    g = category.hom_space(P, (2,), (0,)).generators[0]
    assert g.degree == 1
    with pytest.raises(ValueError):
        dg.iota(g)


def test_exceptional_check_frozen_examples():
    assert dg.exceptional_check([(0,), (1,), (2,)], (2,))["pass"]
    rep = dg.exceptional_check([(0,), (1,), (2,), (3,)], (2,))
    assert not rep["pass"]
    assert any("outside degree 0" in f["reason"] for f in rep["failures"])
    lex = [(a, b) for a in (0, 1) for b in (0, 1)]
    assert dg.exceptional_check(lex, (1, 1))["pass"]


def test_exceptional_check_backward_failure():
    # gap 2 on P2 has neither hom nor serre classes between the pair
    assert dg.exceptional_check([(0,), (2,)], (2,))["pass"]
    # order matters: hom(O(0), O(2)) != 0 points backward in this listing
    rep = dg.exceptional_check([(2,), (0,)], (2,))
    assert not rep["pass"]
    assert any("backward" in f["reason"] for f in rep["failures"])
