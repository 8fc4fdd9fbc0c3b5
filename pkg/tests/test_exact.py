"""Exact prime-power arithmetic: frozen values, group laws, order vs floats."""

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mirror_morse.exact import LogValue, PosExact, factorize

F = Fraction


def test_from_rational_frozen_examples():
    assert PosExact.from_rational(F(3, 4)).factors == {3: F(1), 2: F(-2)}
    assert PosExact.from_rational(1).factors == {}
    assert PosExact.from_rational(12).factors == {2: F(2), 3: F(1)}


def test_from_rational_rejects_nonpositive():
    with pytest.raises(ValueError):
        PosExact.from_rational(0)
    with pytest.raises(ValueError):
        PosExact.from_rational(F(-3, 4))


def test_constructor_rejects_composite_keys():
    with pytest.raises(ValueError):
        PosExact({4: F(1)})
    with pytest.raises(ValueError):
        PosExact({1: F(1)})


def test_mul_pow_frozen_examples():
    h = PosExact({2: F(-1, 2)})
    assert (h * h).factors == {2: F(-1)}
    assert (PosExact({2: F(-1)}) ** F(1, 2)) == h
    a = PosExact({2: F(2), 3: F(-3, 2)})
    b = PosExact({2: F(-1), 3: F(3, 2)})
    assert (a * b).factors == {2: F(1)}


def test_compare_frozen_examples():
    # sqrt(2) vs 3/2: squaring gives 2 vs 9/4
    assert PosExact({2: F(1, 2)}).compare(PosExact.from_rational(F(3, 2))) == -1
    x = PosExact({5: F(2, 3)})
    assert x.compare(x) == 0
    assert PosExact({2: F(-1)}).compare(PosExact.one()) == -1


def test_to_float_frozen_examples():
    assert PosExact({2: F(-1)}).to_float() == 0.5
    assert PosExact.one().to_float() == 1.0
    # oracle: high-precision log sum of 2^2 * 3^(-3/2)
    with mpmath.workprec(128):
        want = mpmath.exp(2 * mpmath.log(2) - mpmath.mpf(3) / 2 * mpmath.log(3))
        got = PosExact({2: F(2), 3: F(-3, 2)}).to_mpf(128)
        assert abs(got - want) < mpmath.mpf(2) ** -120
    assert PosExact({2: F(2), 3: F(-3, 2)}).to_float() == pytest.approx(
        0.7698003589195010, abs=1e-15)


def test_to_float_precision_floor():
    with pytest.raises(ValueError):
        PosExact.one().to_float(16)


def test_factorize():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorize(1) == {}
    assert factorize(997) == {997: 1}
    with pytest.raises(ValueError):
        factorize(0)


def test_json_dict():
    d = PosExact({2: F(-1, 2)}).json_dict()
    assert d["factors"] == {"2": "-1/2"}
    assert d["approx"].startswith("0.7071067811")


_exponents = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def pos_exacts(draw):
    primes = draw(st.lists(st.sampled_from([2, 3, 5, 7, 11, 13]),
                           unique=True, max_size=4))
    return PosExact({p: draw(_exponents) for p in primes})


@settings(max_examples=150, deadline=None)
@given(pos_exacts(), pos_exacts(), pos_exacts())
def test_group_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == PosExact.one()


@settings(max_examples=150, deadline=None)
@given(pos_exacts(), _exponents, _exponents)
def test_pow_composition(a, r, s):
    assert (a ** r) ** s == a ** (r * s)


@settings(max_examples=150, deadline=None)
@given(pos_exacts(), pos_exacts())
def test_canonical_uniqueness(a, b):
    # equal as reals iff identical factor maps
    assert (a.compare(b) == 0) == (a == b)


def test_compare_consistent_with_floats_bulk():
    import random
    rng = random.Random(7)
    primes = [2, 3, 5, 7, 11, 13]
    checked = 0
    while checked < 10_000:
        def rand():
            return PosExact({p: F(rng.randint(-8, 8), rng.randint(1, 4))
                             for p in rng.sample(primes, rng.randint(1, 4))})
        a, b = rand(), rand()
        fa, fb = a.to_mpf(128), b.to_mpf(128)
        gap = abs(fa - fb) / max(fa, fb)
        if gap <= mpmath.mpf(2) ** -64:
            continue
        checked += 1
        want = 0 if fa == fb else (1 if fa > fb else -1)
        assert a.compare(b) == want


def test_logvalue_roundtrip_and_sign():
    v = PosExact({2: F(3, 2), 3: F(-1)})
    assert v.log().exp() == v
    assert v.log().sign() == v.compare(PosExact.one())
    assert LogValue.zero().is_zero()
    assert (v.log() + (-v.log())).is_zero()
    a = LogValue({2: F(1)})
    b = LogValue({2: F(-1, 2)})
    assert (a + b).terms == {2: F(1, 2)}
    assert (a - a).is_zero()
    assert LogValue({2: F(-1)}).sign() == -1
