"""Exact arithmetic for positive reals of the form prod_p p^(e_p), e_p rational.

Every structure constant and basis magnitude in this package is a single
monomial in prime numbers with rational exponents (square roots stack under
composition, nothing else ever appears), so this representation is closed
under multiplication, inversion and rational powers, and admits an exact
total order.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def factorize(m: int) -> dict[int, int]:
    """Prime factorization of a positive integer by trial division."""
    if m <= 0:
        raise ValueError(f"cannot factor non-positive integer {m}")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
    f = 7
    while f * f <= m:
        while m % f == 0:
            out[f] = out.get(f, 0) + 1
            m //= f
        f += 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


# log(p) cache keyed by (prime, binary precision)
_LOG_CACHE: dict[tuple[int, int], mpmath.mpf] = {}


def _log_prime(p: int, prec: int) -> mpmath.mpf:
    key = (p, prec)
    if key not in _LOG_CACHE:
        with mpmath.workprec(prec):
            _LOG_CACHE[key] = mpmath.log(p)
    return _LOG_CACHE[key]


class PosExact:
    """A positive real number prod_p p^(e_p) with rational exponents e_p.

    Canonical form: keys are distinct primes, no exponent is zero, and the
    empty map is 1.  Instances are immutable and hashable; equality of the
    factor maps is equality of the represented reals.
    """

    __slots__ = ("_factors",)

    def __init__(self, factors: dict[int, Fraction] | None = None):
        canon: dict[int, Fraction] = {}
        for p, e in (factors or {}).items():
            e = Fraction(e)
            if e == 0:
                continue
            if not _is_prime(p):
                raise ValueError(f"{p} is not prime")
            canon[p] = e
        self._factors = canon

    @property
    def factors(self) -> dict[int, Fraction]:
        return dict(self._factors)

    @classmethod
    def one(cls) -> PosExact:
        return cls()

    @classmethod
    def from_rational(cls, q) -> PosExact:
        """Exact value of a positive rational, via prime factorization."""
        q = Fraction(q)
        if q <= 0:
            raise ValueError(f"PosExact requires a positive rational, got {q}")
        factors: dict[int, Fraction] = {
            p: Fraction(k) for p, k in factorize(q.numerator).items()
        }
        for p, k in factorize(q.denominator).items():
            factors[p] = factors.get(p, Fraction(0)) - k
        return cls(factors)

    def __mul__(self, other: PosExact) -> PosExact:
        factors = dict(self._factors)
        for p, e in other._factors.items():
            factors[p] = factors.get(p, Fraction(0)) + e
        return PosExact(factors)

    def inverse(self) -> PosExact:
        return PosExact({p: -e for p, e in self._factors.items()})

    def __truediv__(self, other: PosExact) -> PosExact:
        return self * other.inverse()

    def __pow__(self, r) -> PosExact:
        r = Fraction(r)
        return PosExact({p: e * r for p, e in self._factors.items()})

    def is_one(self) -> bool:
        return not self._factors

    def is_rational(self) -> bool:
        return all(e.denominator == 1 for e in self._factors.values())

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        out = Fraction(1)
        for p, e in self._factors.items():
            out *= Fraction(p) ** int(e)
        return out

    def compare(self, other: PosExact) -> int:
        """Exact three-way comparison, never through floats.

        Raises self/other to the lcm of the exponent denominators (a
        monotone map on positives), which lands in the rationals.
        """
        ratio = self / other
        if not ratio._factors:
            return 0
        lcm = 1
        for e in ratio._factors.values():
            lcm = lcm * e.denominator // math.gcd(lcm, e.denominator)
        cleared = Fraction(1)
        for p, e in ratio._factors.items():
            cleared *= Fraction(p) ** int(e * lcm)
        if cleared == 1:
            return 0
        return 1 if cleared > 1 else -1

    def __eq__(self, other) -> bool:
        if not isinstance(other, PosExact):
            return NotImplemented
        return self._factors == other._factors

    def __hash__(self) -> int:
        return hash(frozenset(self._factors.items()))

    def __lt__(self, other: PosExact) -> bool:
        return self.compare(other) < 0

    def __le__(self, other: PosExact) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: PosExact) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: PosExact) -> bool:
        return self.compare(other) >= 0

    def log(self) -> LogValue:
        return LogValue(self._factors)

    def to_mpf(self, precision_bits: int = 64) -> mpmath.mpf:
        """Value as an mpmath float computed at the given binary precision."""
        if precision_bits < 24:
            raise ValueError("precision_bits must be at least 24")
        with mpmath.workprec(precision_bits):
            acc = mpmath.mpf(0)
            for p, e in sorted(self._factors.items()):
                acc += mpmath.mpf(e.numerator) / e.denominator * _log_prime(p, precision_bits)
            return mpmath.exp(acc)

    def to_float(self, precision_bits: int = 64) -> float:
        return float(self.to_mpf(precision_bits))

    def to_decimal_string(self, precision_bits: int = 64) -> str:
        """Deterministic decimal rendering at the given precision."""
        digits = max(6, int(precision_bits * 0.30103))
        with mpmath.workprec(precision_bits):
            return mpmath.nstr(self.to_mpf(precision_bits), digits)

    def json_dict(self, precision_bits: int = 64) -> dict:
        return {
            "factors": {str(p): str(e) for p, e in sorted(self._factors.items())},
            "approx": self.to_decimal_string(precision_bits),
        }

    def __repr__(self) -> str:
        if not self._factors:
            return "PosExact(1)"
        body = " * ".join(f"{p}^({e})" for p, e in sorted(self._factors.items()))
        return f"PosExact({body})"


class LogValue:
    """A signed exact logarithm sum_p q_p * log(p) with rational q_p.

    The additive counterpart of PosExact: areas of gradient trees and values
    of the pair potentials live here.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, Fraction] | None = None):
        canon: dict[int, Fraction] = {}
        for p, q in (terms or {}).items():
            q = Fraction(q)
            if q == 0:
                continue
            if not _is_prime(p):
                raise ValueError(f"{p} is not prime")
            canon[p] = q
        self._terms = canon

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    @classmethod
    def zero(cls) -> LogValue:
        return cls()

    def __add__(self, other: LogValue) -> LogValue:
        terms = dict(self._terms)
        for p, q in other._terms.items():
            terms[p] = terms.get(p, Fraction(0)) + q
        return LogValue(terms)

    def __neg__(self) -> LogValue:
        return LogValue({p: -q for p, q in self._terms.items()})

    def __sub__(self, other: LogValue) -> LogValue:
        return self + (-other)

    def is_zero(self) -> bool:
        return not self._terms

    def exp(self) -> PosExact:
        return PosExact(self._terms)

    def sign(self) -> int:
        # sign of the log equals the position of exp relative to 1
        return self.exp().compare(PosExact.one())

    def __eq__(self, other) -> bool:
        if not isinstance(other, LogValue):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def to_float(self, precision_bits: int = 64) -> float:
        with mpmath.workprec(precision_bits):
            acc = mpmath.mpf(0)
            for p, q in sorted(self._terms.items()):
                acc += mpmath.mpf(q.numerator) / q.denominator * _log_prime(p, precision_bits)
            return float(acc)

    def __repr__(self) -> str:
        if not self._terms:
            return "LogValue(0)"
        body = " + ".join(f"({q})*log{p}" for p, q in sorted(self._terms.items()))
        return f"LogValue({body})"
