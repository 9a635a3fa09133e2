"""Exact truncated Laurent series in one variable q.

A series tracks every coefficient from ``min_exp`` up to ``order``
inclusive.  Coefficients below ``min_exp`` are zero; coefficients above
``order`` are unknown and never reported.  Values are stored as a tuple
of integer numerators over one shared positive denominator, so the
common case (integer coefficients) runs on plain ``int`` arithmetic.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd
from operator import add as _add
from typing import Iterable, Optional, Tuple, Union

Scalar = Union[int, Fraction]

DEFAULT_ORDER = 512


def default_order() -> int:
    """The working truncation order, overridable through ``QFORMS_ORDER``."""
    value = os.environ.get("QFORMS_ORDER")
    if value:
        return int(value)
    return DEFAULT_ORDER


class SeriesError(ValueError):
    pass


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


class LaurentSeries:
    """Immutable truncated Laurent series with exact rational coefficients."""

    __slots__ = ("_min", "_order", "_num", "_den")

    def __init__(self, coeffs: Iterable[Scalar] = (), min_exp: int = 0,
                 order: Optional[int] = None):
        coeffs = list(coeffs)
        if order is None:
            order = min_exp + len(coeffs) - 1
        length = order - min_exp + 1
        if length < 0:
            raise SeriesError("order below min_exp")
        if len(coeffs) > length:
            coeffs = coeffs[:length]
        else:
            coeffs.extend([0] * (length - len(coeffs)))
        den = 1
        for c in coeffs:
            if isinstance(c, Fraction) and c.denominator != 1:
                den = _lcm(den, c.denominator)
        if den == 1:
            num = [int(c) for c in coeffs]
        else:
            num = [int(c * den) for c in coeffs]
        self._init(num, den, min_exp, order)

    def _init(self, num, den, min_exp, order):
        if den != 1:
            g = gcd(den, *num) if num else den
            if g > 1:
                den //= g
                num = [c // g for c in num]
        self._num = tuple(num)
        self._den = den
        self._min = min_exp
        self._order = order

    @classmethod
    def _raw(cls, num, den: int, min_exp: int, order: int) -> "LaurentSeries":
        obj = cls.__new__(cls)
        if den < 0:
            den = -den
            num = [-c for c in num]
        obj._init(num, den, min_exp, order)
        return obj

    # -- inspection -----------------------------------------------------

    @property
    def min_exp(self) -> int:
        return self._min

    @property
    def order(self) -> int:
        return self._order

    @property
    def denominator(self) -> int:
        """Common denominator of all tracked coefficients."""
        return self._den

    @property
    def numerators(self) -> Tuple[int, ...]:
        """Numerators over :attr:`denominator`, for exponents min_exp..order."""
        return self._num

    def is_integral(self) -> bool:
        return self._den == 1

    def _c(self, n: int) -> int:
        i = n - self._min
        if 0 <= i < len(self._num):
            return self._num[i]
        if i < 0:
            return 0
        raise SeriesError(f"exponent {n} is beyond tracked order {self._order}")

    def coeff(self, n: int) -> Fraction:
        if not self._min <= n <= self._order:
            raise SeriesError(
                f"exponent {n} out of tracked range [{self._min}, {self._order}]")
        return Fraction(self._num[n - self._min], self._den)

    __getitem__ = coeff

    def coefficients(self) -> list:
        """All tracked coefficients as Fractions, lowest exponent first."""
        d = self._den
        return [Fraction(c, d) for c in self._num]

    def int_coefficients(self, start: Optional[int] = None,
                         stop: Optional[int] = None) -> list:
        """Integer coefficients for exponents start..stop (inclusive).

        Exponents below ``min_exp`` read as 0.  Raises if the series is not
        integral.
        """
        if self._den != 1:
            raise SeriesError("series has non-integer coefficients")
        start = self._min if start is None else start
        stop = self._order if stop is None else stop
        return [self._c(n) for n in range(start, stop + 1)]

    def valuation(self) -> Optional[int]:
        """Lowest exponent with a nonzero coefficient, or None."""
        for i, c in enumerate(self._num):
            if c:
                return self._min + i
        return None

    def nonzero_count(self) -> int:
        return sum(1 for c in self._num if c)

    def first_non_integral(self) -> Optional[int]:
        if self._den == 1:
            return None
        for i, c in enumerate(self._num):
            if c % self._den:
                return self._min + i
        return None

    # -- structural ops -------------------------------------------------

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by q**k exactly."""
        return LaurentSeries._raw(self._num, self._den, self._min + k, self._order + k)

    def truncate(self, order: int) -> "LaurentSeries":
        if order >= self._order:
            return self
        if order < self._min:
            return LaurentSeries._raw([], self._den, self._min, self._min - 1)
        return LaurentSeries._raw(self._num[:order - self._min + 1], self._den,
                                  self._min, order)

    def strip(self) -> "LaurentSeries":
        """Drop known leading zeros, raising ``min_exp`` to the valuation."""
        v = self.valuation()
        if v is None or v == self._min:
            return self
        return LaurentSeries._raw(self._num[v - self._min:], self._den, v, self._order)

    # -- arithmetic -----------------------------------------------------

    def __neg__(self):
        return LaurentSeries._raw([-c for c in self._num], self._den, self._min, self._order)

    def __pos__(self):
        return self

    def __add__(self, other):
        if _is_scalar(other):
            return _add_scalar(self, Fraction(other))
        if isinstance(other, LaurentSeries):
            return add(self, other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if _is_scalar(other):
            return _add_scalar(self, -Fraction(other))
        if isinstance(other, LaurentSeries):
            return add(self, -other)
        return NotImplemented

    def __rsub__(self, other):
        if _is_scalar(other):
            return _add_scalar(-self, Fraction(other))
        return NotImplemented

    def __mul__(self, other):
        if _is_scalar(other):
            return _scale(self, Fraction(other))
        if isinstance(other, LaurentSeries):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            if other == 0:
                raise ZeroDivisionError("series divided by zero")
            return _scale(self, 1 / Fraction(other))
        if isinstance(other, LaurentSeries):
            return divide(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if _is_scalar(other):
            return _scale(invert(self.strip()), Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return power(self, k)

    # -- comparison / display -------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if self._order != other._order:
            return False
        lo = min(self._min, other._min)
        return all(self._c(n) * other._den == other._c(n) * self._den
                   for n in range(lo, self._order + 1))

    __hash__ = None

    def to_string(self, max_terms: int = 12) -> str:
        parts = []
        for i, c in enumerate(self._num):
            if not c:
                continue
            if len(parts) == max_terms:
                parts.append("...")
                break
            parts.append(_term_str(Fraction(c, self._den), self._min + i))
        body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        return f"{body} + O(q^{self._order + 1})"

    def __repr__(self):
        return f"LaurentSeries({self.to_string()})"


def _term_str(c: Fraction, e: int) -> str:
    if e == 0:
        return str(c)
    mono = "q" if e == 1 else f"q^{e}"
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


# -- constructors ---------------------------------------------------------

def zero(order: int, min_exp: int = 0) -> LaurentSeries:
    return LaurentSeries._raw([0] * (order - min_exp + 1), 1, min_exp, order)


def one(order: int) -> LaurentSeries:
    return monomial(0, order)


def monomial(exponent: int, order: int, c: Scalar = 1) -> LaurentSeries:
    """c * q**exponent, tracked from min(0, exponent) to ``order``."""
    lo = min(0, exponent)
    coeffs = [0] * (order - lo + 1)
    if exponent <= order:
        coeffs[exponent - lo] = c
    return LaurentSeries(coeffs, lo, order)


def from_function(func, order: int, min_exp: int = 0) -> LaurentSeries:
    """Series whose coefficient at q**n is ``func(n)``."""
    return LaurentSeries([func(n) for n in range(min_exp, order + 1)], min_exp, order)


# -- core operations ------------------------------------------------------

def _add_scalar(s: LaurentSeries, c: Fraction) -> LaurentSeries:
    if c == 0 or s._order < 0:
        return s
    den = _lcm(s._den, c.denominator)
    k = den // s._den
    lo = min(s._min, 0)
    num = [0] * (s._min - lo) + [x * k for x in s._num]
    num[-lo] += c.numerator * (den // c.denominator)
    return LaurentSeries._raw(num, den, lo, s._order)


def _scale(s: LaurentSeries, c: Fraction) -> LaurentSeries:
    p, q = c.numerator, c.denominator
    return LaurentSeries._raw([x * p for x in s._num], s._den * q, s._min, s._order)


def add(s: LaurentSeries, t: LaurentSeries) -> LaurentSeries:
    """Coefficientwise sum on the common tracked range."""
    lo = min(s._min, t._min)
    hi = min(s._order, t._order)
    den = _lcm(s._den, t._den)
    ks, kt = den // s._den, den // t._den
    num = [s._c(n) * ks + t._c(n) * kt for n in range(lo, hi + 1)]
    return LaurentSeries._raw(num, den, lo, hi)


def _convolve(a, b, length):
    """First ``length`` terms of the Cauchy product of integer lists a, b."""
    if sum(1 for x in a if x) > sum(1 for x in b if x):
        a, b = b, a
    out = [0] * length
    for i, x in enumerate(a):
        if i >= length:
            break
        if x:
            stop = length - i
            out[i:] = map(_add, out[i:], map(x.__mul__, b[:stop]))
    return out


def mul(s: LaurentSeries, t: LaurentSeries) -> LaurentSeries:
    """Cauchy product.

    The result tracks exponents up to ``min(order(s) + min_exp(t),
    order(t) + min_exp(s))``: the highest exponent whose coefficient is
    fully determined by the tracked inputs.
    """
    lo = s._min + t._min
    hi = min(s._order + t._min, t._order + s._min)
    length = max(hi - lo + 1, 0)
    num = _convolve(s._num, t._num, length)
    return LaurentSeries._raw(num, s._den * t._den, lo, hi)


def _divide_ints(a, b, length):
    """Solve u * b = a for the first ``length`` terms, b[0] != 0."""
    lead = b[0]
    nzb = [(k, bk) for k, bk in enumerate(b[:length]) if k and bk]
    if lead in (1, -1):
        u = []
        for n in range(length):
            acc = a[n]
            for k, bk in nzb:
                if k > n:
                    break
                acc -= bk * u[n - k]
            u.append(acc if lead == 1 else -acc)
        return u, 1
    u = []
    for n in range(length):
        acc = Fraction(a[n])
        for k, bk in nzb:
            if k > n:
                break
            acc -= bk * u[n - k]
        u.append(acc / lead)
    den = 1
    for x in u:
        den = _lcm(den, x.denominator)
    return [int(x * den) for x in u], den


def divide(s: LaurentSeries, t: LaurentSeries) -> LaurentSeries:
    """s / t, after dropping known leading zeros of t."""
    v = t.valuation()
    if v is None:
        raise SeriesError("zero leading coefficient")
    b = t._num[v - t._min:]
    length = min(s._order - s._min, t._order - v) + 1
    if length <= 0:
        return LaurentSeries._raw([], 1, s._min - v, s._min - v - 1)
    u, uden = _divide_ints(s._num, b, length)
    return LaurentSeries._raw([x * t._den for x in u], s._den * uden,
                              s._min - v, s._min - v + length - 1)


def invert(s: LaurentSeries) -> LaurentSeries:
    """Multiplicative inverse; the coefficient at ``min_exp`` must be nonzero."""
    if not s._num or s._num[0] == 0:
        raise SeriesError("zero leading coefficient")
    return divide(one(s._order - s._min), s.shift(-s._min)).shift(-s._min)


def power(s: LaurentSeries, k: int) -> LaurentSeries:
    if k < 0:
        return power(invert(s.strip()), -k)
    if k == 0:
        return one(s._order)
    # repeated multiplication keeps the sparse operand on the outer loop
    if s.nonzero_count() * 4 <= len(s._num) or k <= 3:
        result = s
        for _ in range(k - 1):
            result = mul(result, s)
        return result
    result = None
    base = s
    while k:
        if k & 1:
            result = base if result is None else mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def compose_power(s: LaurentSeries, k: int) -> LaurentSeries:
    """Substitute q -> q**k (k >= 1).  The tracked order stays ``order(s)``."""
    if k < 1:
        raise SeriesError("compose_power needs k >= 1")
    if k == 1:
        return s
    hi = s._order if s._order >= 0 else k * (s._order + 1) - 1
    lo = k * s._min
    num = [0] * (hi - lo + 1)
    for i, c in enumerate(s._num):
        e = k * (s._min + i)
        if e > hi:
            break
        num[e - lo] = c
    return LaurentSeries._raw(num, s._den, lo, hi)


def negate_variable(s: LaurentSeries) -> LaurentSeries:
    """Substitute q -> -q."""
    num = [c if (s._min + i) % 2 == 0 else -c for i, c in enumerate(s._num)]
    return LaurentSeries._raw(num, s._den, s._min, s._order)


def coeff(s: LaurentSeries, n: int) -> Fraction:
    return s.coeff(n)


def equal_upto(s: LaurentSeries, t: LaurentSeries, N: int) -> Tuple[bool, Optional[int]]:
    """Compare coefficients for every exponent <= N.

    Returns ``(True, None)`` or ``(False, first_mismatch)``.
    """
    if s._order < N or t._order < N:
        raise SeriesError(
            f"insufficient order: need {N}, have {s._order} and {t._order}")
    for n in range(min(s._min, t._min), N + 1):
        if s._c(n) * t._den != t._c(n) * s._den:
            return False, n
    return True, None
