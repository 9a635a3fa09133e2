"""Builders for Euler products, Ramanujan theta functions and eta-quotients.

Every builder returns a :class:`LaurentSeries` tracked up to the requested
order ``N``.  Argument monomials are signed integer powers of q.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .series import (LaurentSeries, SeriesError, divide, mul, one,
                     compose_power, zero)


@dataclass(frozen=True)
class Monomial:
    """``sign * q**exponent`` with sign in {+1, -1}."""

    sign: int = 1
    exponent: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("monomial sign must be +1 or -1")

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.sign * other.sign, self.exponent + other.exponent)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.sign * other.sign, self.exponent - other.exponent)

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(self.sign ** (k % 2), self.exponent * k)

    def __neg__(self) -> "Monomial":
        return Monomial(-self.sign, self.exponent)

    def to_series(self, N: int) -> LaurentSeries:
        lo = min(0, self.exponent)
        coeffs = [0] * (N - lo + 1)
        if self.exponent <= N:
            coeffs[self.exponent - lo] = self.sign
        return LaurentSeries(coeffs, lo, N)

    def __str__(self):
        body = "1" if self.exponent == 0 else (
            "q" if self.exponent == 1 else f"q^{self.exponent}")
        return body if self.sign == 1 else "-" + body


def q_(exponent: int = 1, sign: int = 1) -> Monomial:
    """Shorthand constructor: ``q_(3, -1)`` is -q^3."""
    return Monomial(sign, exponent)


def times_monomial(m: Monomial, s: LaurentSeries) -> LaurentSeries:
    s = s.shift(m.exponent)
    return -s if m.sign < 0 else s


def euler_E(k: int, N: int) -> LaurentSeries:
    """(q^k; q^k)_inf via the pentagonal number theorem."""
    if k < 1:
        raise ValueError("E needs a positive argument multiplier")
    coeffs = [0] * (N + 1)
    m = 0
    while True:
        e1 = k * m * (3 * m - 1) // 2
        if e1 > N:
            break
        sign = -1 if m % 2 else 1
        coeffs[e1] += sign
        if m:
            e2 = k * m * (3 * m + 1) // 2
            if e2 <= N:
                coeffs[e2] += sign
        m += 1
    return LaurentSeries(coeffs, 0, N)


def phi(k: int, N: int) -> LaurentSeries:
    """Sum of q^(k n^2) over all integers n."""
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    n = 1
    while k * n * n <= N:
        coeffs[k * n * n] += 2
        n += 1
    return LaurentSeries(coeffs, 0, N)


def psi(k: int, N: int) -> LaurentSeries:
    """Sum of q^(k n(n+1)/2) over n >= 0."""
    coeffs = [0] * (N + 1)
    n = 0
    while k * n * (n + 1) // 2 <= N:
        coeffs[k * n * (n + 1) // 2] += 1
        n += 1
    return LaurentSeries(coeffs, 0, N)


def theta_terms(a: Monomial, b: Monomial, N: int) -> List[Tuple[int, int]]:
    """(sign, exponent) of every term of f(a, b) with exponent <= N."""
    if a.exponent + b.exponent <= 0:
        raise SeriesError("divergent theta: exponents of a and b must sum to a positive number")

    def term(n):
        t1, t0 = n * (n + 1) // 2, n * (n - 1) // 2
        sign = (a.sign ** (t1 % 2)) * (b.sign ** (t0 % 2))
        return sign, a.exponent * t1 + b.exponent * t0

    out = []
    for step in (1, -1):
        n = 0 if step == 1 else -1
        prev = None
        while True:
            sign, e = term(n)
            # the exponent is a convex function of n; stop once it is past N and rising
            if e > N and prev is not None and e > prev:
                break
            if e <= N:
                out.append((sign, e))
            prev = e
            n += step
    return out


def theta_f(a: Monomial, b: Monomial, N: int) -> LaurentSeries:
    """Ramanujan's f(a, b) summed over every term with exponent <= N."""
    terms = theta_terms(a, b, N)
    lo = min(0, min(e for _, e in terms))
    coeffs = [0] * (N - lo + 1)
    for sign, e in terms:
        coeffs[e - lo] += sign
    return LaurentSeries(coeffs, lo, N)


@dataclass(frozen=True)
class EtaQuotientSpec:
    """q^q_power times the product of E(q^k)^e over ``factors``."""

    factors: Tuple[Tuple[int, int], ...]
    q_power: int = 0

    def __post_init__(self):
        factors = tuple((int(k), int(e)) for k, e in self.factors)
        if not factors:
            raise ValueError("eta quotient needs at least one factor")
        ks = [k for k, _ in factors]
        if len(set(ks)) != len(ks) or min(ks) < 1:
            raise ValueError("eta quotient multipliers must be distinct and positive")
        object.__setattr__(self, "factors", factors)

    def __str__(self):
        parts = []
        if self.q_power:
            parts.append("q" if self.q_power == 1 else f"q^{self.q_power}")
        for k, e in self.factors:
            arg = "q" if k == 1 else f"q^{k}"
            parts.append(f"E({arg})" if e == 1 else f"E({arg})^{e}")
        return "*".join(parts)


def eta(*factors: Tuple[int, int], q_power: int = 0) -> EtaQuotientSpec:
    return EtaQuotientSpec(tuple(factors), q_power)


def eta_quotient(spec: EtaQuotientSpec, N: int) -> LaurentSeries:
    """Expand an eta-quotient; each E factor is sparse, so it goes on the outer loop."""
    M = N - spec.q_power
    if M < 0:
        return zero(N)
    result = one(M)
    for k, e in spec.factors:
        if e > 0:
            E = euler_E(k, M)
            for _ in range(e):
                result = mul(result, E)
    for k, e in spec.factors:
        if e < 0:
            E = euler_E(k, M)
            for _ in range(-e):
                result = divide(result, E)
    return result.shift(spec.q_power)


def qpochhammer(a: Monomial, base: Monomial, N: int, n: Optional[int] = None) -> LaurentSeries:
    """(a; base)_n, or the infinite product when ``n`` is None.

    The infinite product needs ``base.exponent >= 1``.
    """
    if n is None:
        if base.exponent < 1:
            raise SeriesError("infinite product needs a base of positive exponent")
    # factors (1 - m) with m = a * base^j; non-positive exponents come first
    factors = []
    j = 0
    m = a
    while (n is None and m.exponent <= 0) or (n is not None and j < n):
        factors.append(m)
        m = m * base
        j += 1
    scale, shift, positive = 1, 0, []
    for f in factors:
        if f.exponent < 0:
            # 1 - s q^e = -s q^e (1 - s q^-e)
            scale *= -f.sign
            shift += f.exponent
            positive.append(Monomial(f.sign, -f.exponent))
        elif f.exponent == 0:
            scale *= 1 - f.sign
        else:
            positive.append(f)
    if n is None:
        while m.exponent <= N - shift:
            positive.append(m)
            m = m * base
    if scale == 0:
        return zero(N)
    M = N - shift
    coeffs = [0] * (M + 1)
    coeffs[0] = scale
    for f in positive:
        e = f.exponent
        for i in range(M, e - 1, -1):
            if coeffs[i - e]:
                coeffs[i] -= f.sign * coeffs[i - e]
    return LaurentSeries(coeffs, 0, M).shift(shift)


def rr_G(N: int) -> LaurentSeries:
    """1 / ((q; q^5)_inf (q^4; q^5)_inf)."""
    den = mul(qpochhammer(q_(1), q_(5), N), qpochhammer(q_(4), q_(5), N))
    return divide(one(N), den)


def rr_H(N: int) -> LaurentSeries:
    """1 / ((q^2; q^5)_inf (q^3; q^5)_inf)."""
    den = mul(qpochhammer(q_(2), q_(5), N), qpochhammer(q_(3), q_(5), N))
    return divide(one(N), den)


def jacobi_product(a: Monomial, b: Monomial, N: int) -> LaurentSeries:
    """Product side (-a; ab)(-b; ab)(ab; ab) of the triple product."""
    ab = a * b
    pad = max(0, -a.exponent) + max(0, -b.exponent)
    M = N + pad
    p = mul(qpochhammer(-a, ab, M), qpochhammer(-b, ab, M))
    return mul(p, qpochhammer(ab, ab, M)).truncate(N)


def addition_split(a: Monomial, b: Monomial, n: int, N: int) -> List[LaurentSeries]:
    """The n summands U_r f(U_{n+r}/U_r, V_{n-r}/U_r), r = 0..n-1, of f(a, b)."""
    if n < 1:
        raise ValueError("split needs n >= 1")
    if a.exponent + b.exponent <= 0:
        raise SeriesError("divergent theta: exponents of a and b must sum to a positive number")

    def U(k):
        return (a ** (k * (k + 1) // 2)) * (b ** (k * (k - 1) // 2))

    def V(k):
        return (a ** (k * (k - 1) // 2)) * (b ** (k * (k + 1) // 2))

    parts = []
    for r in range(n):
        Ur = U(r)
        inner = theta_f(U(n + r) / Ur, V(n - r) / Ur, N - Ur.exponent)
        parts.append(times_monomial(Ur, inner))
    return parts


def product_rule_sides(a: Monomial, b: Monomial, c: Monomial, d: Monomial,
                       N: int) -> Tuple[LaurentSeries, LaurentSeries]:
    """Both sides of f(a,b)f(c,d) = f(ac,bd)f(ad,bc) + a f(b/c, abcd c/b) f(b/d, abcd d/b).

    Requires ab = cd.
    """
    if a * b != c * d:
        raise ValueError("product rule needs ab = cd")
    pad = 4 * (abs(a.exponent) + abs(b.exponent) + abs(c.exponent) + abs(d.exponent))
    M = N + pad
    abcd = a * b * c * d
    lhs = mul(theta_f(a, b, M), theta_f(c, d, M))
    first = mul(theta_f(a * c, b * d, M), theta_f(a * d, b * c, M))
    second = mul(theta_f(b / c, abcd * c / b, M), theta_f(b / d, abcd * d / b, M))
    rhs = first + times_monomial(a, second)
    return lhs.truncate(N), rhs.truncate(N)


def quintuple_sides(a: Monomial, k: int, N: int) -> Tuple[LaurentSeries, LaurentSeries]:
    """Quintuple product with base q^k.

    E(q^k) f(-a^2, -q^k/a^2) / f(-a, -q^k/a)
        = f(-a^3 q^k, -q^(2k)/a^3) + a f(-q^k/a^3, -a^3 q^(2k)).
    """
    Q = q_(k)
    a2, a3 = a ** 2, a ** 3
    pad = 4 * k + 6 * abs(a.exponent)
    M = N + pad
    num = mul(euler_E(k, M), theta_f(-a2, -(Q / a2), M))
    lhs = divide(num, theta_f(-a, -(Q / a), M))
    rhs = theta_f(-(a3 * Q), -(Q * Q / a3), M) + times_monomial(
        a, theta_f(-(Q / a3), -(a3 * Q * Q), M))
    return lhs.truncate(N), rhs.truncate(N)


def finite_product_E(k: int, N: int) -> LaurentSeries:
    """Oracle for E(q^k): multiply out the factors (1 - q^(kn)) directly."""
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    n = 1
    while k * n <= N:
        e = k * n
        for i in range(N, e - 1, -1):
            coeffs[i] -= coeffs[i - e]
        n += 1
    return LaurentSeries(coeffs, 0, N)


def rr_sum_side(N: int, shift: int = 0) -> LaurentSeries:
    """Oracle: sum of q^(n^2 + shift*n)/(q;q)_n, term by term."""
    total = zero(N)
    n = 0
    while n * n + shift * n <= N:
        term = divide(one(N).shift(0), qpochhammer(q_(1), q_(1), N, n))
        total = total + term.shift(n * n + shift * n).truncate(N)
        n += 1
    return total
