"""Expansion of generalized Lambert series.

A :class:`LambertSpec` describes the summand

    w(n) q^(Q n(n+1)/2 + A n + B) / (1 + s q^(C n + D))^p

with w(n) = (-1)^n (optional) * chi(n) (optional) * n^weight, summed over
n >= 1 or over all integers.  Denominators with a nonpositive exponent are
rewritten so that every expansion is a power series in a positive power
of q.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb
from typing import Iterable, Optional, Tuple

from .arith import kronecker
from .qfunctions import Monomial, euler_E, theta_f
from .series import LaurentSeries, SeriesError, divide, mul, zero

BILATERAL = "bilateral"
UNILATERAL = "unilateral"


@dataclass(frozen=True)
class Character:
    """A Kronecker character.

    ``kind="disc"`` gives n -> (value / n) and is defined for n >= 1 only;
    ``kind="mod"`` gives n -> (n / value) for every integer n.
    """

    kind: str
    value: int

    def __post_init__(self):
        if self.kind not in ("disc", "mod"):
            raise ValueError("character kind must be 'disc' or 'mod'")
        if self.kind == "mod" and self.value < 1:
            raise ValueError("modulus must be positive")

    def __call__(self, n: int) -> int:
        if self.kind == "mod":
            return kronecker(n, self.value)
        if n < 1:
            raise SeriesError("divergent spec: discriminant character needs n >= 1")
        return kronecker(self.value, n)


def disc(D: int) -> Character:
    return Character("disc", D)


def modulus(m: int) -> Character:
    return Character("mod", m)


@dataclass(frozen=True)
class LambertSpec:
    range: str = UNILATERAL
    num_A: int = 1
    num_B: int = 0
    num_sign_alt: bool = False
    character: Optional[Character] = None
    weight: int = 0
    odd_only: bool = False
    den_C: int = 1
    den_D: int = 0
    den_sign: int = -1
    den_power: int = 1
    num_quad: int = 0

    def __post_init__(self):
        if self.range not in (BILATERAL, UNILATERAL):
            raise ValueError("range must be BILATERAL or UNILATERAL")
        if self.den_sign not in (1, -1):
            raise ValueError("den_sign must be +1 or -1")
        if self.den_power < 1 or self.weight < 0 or self.num_quad < 0:
            raise ValueError("den_power >= 1, weight >= 0 and num_quad >= 0 required")

    def toggled(self) -> "LambertSpec":
        return replace(self, num_sign_alt=not self.num_sign_alt)


def lambert(A=1, B=0, C=1, D=0, sign=-1, *, bilateral=False, alt=False,
            character=None, weight=0, odd_only=False, power=1, quad=0) -> LambertSpec:
    """Compact constructor: q^(An+B) / (1 + sign q^(Cn+D))^power."""
    return LambertSpec(BILATERAL if bilateral else UNILATERAL, A, B, alt, character,
                       weight, odd_only, C, D, sign, power, quad)


def _weight(spec: LambertSpec, n: int) -> int:
    if spec.odd_only and n % 2 == 0:
        return 0
    w = -1 if spec.num_sign_alt and n % 2 else 1
    if spec.character is not None:
        w *= spec.character(n)
    if spec.weight:
        w *= n ** spec.weight
    return w


def _lead_exponent(spec: LambertSpec, n: int) -> int:
    """Lowest exponent contributed by the n-th term after normalization."""
    e_num = spec.num_quad * n * (n + 1) // 2 + spec.num_A * n + spec.num_B
    e = spec.den_C * n + spec.den_D
    return e_num if e >= 0 else e_num - spec.den_power * e


def term_range(spec: LambertSpec, N: int) -> range:
    """Every index n whose term can reach an exponent <= N."""
    C = spec.den_C
    if C < 1:
        raise SeriesError("divergent spec: den_C must be positive")
    Q, A, p = spec.num_quad, spec.num_A, spec.den_power
    if not (Q > 0 or A > 0):
        raise SeriesError("divergent spec: numerator exponent does not grow with n")
    lead = lambda n: _lead_exponent(spec, n)

    # upward: past the point where C n + D > 0 the exponent is convex in n
    n = 1 if spec.range == UNILATERAL else 0
    while not (C * n + spec.den_D > 0 and lead(n) > N and lead(n + 1) > lead(n)):
        n += 1
    hi = n - 1
    if spec.range == UNILATERAL:
        return range(1, hi + 1)
    if not (Q > 0 or A - p * C < 0):
        raise SeriesError("divergent spec: terms do not decay as n -> -infinity")
    n = -1
    while not (C * n + spec.den_D < 0 and lead(n) > N and lead(n - 1) > lead(n)):
        n -= 1
    return range(n + 1, hi + 1)


def _accumulate(spec: LambertSpec, N: int, scale: int, acc: dict):
    """Add scale * 2^p * (expansion of spec) into ``acc`` (exponent -> int)."""
    p = spec.den_power
    s = spec.den_sign
    for n in term_range(spec, N):
        w = _weight(spec, n)
        if not w:
            continue
        w *= scale
        e_num = spec.num_quad * n * (n + 1) // 2 + spec.num_A * n + spec.num_B
        e = spec.den_C * n + spec.den_D
        if e == 0:
            if s == -1:
                raise SeriesError(f"pole at n = {n}: denominator vanishes")
            if e_num <= N:
                acc[e_num] = acc.get(e_num, 0) + w  # 2^p / 2^p
            continue
        lift = 1 << p
        if e < 0:
            # 1/(1 + s x)^p = s^p x^-p / (1 + s x^-1)^p
            e_num -= p * e
            e = -e
            if s == -1 and p % 2:
                w = -w
        j = 0
        while e_num + e * j <= N:
            c = comb(j + p - 1, p - 1)
            if s == 1 and j % 2:
                c = -c
            k = e_num + e * j
            acc[k] = acc.get(k, 0) + w * c * lift
            j += 1


def _to_series(acc: dict, N: int, den: int) -> LaurentSeries:
    lo = min([0] + list(acc))
    num = [0] * (N - lo + 1)
    for k, v in acc.items():
        num[k - lo] += v
    return LaurentSeries._raw(num, den, lo, N)


def expand(spec: LambertSpec, N: int) -> LaurentSeries:
    """Exact expansion of the Lambert sum described by ``spec`` to order N."""
    acc: dict = {}
    _accumulate(spec, N, 1, acc)
    return _to_series(acc, N, 1 << spec.den_power)


def expand_sum(terms: Iterable[Tuple[object, LambertSpec]], constant=0, N: int = 512) -> LaurentSeries:
    """constant + sum of scalar * expand(spec)."""
    total = zero(N) + Fraction(constant)
    for c, spec in terms:
        total = total + expand(spec, N) * Fraction(c)
    return total


def onepsione_pair(k: int, a: Monomial, b: Monomial, N: int) -> Tuple[LaurentSeries, LaurentSeries]:
    """Both sides of the 1psi1 specialization with base q^k.

    lhs = E^3(q^k) f(-ab, -q^k/ab) / (f(-a, -q^k/a) f(-b, -q^k/b))
    rhs = sum over all n of a^n / (1 - b q^(kn)).
    """
    if not 0 < a.exponent < k:
        raise ValueError("precondition: need 0 < exponent(a) < k")
    if not 0 <= b.exponent < k:
        raise ValueError("precondition: need 0 <= exponent(b) < k")
    Q = Monomial(1, k)
    M = N + 2 * k
    num = mul(mul(euler_E(k, M), euler_E(k, M)), euler_E(k, M))
    num = mul(num, theta_f(-(a * b), -(Q / (a * b)), M))
    den = mul(theta_f(-a, -(Q / a), M), theta_f(-b, -(Q / b), M))
    lhs = divide(num, den).truncate(N)
    spec = LambertSpec(BILATERAL, num_A=a.exponent, num_B=0, num_sign_alt=(a.sign == -1),
                       den_C=k, den_D=b.exponent, den_sign=-b.sign)
    return lhs, expand(spec, N)
