"""Per-evaluation build context.

A :class:`BuildContext` fixes a working order and memoizes the basic
building blocks (E, phi, psi, theta values, eta-quotients) for the
lifetime of one verification.  Nothing is shared between contexts.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Iterable, Tuple

from . import arith, lambert, qfunctions, repcount
from .qfunctions import Monomial, EtaQuotientSpec
from .series import LaurentSeries, compose_power, monomial, negate_variable, zero


def m(exponent: int, sign: int = 1) -> Monomial:
    return Monomial(sign, exponent)


class BuildContext:
    def __init__(self, order: int):
        self.M = order
        self._cache: Dict[tuple, LaurentSeries] = {}

    def _memo(self, key, make: Callable[[], LaurentSeries]) -> LaurentSeries:
        s = self._cache.get(key)
        if s is None:
            s = make()
            self._cache[key] = s
        return s

    def _arg(self, name: str, base: Callable[[int], LaurentSeries], k: int, sign: int):
        """base(q) evaluated at sign * q^k; built from the memoized base(q)."""
        key = (name, k, sign)
        if key in self._cache:
            return self._cache[key]
        s = self._memo((name, 1, 1), lambda: base(self.M))
        if sign == -1:
            s = negate_variable(s)
        if k > 1:
            s = compose_power(s, k)
        self._cache[key] = s
        return s

    # -- named functions ------------------------------------------------

    def E(self, k: int = 1, sign: int = 1) -> LaurentSeries:
        return self._arg("E", lambda M: qfunctions.euler_E(1, M), k, sign)

    def phi(self, k: int = 1, sign: int = 1) -> LaurentSeries:
        return self._arg("phi", lambda M: qfunctions.phi(1, M), k, sign)

    def psi(self, k: int = 1, sign: int = 1) -> LaurentSeries:
        return self._arg("psi", lambda M: qfunctions.psi(1, M), k, sign)

    def G(self, k: int = 1, sign: int = 1) -> LaurentSeries:
        return self._arg("G", qfunctions.rr_G, k, sign)

    def H(self, k: int = 1, sign: int = 1) -> LaurentSeries:
        return self._arg("H", qfunctions.rr_H, k, sign)

    def f(self, a: Tuple[int, int], b: Tuple[int, int]) -> LaurentSeries:
        """theta f(sa q^ea, sb q^eb); arguments are (exponent, sign) pairs."""
        return self._memo(("f", a, b), lambda: qfunctions.theta_f(m(*a), m(*b), self.M))

    def eta(self, *factors, q: int = 0) -> LaurentSeries:
        spec = EtaQuotientSpec(tuple(factors), q)
        return self._memo(("eta", spec), lambda: qfunctions.eta_quotient(spec, self.M))

    def qpoch(self, a: Monomial, base: Monomial) -> LaurentSeries:
        return qfunctions.qpochhammer(a, base, self.M)

    # -- Lambert and divisor sums ----------------------------------------

    def lam(self, spec: lambert.LambertSpec) -> LaurentSeries:
        return self._memo(("lam", spec), lambda: lambert.expand(spec, self.M))

    def lsum(self, terms: Iterable[Tuple[object, lambert.LambertSpec]], constant=0) -> LaurentSeries:
        total = self.const(constant)
        for c, spec in terms:
            total = total + self.lam(spec) * Fraction(c)
        return total

    def divisor(self, kernel: str, constant: int = 0, scale: int = 1) -> LaurentSeries:
        return self._memo(("div", kernel, constant, scale),
                          lambda: arith.divisor_series(kernel, self.M, constant, scale))

    # -- lattice counts ---------------------------------------------------

    def bqf(self, a: int, b: int, c: int) -> LaurentSeries:
        return self._memo(("bqf", a, b, c),
                          lambda: repcount.bqf_theta(repcount.BinaryForm(a, b, c), self.M))

    # -- scalars and monomials -------------------------------------------

    def const(self, c) -> LaurentSeries:
        return zero(self.M) + Fraction(c)

    def q(self, e: int = 1, c=1) -> LaurentSeries:
        return monomial(e, self.M, c)

    def fn(self, func: Callable[[int], int], constant=0, start: int = 1) -> LaurentSeries:
        """constant + sum_{n >= start} func(n) q^n."""
        coeffs = [0] * (self.M + 1)
        coeffs[0] = constant
        for n in range(start, self.M + 1):
            coeffs[n] += func(n)
        return LaurentSeries(coeffs, 0, self.M)

    def ones(self) -> LaurentSeries:
        return LaurentSeries([1] * (self.M + 1), 0, self.M)
