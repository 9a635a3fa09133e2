"""Closed-form representation counts and coefficient formulas.

Each formula works from the prime factorization of n alone, so it is
independent of both the series expansions and lattice enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Callable, Dict

from .arith import (PrimeClassification, classify, cubic_residue_2, factorize,
                    is_prime, kronecker)


@dataclass(frozen=True)
class FormulaResult:
    n: int
    value: int
    scheme: PrimeClassification


def _even_part(exps) -> int:
    """Product of (1 + (-1)^w)/2: 1 if every exponent is even, else 0."""
    return 0 if any(w % 2 for w in exps) else 1


def _tau(exps) -> int:
    return prod(1 + v for v in exps)


def _pos(n: int):
    if n < 1:
        raise ValueError("formula needs n >= 1")


def r2(n: int) -> int:
    """Representations by x^2 + y^2."""
    _pos(n)
    c = classify("MOD4", n)
    return 4 * _tau(c.group("p")) * _even_part(c.group("q"))


def _mod20_core(n: int):
    c = classify("MOD20", n)
    body = _tau(c.group("p") + c.group("r")) * _even_part(c.group("q"))
    return (-1) ** (c.alpha + c.t), body


def rep_1_0_5(n: int) -> int:
    _pos(n)
    sign, body = _mod20_core(n)
    return (1 + sign) * body


def rep_2_2_3(n: int) -> int:
    _pos(n)
    sign, body = _mod20_core(n)
    return (1 - sign) * body


def _mod24_core(n: int):
    c = classify("MOD24", n)
    body = _tau(c.group("p") + c.group("r")) * _even_part(c.group("q"))
    return (-1) ** (c.alpha + c["b"] + c.t), body


def rep_1_0_6(n: int) -> int:
    _pos(n)
    sign, body = _mod24_core(n)
    return (1 + sign) * body


def rep_2_0_3(n: int) -> int:
    _pos(n)
    sign, body = _mod24_core(n)
    return (1 - sign) * body


def _mod15_core(n: int):
    c = classify("MOD15", n)
    body = abs(c.alpha - 1) * _tau(c.group("p") + c.group("r")) * _even_part(c.group("q"))
    return (-1) ** (c.alpha + c["b"] + c["c"] + c.t), body


def rep_1_0_15(n: int) -> int:
    _pos(n)
    sign, body = _mod15_core(n)
    return (1 + sign) * body


def rep_3_0_5(n: int) -> int:
    _pos(n)
    sign, body = _mod15_core(n)
    return (1 - sign) * body


def phi_phi3_coeff(n: int) -> int:
    """Coefficient of q^n in phi(q) phi(q^3)."""
    _pos(n)
    c = classify("CUBIC27", n)
    a = c.alpha
    lead = (3 - 2 * (a == 0)) * (1 + (-1) ** a)
    return lead * _tau(c.group("p") + c.group("r")) * _even_part(c.group("q"))


def eta_6_18_coeff(n: int) -> int:
    """Coefficient of q^n in q E(q^6) E(q^18)."""
    _pos(n)
    c = classify("CUBIC27", n)
    if c.alpha or c["beta"]:
        return 0
    return (_tau(c.group("p")) * prod(kronecker(1 + u, 3) for u in c.group("r"))
            * _even_part(c.group("q")))


def _cubic_split(n: int):
    c = classify("CUBIC27", n)
    v = _tau(c.group("p"))
    tu = _tau(c.group("r"))
    ku = prod(kronecker(1 + u, 3) for u in c.group("r"))
    return v, tu, ku, _even_part(c.group("q")), c


def _rep_27_other(n: int) -> int:
    c = classify("CUBIC27", n)
    a, beta = c.alpha, c["beta"]
    body = _tau(c.group("p") + c.group("r")) * _even_part(c.group("q"))
    if beta >= 2:
        return (3 - 2 * (a == 0)) * (1 + (-1) ** a) * body
    if beta == 0 and a > 0:
        return (1 + (-1) ** a) * body
    return 0


def rep_1_0_27(n: int) -> int:
    _pos(n)
    if n % 6 != 1:
        return _rep_27_other(n)
    v, tu, ku, even, _ = _cubic_split(n)
    value = Fraction(2, 3) * v * (tu + 2 * ku) * even
    return _as_int(value)


def rep_4_2_7(n: int) -> int:
    _pos(n)
    if n % 6 != 1:
        return _rep_27_other(n)
    v, tu, ku, even, _ = _cubic_split(n)
    value = Fraction(2, 3) * v * (tu - ku) * even
    return _as_int(value)


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"formula produced a non-integer value {x}")
    return int(x)


def _sigma_twisted(c: PrimeClassification) -> int:
    """Product over p = +-1 (mod 5) of (1 - p^(v+1))/(1 - p) and over odd
    q = +-2 (mod 5) of (1 - (-q)^(w+1))/(1 + q)."""
    out = 1
    for p, v in factorize(c.n):
        lab = c.labels[p]
        if lab == "p":
            out *= (p ** (v + 1) - 1) // (p - 1)
        elif lab == "q":
            out *= (1 - (-p) ** (v + 1)) // (1 + p)
    return out


def rep_quat(which: str, n: int) -> int:
    """Quaternary coefficients.

    A: phi(q) phi^3(q^5); B: phi^3(q) phi(q^5); C: 4q psi^3(q) psi(q^5);
    D: 4q^2 psi(q) psi^3(q^5).
    """
    _pos(n)
    c = classify("QUINT", n)
    g, d, t = c["g"], c["d"], c.t
    s = _sigma_twisted(c)
    sgn = (-1) ** (g + t)
    if which == "A":
        return _as_int((-1) ** (n - 1) * (1 + 5 ** d * sgn) * Fraction(5 + (-2) ** (g + 1), 3) * s)
    if which == "B":
        return _as_int((-1) ** (n - 1) * (1 + 5 ** (d + 1) * sgn) * Fraction(5 + (-2) ** (g + 1), 3) * s)
    if which == "C":
        return (-2) ** g * (-1 + 5 ** (d + 1) * sgn) * s
    if which == "D":
        return (-2) ** g * (-1 + 5 ** d * sgn) * s
    raise ValueError(f"unknown quaternary family {which!r}")


def eta5_coeff(n: int) -> int:
    """Coefficient of q^n in E^5(q)/E(q^5)."""
    if n == 0:
        return 1
    _pos(n)
    return -5 * _twisted_all(n, sign_q=False)


def eta5_dual_coeff(n: int) -> int:
    """Coefficient of q^n in q E^5(q^5)/E(q)."""
    _pos(n)
    return 5 ** factorize(n).exponent(5) * _twisted_all(n, sign_q=True)


def _twisted_all(n: int, sign_q: bool) -> int:
    # here 2 counts among the primes = +-2 (mod 5)
    out = 1
    for p, v in factorize(n):
        if p == 5:
            continue
        if p % 5 in (1, 4):
            out *= (p ** (v + 1) - 1) // (p - 1)
        else:
            out *= (1 - (-p) ** (v + 1)) // (1 + p) * ((-1) ** v if sign_q else 1)
    return out


def thm81_coeff(n: int) -> int:
    """Coefficient of q^n in q E^4(q^16) / (E(q^32) E(q^8))."""
    _pos(n)
    c = classify("OCTIC81", n)
    if c.alpha:
        return 0
    out = 1
    for u in c.group("p"):
        # primes = 5 (mod 8) contribute only at even exponents, with sign (-1)^(u/2)
        out *= 0 if u % 2 else (-1) ** (u // 2)
    out *= _tau(c.group("q"))
    for w in c.group("P"):
        out *= (-1) ** w * (1 + w)
    out *= _even_part(c.group("Q"))
    return out


def williams_atilde(n: int) -> int:
    _pos(n)
    value = 2 * kronecker(-60, n)
    if n % 2 == 0:
        value -= 2 * kronecker(-60, n // 2)
    if n % 4 == 0:
        value += 2 * kronecker(-15, n // 4)
    return value


# -- prime power tables -----------------------------------------------------

def _need_prime(p: int, alpha: int):
    if not is_prime(p) or alpha < 0:
        raise ValueError("need a prime p and alpha >= 0")


def _b315(p, a):
    if p in (2, 5):
        return 1
    if p % 20 in (1, 3, 7, 9):
        return 1 + a
    return (1 + (-1) ** a) // 2


def _c316(p, a):
    if p == 2:
        return (-1) ** a
    if p == 5:
        return 1
    r = p % 20
    if r in (1, 9):
        return 1 + a
    if r in (3, 7):
        return (-1) ** a * (1 + a)
    return (1 + (-1) ** a) // 2


def _c440(p, a):
    if p in (2, 3):
        return 1
    if p % 24 in (1, 5, 7, 11):
        return 1 + a
    return (1 + (-1) ** a) // 2


def _d441(p, a):
    if p in (2, 3):
        return (-1) ** a
    r = p % 24
    if r in (1, 7):
        return 1 + a
    if r in (5, 11):
        return (-1) ** a * (1 + a)
    return (1 + (-1) ** a) // 2


def _c525(p, a):
    if p == 2:
        return abs(a - 1)
    if p in (3, 5):
        return 1
    if p % 15 in (1, 2, 4, 8):
        return 1 + a
    return (1 + (-1) ** a) // 2


def _d526(p, a):
    if p == 2:
        return (-1) ** a * abs(a - 1)
    if p in (3, 5):
        return (-1) ** a
    r = p % 15
    if r in (1, 4):
        return 1 + a
    if r in (2, 8):
        return (-1) ** a * (1 + a)
    return (1 + (-1) ** a) // 2


def _d618(p, a):
    if a == 0:
        return 1
    if p in (2, 3):
        return 0
    if p % 3 == 1:
        return a + 1 if cubic_residue_2(p) else kronecker(a + 1, 3)
    return (1 + (-1) ** a) // 2


PRIME_POWER_TABLES: Dict[str, Callable[[int, int], int]] = {
    "B315": _b315, "C316": _c316, "C440": _c440, "D441": _d441,
    "C525": _c525, "D526": _d526, "D618": _d618,
}

# divisor-sum kernel (or series) each table describes
TABLE_KERNELS = {"B315": "K1", "C316": "K2", "C440": "K3", "D441": "K4",
                 "C525": "K5", "D526": "K6"}


def coeff_prime_power(family: str, p: int, alpha: int) -> int:
    _need_prime(p, alpha)
    try:
        return PRIME_POWER_TABLES[family](p, alpha)
    except KeyError:
        raise ValueError(f"unknown table {family!r}") from None


# -- named access ------------------------------------------------------------

FORMULAS: Dict[str, Callable[[int], int]] = {
    "r2": r2,
    "rep_1_0_5": rep_1_0_5,
    "rep_2_2_3": rep_2_2_3,
    "rep_1_0_6": rep_1_0_6,
    "rep_2_0_3": rep_2_0_3,
    "rep_1_0_15": rep_1_0_15,
    "rep_3_0_5": rep_3_0_5,
    "rep_1_0_27": rep_1_0_27,
    "rep_4_2_7": rep_4_2_7,
    "rep_quat_A": lambda n: rep_quat("A", n),
    "rep_quat_B": lambda n: rep_quat("B", n),
    "rep_quat_C": lambda n: rep_quat("C", n),
    "rep_quat_D": lambda n: rep_quat("D", n),
    "thm81_coeff": thm81_coeff,
    "williams_atilde": williams_atilde,
    "phi_phi3_coeff": phi_phi3_coeff,
    "eta_6_18_coeff": eta_6_18_coeff,
    "eta5_coeff": eta5_coeff,
    "eta5_dual_coeff": eta5_dual_coeff,
}

_SCHEME_OF = {
    "r2": "MOD4", "rep_1_0_5": "MOD20", "rep_2_2_3": "MOD20", "rep_1_0_6": "MOD24",
    "rep_2_0_3": "MOD24", "rep_1_0_15": "MOD15", "rep_3_0_5": "MOD15",
    "rep_1_0_27": "CUBIC27", "rep_4_2_7": "CUBIC27", "phi_phi3_coeff": "CUBIC27",
    "eta_6_18_coeff": "CUBIC27", "thm81_coeff": "OCTIC81",
}


def evaluate(name: str, n: int) -> FormulaResult:
    """Evaluate the named formula at n, with the classification it used."""
    try:
        func = FORMULAS[name]
    except KeyError:
        raise ValueError(f"unknown formula {name!r}; choose from {sorted(FORMULAS)}") from None
    value = func(n)
    return FormulaResult(n, value, classify(_SCHEME_OF.get(name, "QUINT"), n))
