"""Integer arithmetic: Kronecker symbols, factorization, residue classes,
divisor-sum coefficient kernels, multiplicativity checks and U_2."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt
from typing import Callable, Dict, List, Tuple

from .series import LaurentSeries, SeriesError


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: Tuple[Tuple[int, int], ...]

    def __iter__(self):
        return iter(self.factors)

    def exponent(self, p: int) -> int:
        for prime, e in self.factors:
            if prime == p:
                return e
        return 0

    def divisors(self) -> List[int]:
        divs = [1]
        for p, e in self.factors:
            divs = [d * p ** i for d in divs for i in range(e + 1)]
        return sorted(divs)


def factorize(n: int) -> Factorization:
    """Trial division; fine for n up to about 10**12."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    factors = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    p, step = 5, 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += step
        step = 6 - step
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    p = 5
    while p * p <= n:
        if n % p == 0 or n % (p + 2) == 0:
            return False
        p += 6
    return True


def primes_upto(n: int) -> List[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def _legendre(n: int, p: int) -> int:
    r = n % p
    if r == 0:
        return 0
    return 1 if pow(r, (p - 1) // 2, p) == 1 else -1


def _symbol_at_prime(n: int, p: int) -> int:
    if p == 2:
        if n % 2 == 0:
            return 0
        return 1 if n % 8 in (1, 7) else -1
    return _legendre(n, p)


def kronecker(n: int, m: int) -> int:
    """Kronecker symbol (n/m) for positive m."""
    if m < 1:
        raise ValueError("kronecker needs a positive lower argument")
    result = 1
    for p, e in factorize(m):
        s = _symbol_at_prime(n, p)
        if s == 0:
            return 0
        if e % 2:
            result *= s
    return result


def gamma_odd(n: int) -> int:
    """1 for odd n, 0 for even n."""
    return n % 2


def cubic_residue_2(p: int) -> bool:
    """True iff 2 is a cubic residue modulo the prime p = 1 (mod 3)."""
    if p % 3 != 1 or not is_prime(p):
        raise ValueError(f"inapplicable prime {p}: need a prime congruent to 1 mod 3")
    return pow(2, (p - 1) // 3, p) == 1


def quartic_class_2(p: int) -> int:
    """2^((p-1)/4) mod p as +1 or -1, for primes p = 1 (mod 8)."""
    if p % 8 != 1 or not is_prime(p):
        raise ValueError(f"inapplicable prime {p}: need a prime congruent to 1 mod 8")
    return 1 if pow(2, (p - 1) // 4, p) == 1 else -1


# -- classification ---------------------------------------------------------

SCHEMES = ("MOD4", "MOD20", "MOD24", "MOD15", "CUBIC27", "QUINT", "OCTIC81")


@dataclass
class PrimeClassification:
    """Per-prime labels and the counters derived from them.

    ``labels`` maps each prime factor to a label string; ``exponents``
    groups the exponents by label.  ``alpha`` is the exponent of 2 and
    ``t`` the scheme-specific count of primes (with multiplicity).
    Scheme-specific extras (beta, b, c, d, g) live in ``counters``.
    """

    scheme: str
    n: int
    labels: Dict[int, str] = field(default_factory=dict)
    exponents: Dict[str, List[int]] = field(default_factory=dict)
    alpha: int = 0
    t: int = 0
    counters: Dict[str, int] = field(default_factory=dict)

    def group(self, label: str) -> List[int]:
        return self.exponents.get(label, [])

    def __getitem__(self, key: str) -> int:
        if key == "alpha":
            return self.alpha
        if key == "t":
            return self.t
        return self.counters.get(key, 0)


def _label(scheme: str, p: int) -> str:
    if scheme == "MOD4":
        if p == 2:
            return "two"
        return "p" if p % 4 == 1 else "q"
    if scheme == "MOD20":
        # p: residues 1, 9 (mod 20); r: residues 3, 7; P: 1, 3, 7, 9 combined
        # q: residues 11, 13, 17, 19
        if p in (2, 5):
            return {2: "two", 5: "five"}[p]
        r = p % 20
        if r in (1, 9):
            return "p"
        if r in (3, 7):
            return "r"
        return "q"
    if scheme == "MOD24":
        if p in (2, 3):
            return {2: "two", 3: "three"}[p]
        r = p % 24
        if r in (1, 7):
            return "p"
        if r in (5, 11):
            return "r"
        return "q"
    if scheme == "MOD15":
        if p in (2, 3, 5):
            return {2: "two", 3: "three", 5: "five"}[p]
        r = p % 15
        if r in (1, 4):
            return "p"
        if r in (2, 8):
            return "r"
        return "q"
    if scheme == "CUBIC27":
        if p in (2, 3):
            return {2: "two", 3: "three"}[p]
        if p % 3 == 2:
            return "q"
        return "p" if cubic_residue_2(p) else "r"
    if scheme == "QUINT":
        if p in (2, 5):
            return {2: "two", 5: "five"}[p]
        return "p" if p % 5 in (1, 4) else "q"
    if scheme == "OCTIC81":
        if p == 2:
            return "two"
        if p % 4 == 3:
            return "Q"
        if p % 8 == 5:
            return "p"
        return "q" if quartic_class_2(p) == 1 else "P"
    raise ValueError(f"unknown classification scheme {scheme!r}")


def classify(scheme: str, f) -> PrimeClassification:
    """Label every prime factor of ``f`` (a Factorization or an int).

    Labels per scheme (``two``, ``three``, ``five`` name the small primes):

    * MOD4: p = 1 (mod 4) is "p", p = 3 (mod 4) is "q".
    * MOD20: 1, 9 -> "p"; 3, 7 -> "r"; 11, 13, 17, 19 -> "q"; t counts "r".
    * MOD24: 1, 7 -> "p"; 5, 11 -> "r"; others -> "q"; t counts "r";
      counter b is the exponent of 3.
    * MOD15: 1, 4 -> "p"; 2, 8 -> "r"; others -> "q"; t counts "r";
      counters b, c are the exponents of 3 and 5.
    * CUBIC27: p = 2 (mod 3) -> "q"; p = 1 (mod 3) -> "p" when 2 is a cubic
      residue, else "r"; counter beta is the exponent of 3.
    * QUINT: p = +-1 (mod 5) -> "p", other odd p != 5 -> "q"; g is the
      exponent of 2, d the exponent of 5, t counts "q".
    * OCTIC81: p = 3 (mod 4) -> "Q"; p = 5 (mod 8) -> "p"; p = 1 (mod 8)
      -> "q" when 2^((p-1)/4) = 1 (mod p), else "P".
    """
    if isinstance(f, int):
        f = factorize(f)
    c = PrimeClassification(scheme=scheme, n=f.n)
    for p, e in f:
        lab = _label(scheme, p)
        c.labels[p] = lab
        c.exponents.setdefault(lab, []).append(e)
    c.alpha = f.exponent(2)
    if scheme in ("MOD20", "MOD24", "MOD15"):
        c.t = sum(c.group("r"))
    elif scheme == "QUINT":
        c.t = sum(c.group("q"))
    if scheme == "MOD20":
        c.counters["b"] = f.exponent(5)
    elif scheme == "MOD24":
        c.counters["b"] = f.exponent(3)
    elif scheme == "MOD15":
        c.counters["b"] = f.exponent(3)
        c.counters["c"] = f.exponent(5)
    elif scheme == "CUBIC27":
        c.counters["beta"] = f.exponent(3)
    elif scheme == "QUINT":
        c.counters["g"] = f.exponent(2)
        c.counters["d"] = f.exponent(5)
    return c


# -- divisor sums -----------------------------------------------------------

def _sgn_pair(n: int, d: int) -> int:
    return -1 if (n + d) % 2 else 1


KERNELS: Dict[str, Callable[[int, int], int]] = {
    "K1": lambda n, d: kronecker(-20, d),
    "K2": lambda n, d: kronecker(-4, d) * kronecker(n // d, 5),
    "K3": lambda n, d: kronecker(-24, d),
    "K4": lambda n, d: kronecker(d, 2) * kronecker(n // d, 3),
    "K5": lambda n, d: _sgn_pair(n, d) * kronecker(-15, n // d),
    "K6": lambda n, d: _sgn_pair(n, d) * kronecker(-3, d) * kronecker(5, n // d),
    "K7": lambda n, d: kronecker(d, 5) * d,
    "K8": lambda n, d: kronecker(-4, d),
    "K9": lambda n, d: _sgn_pair(n, d) * d * kronecker(d, 5),
    "K10": lambda n, d: _sgn_pair(n, d) * d * kronecker(n // d, 5),
    "K11": lambda n, d: d * kronecker(d, 5) * gamma_odd(n // d),
    "K12": lambda n, d: gamma_odd(d) * kronecker(d, 5) * (n // d),
    "K13": lambda n, d: 2 * kronecker(d, 3) + (4 * kronecker(d, 3) if n % (4 * d) == 0 else 0),
    "K14": lambda n, d: _sgn_pair(n, d) * d * d * kronecker(d, 3),
    "K15": lambda n, d: _sgn_pair(n, d) * d * d * kronecker(n // d, 3),
}
"""Divisor-sum kernels (n, d) -> term; the coefficient is the sum over d | n.

K13 is the combined kernel of the x^2 + 27y^2 Lambert form: 2(d/3) for
every divisor plus 4(d/3) when 4d divides n.
"""


def divisor_sum(n: int, kernel: str) -> int:
    if n < 1:
        raise ValueError("divisor_sum needs n >= 1")
    try:
        k = KERNELS[kernel]
    except KeyError:
        raise ValueError(f"unknown kernel {kernel!r}") from None
    return sum(k(n, d) for d in factorize(n).divisors())


def divisor_series(kernel: str, N: int, constant: int = 0, scale: int = 1) -> LaurentSeries:
    """constant + scale * sum_{n>=1} divisor_sum(n, kernel) q^n, to order N.

    Built by a sieve over (d, multiple) pairs rather than by factoring
    every n.
    """
    k = KERNELS[kernel]
    coeffs = [0] * (N + 1)
    for d in range(1, N + 1):
        for n in range(d, N + 1, d):
            coeffs[n] += k(n, d)
    coeffs = [scale * c for c in coeffs]
    coeffs[0] = constant
    return LaurentSeries(coeffs, 0, N)


def hecke_u2(s: LaurentSeries, N: int = None) -> LaurentSeries:
    """U_2: the coefficient of q^n in the result is that of q^(2n) in s."""
    if N is None:
        N = s.order // 2
    if s.order < 2 * N:
        raise SeriesError(f"insufficient order: U_2 to order {N} needs input order {2 * N}")
    lo = -((-s.min_exp) // 2)  # ceil(min_exp / 2)
    lo = min(lo, 0)
    return LaurentSeries([s.coeff(2 * n) if 2 * n >= s.min_exp else 0
                          for n in range(lo, N + 1)], lo, N)


def check_multiplicative(s: LaurentSeries, N: int) -> List[Tuple[int, int]]:
    """Coprime pairs (m, n), 1 < m < n, mn <= N, with a(mn) != a(m) a(n)."""
    if s.order < N:
        raise SeriesError(f"insufficient order: need {N}, have {s.order}")
    if s.min_exp > 1 or s.coeff(1) != 1:
        raise ValueError("not normalized: coefficient of q^1 must be 1")
    a = [s.coeff(i) if i >= s.min_exp else 0 for i in range(0, N + 1)]
    bad = []
    for m in range(2, isqrt(N) + 1):
        for n in range(m + 1, N // m + 1):
            if a[m * n] != a[m] * a[n] and gcd(m, n) == 1:
                bad.append((m, n))
    return bad

