"""Identity catalog and verification engine.

Each :class:`IdentityEntry` pairs two series builders.  A builder takes a
:class:`~qforms.context.BuildContext` and returns a series; verification
builds both sides a little past the requested order and compares them
coefficient by coefficient with :func:`~qforms.series.equal_upto`.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from . import arith, closedform, qfunctions, repcount
from .context import BuildContext, m
from .lambert import disc, lambert as L, modulus
from .series import LaurentSeries, SeriesError, equal_upto, negate_variable

MUST_PASS = "MUST_PASS"
EXPLORATORY = "EXPLORATORY"

Builder = Callable[[BuildContext], LaurentSeries]


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    paper_ref: str
    lhs_builder: Builder
    rhs_builder: Builder
    expectation: str = MUST_PASS
    default_order: int = 512
    integral: bool = True
    pad: int = 16

    def context(self, N: int) -> BuildContext:
        return BuildContext(N + self.pad)

    def lhs(self, N: int) -> LaurentSeries:
        return self.lhs_builder(self.context(N))

    def rhs(self, N: int) -> LaurentSeries:
        return self.rhs_builder(self.context(N))


@dataclass
class VerificationReport:
    id: str
    paper_ref: str
    status: str
    order: int
    first_mismatch: Optional[int] = None
    lhs_coeff: Optional[Fraction] = None
    rhs_coeff: Optional[Fraction] = None
    elapsed_ms: int = 0
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status in ("pass", "exploratory-pass")

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "paper_ref": self.paper_ref,
            "status": self.status,
            "first_mismatch": self.first_mismatch,
            "lhs_coeff": _rational_json(self.lhs_coeff),
            "rhs_coeff": _rational_json(self.rhs_coeff),
            "elapsed_ms": self.elapsed_ms,
        }


def _rational_json(x: Optional[Fraction]):
    if x is None:
        return None
    return x.numerator if x.denominator == 1 else str(x)


# -- shorthand used by the catalog ------------------------------------------

CHI5 = modulus(5)          # (n/5)
CHI3 = modulus(3)          # (n/3)


def bil(A, B, C, D, sign=1, **kw):
    return L(A, B, C, D, sign, bilateral=True, **kw)


def uni(A, B, C, D, sign=-1, **kw):
    return L(A, B, C, D, sign, **kw)


def _phi_phi5_parts(c: BuildContext):
    """(1 + sum (-20/n) q^n/(1-q^n), sum (n/5) q^n/(1+q^2n))."""
    return (c.lsum([(1, uni(1, 0, 1, 0, character=disc(-20)))], 1),
            c.lam(uni(1, 0, 2, 0, 1, character=CHI5)))


def _P4(c):
    return c.eta((2, 1), (3, 1), (8, 1), (12, 1), (1, -1), (24, -1))


def _Q4(c):
    return c.eta((1, 1), (4, 1), (6, 1), (24, 1), (3, -1), (8, -1), q=1)


def _P4_bil(c):
    return c.lsum([(1, bil(1, 0, 12, 0)), (1, bil(5, 0, 12, 0))])


def _Q4_bil(c):
    return c.lsum([(1, bil(3, 1, 12, 4)), (-1, bil(9, 3, 12, 4))])


def _c4_sum(c):
    return c.lsum([(1, uni(1, 0, 1, 0, character=disc(-6)))], 1)


def _d4_sum(c):
    return c.lsum([(1, uni(1, 0, 4, 0, 1, character=CHI3)),
                   (-1, uni(3, 0, 4, 0, 1, character=CHI3))])


def _P5(c):
    return c.eta((1, 1), (6, 1), (10, 1), (15, 1), (2, -1), (30, -1))


def _Q5(c):
    return c.eta((2, 1), (3, 1), (5, 1), (30, 1), (6, -1), (10, -1), q=1)


def _P5_sum(c):
    return c.lsum([(-1, uni(1, 0, 1, 0, 1, character=disc(-15)))], 1)


def _Q5_sum(c):
    return c.lsum([(1, uni(1, 0, 3, 0, 1, character=disc(5))),
                   (1, uni(2, 0, 3, 0, 1, character=disc(5)))])


def _A5(c):
    return c.eta((1, 5), (5, -1))


def _B5(c):
    return c.eta((2, 5), (10, -1))


def _C5(c):
    return c.eta((5, 5), (1, -1), q=1)


def _D5(c):
    return c.eta((10, 5), (2, -1), q=2)


def _sum_729(c):
    # sum (n/5) n q^n / (1 - (-q)^n), via q -> -q of an alternating sum
    return negate_variable(c.lam(uni(1, 0, 1, 0, alt=True, character=CHI5, weight=1)))


def _sum_733(c):
    # -sum (n/5) (-q)^n / (1 + (-q)^n)^2
    return -negate_variable(c.lam(uni(1, 0, 1, 0, 1, character=CHI5, power=2)))


def _sum_737(c):
    return c.lam(uni(1, 0, 2, 0, character=CHI5, weight=1))


def _sum_741(c):
    return c.lam(uni(1, 0, 1, 0, character=CHI5, odd_only=True, power=2))


def _E_neg_ratio(c, top, bottom, power=5):
    """E^power(-q^top) / E(-q^bottom)."""
    return c.E(top, -1) ** power / c.E(bottom, -1)


def _indicator(c, s, pred):
    return c.fn(lambda n: 1 if pred(s.coeff(n)) else 0, 1 if pred(s.coeff(0)) else 0)


def _multiplicative_rebuild(c, s):
    """Series whose q^n coefficient is prod d(p^a) over n = prod p^a, with
    d(p^a) from the Hecke recursion seeded by the coefficients d(p) of s."""
    cache: Dict[tuple, int] = {}

    def d_pp(p, a):
        if a == 0:
            return 1
        if a == 1:
            return int(s.coeff(p))
        key = (p, a)
        if key not in cache:
            cache[key] = d_pp(p, 1) * d_pp(p, a - 1) - arith.kronecker(-108, p) * d_pp(p, a - 2)
        return cache[key]

    def d(n):
        out = 1
        for p, a in arith.factorize(n).factors:
            out *= d_pp(p, a)
        return out

    return c.fn(d)


def _cor72_indicator(c):
    A = c.phi() * c.phi(5) ** 3
    B = c.phi() ** 3 * c.phi(5)
    C = c.psi() ** 3 * c.psi(5)
    D = c.psi() * c.psi(5) ** 3

    def ok(n):
        a, b, cc, d = A.coeff(n), B.coeff(n), C.coeff(n), D.coeff(n)
        return (b > 0 and cc > 0 and (a == 0) == (n % 5 in (2, 3))
                and (d > 0) == (n % 5 not in (2, 4)))

    return c.fn(lambda n: 1 if ok(n) else 0, 1 if ok(0) else 0)


def _hecke_lhs(c):
    big = BuildContext(2 * c.M)
    s = -negate_variable(_Q5(big))
    return arith.hecke_u2(s, c.M)


def _halving_lhs(c):
    big = BuildContext(2 * c.M)
    return arith.hecke_u2(big.bqf(1, 0, 5), c.M)


# -- the catalog -----------------------------------------------------------

_ENTRIES: List[IdentityEntry] = []


def _add(id, ref, lhs, rhs, **kw):
    _ENTRIES.append(IdentityEntry(id, ref, lhs, rhs, **kw))


# sums of two squares
_add("sum2sq.lambert", "phi(q)^2 = 1 + 4 sum_{n>=1} q^n/(1+q^(2n))",
     lambda c: c.phi() ** 2,
     lambda c: c.lsum([(4, uni(1, 0, 2, 0, 1))], 1))
_add("sum2sq.count", "phi(q)^2 = sum_{x,y} q^(x^2+y^2)",
     lambda c: c.bqf(1, 0, 1),
     lambda c: c.fn(closedform.r2, 1))


# -- products, splittings and 1psi1 instances ------------------------------

_add("jtp.phi", "phi(q) = (-q;q^2)^2_inf (q^2;q^2)_inf",
     lambda c: c.phi(),
     lambda c: c.qpoch(m(1, -1), m(2)) ** 2 * c.qpoch(m(2), m(2)))
_add("jtp.phi.eta", "phi(q) = E^5(q^2) / (E^2(q) E^2(q^4))",
     lambda c: c.phi(),
     lambda c: c.eta((2, 5), (1, -2), (4, -2)))
_add("jtp.psi", "psi(q) = (-q;q^4)_inf (-q^3;q^4)_inf (q^4;q^4)_inf",
     lambda c: c.psi(),
     lambda c: c.qpoch(m(1, -1), m(4)) * c.qpoch(m(3, -1), m(4)) * c.qpoch(m(4), m(4)))
_add("jtp.psi.eta", "psi(q) = E^2(q^2) / E(q)",
     lambda c: c.psi(),
     lambda c: c.eta((2, 2), (1, -1)))
_add("jtp.f_laurent", "f(q^-1, q^13) = q^-1 f(q, q^11)",
     lambda c: c.f((-1, 1), (13, 1)),
     lambda c: c.f((1, 1), (11, 1)) * c.q(-1))
_add("add.split2", "E(q) = f(-q, -q^2) = f(q^5, q^7) - q f(q, q^11)",
     lambda c: c.E(),
     lambda c: c.f((5, 1), (7, 1)) - c.q(1) * c.f((1, 1), (11, 1)))
_add("add.phi4", "phi(q) = phi(q^4) + 2q psi(q^8)",
     lambda c: c.phi(),
     lambda c: c.phi(4) + c.q(1, 2) * c.psi(8))
_add("add.phi9", "phi(q) = phi(q^9) + 2q f(q^3, q^15)",
     lambda c: c.phi(),
     lambda c: c.phi(9) + c.q(1, 2) * c.f((3, 1), (15, 1)))
_add("psi1.inst36", "sum_n q^n/(1+q^(10n)) = E^3(q^10) f(q,q^9) / (f(-q,-q^9) f(1,q^10))",
     lambda c: c.lam(bil(1, 0, 10, 0)),
     lambda c: c.E(10) ** 3 * c.f((1, 1), (9, 1)) / (c.f((1, -1), (9, -1)) * c.f((0, 1), (10, 1))),
     integral=False)
_add("psi1.inst37", "sum_n q^(5n+2)/(1+q^(10n+4)) = q^2 E^3(q^10) f(q,q^9) / (f(-q^5,-q^5) f(q^4,q^6))",
     lambda c: c.lam(bil(5, 2, 10, 4)),
     lambda c: c.q(2) * c.E(10) ** 3 * c.f((1, 1), (9, 1)) / (c.f((5, -1), (5, -1)) * c.f((4, 1), (6, 1))))
_add("psi1.inst320", "sum_n q^(3n)/(1-q^(20n+5)) = E^3(q^20) f(-q^8,-q^12) / (f(-q^3,-q^17) f(-q^5,-q^15))",
     lambda c: c.lam(bil(3, 0, 20, 5, -1)),
     lambda c: c.E(20) ** 3 * c.f((8, -1), (12, -1)) / (c.f((3, -1), (17, -1)) * c.f((5, -1), (15, -1))))
_add("psi1.inst4x", "sum_n q^n/(1+q^(12n)) = E^3(q^12) f(q,q^11) / (f(1,q^12) f(-q,-q^11))",
     lambda c: c.lam(bil(1, 0, 12, 0)),
     lambda c: c.E(12) ** 3 * c.f((1, 1), (11, 1)) / (c.f((0, 1), (12, 1)) * c.f((1, -1), (11, -1))),
     integral=False)
_add("prod.311", "f(-q^2,q^3)^2 = f(-q^5,-q^5) f(q^4,q^6) - q^2 f(1,q^10) f(-q,-q^9)",
     lambda c: c.f((2, -1), (3, 1)) ** 2,
     lambda c: c.f((5, -1), (5, -1)) * c.f((4, 1), (6, 1))
     - c.q(2) * c.f((0, 1), (10, 1)) * c.f((1, -1), (9, -1)))
_add("prod.414", "f(q,q^11) f(-q^5,-q^7) = psi(-q^6) E(q^8) + q psi(-q^6) f(-q^4,-q^20)",
     lambda c: c.f((1, 1), (11, 1)) * c.f((5, -1), (7, -1)),
     lambda c: c.psi(6, -1) * c.E(8) + c.q(1) * c.psi(6, -1) * c.f((4, -1), (20, -1)))
_add("prod.414.theta", "f(q,q^11) f(-q^5,-q^7) = f(-q^6,-q^18) f(-q^8,-q^16) + q f(-q^4,-q^20) f(-q^6,-q^18)",
     lambda c: c.f((1, 1), (11, 1)) * c.f((5, -1), (7, -1)),
     lambda c: c.f((6, -1), (18, -1)) * c.f((8, -1), (16, -1))
     + c.q(1) * c.f((4, -1), (20, -1)) * c.f((6, -1), (18, -1)))
_add("triv.427a", "phi(q) phi(-q) = phi^2(-q^2)",
     lambda c: c.phi() * c.phi(1, -1),
     lambda c: c.phi(2, -1) ** 2)
_add("triv.427b", "psi^2(q) = psi(q^2) phi(q)",
     lambda c: c.psi() ** 2,
     lambda c: c.psi(2) * c.phi())

# -- x^2 + 5y^2 and 2x^2 + 2xy + 3y^2 ----------------------------------------

_add("thm3_1.l1", "phi(q)phi(q^5) = 2 { sum_n q^n/(1+q^(10n)) - sum_n q^(5n+2)/(1+q^(10n+4)) }",
     lambda c: c.phi() * c.phi(5),
     lambda c: c.lsum([(2, bil(1, 0, 10, 0)), (-2, bil(5, 2, 10, 4))]))
_add("thm3_1.l2", "phi(q)phi(q^5) = 2 { sum_n q^(3n)/(1+q^(10n)) + sum_n q^(5n+1)/(1+q^(10n+2)) }",
     lambda c: c.phi() * c.phi(5),
     lambda c: c.lsum([(2, bil(3, 0, 10, 0)), (2, bil(5, 1, 10, 2))]))
_add("thm3_1.l3", "phi(q)phi(q^5) = 1 + sum (-20/n) q^n/(1-q^n) + sum (n/5) q^n/(1+q^(2n))",
     lambda c: c.phi() * c.phi(5),
     lambda c: _phi_phi5_parts(c)[0] + _phi_phi5_parts(c)[1])
_add("eta.34", "1 + sum (-20/n) q^n/(1-q^n) = E(q^2)E(q^4)E(q^5)E(q^10) / (E(q)E(q^20))",
     lambda c: _phi_phi5_parts(c)[0],
     lambda c: c.eta((2, 1), (4, 1), (5, 1), (10, 1), (1, -1), (20, -1)))
_add("eta.35", "sum (n/5) q^n/(1+q^(2n)) = q E(q)E(q^2)E(q^10)E(q^20) / (E(q^4)E(q^5))",
     lambda c: _phi_phi5_parts(c)[1],
     lambda c: c.eta((1, 1), (2, 1), (10, 1), (20, 1), (4, -1), (5, -1), q=1))
_add("div.eta34", "1 + sum (-20/n) q^n/(1-q^n) = 1 + sum_n sum_{d|n} (-20/d) q^n",
     lambda c: _phi_phi5_parts(c)[0],
     lambda c: c.divisor("K1", 1))
_add("div.eta35", "sum (n/5) q^n/(1+q^(2n)) = sum_n sum_{d|n} (-4/d)((n/d)/5) q^n",
     lambda c: _phi_phi5_parts(c)[1],
     lambda c: c.divisor("K2"))
_add("lambert.39", "sum_n { q^(5n+1)/(1+q^(10n+2)) - q^(5n+2)/(1+q^(10n+4)) } = sum (n/5) q^n/(1+q^(2n))",
     lambda c: c.lsum([(1, bil(5, 1, 10, 2)), (-1, bil(5, 2, 10, 4))]),
     lambda c: _phi_phi5_parts(c)[1])
_add("lambert.310", "sum_n (q^n + q^(3n))/(1+q^(10n)) = 1 + sum (-20/n) q^n/(1-q^n)",
     lambda c: c.lsum([(1, bil(1, 0, 10, 0)), (1, bil(3, 0, 10, 0))]),
     lambda c: _phi_phi5_parts(c)[0])
_add("chan.remark",
     "phi(-q)phi(-q^5) = 2 sum_k q^(k(5k+3)/2)/(1+q^(5k)) - 2q sum_k q^(k(5k+7)/2)/(1+q^(5k+2))",
     lambda c: c.phi(1, -1) * c.phi(5, -1),
     lambda c: c.lsum([(2, bil(-1, 0, 5, 0, quad=5)), (-2, bil(1, 1, 5, 2, quad=5))]))
_add("chan.remark.lambert",
     "sum_k (-1)^k (q^k/(1+q^(10k)) - q^(5k+2)/(1+q^(10k+4))) = "
     "sum_k q^(k(5k+3)/2)/(1+q^(5k)) - q sum_k q^(k(5k+7)/2)/(1+q^(5k+2))",
     lambda c: c.lsum([(1, bil(1, 0, 10, 0, alt=True)), (-1, bil(5, 2, 10, 4, alt=True))]),
     lambda c: c.lsum([(1, bil(-1, 0, 5, 0, quad=5)), (-1, bil(1, 1, 5, 2, quad=5))]),
     integral=False)
_add("cor3_4.l18", "sum q^(2n^2+2nm+3m^2) = 1 + sum (-20/n) q^n/(1-q^n) - sum (n/5) q^n/(1+q^(2n))",
     lambda c: c.bqf(2, 2, 3),
     lambda c: _phi_phi5_parts(c)[0] - _phi_phi5_parts(c)[1])
_add("cor3.dirichlet", "sum q^(n^2+5m^2) + sum q^(2n^2+2nm+3m^2) = 2 + 2 sum (-20/n) q^n/(1-q^n)",
     lambda c: c.bqf(1, 0, 5) + c.bqf(2, 2, 3),
     lambda c: c.lsum([(2, uni(1, 0, 1, 0, character=disc(-20)))], 2))
_add("cor3.disjoint", "a(n) d(n) = 0 for n >= 1, where a, d count x^2+5y^2 and 2x^2+2xy+3y^2",
     lambda c: repcount.hadamard(c.bqf(1, 0, 5), c.bqf(2, 2, 3)),
     lambda c: c.const(1))
_add("cor3.halving", "d(n) = a(2n): 2x^2+2xy+3y^2 counts equal x^2+5y^2 counts at 2n",
     _halving_lhs,
     lambda c: c.bqf(2, 2, 3))
_add("thm3_5.r1", "psi(q)psi(q^5) = sum_n (q^(3n) + q^(7n+1))/(1-q^(20n+5))",
     lambda c: c.psi() * c.psi(5),
     lambda c: c.lsum([(1, bil(3, 0, 20, 5, -1)), (1, bil(7, 1, 20, 5, -1))]))
_add("thm3_5.r2", "psi(q)psi(q^5) = sum_n (q^n + q^(9n+6))/(1-q^(20n+15))",
     lambda c: c.psi() * c.psi(5),
     lambda c: c.lsum([(1, bil(1, 0, 20, 15, -1)), (1, bil(9, 6, 20, 15, -1))]))
_add("thm3_5.product",
     "psi(q)psi(q^5) = E^3(q^20) f(-q^8,-q^12) f(q,-q^4) / (f(-q^5,-q^15) f(-q^3,-q^17) f(-q^7,-q^13))",
     lambda c: c.psi() * c.psi(5),
     lambda c: c.E(20) ** 3 * c.f((8, -1), (12, -1)) * c.f((1, 1), (4, -1))
     / (c.f((5, -1), (15, -1)) * c.f((3, -1), (17, -1)) * c.f((7, -1), (13, -1))))
_add("count.105", "x^2 + 5y^2 counts: closed form = enumeration",
     lambda c: c.bqf(1, 0, 5), lambda c: c.fn(closedform.rep_1_0_5, 1))
_add("count.223", "2x^2 + 2xy + 3y^2 counts: closed form = enumeration",
     lambda c: c.bqf(2, 2, 3), lambda c: c.fn(closedform.rep_2_2_3, 1))

# -- x^2 + 6y^2 and 2x^2 + 3y^2 -----------------------------------------------

_add("thm4_1.P", "P(q) = E(q^2)E(q^3)E(q^8)E(q^12)/(E(q)E(q^24)) = sum_n (q^n + q^(5n))/(1+q^(12n))",
     _P4, _P4_bil)
_add("thm4_1.P.lambert", "P(q) = 1 + sum (-6/n) q^n/(1-q^n)",
     _P4, _c4_sum)
_add("thm4_1.Q", "Q(q) = q E(q)E(q^4)E(q^6)E(q^24)/(E(q^3)E(q^8)) = sum_n (q^(3n+1) - q^(9n+3))/(1+q^(12n+4))",
     _Q4, _Q4_bil)
_add("thm4_1.Q.lambert", "Q(q) = sum (n/3) q^n (1-q^(2n))/(1+q^(4n))",
     _Q4, _d4_sum)
_add("thm4_1.sum", "phi(q)phi(q^6) = P(q) + Q(q) = bilateral sums of P and Q",
     lambda c: c.phi() * c.phi(6),
     lambda c: _P4_bil(c) + _Q4_bil(c))
_add("thm4_1.sum.eta", "phi(q)phi(q^6) = P(q) + Q(q)",
     lambda c: c.phi() * c.phi(6),
     lambda c: _P4(c) + _Q4(c))
_add("thm4_1.l6", "phi(q)phi(q^6) = 2 { sum_n q^n/(1+q^(12n)) - sum_n q^(9n+3)/(1+q^(12n+4)) }",
     lambda c: c.phi() * c.phi(6),
     lambda c: c.lsum([(2, bil(1, 0, 12, 0)), (-2, bil(9, 3, 12, 4))]))
_add("thm4_1.l7", "phi(q)phi(q^6) = 2 { sum_n q^(5n)/(1+q^(12n)) + sum_n q^(3n+1)/(1+q^(12n+4)) }",
     lambda c: c.phi() * c.phi(6),
     lambda c: c.lsum([(2, bil(5, 0, 12, 0)), (2, bil(3, 1, 12, 4))]))
_add("thm4_1.l8", "phi(q)phi(q^6) = 1 + sum (-6/n) q^n/(1-q^n) + sum (n/3) q^n(1-q^(2n))/(1+q^(4n))",
     lambda c: c.phi() * c.phi(6),
     lambda c: _c4_sum(c) + _d4_sum(c))
_add("thm4_1.diff", "phi(q^2)phi(q^3) = P(q) - Q(q) = bilateral sums of P minus Q",
     lambda c: c.phi(2) * c.phi(3),
     lambda c: _P4_bil(c) - _Q4_bil(c))
_add("thm4_1.diff.eta", "phi(q^2)phi(q^3) = P(q) - Q(q)",
     lambda c: c.phi(2) * c.phi(3),
     lambda c: _P4(c) - _Q4(c))
_add("thm4_1.l11", "phi(q^2)phi(q^3) = 2 { sum_n q^n/(1+q^(12n)) - sum_n q^(3n+1)/(1+q^(12n+4)) }",
     lambda c: c.phi(2) * c.phi(3),
     lambda c: c.lsum([(2, bil(1, 0, 12, 0)), (-2, bil(3, 1, 12, 4))]))
_add("thm4_1.l12", "phi(q^2)phi(q^3) = 2 { sum_n q^(5n)/(1+q^(12n)) + sum_n q^(9n+3)/(1+q^(12n+4)) }",
     lambda c: c.phi(2) * c.phi(3),
     lambda c: c.lsum([(2, bil(5, 0, 12, 0)), (2, bil(9, 3, 12, 4))]))
_add("thm4_1.l13", "phi(q^2)phi(q^3) = 1 + sum (-6/n) q^n/(1-q^n) - sum (n/3) q^n(1-q^(2n))/(1+q^(4n))",
     lambda c: c.phi(2) * c.phi(3),
     lambda c: _c4_sum(c) - _d4_sum(c))
_add("step.415",
     "sum_n (q^n + q^(5n))/(1+q^(12n)) = 2 E^3(q^12) psi(-q^6) E(q^8) / (f(1,q^12) f(-q,-q^11) f(-q^5,-q^7))",
     _P4_bil,
     lambda c: c.E(12) ** 3 * c.psi(6, -1) * c.E(8) * 2
     / (c.f((0, 1), (12, 1)) * c.f((1, -1), (11, -1)) * c.f((5, -1), (7, -1))))
_add("step.417",
     "sum_n (q^(3n+1) - q^(9n+3))/(1+q^(12n+4)) = "
     "(q f(q^5,q^7) - q^3 f(q^-1,q^13)) E^3(q^12) / (f(-q^3,-q^9) f(q^4,q^8))",
     _Q4_bil,
     lambda c: (c.q(1) * c.f((5, 1), (7, 1)) - c.q(3) * c.f((-1, 1), (13, 1))) * c.E(12) ** 3
     / (c.f((3, -1), (9, -1)) * c.f((4, 1), (8, 1))))
_add("step.417.eta", "Q(q) = q E^3(q^12) E(q) / (psi(-q^3) f(q^4,q^8))",
     _Q4,
     lambda c: c.q(1) * c.E(12) ** 3 * c.E() / (c.psi(3, -1) * c.f((4, 1), (8, 1))))
_add("help.420", "2 psi^3(q)/psi(q^3) = phi^3(q)/phi(q^3) + phi^3(-q^2)/phi(-q^6)",
     lambda c: c.psi() ** 3 / c.psi(3) * 2,
     lambda c: c.phi() ** 3 / c.phi(3) + c.phi(2, -1) ** 3 / c.phi(6, -1))
_add("help.421", "4q psi(q^2)psi(q^6) = phi(q)phi(q^3) - phi(-q)phi(-q^3)",
     lambda c: c.q(1, 4) * c.psi(2) * c.psi(6),
     lambda c: c.phi() * c.phi(3) - c.phi(1, -1) * c.phi(3, -1))
_add("help.422", "phi(q)phi(q^3) - phi(-q)phi(-q^3) = 4q { psi(q^8)phi(q^12) + q^2 phi(q^4)psi(q^24) }",
     lambda c: c.phi() * c.phi(3) - c.phi(1, -1) * c.phi(3, -1),
     lambda c: c.q(1, 4) * (c.psi(8) * c.phi(12) + c.q(2) * c.phi(4) * c.psi(24)))
_add("help.423", "psi(q)psi(q^3) = psi(q^4)phi(q^6) + q phi(q^2)psi(q^12)",
     lambda c: c.psi() * c.psi(3),
     lambda c: c.psi(4) * c.phi(6) + c.q(1) * c.phi(2) * c.psi(12))
_add("help.424", "phi(q)phi(-q^3) - phi(-q)phi(q^3) = 4q psi(-q^2)psi(-q^6)",
     lambda c: c.phi() * c.phi(3, -1) - c.phi(1, -1) * c.phi(3),
     lambda c: c.q(1, 4) * c.psi(2, -1) * c.psi(6, -1))
_add("eq.418", "2P(q) = phi(q)phi(q^6) + phi(q^2)phi(q^3)",
     lambda c: _P4(c) * 2,
     lambda c: c.phi() * c.phi(6) + c.phi(2) * c.phi(3))
_add("eq.419", "2Q(q) = phi(q)phi(q^6) - phi(q^2)phi(q^3)",
     lambda c: _Q4(c) * 2,
     lambda c: c.phi() * c.phi(6) - c.phi(2) * c.phi(3))
_add("eq.425",
     "2q psi(-q)psi(-q^2)psi(-q^3)psi(-q^6) / (psi(q^4)phi(-q^3)) = phi(q)phi(q^6) - phi(q^2)phi(q^3)",
     lambda c: c.q(1, 2) * c.psi(1, -1) * c.psi(2, -1) * c.psi(3, -1) * c.psi(6, -1)
     / (c.psi(4) * c.phi(3, -1)),
     lambda c: c.phi() * c.phi(6) - c.phi(2) * c.phi(3))
_add("eq.426",
     "2q psi(-q)psi(-q^2)psi(-q^3)psi(-q^6) = phi(q)phi(-q^3)psi(q^4)phi(q^6) - psi^2(q^2)phi^2(-q^6)",
     lambda c: c.q(1, 2) * c.psi(1, -1) * c.psi(2, -1) * c.psi(3, -1) * c.psi(6, -1),
     lambda c: c.phi() * c.phi(3, -1) * c.psi(4) * c.phi(6) - c.psi(2) ** 2 * c.phi(6, -1) ** 2)
_add("eq.429",
     "-psi(-q)psi(-q^3)phi(-q)phi(q^3) = psi(q)psi(q^3)phi(q)phi(-q^3) - 2 psi^2(q^2)phi^2(-q^6)",
     lambda c: -(c.psi(1, -1) * c.psi(3, -1) * c.phi(1, -1) * c.phi(3)),
     lambda c: c.psi() * c.psi(3) * c.phi() * c.phi(3, -1) - c.psi(2) ** 2 * c.phi(6, -1) ** 2 * 2)
_add("eq.430", "-phi^3(-q^2)/phi(-q^6) = phi^3(q)/phi(q^3) - 2 psi^3(q)/psi(q^3)",
     lambda c: -(c.phi(2, -1) ** 3 / c.phi(6, -1)),
     lambda c: c.phi() ** 3 / c.phi(3) - c.psi() ** 3 / c.psi(3) * 2)
_add("eq.431",
     "2 psi(-q)psi(-q^2)psi(-q^3)psi(-q^6) / (psi(q^12)phi(-q)) = phi(q)phi(q^6) + phi(q^2)phi(q^3)",
     lambda c: c.psi(1, -1) * c.psi(2, -1) * c.psi(3, -1) * c.psi(6, -1) * 2 / (c.psi(12) * c.phi(1, -1)),
     lambda c: c.phi() * c.phi(6) + c.phi(2) * c.phi(3))
_add("eq.432",
     "2 psi(-q)psi(-q^2)psi(-q^3)psi(-q^6) = phi^2(-q^2)psi^2(q^6) + phi(-q)phi(q^3)phi(q^2)psi(q^12)",
     lambda c: c.psi(1, -1) * c.psi(2, -1) * c.psi(3, -1) * c.psi(6, -1) * 2,
     lambda c: c.phi(2, -1) ** 2 * c.psi(6) ** 2 + c.phi(1, -1) * c.phi(3) * c.phi(2) * c.psi(12))
_add("eq.434",
     "psi(-q)psi(-q^3)phi(q)phi(-q^3) = psi(q)psi(q^3)phi(-q)phi(q^3) + 2q psi^2(q^6)phi^2(-q^2)",
     lambda c: c.psi(1, -1) * c.psi(3, -1) * c.phi() * c.phi(3, -1),
     lambda c: c.psi() * c.psi(3) * c.phi(1, -1) * c.phi(3) + c.q(1, 2) * c.psi(6) ** 2 * c.phi(2, -1) ** 2)
_add("ratio.435",
     "(phi(q)phi(q^6) - phi(q^2)phi(q^3)) / (phi(q)phi(q^6) + phi(q^2)phi(q^3)) = "
     "q phi(-q)psi(q^12) / (phi(-q^3)psi(q^4))",
     lambda c: (c.phi() * c.phi(6) - c.phi(2) * c.phi(3)) / (c.phi() * c.phi(6) + c.phi(2) * c.phi(3)),
     lambda c: c.q(1) * c.phi(1, -1) * c.psi(12) / (c.phi(3, -1) * c.psi(4)))
_add("sq.diff_eta", "phi^2(q)phi^2(q^6) - phi^2(q^2)phi^2(q^3) = 4q E(q^2)E(q^4)E(q^6)E(q^12)",
     lambda c: (c.phi() * c.phi(6)) ** 2 - (c.phi(2) * c.phi(3)) ** 2,
     lambda c: c.q(1, 4) * c.eta((2, 1), (4, 1), (6, 1), (12, 1)))
_add("thm4_1.psi_product_form",
     "phi^2(q)phi^2(q^6) - phi^2(q^2)phi^2(q^3) = 4q psi(q)psi(-q)psi(-q^3)psi(-q^6)",
     lambda c: (c.phi() * c.phi(6)) ** 2 - (c.phi(2) * c.phi(3)) ** 2,
     lambda c: c.q(1, 4) * c.psi() * c.psi(1, -1) * c.psi(3, -1) * c.psi(6, -1),
     expectation=EXPLORATORY)
_add("help.436", "sum_n (q^n - q^(5n))/(1+q^(12n)) = sum_n (q^(3n+1) + q^(9n+3))/(1+q^(12n+4))",
     lambda c: c.lsum([(1, bil(1, 0, 12, 0)), (-1, bil(5, 0, 12, 0))]),
     lambda c: c.lsum([(1, bil(3, 1, 12, 4)), (1, bil(9, 3, 12, 4))]))
_add("help.437", "sum_n (q^n - q^(5n))/(1+q^(12n)) = q E(q^2)E(q^3)E(q^4)E(q^24) / (E(q)E(q^8))",
     lambda c: c.lsum([(1, bil(1, 0, 12, 0)), (-1, bil(5, 0, 12, 0))]),
     lambda c: c.eta((2, 1), (3, 1), (4, 1), (24, 1), (1, -1), (8, -1), q=1))
_add("div.c4", "1 + sum (-6/n) q^n/(1-q^n) = 1 + sum_n sum_{d|n} (-24/d) q^n",
     _c4_sum, lambda c: c.divisor("K3", 1))
_add("div.d4", "sum (n/3) q^n(1-q^(2n))/(1+q^(4n)) = sum_n sum_{d|n} (d/2)((n/d)/3) q^n",
     _d4_sum, lambda c: c.divisor("K4"))
_add("count.106", "x^2 + 6y^2 counts: closed form = enumeration",
     lambda c: c.bqf(1, 0, 6), lambda c: c.fn(closedform.rep_1_0_6, 1))
_add("count.203", "2x^2 + 3y^2 counts: closed form = enumeration",
     lambda c: c.bqf(2, 0, 3), lambda c: c.fn(closedform.rep_2_0_3, 1))

# -- x^2 + 15y^2 and 3x^2 + 5y^2 ----------------------------------------------

_add("thm5_1.P", "P(q) = E(q)E(q^6)E(q^10)E(q^15)/(E(q^2)E(q^30)) = 1 - sum (-15/n) q^n/(1+q^n)",
     _P5, _P5_sum)
_add("thm5_1.Q", "Q(q) = q E(q^2)E(q^3)E(q^5)E(q^30)/(E(q^6)E(q^10)) = sum (5/n) q^n(1+q^n)/(1+q^(3n))",
     _Q5, _Q5_sum)
_add("thm5_1.diff", "phi(-q)phi(-q^15) = P(q) - Q(q)",
     lambda c: c.phi(1, -1) * c.phi(15, -1),
     lambda c: _P5(c) - _Q5(c))
_add("thm5_1.diff.lambert",
     "phi(-q)phi(-q^15) = 1 - sum (-15/n) q^n/(1+q^n) - sum (5/n) q^n(1+q^n)/(1+q^(3n))",
     lambda c: c.phi(1, -1) * c.phi(15, -1),
     lambda c: _P5_sum(c) - _Q5_sum(c))
_add("thm5_1.sum", "phi(-q^3)phi(-q^5) = P(q) + Q(q)",
     lambda c: c.phi(3, -1) * c.phi(5, -1),
     lambda c: _P5(c) + _Q5(c))
_add("thm5_1.sum.lambert",
     "phi(-q^3)phi(-q^5) = 1 - sum (-15/n) q^n/(1+q^n) + sum (5/n) q^n(1+q^n)/(1+q^(3n))",
     lambda c: c.phi(3, -1) * c.phi(5, -1),
     lambda c: _P5_sum(c) + _Q5_sum(c))
_add("lambert.58",
     "sum (5/n) q^n(1+q^n)/(1+q^(3n)) = sum_n (q^(5n+1) + q^(10n+2))/(1+q^(15n+3)) "
     "- sum_n (q^(5n+2) + q^(10n+4))/(1+q^(15n+6))",
     _Q5_sum,
     lambda c: c.lsum([(1, bil(5, 1, 15, 3)), (1, bil(10, 2, 15, 3)),
                       (-1, bil(5, 2, 15, 6)), (-1, bil(10, 4, 15, 6))]))
_add("lambert.59",
     "sum (5/n) q^n(1+q^n)/(1+q^(3n)) = q E^3(q^15) { (f(q^7,q^8) + q f(q^2,q^13)) f(q^6,q^9) "
     "- q (f(q^4,q^11) + q f(q,q^14)) f(q^3,q^12) } / (E(q^5) f(q^3,q^12) f(q^6,q^9))",
     _Q5_sum,
     lambda c: c.q(1) * c.E(15) ** 3
     * ((c.f((7, 1), (8, 1)) + c.q(1) * c.f((2, 1), (13, 1))) * c.f((6, 1), (9, 1))
        - c.q(1) * (c.f((4, 1), (11, 1)) + c.q(1) * c.f((1, 1), (14, 1))) * c.f((3, 1), (12, 1)))
     / (c.E(5) * c.f((3, 1), (12, 1)) * c.f((6, 1), (9, 1))))
_add("step.510",
     "Q(q) = q E^3(q^15) { (f(q^14,q^16) - q^2 f(q^4,q^26))(f(q^13,q^17) - q f(q^7,q^23)) "
     "+ q (f(q^8,q^22) - q^2 f(q^2,q^28))(f(q^11,q^19) - q^3 f(q,q^29)) } "
     "/ (E(q^5) f(q^3,q^12) f(q^6,q^9))",
     _Q5,
     lambda c: c.q(1) * c.E(15) ** 3
     * ((c.f((14, 1), (16, 1)) - c.q(2) * c.f((4, 1), (26, 1)))
        * (c.f((13, 1), (17, 1)) - c.q(1) * c.f((7, 1), (23, 1)))
        + c.q(1) * (c.f((8, 1), (22, 1)) - c.q(2) * c.f((2, 1), (28, 1)))
        * (c.f((11, 1), (19, 1)) - c.q(3) * c.f((1, 1), (29, 1))))
     / (c.E(5) * c.f((3, 1), (12, 1)) * c.f((6, 1), (9, 1))))
_add("rr.G", "G(q) = sum_n q^(n^2)/(q;q)_n = 1/((q;q^5)_inf (q^4;q^5)_inf)",
     lambda c: c.G(),
     lambda c: qfunctions.rr_sum_side(c.M, 0))
_add("rr.H", "H(q) = sum_n q^(n(n+1))/(q;q)_n = 1/((q^2;q^5)_inf (q^3;q^5)_inf)",
     lambda c: c.H(),
     lambda c: qfunctions.rr_sum_side(c.M, 1))
_add("forty.513", "G(q)G(q^4) - q H(q)H(q^4) = phi(q^5)/E(q^2)",
     lambda c: c.G() * c.G(4) - c.q(1) * c.H() * c.H(4),
     lambda c: c.phi(5) / c.E(2))
_add("forty.513neg", "G(-q)G(q^4) + q H(-q)H(q^4) = phi(-q^5)/E(q^2)",
     lambda c: c.G(1, -1) * c.G(4) + c.q(1) * c.H(1, -1) * c.H(4),
     lambda c: c.phi(5, -1) / c.E(2))
_add("quint.514", "f(-q^13,-q^17) + q f(-q^7,-q^23) = E(q^2)G(q)",
     lambda c: c.f((13, -1), (17, -1)) + c.q(1) * c.f((7, -1), (23, -1)),
     lambda c: c.E(2) * c.G())
_add("quint.514.product", "f(-q^13,-q^17) + q f(-q^7,-q^23) = E(q^10) f(-q^2,-q^8)/f(-q,-q^9)",
     lambda c: c.f((13, -1), (17, -1)) + c.q(1) * c.f((7, -1), (23, -1)),
     lambda c: c.E(10) * c.f((2, -1), (8, -1)) / c.f((1, -1), (9, -1)))
_add("quint.515", "E(q^2)H(q) = f(-q^11,-q^19) + q^3 f(-q,-q^29)",
     lambda c: c.E(2) * c.H(),
     lambda c: c.f((11, -1), (19, -1)) + c.q(3) * c.f((1, -1), (29, -1)))
_add("quint.516", "E(q)G(q^2) = f(q^7,q^8) - q f(q^2,q^13)",
     lambda c: c.E() * c.G(2),
     lambda c: c.f((7, 1), (8, 1)) - c.q(1) * c.f((2, 1), (13, 1)))
_add("quint.517", "E(q)H(q^2) = f(q^4,q^11) - q f(q,q^14)",
     lambda c: c.E() * c.H(2),
     lambda c: c.f((4, 1), (11, 1)) - c.q(1) * c.f((1, 1), (14, 1)))
_add("eta.522", "P(-q) = E^2(q^2)E(q^6)E(q^10)E^2(q^30) / (E(q)E(q^4)E(q^15)E(q^60))",
     lambda c: negate_variable(_P5(c)),
     lambda c: c.eta((2, 2), (6, 1), (10, 1), (30, 2), (1, -1), (4, -1), (15, -1), (60, -1)))
_add("eta.523", "-Q(-q) = q E(q^2)E^2(q^6)E^2(q^10)E(q^30) / (E(q^3)E(q^5)E(q^12)E(q^20))",
     lambda c: -negate_variable(_Q5(c)),
     lambda c: c.eta((2, 1), (6, 2), (10, 2), (30, 1), (3, -1), (5, -1), (12, -1), (20, -1), q=1))
_add("eta.524", "Q(-q) = -sum_n sum_{d|n} (-1)^(n+d) (-3/d)(5/(n/d)) q^n",
     lambda c: negate_variable(_Q5(c)),
     lambda c: c.divisor("K6", 0, -1))
_add("div.521", "P(-q) = 1 + sum_n sum_{d|n} (-1)^(n+d) (-15/(n/d)) q^n",
     lambda c: negate_variable(_P5(c)),
     lambda c: c.divisor("K5", 1))
_add("thm5_1.neg_sum", "phi(q)phi(q^15) + phi(q^3)phi(q^5) = 2 - 2 sum (-15/n) (-q)^n/(1+(-q)^n)",
     lambda c: c.phi() * c.phi(15) + c.phi(3) * c.phi(5),
     lambda c: c.const(2) - negate_variable(c.lam(uni(1, 0, 1, 0, 1, character=disc(-15)))) * 2)
_add("williams.sum", "phi(q)phi(q^15) + phi(q^3)phi(q^5) = 2 + sum atilde(n) q^n/(1-q^n)",
     lambda c: c.phi() * c.phi(15) + c.phi(3) * c.phi(5),
     lambda c: c.fn(lambda n: sum(closedform.williams_atilde(d) for d in arith.factorize(n).divisors()), 2))
_add("count.1015", "x^2 + 15y^2 counts: closed form = enumeration",
     lambda c: c.bqf(1, 0, 15), lambda c: c.fn(closedform.rep_1_0_15, 1))
_add("count.305", "3x^2 + 5y^2 counts: closed form = enumeration",
     lambda c: c.bqf(3, 0, 5), lambda c: c.fn(closedform.rep_3_0_5, 1))

# -- x^2 + 27y^2 and 4x^2 + 2xy + 7y^2 ----------------------------------------

_add("thm6_1.main",
     "phi(q)phi(q^27) = (phi(q)phi(q^3) - phi(q^3)phi(q^9))/3 + phi(q^9)phi(q^27) + (4/3) q E(q^6)E(q^18)",
     lambda c: c.phi() * c.phi(27),
     lambda c: (c.phi() * c.phi(3) - c.phi(3) * c.phi(9)) / 3 + c.phi(9) * c.phi(27)
     + c.q(1, Fraction(4, 3)) * c.E(6) * c.E(18))
_add("lattice.67", "sum q^(7u^2+2uv+4v^2) = (phi(q)phi(q^27) + phi(-q)phi(-q^27))/2 + 2q^7 psi(q^2)psi(q^54)",
     lambda c: c.bqf(7, 2, 4),
     lambda c: (c.phi() * c.phi(27) + c.phi(1, -1) * c.phi(27, -1)) / 2 + c.q(7, 2) * c.psi(2) * c.psi(54))
_add("lattice.67.theta",
     "sum q^(7u^2+2uv+4v^2) = f(q^4,q^4)f(q^108,q^108) + 2q^7 f(q^2,q^6)f(q^54,q^162) + q^28 f(1,q^8)f(1,q^216)",
     lambda c: c.bqf(7, 2, 4),
     lambda c: c.f((4, 1), (4, 1)) * c.f((108, 1), (108, 1))
     + c.q(7, 2) * c.f((2, 1), (6, 1)) * c.f((54, 1), (162, 1))
     + c.q(28) * c.f((0, 1), (8, 1)) * c.f((0, 1), (216, 1)))
_add("lattice.68",
     "sum q^(7u^2+2uv+4v^2) = (3phi(q^9)phi(q^27) + phi(q)phi(q^3) - phi(q)phi(q^27) - phi(q^3)phi(q^9))/2",
     lambda c: c.bqf(7, 2, 4),
     lambda c: (c.phi(9) * c.phi(27) * 3 + c.phi() * c.phi(3) - c.phi() * c.phi(27) - c.phi(3) * c.phi(9)) / 2)
_add("lattice.68.theta", "sum q^(7u^2+2uv+4v^2) = f(q^9,q^9)f(q^27,q^27) + 2q^4 f(q^3,q^15)f(q^9,q^45)",
     lambda c: c.bqf(7, 2, 4),
     lambda c: c.f((9, 1), (9, 1)) * c.f((27, 1), (27, 1))
     + c.q(4, 2) * c.f((3, 1), (15, 1)) * c.f((9, 1), (45, 1)))
_add("rama.69", "(phi(q)phi(q^27) - phi(-q)phi(-q^27))/2 - 2q^7 psi(q^2)psi(q^54) = 2q E(q^6)E(q^18)",
     lambda c: (c.phi() * c.phi(27) - c.phi(1, -1) * c.phi(27, -1)) / 2 - c.q(7, 2) * c.psi(2) * c.psi(54),
     lambda c: c.q(1, 2) * c.E(6) * c.E(18))
_add("eq.6b", "phi(q)phi(q^27) - sum q^(4n^2+2nm+7m^2) = 2q E(q^6)E(q^18)",
     lambda c: c.phi() * c.phi(27) - c.bqf(4, 2, 7),
     lambda c: c.q(1, 2) * c.E(6) * c.E(18))
_add("lambert.613", "phi(q)phi(q^3) = 1 + 2 sum (n/3) q^n/(1-q^n) + 4 sum (n/3) q^(4n)/(1-q^(4n))",
     lambda c: c.phi() * c.phi(3),
     lambda c: c.lsum([(2, uni(1, 0, 1, 0, character=CHI3)), (4, uni(4, 0, 4, 0, character=CHI3))], 1))
_add("div.613", "phi(q)phi(q^3) = 1 + sum_n sum_{d|n} (2(d/3) + 4(d/3)[4d | n]) q^n",
     lambda c: c.phi() * c.phi(3), lambda c: c.divisor("K13", 1))
_add("coef.614", "phi(q)phi(q^3) coefficients: closed form = series",
     lambda c: c.phi() * c.phi(3), lambda c: c.fn(closedform.phi_phi3_coeff, 1))
_add("rec.617", "d(p^(s+2)) = d(p)d(p^(s+1)) - (-108/p) d(p^s), d multiplicative, for q E(q^6)E(q^18)",
     lambda c: c.q(1) * c.E(6) * c.E(18),
     lambda c: _multiplicative_rebuild(c, c.q(1) * c.E(6) * c.E(18)))
_add("coef.619", "q E(q^6)E(q^18) coefficients: closed form = series",
     lambda c: c.q(1) * c.E(6) * c.E(18), lambda c: c.fn(closedform.eta_6_18_coeff))
_add("count.6", "x^2 + 27y^2 counts: closed form = enumeration",
     lambda c: c.bqf(1, 0, 27), lambda c: c.fn(closedform.rep_1_0_27, 1))
_add("count.6b", "4x^2 + 2xy + 7y^2 counts: closed form = enumeration",
     lambda c: c.bqf(4, 2, 7), lambda c: c.fn(closedform.rep_4_2_7, 1))

# -- quaternary forms with coefficients 1 and 5 -----------------------------

_add("thm7_1.e1", "phi(-q)phi^3(-q^5) = (E^5(q)/E(q^5) + 4E^5(q^2)/E(q^10))/5 - (qE^5(q^5)/E(q) - 4q^2 E^5(q^10)/E(q^2))",
     lambda c: c.phi(1, -1) * c.phi(5, -1) ** 3,
     lambda c: (_A5(c) + _B5(c) * 4) / 5 - (_C5(c) - _D5(c) * 4))
_add("thm7_1.e2", "phi^3(-q)phi(-q^5) = (E^5(q)/E(q^5) + 4E^5(q^2)/E(q^10))/5 - 5(qE^5(q^5)/E(q) - 4q^2 E^5(q^10)/E(q^2))",
     lambda c: c.phi(1, -1) ** 3 * c.phi(5, -1),
     lambda c: (_A5(c) + _B5(c) * 4) / 5 - (_C5(c) - _D5(c) * 4) * 5)
_add("thm7_1.e3", "4q psi^3(q)psi(q^5) = (E^5(q)/E(q^5) - E^5(q^2)/E(q^10))/5 + 5(qE^5(q^5)/E(q) + q^2 E^5(q^10)/E(q^2))",
     lambda c: c.q(1, 4) * c.psi() ** 3 * c.psi(5),
     lambda c: (_A5(c) - _B5(c)) / 5 + (_C5(c) + _D5(c)) * 5)
_add("thm7_1.e4", "4q^2 psi(q)psi^3(q^5) = (E^5(q)/E(q^5) - E^5(q^2)/E(q^10))/5 + (qE^5(q^5)/E(q) + q^2 E^5(q^10)/E(q^2))",
     lambda c: c.q(2, 4) * c.psi() * c.psi(5) ** 3,
     lambda c: (_A5(c) - _B5(c)) / 5 + _C5(c) + _D5(c))
_add("lam.79", "E^5(q)/E(q^5) = 1 - 5 sum (n/5) n q^n/(1-q^n)",
     _A5, lambda c: c.lsum([(-5, uni(1, 0, 1, 0, character=CHI5, weight=1))], 1))
_add("lam.710", "q E^5(q^5)/E(q) = sum (n/5) q^n/(1-q^n)^2",
     _C5, lambda c: c.lam(uni(1, 0, 1, 0, character=CHI5, power=2)))
_add("div.721", "E^5(q)/E(q^5) = 1 - 5 sum_n sum_{d|n} (d/5) d q^n",
     _A5, lambda c: c.divisor("K7", 1, -5))
_add("coef.722", "E^5(q)/E(q^5) coefficients: closed form = series",
     _A5, lambda c: c.fn(closedform.eta5_coeff, 1))
_add("coef.724", "q E^5(q^5)/E(q) coefficients: closed form = series",
     _C5, lambda c: c.fn(closedform.eta5_dual_coeff))
_add("theta.711", "phi^2(q) - phi^2(q^5) = 4q f(q,q^9) f(q^3,q^7)",
     lambda c: c.phi() ** 2 - c.phi(5) ** 2,
     lambda c: c.q(1, 4) * c.f((1, 1), (9, 1)) * c.f((3, 1), (7, 1)))
_add("theta.712", "psi^2(q) - q psi^2(q^5) = f(q^2,q^3) f(q,q^4)",
     lambda c: c.psi() ** 2 - c.q(1) * c.psi(5) ** 2,
     lambda c: c.f((2, 1), (3, 1)) * c.f((1, 1), (4, 1)))
_add("chain.713", "phi(q)phi^3(q^5) - phi^5(q^5)/phi(q) = 4q E^5(-q^5)/E(-q)",
     lambda c: c.phi() * c.phi(5) ** 3 - c.phi(5) ** 5 / c.phi(),
     lambda c: c.q(1, 4) * _E_neg_ratio(c, 5, 1))
_add("chain.714", "16q^2 E^5(q^10)/E(q^2) = phi^3(q)phi(q^5) - 2phi(q)phi^3(q^5) + phi^5(q^5)/phi(q)",
     lambda c: _D5(c) * 16,
     lambda c: c.phi() ** 3 * c.phi(5) - c.phi() * c.phi(5) ** 3 * 2 + c.phi(5) ** 5 / c.phi())
_add("chain.715", "5phi^3(q)phi(q^5) - phi^5(q)/phi(q^5) = 4 E^5(-q)/E(-q^5)",
     lambda c: c.phi() ** 3 * c.phi(5) * 5 - c.phi() ** 5 / c.phi(5),
     lambda c: _E_neg_ratio(c, 1, 5) * 4)
_add("chain.716", "25phi(q)phi^3(q^5) - 10phi^3(q)phi(q^5) + phi^5(q)/phi(q^5) = 16 E^5(q^2)/E(q^10)",
     lambda c: c.phi() * c.phi(5) ** 3 * 25 - c.phi() ** 3 * c.phi(5) * 10 + c.phi() ** 5 / c.phi(5),
     lambda c: _B5(c) * 16)
_add("chain.717", "psi(q)psi^3(q^5) - q psi^5(q^5)/psi(q) = E^5(q^10)/E(q^2)",
     lambda c: c.psi() * c.psi(5) ** 3 - c.q(1) * c.psi(5) ** 5 / c.psi(),
     lambda c: c.eta((10, 5), (2, -1)))
_add("chain.718", "E^5(q^5)/E(q) = psi^3(q)psi(q^5) - 2q psi(q)psi^3(q^5) + q^2 psi^5(q^5)/psi(q)",
     lambda c: c.eta((5, 5), (1, -1)),
     lambda c: c.psi() ** 3 * c.psi(5) - c.q(1, 2) * c.psi() * c.psi(5) ** 3 + c.q(2) * c.psi(5) ** 5 / c.psi())
_add("chain.719", "-5q psi^3(q)psi(q^5) + psi^5(q)/psi(q^5) = E^5(q^2)/E(q^10)",
     lambda c: c.psi() ** 5 / c.psi(5) - c.q(1, 5) * c.psi() ** 3 * c.psi(5),
     _B5)
_add("chain.720", "25q^2 psi(q)psi^3(q^5) - 10q psi^3(q)psi(q^5) + psi^5(q)/psi(q^5) = E^5(q)/E(q^5)",
     lambda c: c.q(2, 25) * c.psi() * c.psi(5) ** 3 - c.q(1, 10) * c.psi() ** 3 * c.psi(5) + c.psi() ** 5 / c.psi(5),
     _A5)


def _lhs_725(c):
    return (negate_variable(_A5(c)) + _B5(c) * 4) / 5


def _lhs_731(c):
    return c.q(1) * _E_neg_ratio(c, 5, 1) + _D5(c) * 4


def _lhs_735(c):
    return -(_A5(c) - _B5(c)) / 5


def _lhs_739(c):
    return _C5(c) + _D5(c)


_add("blk.72528", "(E^5(-q)/E(-q^5) + 4E^5(q^2)/E(q^10))/5 = (5phi(q)phi^3(q^5) - phi^3(q)phi(q^5))/4",
     _lhs_725, lambda c: (c.phi() * c.phi(5) ** 3 * 5 - c.phi() ** 3 * c.phi(5)) / 4)
_add("blk.72528.ratio",
     "(E^5(-q)/E(-q^5) + 4E^5(q^2)/E(q^10))/5 = phi^2(q^5)/(4phi^2(q)) (5phi^3(q)phi(q^5) - phi^5(q)/phi(q^5))",
     _lhs_725,
     lambda c: c.phi(5) ** 2 / (c.phi() ** 2 * 4) * (c.phi() ** 3 * c.phi(5) * 5 - c.phi() ** 5 / c.phi(5)))
_add("blk.72528.theta", "(E^5(-q)/E(-q^5) + 4E^5(q^2)/E(q^10))/5 = phi^2(q^5) E^5(-q) / (phi^2(q) E(-q^5))",
     _lhs_725, lambda c: c.phi(5) ** 2 * _E_neg_ratio(c, 1, 5) / c.phi() ** 2)
_add("blk.72528.eta",
     "(E^5(-q)/E(-q^5) + 4E^5(q^2)/E(q^10))/5 = E^5(q^2)E^7(q^10) / (E(q)E(q^4)E^3(q^5)E^3(q^20))",
     _lhs_725, lambda c: c.eta((2, 5), (10, 7), (1, -1), (4, -1), (5, -3), (20, -3)))
_add("blk.72930", "(E^5(-q)/E(-q^5) + 4E^5(q^2)/E(q^10))/5 = 1 + sum (n/5) n q^n/(1-(-q)^n)",
     _lhs_725, lambda c: _sum_729(c) + 1)
_add("blk.72930.div", "1 + sum (n/5) n q^n/(1-(-q)^n) = 1 + sum_n sum_{d|n} (-1)^(n+d) d (d/5) q^n",
     lambda c: _sum_729(c) + 1, lambda c: c.divisor("K9", 1))
_add("blk.73134", "q E^5(-q^5)/E(-q) + 4q^2 E^5(q^10)/E(q^2) = q phi^2(q) E^5(-q^5) / (phi^2(q^5) E(-q))",
     _lhs_731, lambda c: c.q(1) * c.phi() ** 2 * _E_neg_ratio(c, 5, 1) / c.phi(5) ** 2)
_add("blk.73134.eta",
     "q E^5(-q^5)/E(-q) + 4q^2 E^5(q^10)/E(q^2) = q E^7(q^2)E^5(q^10) / (E^3(q)E^3(q^4)E(q^5)E(q^20))",
     _lhs_731, lambda c: c.eta((2, 7), (10, 5), (1, -3), (4, -3), (5, -1), (20, -1), q=1))
_add("blk.73134.lambert", "q E^5(-q^5)/E(-q) + 4q^2 E^5(q^10)/E(q^2) = -sum (n/5) (-q)^n/(1+(-q)^n)^2",
     _lhs_731, _sum_733)
_add("blk.73134.div", "-sum (n/5) (-q)^n/(1+(-q)^n)^2 = sum_n sum_{d|n} (-1)^(n+d) d ((n/d)/5) q^n",
     _sum_733, lambda c: c.divisor("K10"))
_add("blk.73538", "-(E^5(q)/E(q^5) - E^5(q^2)/E(q^10))/5 = q psi^2(q^5) E^5(q^2) / (psi^2(q) E(q^10))",
     _lhs_735, lambda c: c.q(1) * c.psi(5) ** 2 * _B5(c) / c.psi() ** 2)
_add("blk.73538.eta", "-(E^5(q)/E(q^5) - E^5(q^2)/E(q^10))/5 = q E^2(q)E(q^2)E^3(q^10) / E^2(q^5)",
     _lhs_735, lambda c: c.eta((1, 2), (2, 1), (10, 3), (5, -2), q=1))
_add("blk.73538.lambert", "-(E^5(q)/E(q^5) - E^5(q^2)/E(q^10))/5 = sum (n/5) n q^n/(1-q^(2n))",
     _lhs_735, _sum_737)
_add("blk.73538.div", "sum (n/5) n q^n/(1-q^(2n)) = sum_n sum_{d|n} d (d/5) [n/d odd] q^n",
     _sum_737, lambda c: c.divisor("K11"))
_add("blk.73942", "q E^5(q^5)/E(q) + q^2 E^5(q^10)/E(q^2) = q psi^2(q) E^5(q^10) / (psi^2(q^5) E(q^2))",
     _lhs_739, lambda c: c.q(1) * c.psi() ** 2 * c.eta((10, 5), (2, -1)) / c.psi(5) ** 2)
_add("blk.73942.eta", "q E^5(q^5)/E(q) + q^2 E^5(q^10)/E(q^2) = q E^3(q^2)E^2(q^5)E(q^10) / E^2(q)",
     _lhs_739, lambda c: c.eta((2, 3), (5, 2), (10, 1), (1, -2), q=1))
_add("blk.73942.lambert", "q E^5(q^5)/E(q) + q^2 E^5(q^10)/E(q^2) = sum_{n odd} (n/5) q^n/(1-q^n)^2",
     _lhs_739, _sum_741)
_add("blk.73942.div", "sum_{n odd} (n/5) q^n/(1-q^n)^2 = sum_n sum_{d|n} [d odd] (d/5) (n/d) q^n",
     _sum_741, lambda c: c.divisor("K12"))
_add("cor7_3.e1", "phi(q)phi^3(q^5) = 1 + sum (n/5) n q^n/(1-(-q)^n) - sum (n/5) (-q)^n/(1+(-q)^n)^2",
     lambda c: c.phi() * c.phi(5) ** 3, lambda c: _sum_729(c) + _sum_733(c) + 1)
_add("cor7_3.e2", "phi^3(q)phi(q^5) = 1 + sum (n/5) n q^n/(1-(-q)^n) - 5 sum (n/5) (-q)^n/(1+(-q)^n)^2",
     lambda c: c.phi() ** 3 * c.phi(5), lambda c: _sum_729(c) + _sum_733(c) * 5 + 1)
_add("cor7_3.e3", "4q psi^3(q)psi(q^5) = -sum (n/5) n q^n/(1-q^(2n)) + 5 sum_{n odd} (n/5) q^n/(1-q^n)^2",
     lambda c: c.q(1, 4) * c.psi() ** 3 * c.psi(5), lambda c: _sum_741(c) * 5 - _sum_737(c))
_add("cor7_3.e4", "4q^2 psi(q)psi^3(q^5) = -sum (n/5) n q^n/(1-q^(2n)) + sum_{n odd} (n/5) q^n/(1-q^n)^2",
     lambda c: c.q(2, 4) * c.psi() * c.psi(5) ** 3, lambda c: _sum_741(c) - _sum_737(c))
_add("cor7_2.signs",
     "[q^n] phi^3(q)phi(q^5) > 0, [q^n] psi^3(q)psi(q^5) > 0, [q^n] phi(q)phi^3(q^5) = 0 iff n = 2,3 (mod 5), "
     "[q^n] psi(q)psi^3(q^5) = 0 iff n = 2,4 (mod 5)",
     _cor72_indicator, lambda c: c.ones())
_add("count.quat.A", "phi(q)phi^3(q^5) coefficients: closed form = enumeration of x^2+5y^2+5z^2+5w^2",
     lambda c: repcount.diag4_theta((1, 5, 5, 5), c.M), lambda c: c.fn(lambda n: closedform.rep_quat("A", n), 1))
_add("count.quat.B", "phi^3(q)phi(q^5) coefficients: closed form = enumeration of 5x^2+y^2+z^2+w^2",
     lambda c: repcount.diag4_theta((5, 1, 1, 1), c.M), lambda c: c.fn(lambda n: closedform.rep_quat("B", n), 1))
_add("count.quat.C", "4q psi^3(q)psi(q^5) coefficients: closed form = triangular-number enumeration",
     lambda c: (c.q(1, 4) * repcount.tri_theta((1, 1, 1, 5), c.M)).truncate(c.M),
     lambda c: c.fn(lambda n: closedform.rep_quat("C", n)))
_add("count.quat.D", "4q^2 psi(q)psi^3(q^5) coefficients: closed form = triangular-number enumeration",
     lambda c: (c.q(2, 4) * repcount.tri_theta((1, 5, 5, 5), c.M)).truncate(c.M),
     lambda c: c.fn(lambda n: closedform.rep_quat("D", n)))

# -- outlook identities ---------------------------------------------------------

_add("sec8.sextenary",
     "7phi^3(-q)phi^3(-q^7) = -49(q^2 E^7(q^7)/E(q) + q E^3(q)E^3(q^7)) "
     "+ 56(7q^4 E^7(q^14)/E(q^2) + q^2 E^3(q^2)E^3(q^14)) - E^7(q)/E(q^7) + 8E^7(q^2)/E(q^14)",
     lambda c: (c.phi(1, -1) * c.phi(7, -1)) ** 3 * 7,
     lambda c: (c.eta((7, 7), (1, -1), q=2) + c.eta((1, 3), (7, 3), q=1)) * -49
     + (c.eta((14, 7), (2, -1), q=4) * 7 + c.eta((2, 3), (14, 3), q=2)) * 56
     - c.eta((1, 7), (7, -1)) + c.eta((2, 7), (14, -1)) * 8)
_add("sec8.ineq.psi", "[q^n] (psi^3(q)psi^3(q^7) - q E^7(q^14)/E(q^2)) >= 0",
     lambda c: _indicator(c, (c.psi() * c.psi(7)) ** 3 - c.eta((14, 7), (2, -1), q=1), lambda x: x >= 0),
     lambda c: c.ones())
_add("sec8.ineq.phi", "[q^n] (phi^3(q)phi^3(q^7) + q^7 - q^2 E^7(q^7)/E(q)) >= 0",
     lambda c: _indicator(c, (c.phi() * c.phi(7)) ** 3 + c.q(7) - c.eta((7, 7), (1, -1), q=2), lambda x: x >= 0),
     lambda c: c.ones())
_add("sec8.phi5phi3",
     "phi^5(q)phi(q^3) = 1 + sum_n sum_{d|n} (-1)^(n+d) d^2 (d/3) q^n + 9 sum_n sum_{d|n} (-1)^(n+d) d^2 ((n/d)/3) q^n",
     lambda c: c.phi() ** 5 * c.phi(3),
     lambda c: c.divisor("K14", 1) + c.divisor("K15", 0, 9))
_add("sec8.phiphi5_3",
     "phi(q)phi^5(q^3) = 1 + sum_n sum_{d|n} (-1)^(n+d) d^2 (d/3) q^n + sum_n sum_{d|n} (-1)^(n+d) d^2 ((n/d)/3) q^n",
     lambda c: c.phi() * c.phi(3) ** 5,
     lambda c: c.divisor("K14", 1) + c.divisor("K15"))
_add("thm81.coeffs", "q E^4(q^16)/(E(q^32)E(q^8)) coefficients: closed form = series",
     lambda c: c.eta((16, 4), (32, -1), (8, -1), q=1),
     lambda c: c.fn(closedform.thm81_coeff))
_add("sec8.hecke_t2", "T_2(-Q(-q)) = E^2(q^6)E^2(q^10)/(E(q^2)E(q^30)), read with T_2 = U_2",
     _hecke_lhs,
     lambda c: c.eta((6, 2), (10, 2), (2, -1), (30, -1)),
     expectation=EXPLORATORY)
_add("sec8.remarkable",
     "q (Qt(2,0,7) + Qt(3,2,5)) E^2(q^2)E^2(q^28) = (Qt(1,0,14) - Qt(3,2,5)) E^2(q^4)E^2(q^14), "
     "Qt(a,b,c) = sum q^(an^2+bnm+cm^2)",
     lambda c: c.q(1) * (c.bqf(2, 0, 7) + c.bqf(3, 2, 5)) * c.eta((2, 2), (28, 2)),
     lambda c: (c.bqf(1, 0, 14) - c.bqf(3, 2, 5)) * c.eta((4, 2), (14, 2)))

_ENTRIES.sort(key=lambda e: e.id)
_BY_ID: Dict[str, IdentityEntry] = {e.id: e for e in _ENTRIES}
if len(_BY_ID) != len(_ENTRIES):
    raise RuntimeError("duplicate identity id in catalog")


# -- engine ----------------------------------------------------------------------

def catalog() -> List[IdentityEntry]:
    """Every registered identity, ordered by id."""
    return list(_ENTRIES)


def get(id: str) -> IdentityEntry:
    try:
        return _BY_ID[id]
    except KeyError:
        raise KeyError(f"unknown identity {id!r}") from None


def verify(id: str, N: Optional[int] = None) -> VerificationReport:
    entry = get(id)
    if N is None:
        N = entry.default_order
    if N < 0:
        raise ValueError("order must be nonnegative")
    start = time.perf_counter()
    ctx = entry.context(N)
    lhs = entry.lhs_builder(ctx)
    rhs = entry.rhs_builder(ctx)
    ok, k = equal_upto(lhs, rhs, N)
    note = ""
    if ok and entry.expectation == MUST_PASS and entry.integral:
        bad = [x for x in (lhs.truncate(N).first_non_integral(), rhs.truncate(N).first_non_integral())
               if x is not None]
        if bad:
            ok, k, note = False, min(bad), "non-integral coefficient"
    elapsed = int((time.perf_counter() - start) * 1000)
    exploratory = entry.expectation == EXPLORATORY
    if ok:
        status = "exploratory-pass" if exploratory else "pass"
        return VerificationReport(id, entry.paper_ref, status, N, elapsed_ms=elapsed)
    status = "exploratory-fail" if exploratory else "fail"
    return VerificationReport(id, entry.paper_ref, status, N, k,
                              _safe_coeff(lhs, k), _safe_coeff(rhs, k), elapsed, note)


def _safe_coeff(s: LaurentSeries, k: int) -> Fraction:
    if k < s.min_exp:
        return Fraction(0)
    return s.coeff(k)


def _verify_worker(args):
    id, N = args
    return verify(id, N)


def verify_all(N: Optional[int] = None, parallel: bool = False,
               ids: Optional[List[str]] = None) -> List[VerificationReport]:
    """Verify every entry (or the listed ids); reports come back in id order."""
    todo = [e.id for e in _ENTRIES] if ids is None else sorted(ids)
    for i in todo:
        get(i)
    jobs = [(i, N) for i in todo]
    if parallel and len(jobs) > 1:
        with ProcessPoolExecutor() as pool:
            return list(pool.map(_verify_worker, jobs))
    return [_verify_worker(j) for j in jobs]


def must_pass_failures(reports: List[VerificationReport]) -> List[VerificationReport]:
    return [r for r in reports if r.status == "fail"]


def report_json(reports: List[VerificationReport], order: Optional[int] = None) -> str:
    if order is None:
        orders = {r.order for r in reports}
        order = orders.pop() if len(orders) == 1 else None
    return json.dumps({"order": order, "results": [r.to_dict() for r in reports]}, indent=2)
