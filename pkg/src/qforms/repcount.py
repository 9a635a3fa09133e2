"""Representation counts by direct lattice enumeration.

These routines never touch products or Lambert sums, so they serve as
an independent oracle for both.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Sequence

from .series import LaurentSeries, SeriesError


@dataclass(frozen=True)
class BinaryForm:
    """a x^2 + b x y + c y^2, positive definite."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a <= 0 or self.b * self.b - 4 * self.a * self.c >= 0:
            raise SeriesError(f"indefinite form ({self.a}, {self.b}, {self.c})")

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y


@dataclass(frozen=True)
class DiagQuaternaryForm:
    d1: int
    d2: int
    d3: int
    d4: int

    def __post_init__(self):
        if min(self.weights) < 1:
            raise ValueError("diagonal coefficients must be positive")

    @property
    def weights(self):
        return (self.d1, self.d2, self.d3, self.d4)


def bqf_counts(Q: BinaryForm, N: int) -> list:
    """counts[n] = #{(x, y) : Q(x, y) = n} for 0 <= n <= N."""
    a, b, c = Q.a, Q.b, Q.c
    D = 4 * a * c - b * b
    counts = [0] * (N + 1)
    ymax = isqrt(4 * a * N // D)
    for y in range(-ymax, ymax + 1):
        # a x^2 + b y x + c y^2 <= N  <=>  (2 a x + b y)^2 <= 4 a N - D y^2
        disc = 4 * a * N - D * y * y
        if disc < 0:
            continue
        r = isqrt(disc)
        # 2 a x + b y in [-r, r]
        xlo = -((r + b * y) // (2 * a))
        xhi = (r - b * y) // (2 * a)
        cy = c * y * y
        by = b * y
        for x in range(xlo, xhi + 1):
            v = a * x * x + by * x + cy
            if v <= N:
                counts[v] += 1
    return counts


def bqf_theta(Q: BinaryForm, N: int) -> LaurentSeries:
    """Theta series of a positive definite binary form, by enumeration."""
    if not isinstance(Q, BinaryForm):
        Q = BinaryForm(*Q)
    return LaurentSeries(bqf_counts(Q, N), 0, N)


def _square_counts(d: int, N: int) -> list:
    """Number of integers x with d x^2 = n."""
    out = [0] * (N + 1)
    out[0] = 1
    x = 1
    while d * x * x <= N:
        out[d * x * x] += 2
        x += 1
    return out


def _triangular_counts(w: int, N: int) -> list:
    """Number of t >= 0 with w t(t+1)/2 = n."""
    out = [0] * (N + 1)
    t = 0
    while w * t * (t + 1) // 2 <= N:
        out[w * t * (t + 1) // 2] += 1
        t += 1
    return out


def _count_tuples(lists: Sequence[list], N: int) -> list:
    """Enumerate tuples of values, one from each sparse list, summing <= N."""
    supports = [[(v, m) for v, m in enumerate(lst) if m] for lst in lists]
    counts = [0] * (N + 1)

    def walk(i, total, mult):
        if i == len(supports) - 1:
            for v, m in supports[i]:
                if total + v > N:
                    break
                counts[total + v] += mult * m
            return
        for v, m in supports[i]:
            if total + v > N:
                break
            walk(i + 1, total + v, mult * m)

    walk(0, 0, 1)
    return counts


def diag4_theta(F, N: int) -> LaurentSeries:
    """Count integer 4-tuples with sum d_i x_i^2 = n."""
    if not isinstance(F, DiagQuaternaryForm):
        F = DiagQuaternaryForm(*F)
    return LaurentSeries(_count_tuples([_square_counts(d, N) for d in F.weights], N), 0, N)


def tri_theta(weights: Sequence[int], N: int) -> LaurentSeries:
    """Count tuples of triangular numbers T_i with sum w_i T_i = n."""
    if not weights or min(weights) < 1:
        raise ValueError("weights must be positive")
    return LaurentSeries(_count_tuples([_triangular_counts(w, N) for w in weights], N), 0, N)


def hadamard(s: LaurentSeries, t: LaurentSeries) -> LaurentSeries:
    """Coefficientwise product on the common tracked range."""
    lo = max(s.min_exp, t.min_exp)
    hi = min(s.order, t.order)
    return LaurentSeries([s.coeff(n) * t.coeff(n) for n in range(lo, hi + 1)], lo, hi)
