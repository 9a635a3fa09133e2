"""Brute-force reference computations used to freeze test values.

Everything here works on plain Python integer lists and direct loops so
that it shares no code with the package under test.
"""

from math import isqrt


def poly_mul(a, b, N):
    out = [0] * (N + 1)
    for i, x in enumerate(a[:N + 1]):
        if x:
            for j, y in enumerate(b[:N + 1 - i]):
                out[i + j] += x * y
    return out


def euler_product(k, N):
    """prod_{n>=1} (1 - q^(kn)) multiplied out factor by factor."""
    c = [1] + [0] * N
    for m in range(k, N + 1, k):
        c = poly_mul(c, [1] + [0] * (m - 1) + [-1], N)
    return c


def eta_quotient(factors, N, q_power=0):
    """q^q_power prod E(q^k)^e, dividing by (1 - q^m) through prefix sums."""
    c = [1] + [0] * N
    for k, e in factors:
        for m in range(k, N + 1, k):
            for _ in range(abs(e)):
                if e > 0:
                    c = [c[i] - (c[i - m] if i >= m else 0) for i in range(N + 1)]
                else:
                    for i in range(m, N + 1):
                        c[i] += c[i - m]
    return [0] * q_power + c[:N + 1 - q_power]


def theta_sum(ea, sa, eb, sb, N):
    """f(sa q^ea, sb q^eb) = sum_n a^(n(n+1)/2) b^(n(n-1)/2), brute force over |n| <= N+2."""
    c = [0] * (N + 1)
    for n in range(-N - 2, N + 3):
        t1, t0 = n * (n + 1) // 2, n * (n - 1) // 2
        e = ea * t1 + eb * t0
        if 0 <= e <= N:
            c[e] += sa ** (t1 % 2) * sb ** (t0 % 2)
    return c


def phi(k, N):
    c = [0] * (N + 1)
    for x in range(-isqrt(N // k) - 1, isqrt(N // k) + 2):
        if k * x * x <= N:
            c[k * x * x] += 1
    return c


def psi(k, N):
    c = [0] * (N + 1)
    n = 0
    while k * n * (n + 1) // 2 <= N:
        c[k * n * (n + 1) // 2] += 1
        n += 1
    return c


def form_counts(a, b, c, N):
    """#{(x, y) : a x^2 + b x y + c y^2 = n} by scanning a box."""
    D = 4 * a * c - b * b
    bound = isqrt(4 * max(a, c) * N // D) + 1
    out = [0] * (N + 1)
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            v = a * x * x + b * x * y + c * y * y
            if v <= N:
                out[v] += 1
    return out


def diag_counts(weights, N):
    """#{integer tuples : sum w_i x_i^2 = n} by nested scanning."""
    out = [1] + [0] * N
    for w in weights:
        out = poly_mul(out, phi(w, N), N)
    return out


def triangular_counts(weights, N):
    out = [1] + [0] * N
    for w in weights:
        out = poly_mul(out, psi(w, N), N)
    return out


def legendre(a, p):
    """Euler's criterion at an odd prime."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def kronecker(a, m):
    """(a/m) for m >= 1 as a product over the prime factors of m."""
    val = 1
    for p in prime_factors(m):
        if p == 2:
            val *= 0 if a % 2 == 0 else (1 if a % 8 in (1, 7) else -1)
        else:
            val *= legendre(a, p)
    return val


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def lambert_term_series(terms, N):
    """Sum of c * q^e / (1 - s q^m) over (c, e, s, m) with m > 0, as geometric series."""
    out = [0] * (N + 1)
    for c, e, s, m in terms:
        j = 0
        while e + m * j <= N:
            if e + m * j >= 0:
                out[e + m * j] += c * s ** j
            j += 1
    return out
