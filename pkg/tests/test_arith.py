import pytest
from hypothesis import given, strategies as st

import oracles
from qforms import arith, qfunctions as qf
from qforms.lambert import disc, expand, lambert, modulus
from qforms.series import LaurentSeries, SeriesError, one


def test_kronecker_examples():
    assert arith.kronecker(5, 2) == -1
    assert arith.kronecker(-4, 7) == -1
    for n in (-20, -1, 0, 3, 17):
        assert arith.kronecker(n, 1) == 1


def test_kronecker_matches_oracle_for_small_arguments():
    for m in range(1, 120):
        for n in range(-60, 60):
            assert arith.kronecker(n, m) == oracles.kronecker(n, m), (n, m)


def test_kronecker_is_completely_multiplicative_in_both_arguments():
    r = range(1, 201)
    for a in (-20, -15, -4, -3, 5, 7, 12):
        for b in r:
            for c in range(1, 201 // b + 1):
                assert arith.kronecker(a, b * c) == arith.kronecker(a, b) * arith.kronecker(a, c)
    for c in (3, 5, 8, 15, 20, 24):
        for a in range(-100, 101):
            for b in range(-3, 4):
                assert arith.kronecker(a * b, c) == arith.kronecker(a, c) * arith.kronecker(b, c)


def test_factorize_examples():
    assert list(arith.factorize(21)) == [(3, 1), (7, 1)]
    assert list(arith.factorize(1)) == []
    assert list(arith.factorize(2520)) == [(2, 3), (3, 2), (5, 1), (7, 1)]


@given(st.integers(1, 10 ** 7))
def test_factorization_multiplies_back(n):
    f = arith.factorize(n)
    prod = 1
    for p, e in f:
        assert arith.is_prime(p)
        prod *= p ** e
    assert prod == n
    assert sorted(f.divisors()) == sorted(d for d in f.divisors())
    assert len(f.divisors()) == len(set(f.divisors()))


def test_divisors_match_scan():
    for n in range(1, 300):
        assert sorted(arith.factorize(n).divisors()) == oracles.divisors(n)


def test_primes_upto_agrees_with_is_prime():
    assert arith.primes_upto(1000) == [p for p in range(2, 1001) if arith.is_prime(p)]
    assert arith.primes_upto(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_cubic_residue_examples():
    assert arith.cubic_residue_2(31) is True
    assert arith.cubic_residue_2(7) is False
    assert arith.cubic_residue_2(13) is False
    with pytest.raises(ValueError, match="inapplicable prime"):
        arith.cubic_residue_2(5)


def test_quartic_class_examples():
    assert arith.quartic_class_2(17) == -1
    assert arith.quartic_class_2(73) == 1
    # 2^22 = 1 (mod 89), so 89 is in the +1 class
    assert pow(2, 22, 89) == 1
    assert arith.quartic_class_2(89) == 1
    with pytest.raises(ValueError, match="inapplicable prime"):
        arith.quartic_class_2(13)


def test_classify_examples():
    c = arith.classify("MOD20", 21)
    assert sorted(p for p, lab in c.labels.items() if lab == "r") == [3, 7]
    assert c.t == 2 and c.alpha == 0
    c = arith.classify("MOD15", 4)
    assert c.alpha == 2 and c.t == 0
    assert [p for p in c.labels if p != 2] == []
    c = arith.classify("CUBIC27", 31)
    assert c.labels[31] == "p" and c.group("p") == [1]


def test_classify_rejects_unknown_scheme():
    with pytest.raises(ValueError):
        arith.classify("MOD7", 10)


def test_kernel_examples():
    assert arith.divisor_sum(3, "K1") == 2
    assert arith.divisor_sum(3, "K2") == -2
    assert arith.divisor_sum(1, "K7") == 1


@pytest.mark.parametrize("kernel", sorted(arith.KERNELS, key=lambda k: int(k[1:])))
def test_divisor_series_matches_divisor_sum(kernel):
    s = arith.divisor_series(kernel, 200)
    assert s.int_coefficients()[1:] == [arith.divisor_sum(n, kernel) for n in range(1, 201)]


def test_kernels_match_lambert_expansions():
    N = 300
    pairs = [
        ("K1", lambert(1, 0, 1, 0, character=disc(-20))),
        ("K3", lambert(1, 0, 1, 0, character=disc(-24))),
        ("K8", lambert(1, 0, 1, 0, character=disc(-4))),
        ("K7", lambert(1, 0, 1, 0, character=modulus(5), weight=1)),
    ]
    for kernel, spec in pairs:
        assert expand(spec, N).int_coefficients()[1:] == arith.divisor_series(kernel, N).int_coefficients()[1:]


def test_kernels_match_naive_divisor_loops():
    for n in range(1, 150):
        ds = oracles.divisors(n)
        assert arith.divisor_sum(n, "K1") == sum(oracles.kronecker(-20, d) for d in ds)
        assert arith.divisor_sum(n, "K2") == sum(oracles.kronecker(-4, d) * oracles.kronecker(n // d, 5)
                                                 for d in ds)


def test_hecke_u2_takes_even_coefficients():
    s = qf.phi(1, 40)
    u = arith.hecke_u2(s)
    assert u.order == 20
    assert u.coeff(1) == s.coeff(2) == 0
    assert [u.coeff(n) for n in range(21)] == [s.coeff(2 * n) for n in range(21)]


def test_hecke_u2_insufficient_order():
    with pytest.raises(SeriesError, match="insufficient order"):
        arith.hecke_u2(qf.phi(1, 10), 6)


def test_check_multiplicative_on_known_quotients():
    s34 = qf.eta_quotient(qf.eta((2, 1), (4, 1), (5, 1), (10, 1), (1, -1), (20, -1)), 500)
    assert arith.check_multiplicative(s34, 500) == []
    d = qf.eta_quotient(qf.eta((6, 1), (18, 1), q_power=1), 500)
    assert arith.check_multiplicative(d, 500) == []


def test_check_multiplicative_flags_violations():
    s = LaurentSeries([0, 1, 1, 1, 0, 0, 5], 0, 6)
    assert arith.check_multiplicative(s, 6) == [(2, 3)]


def test_check_multiplicative_needs_normalized_series():
    with pytest.raises(ValueError, match="not normalized"):
        arith.check_multiplicative(one(20), 20)
