import pytest

import oracles
from qforms import arith, closedform as cf, qfunctions as qf
from qforms.repcount import tri_theta

M = 1500
BINARY = {
    "r2": (1, 0, 1), "rep_1_0_5": (1, 0, 5), "rep_2_2_3": (2, 2, 3), "rep_1_0_6": (1, 0, 6),
    "rep_2_0_3": (2, 0, 3), "rep_1_0_15": (1, 0, 15), "rep_3_0_5": (3, 0, 5),
    "rep_1_0_27": (1, 0, 27), "rep_4_2_7": (4, 2, 7),
}


@pytest.mark.parametrize("name", sorted(BINARY))
def test_binary_formulas_match_enumeration(name):
    counts = oracles.form_counts(*BINARY[name], M)
    func = cf.FORMULAS[name]
    assert [func(n) for n in range(1, M + 1)] == counts[1:]


def test_formula_examples():
    assert cf.r2(5) == 8 and cf.r2(3) == 0 and cf.r2(25) == 12
    assert cf.rep_1_0_5(21) == 8 and cf.rep_1_0_5(3) == 0 and cf.rep_2_2_3(2) == 2
    assert cf.rep_1_0_6(6) == 2 and cf.rep_1_0_6(5) == 0 and cf.rep_2_0_3(5) == 4
    assert cf.rep_1_0_15(16) == 6 and cf.rep_1_0_15(2) == 0 and cf.rep_3_0_5(8) == 4
    assert cf.rep_1_0_27(7) == 0 and cf.rep_4_2_7(7) == 2
    assert cf.rep_1_0_27(28) == 4 and cf.rep_1_0_27(31) == 4


def test_power_of_two_factor_in_fifteen_family():
    # |alpha - 1| vanishes at alpha = 1 only; checked for every n = 2^alpha * m
    counts = oracles.form_counts(1, 0, 15, 2 ** 5 * 31)
    for alpha in range(6):
        for m in (1, 7, 17, 19, 31):
            n = 2 ** alpha * m
            assert cf.rep_1_0_15(n) == counts[n], n


def test_exactly_divisible_by_three_is_never_represented_by_the_27_forms():
    a = oracles.form_counts(1, 0, 27, M)
    b = oracles.form_counts(4, 2, 7, M)
    for n in range(3, M + 1, 3):
        if n % 9:
            assert cf.rep_1_0_27(n) == a[n] == 0
            assert cf.rep_4_2_7(n) == b[n] == 0


def test_quaternary_examples():
    assert cf.rep_quat("A", 1) == 2 and cf.rep_quat("B", 1) == 6
    assert cf.rep_quat("C", 1) == 4 and cf.rep_quat("A", 2) == 0


def test_quaternary_formulas_match_enumeration():
    n_max = 400
    A = oracles.diag_counts((1, 5, 5, 5), n_max)
    B = oracles.diag_counts((1, 1, 1, 5), n_max)
    C = oracles.triangular_counts((1, 1, 1, 5), n_max)
    D = oracles.triangular_counts((1, 5, 5, 5), n_max)
    for n in range(1, n_max + 1):
        assert cf.rep_quat("A", n) == A[n]
        assert cf.rep_quat("B", n) == B[n]
        assert cf.rep_quat("C", n) == 4 * C[n - 1]
        assert cf.rep_quat("D", n) == (4 * D[n - 2] if n >= 2 else 0)
    with pytest.raises(ValueError):
        cf.rep_quat("E", 3)


def test_thm81_examples_and_series():
    assert cf.thm81_coeff(1) == 1 and cf.thm81_coeff(17) == -2 and cf.thm81_coeff(2) == 0
    s = oracles.eta_quotient(((16, 4), (32, -1), (8, -1)), 700, 1)
    assert [cf.thm81_coeff(n) for n in range(1, 701)] == s[1:]


def test_williams_examples():
    assert cf.williams_atilde(1) == 2
    assert cf.williams_atilde(2) == -2
    assert cf.williams_atilde(4) == 2


def test_eta_coefficient_formulas_match_series():
    n_max = 600
    d = oracles.eta_quotient(((6, 1), (18, 1)), n_max, 1)
    e5 = oracles.eta_quotient(((1, 5), (5, -1)), n_max)
    e5d = oracles.eta_quotient(((5, 5), (1, -1)), n_max, 1)
    pp3 = oracles.poly_mul(oracles.phi(1, n_max), oracles.phi(3, n_max), n_max)
    for n in range(1, n_max + 1):
        assert cf.eta_6_18_coeff(n) == d[n]
        assert cf.eta5_coeff(n) == e5[n]
        assert cf.eta5_dual_coeff(n) == e5d[n]
        assert cf.phi_phi3_coeff(n) == pp3[n]


def test_doubling_links_the_two_discriminant_minus_twenty_forms():
    for n in range(1, 2000):
        assert cf.rep_2_2_3(n) == cf.rep_1_0_5(2 * n)


def test_divisor_sum_splits_reconstruct_counts():
    for n in range(1, 800):
        k1, k2 = arith.divisor_sum(n, "K1"), arith.divisor_sum(n, "K2")
        assert cf.rep_1_0_5(n) == k1 + k2
        assert cf.rep_2_2_3(n) == k1 - k2
        k3, k4 = arith.divisor_sum(n, "K3"), arith.divisor_sum(n, "K4")
        assert cf.rep_1_0_6(n) == k3 + k4
        assert cf.rep_2_0_3(n) == k3 - k4


def test_prime_power_examples():
    assert cf.coeff_prime_power("B315", 3, 2) == 3
    assert cf.coeff_prime_power("C316", 2, 3) == -1
    assert cf.coeff_prime_power("D618", 7, 1) == -1
    with pytest.raises(ValueError):
        cf.coeff_prime_power("B315", 4, 1)
    with pytest.raises(ValueError):
        cf.coeff_prime_power("Z999", 3, 1)


@pytest.mark.parametrize("table", sorted(cf.TABLE_KERNELS))
def test_prime_power_tables_match_divisor_sums(table):
    kernel = cf.TABLE_KERNELS[table]
    for p in arith.primes_upto(60):
        for a in range(4):
            assert cf.coeff_prime_power(table, p, a) == arith.divisor_sum(p ** a, kernel), (p, a)


def test_evaluate_reports_classification():
    r = cf.evaluate("rep_1_0_5", 21)
    assert r.value == 8 and r.scheme.scheme == "MOD20" and r.scheme.t == 2
    with pytest.raises(ValueError, match="unknown formula"):
        cf.evaluate("nope", 3)
    with pytest.raises(ValueError):
        cf.r2(0)
