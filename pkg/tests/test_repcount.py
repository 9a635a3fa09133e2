import pytest
from hypothesis import given, settings, strategies as st

import oracles
from qforms import arith, qfunctions as qf
from qforms.repcount import (BinaryForm, DiagQuaternaryForm, bqf_counts, bqf_theta, diag4_theta,
                             hadamard, tri_theta)
from qforms.series import SeriesError, compose_power

N = 300
FORMS = [(1, 0, 1), (1, 0, 5), (2, 2, 3), (1, 0, 6), (2, 0, 3), (1, 0, 15), (3, 0, 5),
         (1, 0, 27), (4, 2, 7), (7, 2, 4), (2, 1, 3)]


@pytest.mark.parametrize("form", FORMS)
def test_binary_counts_match_box_scan(form):
    assert bqf_counts(BinaryForm(*form), N) == oracles.form_counts(*form, N)


def test_indefinite_forms_are_rejected():
    with pytest.raises(SeriesError, match="indefinite form"):
        BinaryForm(1, 3, 1)
    with pytest.raises(SeriesError, match="indefinite form"):
        BinaryForm(-1, 0, -1)


def test_sum_of_two_squares_is_four_times_divisor_character_sum():
    s = bqf_theta(BinaryForm(1, 0, 1), N)
    assert s.coeff(0) == 1
    assert all(s.coeff(n) == 4 * arith.divisor_sum(n, "K8") for n in range(1, N + 1))


@settings(max_examples=40)
@given(st.integers(1, 6), st.integers(-6, 6), st.integers(1, 9))
def test_unimodular_change_preserves_counts(a, b, c):
    if b * b - 4 * a * c >= 0:
        return
    s = bqf_theta(BinaryForm(a, b, c), 120)
    assert s == bqf_theta(BinaryForm(a, b + 2 * a, a + b + c), 120)


def test_diagonal_quaternary_equals_phi_product():
    M = 200
    want = qf.phi(1, M) * compose_power(qf.phi(1, M), 5) ** 3
    assert diag4_theta((1, 5, 5, 5), M) == want
    assert diag4_theta(DiagQuaternaryForm(1, 1, 1, 5), M).int_coefficients() == oracles.diag_counts((1, 1, 1, 5), M)


@pytest.mark.parametrize("weights", [(1, 1, 1, 5), (1, 5, 5, 5), (1, 2), (3, 7, 7)])
def test_triangular_counts_equal_psi_products(weights):
    M = 200
    want = qf.psi(weights[0], M)
    for w in weights[1:]:
        want = want * qf.psi(w, M)
    assert tri_theta(weights, M) == want
    assert tri_theta(weights, M).int_coefficients() == oracles.triangular_counts(weights, M)


def test_invalid_weights_are_rejected():
    with pytest.raises(ValueError):
        DiagQuaternaryForm(1, 0, 1, 1)
    with pytest.raises(ValueError):
        tri_theta((), 10)


def test_forms_of_discriminant_minus_twenty_never_share_a_value():
    h = hadamard(bqf_theta(BinaryForm(1, 0, 5), 2000), bqf_theta(BinaryForm(2, 2, 3), 2000))
    assert all(h.coeff(n) == 0 for n in range(1, 2001))
