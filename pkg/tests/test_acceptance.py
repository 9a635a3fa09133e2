"""Acceptance criteria 1-10.

Each test records a one-line verdict; tests/conftest.py prints the lines
at the end of the run.  Running this file directly prints them as well.
"""

import time

import pytest

from qforms import arith, closedform as cf, qfunctions as qf, registry
from qforms.repcount import BinaryForm, bqf_counts, diag4_theta, tri_theta
from qforms.series import LaurentSeries

RESULTS = {}


def record(number, ok, detail):
    RESULTS[number] = (ok, detail)
    return ok


def _coeffs(s: LaurentSeries, N: int):
    return [int(s.coeff(n)) if n >= s.min_exp else 0 for n in range(N + 1)]


# -- 1 -------------------------------------------------------------------------

def test_criterion_1_full_catalog_verifies_at_order_512():
    start = time.perf_counter()
    reports = registry.verify_all(512)
    elapsed = time.perf_counter() - start
    failures = registry.must_pass_failures(reports)
    ok = not failures and elapsed < 120
    record(1, ok, f"{len(reports)} entries, {len(failures)} MUST_PASS failures, {elapsed:.1f}s")
    assert not failures, [f.id for f in failures]
    assert elapsed < 120


# -- 2 -------------------------------------------------------------------------

def _product_side(form, N):
    """Theta series of each form as a product of theta functions."""
    phi, psi = qf.phi, qf.psi
    if form == (2, 2, 3):
        # y even gives 2(x+k)^2 + 10k^2; y odd gives 3 + 2m(m+1) + 10k(k+1)
        return phi(2, N) * phi(10, N) + (psi(4, N) * psi(20, N)).shift(3).truncate(N) * 4
    if form == (4, 2, 7):
        even = (phi(1, N) * phi(27, N) + qf.theta_f(qf.q_(1, -1), qf.q_(1, -1), N)
                * qf.theta_f(qf.q_(27, -1), qf.q_(27, -1), N)) / 2
        return even + (psi(2, N) * psi(54, N)).shift(7).truncate(N) * 2
    a, _, c = form
    return phi(a, N) * phi(c, N)


FORMS = {(1, 0, 1): "r2", (1, 0, 5): "rep_1_0_5", (2, 2, 3): "rep_2_2_3", (1, 0, 6): "rep_1_0_6",
         (2, 0, 3): "rep_2_0_3", (1, 0, 15): "rep_1_0_15", (3, 0, 5): "rep_3_0_5",
         (1, 0, 27): "rep_1_0_27", (4, 2, 7): "rep_4_2_7"}
_criterion2 = {}


@pytest.mark.parametrize("form", list(FORMS))
def test_criterion_2_three_way_representation_counts(form):
    N = 20000
    start = time.perf_counter()
    func = cf.FORMULAS[FORMS[form]]
    closed = [func(n) for n in range(1, N + 1)]
    lattice = bqf_counts(BinaryForm(*form), N)[1:]
    product = _coeffs(_product_side(form, N), N)[1:]
    elapsed = time.perf_counter() - start
    bad = [n for n in range(1, N + 1) if not closed[n - 1] == lattice[n - 1] == product[n - 1]]
    _criterion2[form] = (not bad and elapsed < 60, elapsed, bad[:1])
    ok = len(_criterion2) == len(FORMS) and all(v[0] for v in _criterion2.values())
    slowest = max(v[1] for v in _criterion2.values())
    failing = [f for f, v in _criterion2.items() if not v[0]]
    record(2, ok, f"{len(_criterion2)}/9 forms checked to n={N}, slowest {slowest:.1f}s"
           + (f", disagreements in {failing}" if failing else ""))
    assert not bad, (form, bad[:5])
    assert elapsed < 60


# -- 3 -------------------------------------------------------------------------

def test_criterion_3_quaternary_formulas_match_enumeration():
    N = 2000
    A = _coeffs(diag4_theta((1, 5, 5, 5), N), N)
    B = _coeffs(diag4_theta((1, 1, 1, 5), N), N)
    C = _coeffs(tri_theta((1, 1, 1, 5), N), N)
    D = _coeffs(tri_theta((1, 5, 5, 5), N), N)
    bad = []
    for n in range(1, N + 1):
        want = {"A": A[n], "B": B[n], "C": 4 * C[n - 1], "D": 4 * D[n - 2] if n >= 2 else 0}
        bad += [(k, n) for k, v in want.items() if cf.rep_quat(k, n) != v]
    record(3, not bad, f"4 families to n={N}, {len(bad)} disagreements")
    assert not bad, bad[:5]


# -- 4 -------------------------------------------------------------------------

def _quaternary_series(N):
    phi1, phi5 = qf.phi(1, N), qf.phi(5, N)
    psi1, psi5 = qf.psi(1, N), qf.psi(5, N)
    return (_coeffs(phi1 ** 3 * phi5, N), _coeffs(psi1 ** 3 * psi5, N),
            _coeffs(phi1 * phi5 ** 3, N), _coeffs(psi1 * psi5 ** 3, N))


def test_criterion_4_sign_patterns_of_quaternary_coefficients():
    N = 2000
    b, c, a, d = _quaternary_series(N)
    checks = {
        "phi^3 phi5 > 0": all(x > 0 for x in b),
        "psi^3 psi5 > 0": all(x > 0 for x in c),
        "phi phi5^3 = 0 iff n = 2,3 (mod 5)": all((a[n] == 0) == (n % 5 in (2, 3)) for n in range(N + 1)),
        # the vanishing classes are n = 2, 4 (mod 5); see the strict xfail below for 2, 3
        "psi psi5^3 > 0 iff n != 2,4 (mod 5)": all((d[n] > 0) == (n % 5 not in (2, 4))
                                                    for n in range(N + 1)),
        "psi psi5^3 >= 0": all(x >= 0 for x in d),
    }
    failed = [k for k, v in checks.items() if not v]
    record(4, not failed, f"n <= {N}: " + ("all patterns hold" if not failed else f"failed {failed}")
           + "; literal 'iff 2,3' reading for psi psi5^3 is refuted (strict xfail)")
    assert not failed, failed


@pytest.mark.xfail(strict=True, reason="coefficients vanish for n = 2, 4 (mod 5), not 2, 3")
def test_criterion_4_literal_positivity_classes_for_psi_psi5_cubed():
    N = 2000
    d = _quaternary_series(N)[3]
    assert all((d[n] > 0) == (n % 5 in (2, 3)) for n in range(N + 1))


# -- 5 -------------------------------------------------------------------------

def test_criterion_5_sextenary_inequalities():
    N = 1000
    psi_side = qf.psi(1, N) ** 3 * qf.psi(7, N) ** 3 - qf.eta_quotient(qf.eta((14, 7), (2, -1), q_power=1), N)
    phi_side = (qf.phi(1, N) ** 3 * qf.phi(7, N) ** 3 + qf.q_(7).to_series(N)
                - qf.eta_quotient(qf.eta((7, 7), (1, -1), q_power=2), N))
    neg = [("psi", n) for n, x in enumerate(_coeffs(psi_side, N)) if x < 0]
    neg += [("phi", n) for n, x in enumerate(_coeffs(phi_side, N)) if x < 0]
    record(5, not neg, f"both inequalities for 0 <= n <= {N}, {len(neg)} negative coefficients")
    assert not neg, neg[:5]


# -- 6 -------------------------------------------------------------------------

def test_criterion_6_octic_coefficient_formula():
    N = 4096
    s = _coeffs(qf.eta_quotient(qf.eta((16, 4), (32, -1), (8, -1), q_power=1), N), N)
    bad = [n for n in range(1, N + 1) if cf.thm81_coeff(n) != s[n]]
    record(6, not bad, f"1 <= n <= {N}, {len(bad)} disagreements")
    assert not bad, bad[:5]


# -- 7 -------------------------------------------------------------------------

MULTIPLICATIVE = {
    "E2E4E5E10/(E1E20)": qf.eta((2, 1), (4, 1), (5, 1), (10, 1), (1, -1), (20, -1)),
    "qE1E2E10E20/(E4E5)": qf.eta((1, 1), (2, 1), (10, 1), (20, 1), (4, -1), (5, -1), q_power=1),
    "P6": qf.eta((2, 1), (3, 1), (8, 1), (12, 1), (1, -1), (24, -1)),
    "Q6": qf.eta((1, 1), (4, 1), (6, 1), (24, 1), (3, -1), (8, -1), q_power=1),
    "P15(-q)": qf.eta((2, 2), (6, 1), (10, 1), (30, 2), (1, -1), (4, -1), (15, -1), (60, -1)),
    "-Q15(-q)": qf.eta((2, 1), (6, 2), (10, 2), (30, 1), (3, -1), (5, -1), (12, -1), (20, -1), q_power=1),
    "Q15": qf.eta((2, 1), (3, 1), (5, 1), (30, 1), (6, -1), (10, -1), q_power=1),
    "E5E7": qf.eta((2, 5), (10, 7), (1, -1), (4, -1), (5, -3), (20, -3)),
    "E7E5": qf.eta((2, 7), (10, 5), (1, -3), (4, -3), (5, -1), (20, -1), q_power=1),
    "E2E1E3": qf.eta((1, 2), (2, 1), (10, 3), (5, -2), q_power=1),
    "E3E2E1": qf.eta((2, 3), (5, 2), (10, 1), (1, -2), q_power=1),
    "qE6E18": qf.eta((6, 1), (18, 1), q_power=1),
}


def test_criterion_7_eta_quotients_are_multiplicative():
    N = 2000
    bad = {}
    for name, spec in MULTIPLICATIVE.items():
        v = arith.check_multiplicative(qf.eta_quotient(spec, N), N)
        if v:
            bad[name] = v[:3]
    record(7, not bad, f"{len(MULTIPLICATIVE)} eta-quotients to N={N}, violations in {sorted(bad) or 'none'}")
    assert not bad, bad


# -- 8 -------------------------------------------------------------------------

def test_criterion_8_hecke_recursion_and_prime_trichotomy():
    N = 2048
    d = _coeffs(qf.eta_quotient(qf.eta((6, 1), (18, 1), q_power=1), N), N)
    bad = []
    checked = 0
    for p in arith.primes_upto(N):
        s = 0
        while p ** (s + 2) <= N:
            checked += 1
            if d[p ** (s + 2)] != d[p] * d[p ** (s + 1)] - arith.kronecker(-108, p) * d[p ** s]:
                bad.append((p, s))
            s += 1
    for p in arith.primes_upto(200):
        if p % 3 == 1:
            want = 2 if arith.cubic_residue_2(p) else -1
        else:
            want = 0
        if d[p] != want:
            bad.append(("d(p)", p))
    record(8, not bad, f"{checked} recursion instances, primes <= 200 classified, {len(bad)} failures")
    assert not bad, bad[:5]


# -- 9 -------------------------------------------------------------------------

def test_criterion_9_prime_power_tables():
    primes = arith.primes_upto(100)
    bad = []
    for table, kernel in cf.TABLE_KERNELS.items():
        for p in primes:
            for a in range(5):
                if cf.coeff_prime_power(table, p, a) != arith.divisor_sum(p ** a, kernel):
                    bad.append((table, p, a))
    # the x^2 + 27y^2 table against d(n) from q E(q^6) E(q^18): series where it reaches,
    # the prime-power recursion seeded with the series value d(p) beyond that
    N = 4096
    d = _coeffs(qf.eta_quotient(qf.eta((6, 1), (18, 1), q_power=1), N), N)
    from_series = 0
    for p in primes:
        seq = [1, d[p]]
        for s in range(3):
            seq.append(seq[-1] * d[p] - arith.kronecker(-108, p) * seq[-2])
        for a in range(5):
            want = d[p ** a] if p ** a <= N else seq[a]
            from_series += p ** a <= N
            if cf.coeff_prime_power("D618", p, a) != want:
                bad.append(("D618", p, a))
    record(9, not bad, f"7 tables, p <= 100, alpha <= 4 ({from_series} D618 values read off the series),"
           f" {len(bad)} mismatches")
    assert not bad, bad[:5]


# -- 10 ------------------------------------------------------------------------

def test_criterion_10_exploratory_entries_report_without_failing():
    N = 512
    reports = {i: registry.verify(i, N) for i in ("sec8.hecke_t2", "thm4_1.psi_product_form")}
    statuses_ok = all(r.status.startswith("exploratory") for r in reports.values())
    entry = registry.get("sec8.hecke_t2")
    lhs, rhs = entry.lhs(N), entry.rhs(N)
    differ = [n for n in range(0, N + 1) if lhs.coeff(n) != rhs.coeff(n)]
    hecke = reports["sec8.hecke_t2"]
    ok = statuses_ok and differ == [0] and hecke.first_mismatch == 0
    record(10, ok, f"statuses {[r.status for r in reports.values()]}; U2 reading differs at "
           f"{len(differ)} exponents in 0..{N}, first few {differ[:4]}")
    assert statuses_ok
    assert differ == [0]


def summary_lines():
    lines = []
    for k in range(1, 11):
        if k in RESULTS:
            ok, detail = RESULTS[k]
            lines.append(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
        else:
            lines.append(f"criterion {k:2d}: NOT RUN")
    return lines


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
