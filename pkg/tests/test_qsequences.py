"""q-analog sequences, their specializations, and identity suites."""

import math
from fractions import Fraction

import pytest

from ppx import products
from ppx.qsequences import (
    GOLDEN_CAP_E_Q,
    GOLDEN_E_Q,
    GOLDEN_R_Q,
    c_q_seq,
    cap_e_q_seq,
    cap_expq_series,
    check_golden_q_lists,
    check_integrality,
    check_log_coeffs,
    check_mod_q2,
    check_odd_symmetry,
    check_q_oracle,
    check_reciprocal_identity,
    e_q_seq,
    expq_series,
    mod_q2_closed_form,
    mod_q2_expansion,
    mod_q2_ring,
    qbinom,
    qexp_table,
    qfact,
    qint,
    r_p_closed_form,
    r_q_seq,
    transcription_discrepancies,
    u_q_seq,
)
from ppx.rings import IntPoly, P_ONE, P_ZERO, Q, RatFunc
from ppx.sequences import c_seq, e_seq, r_seq, u_seq


class TestQBasics:
    def test_qint(self):
        assert qint(3) == IntPoly((1, 1, 1))
        assert qint(1) == P_ONE
        assert qint(0) == P_ZERO

    def test_qfact(self):
        assert qfact(3) == IntPoly((1, 2, 2, 1))  # (1+q)(1+q+q^2)
        assert qfact(0) == P_ONE

    def test_qbinom_example(self):
        # oracle: exact division [4]!/([2]![2]!) done longhand
        explicit = qfact(4).divexact(qfact(2) * qfact(2))
        assert explicit == IntPoly((1, 1, 2, 1, 1))
        assert qbinom(4, 2) == explicit

    def test_qbinom_pascal_recurrence(self):
        # oracle: [n k] = [n-1 k-1] + q^k [n-1 k]
        for n in range(1, 11):
            for k in range(n + 1):
                lower_left = qbinom(n - 1, k - 1) if k >= 1 else P_ZERO
                lower_right = qbinom(n - 1, k) if k <= n - 1 else P_ZERO
                assert qbinom(n, k) == lower_left + IntPoly.monomial(1, k) * lower_right

    def test_qbinom_validation(self):
        with pytest.raises(ValueError):
            qbinom(2, 3)


class TestGoldenLists:
    def test_e_q_matches_source_list(self):
        assert e_q_seq(7) == list(GOLDEN_E_Q)

    def test_cap_e_q_matches_source_list(self):
        assert cap_e_q_seq(7) == list(GOLDEN_CAP_E_Q)

    def test_r_q_matches_source_list(self):
        assert r_q_seq(7) == list(GOLDEN_R_Q)

    def test_no_transcription_discrepancies(self):
        assert transcription_discrepancies() == []

    def test_report(self):
        assert check_golden_q_lists().passed

    def test_spot_values(self):
        assert e_q_seq(2)[1] == RatFunc(P_ONE, qint(2))
        assert cap_e_q_seq(2)[1] == RatFunc(Q, qint(2))
        assert cap_e_q_seq(4)[3] == RatFunc(Q * IntPoly((1, 1, 0, 1)), qint(2) * qint(4))
        assert r_q_seq(3)[2] == -Q


class TestUq:
    def test_u6_structure(self):
        assert u_q_seq(6)[5] == qint(2) ** 2 * qint(3) * qint(6)

    def test_u4(self):
        assert u_q_seq(4)[3] == qint(2) * qint(4)

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
    def test_u_prime(self, p):
        assert u_q_seq(p)[p - 1] == qint(p)

    def test_gcd_and_totient_forms_agree_to_20(self):
        from ppx.rings import poly_gcd
        from ppx.sequences import divisors, euler_phi

        for n in range(1, 21):
            via_gcd = P_ONE
            for j in range(1, n + 1):
                via_gcd = via_gcd * poly_gcd(qint(j), qint(n))
            via_phi = P_ONE
            for d in divisors(n):
                via_phi = via_phi * qint(d) ** euler_phi(n // d)
            assert u_q_seq(n)[n - 1] == via_gcd == via_phi


class TestCq:
    def test_c2_and_c3(self):
        assert c_q_seq(3) == [P_ONE, P_ONE, IntPoly((0, -1, -1))]

    def test_c_at_one_recovers_classical(self):
        cq = c_q_seq(8)
        assert [p(1) for p in cq] == [1, 1, -2, 9, -24, 130, -720, 8505]


class TestDegenerations:
    def test_q_to_one_all_sequences(self):
        table = qexp_table(14)
        assert [f(1) for f in table.e] == e_seq(14)
        assert [p(1) for p in table.u] == u_seq(14)
        assert [p(1) for p in table.r] == r_seq(14)
        assert [p(1) for p in table.c] == c_seq(14)

    def test_q_to_zero_dyadic(self):
        for n, f in enumerate(e_q_seq(16), start=1):
            expected = 1 if n & (n - 1) == 0 else 0
            assert f(0) == expected

    def test_r_at_zero_dyadic(self):
        for n, p in enumerate(r_q_seq(16), start=1):
            expected = 1 if n & (n - 1) == 0 else 0
            assert p(0) == expected


class TestIntegralityTheorem:
    def test_report_to_14(self):
        assert check_integrality(14).passed

    def test_monic_signs(self):
        for n, p in enumerate(r_q_seq(14), start=1):
            if n > 1:
                assert p.lead == (1 if n % 2 == 0 else -1)
            assert all(isinstance(c, int) for c in p.coeffs)


class TestOddSymmetry:
    def test_report(self):
        assert check_odd_symmetry(13).passed

    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_spot(self, n):
        e = e_q_seq(n)[n - 1]
        assert e == cap_e_q_seq(n)[n - 1]
        assert e == e.subst_inverse()


class TestReciprocal:
    def test_report(self):
        assert check_reciprocal_identity(8).passed

    def test_first_coefficient_cancels(self):
        product = expq_series(4).negate_argument() * cap_expq_series(4)
        assert product.coeffs[1] == RatFunc(0)

    def test_q1_specialization(self):
        from ppx.rings import QQ
        from ppx.series import TruncatedSeries

        exp = TruncatedSeries(QQ, [Fraction(1, math.factorial(n)) for n in range(9)])
        assert exp.negate_argument() * exp == TruncatedSeries.one(QQ, 8)


class TestPrimeClosedForm:
    @pytest.mark.parametrize("p,expected", [
        (3, IntPoly((0, -1))),
        (5, IntPoly((0, -1, 1, -1))),
        (7, IntPoly((0, -1, 2, -3, 2, -1))),
    ])
    def test_values(self, p, expected):
        assert r_p_closed_form(p) == expected
        assert r_q_seq(p)[p - 1] == expected

    def test_rejects_two_and_composites(self):
        with pytest.raises(ValueError):
            r_p_closed_form(2)
        with pytest.raises(ValueError):
            r_p_closed_form(9)


class TestModQ2:
    def test_closed_form_values(self):
        ring = mod_q2_ring()
        gs = mod_q2_expansion(16)
        assert gs[0] == ring.one
        assert gs[1] == ring.reduce(IntPoly((1, -1)))
        assert gs[2] == ring.reduce(IntPoly((0, -1)))
        assert gs[3] == ring.reduce(IntPoly((1, -2)))
        assert gs[4] == ring.reduce(IntPoly((0, -1)))
        assert gs[5] == ring.zero
        assert gs[6] == ring.reduce(IntPoly((0, -1)))
        assert gs[7] == ring.reduce(IntPoly((1, -4)))
        assert gs[15] == ring.reduce(IntPoly((1, -8)))

    def test_closed_form_table(self):
        assert mod_q2_closed_form(1) == P_ONE
        assert mod_q2_closed_form(8) == IntPoly((1, -4))
        assert mod_q2_closed_form(6) == P_ZERO
        assert mod_q2_closed_form(9) == IntPoly((0, -1))

    def test_report_to_32(self):
        assert check_mod_q2(32).passed


class TestLogCoefficients:
    def test_report_to_12(self):
        assert check_log_coeffs(12).passed

    def test_explicit(self):
        logs = expq_series(6).log()
        for n in range(1, 7):
            assert logs.coeffs[n] == RatFunc(IntPoly((1, -1)) ** (n - 1), qint(n) * n)


class TestQOracle:
    def test_expansion_matches_recursions_to_14(self):
        assert check_q_oracle(14).passed

    def test_direct(self):
        expansion = products.expand(expq_series(10))
        assert list(expansion.factors) == e_q_seq(10)
        cap_expansion = products.expand(cap_expq_series(10))
        assert list(cap_expansion.factors) == cap_e_q_seq(10)
