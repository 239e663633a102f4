import cmath
import math
import random

import pytest

from jacobint.common import ConvergenceError, ParameterError
from jacobint.gammacore import pochhammer, signed_log_gamma_quotient
from jacobint.hypergeom import (
    appell_f1,
    appell_f1_at_x1,
    appell_f1_at_y1,
    appell_f3_zero_balanced,
    gauss_half,
    h2_at_minus1,
    horn_h2,
    hyp2f1,
    hyp2f1_continued,
    hyp3f2,
    pfq,
    regularized_pfq_limit,
)


def rel_err(a, b):
    return abs(a - b) / (1.0 + abs(b))


class TestHyp2F1:
    def test_at_zero(self):
        assert hyp2f1(0.3, 0.7, 1.9, 0.0).value == 1.0

    def test_log_identity(self):
        # 2F1(1,1;2;x) = -log(1-x)/x
        assert hyp2f1(1.0, 1.0, 2.0, 0.5).value == pytest.approx(2.0 * math.log(2.0), rel=1e-11)

    def test_arcsin_identity(self):
        assert hyp2f1(0.5, 0.5, 1.5, 0.25).value == pytest.approx(
            math.asin(0.5) / 0.5, rel=1e-11
        )

    def test_rejects_argument_at_one(self):
        with pytest.raises(ParameterError):
            hyp2f1(0.3, 0.7, 1.9, 1.0)

    def test_rejects_nonpositive_integer_bottom(self):
        with pytest.raises(ParameterError):
            hyp2f1(0.3, 0.7, -2.0, 0.4)

    def test_terminating_with_bottom_pole_later(self):
        # a = -2 terminates before the bottom parameter -3 reaches zero.
        val = hyp2f1(-2.0, 1.5, -3.0, 0.4).value
        expect = 1.0 + (-2.0) * 1.5 / (-3.0) * 0.4 + ((-2.0) * (-1.0) * 1.5 * 2.5 / ((-3.0) * (-2.0))) * 0.16 / 2.0
        assert val == pytest.approx(expect, rel=1e-13)

    def test_terminating_beyond_unit_argument(self):
        val = hyp2f1(-3.0, 0.7, 1.3, 2.5).value
        direct = sum(
            pochhammer(-3.0, k) * pochhammer(0.7, k) / pochhammer(1.3, k) * 2.5**k / math.factorial(k)
            for k in range(4)
        )
        assert val == pytest.approx(direct, rel=1e-12)

    def test_pfaff_self_consistency(self):
        rng = random.Random(4)
        for _ in range(60):
            a = rng.uniform(-2.0, 3.0)
            b = rng.uniform(-2.0, 3.0)
            c = rng.uniform(0.3, 4.0)
            if abs(c - round(c)) < 0.02:
                continue
            x = rng.uniform(-0.95, 0.5)
            lhs = hyp2f1(a, b, c, x, rel_tol=1e-13).value
            rhs = (1.0 - x) ** (-a) * hyp2f1(a, c - b, c, x / (x - 1.0), rel_tol=1e-13).value
            assert abs(lhs - rhs) <= 1e-10 * (1.0 + abs(lhs))

    def test_near_unit_argument_uses_connection(self):
        # Compare against the same value reached through the Pfaff route.
        a, b, c = 0.4, 0.8, 2.7
        direct = hyp2f1(a, b, c, 0.93).value
        pfaff = (1.0 - 0.93) ** (-a) * hyp2f1(a, c - b, c, 0.93 / (0.93 - 1.0)).value
        assert direct == pytest.approx(pfaff, rel=1e-10)

    def test_converged_flag_and_tail(self):
        res = hyp2f1(0.3, 0.7, 1.9, 0.45, rel_tol=1e-11)
        assert res.converged
        assert res.tail_estimate <= 1e-11 * (1.0 + abs(res.value))


class TestHyp2F1Continued:
    def test_log_branch(self):
        # Continuation of -log(1-w)/w from the upper half-plane:
        # log(1-w) = log(w-1) - i pi for w > 1.
        w = 2.0
        val = hyp2f1_continued(1.0, 1.0, 2.0, w)
        expect = -(math.log(w - 1.0) - 1j * math.pi) / w
        assert abs(val - expect) < 1e-6

    def test_log_branch_generic_w(self):
        w = 3.7
        val = hyp2f1_continued(1.0, 1.0, 2.0, w)
        expect = -(math.log(w - 1.0) - 1j * math.pi) / w
        assert abs(val - expect) < 1e-6

    def test_gauss_value_from_above(self):
        a, b, c = 0.3, 0.4, 2.0
        val = hyp2f1_continued(a, b, c, 1.0 + 1e-9)
        gauss = signed_log_gamma_quotient((c, c - a - b), (c - a, c - b)).value()
        assert abs(val - gauss) < 1e-5

    def test_terminating_polynomial_is_real(self):
        val = hyp2f1_continued(-2.0, 0.7, 1.3, 3.0)
        assert val.imag == 0.0
        assert val.real == pytest.approx(pfq([-2.0, 0.7], [1.3], 3.0).value, rel=1e-13)

    def test_rejects_argument_below_one(self):
        with pytest.raises(ParameterError):
            hyp2f1_continued(0.3, 0.7, 1.9, 0.5)


class TestHyp3F2:
    def test_at_zero(self):
        assert hyp3f2(0.3, 0.7, 1.1, 1.9, 2.3, 0.0).value == 1.0

    def test_terminating_three_terms(self):
        a2, a3, b1, b2, x = 0.6, 1.4, 1.9, 2.3, 0.37
        val = hyp3f2(-2.0, a2, a3, b1, b2, x).value
        expect = (
            1.0
            + (-2.0) * a2 * a3 / (b1 * b2) * x
            + ((-2.0) * (-1.0) * a2 * (a2 + 1) * a3 * (a3 + 1))
            / (b1 * (b1 + 1) * b2 * (b2 + 1))
            * x**2
            / 2.0
        )
        assert val == pytest.approx(expect, rel=1e-13)

    def test_against_long_direct_summation(self):
        val = hyp3f2(0.3, 0.7, 1.1, 1.9, 2.3, 0.6, rel_tol=1e-12).value
        term = 1.0
        acc = 1.0
        for k in range(4000):
            term *= (0.3 + k) * (0.7 + k) * (1.1 + k) * 0.6 / ((1.9 + k) * (2.3 + k) * (k + 1.0))
            acc += term
        assert val == pytest.approx(acc, rel=1e-10)

    def test_budget_exhaustion_raises(self):
        with pytest.raises(ConvergenceError):
            hyp3f2(1.3, 0.7, 1.1, 0.9, 1.2, 1.0, max_terms=2000)


class TestRegularizedLimit:
    def test_zero_argument(self):
        assert regularized_pfq_limit([1.0, 1.0], [], 0, 0.0) == 0.0

    def test_simple_closed_value(self):
        # z * 2F1(2,2;2;z) = z (1-z)^-2
        val = regularized_pfq_limit([1.0, 1.0], [], 0, 0.3)
        assert val == pytest.approx(0.3 / 0.7**2, rel=1e-11)

    def test_eps_oracle(self):
        eps = 1e-7
        from jacobint.gammacore import gamma

        for top, rest, M, z in [
            ([1.0, 1.0], [], 0, 0.3),
            ([0.7, 1.3], [], 2, -0.4),
            ([0.5, 0.9, 1.7], [1.1], 1, 0.25),
        ]:
            rhs = regularized_pfq_limit(top, rest, M, z, rel_tol=1e-12)
            series = pfq(top, [-M - eps] + rest, z, rel_tol=1e-12)
            lhs = series.value / gamma(-M - eps).value
            assert abs(lhs - rhs) / (1.0 + abs(rhs)) < 1e-5

    def test_terminating_top(self):
        eps = 1e-7
        from jacobint.gammacore import gamma

        rhs = regularized_pfq_limit([-3.0, 1.2], [], 1, 0.5)
        series = pfq([-3.0, 1.2], [-1.0 - eps], 0.5, rel_tol=1e-12)
        lhs = series.value / gamma(-1.0 - eps).value
        assert abs(lhs - rhs) / (1.0 + abs(rhs)) < 1e-5


class TestAppellF1:
    def test_at_origin(self):
        assert appell_f1(0.3, 0.2, 0.4, 2.0, 0.0, 0.0).value == 1.0

    def test_b1_zero_collapses(self):
        got = appell_f1(0.3, 0.0, 0.4, 2.0, 0.35, 0.5).value
        expect = hyp2f1(0.3, 0.4, 2.0, 0.5).value
        assert got == pytest.approx(expect, rel=1e-10)

    def test_reordered_summation_oracle(self):
        a, b1, b2, c, x, y = 0.3, 0.2, 0.4, 2.0, 0.35, 0.5
        got = appell_f1(a, b1, b2, c, x, y, rel_tol=1e-11).value
        total = 0.0
        coef = 1.0
        for m in range(200):
            if m > 0:
                coef *= (a + m - 1.0) * (b1 + m - 1.0) * x / ((c + m - 1.0) * m)
            total += coef * hyp2f1(a + m, b2, c + m, y, rel_tol=1e-13).value
            if abs(coef) < 1e-18:
                break
        assert got == pytest.approx(total, rel=1e-9)

    def test_rejects_unit_arguments(self):
        with pytest.raises(ParameterError):
            appell_f1(0.3, 0.2, 0.4, 2.0, 1.0, 0.3)


class TestAppellF1UnitArgument:
    def test_x_zero_gauss_value(self):
        a, b1, b2, c = 0.3, 0.2, 0.4, 2.0
        got = appell_f1_at_y1(a, b1, b2, c, 0.0)
        gauss = signed_log_gamma_quotient((c, c - a - b2), (c - a, c - b2)).value()
        assert got == pytest.approx(gauss, rel=1e-12)

    def test_b1_zero_reduces_to_gauss_sum(self):
        a, b2, c = 0.3, 0.4, 2.0
        got = appell_f1_at_y1(a, 0.0, b2, c, 0.35)
        gauss = signed_log_gamma_quotient((c, c - a - b2), (c - a, c - b2)).value()
        assert got == pytest.approx(gauss, rel=1e-12)

    def test_condition_violation(self):
        with pytest.raises(ParameterError):
            appell_f1_at_y1(1.0, 0.2, 1.5, 2.0, 0.3)

    def test_mirror_matches_by_symmetry(self):
        # F1(a,b1,b2;c;1,y) = F1(a,b2,b1;c;y,1)
        a, b1, b2, c, y = 0.3, 0.5, 0.2, 1.7, 0.25
        lhs = appell_f1_at_x1(a, b1, b2, c, y)
        rhs = appell_f1_at_y1(a, b2, b1, c, y)
        assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_against_near_unit_double_series(self):
        a, b1, b2, c, x = 0.3, 0.2, 0.4, 2.0, 0.35
        closed = appell_f1_at_y1(a, b1, b2, c, x, rel_tol=1e-12)
        probe = appell_f1(a, b1, b2, c, x, 0.999, rel_tol=1e-11).value
        # At y = 0.999 the double series sits a boundary-layer term away.
        assert abs(closed - probe) < 5e-3 * (1.0 + abs(closed))


class TestF3ZeroBalanced:
    def test_b_zero_drops_second_argument(self):
        a, c, d, x = -2.0, 0.7, 1.1, 0.3
        got = appell_f3_zero_balanced(a, 0.0, c, d, x)
        expect = hyp2f1(a, c, a + c + d, 0.5 * (1.0 - x)).value
        assert got == pytest.approx(expect, rel=1e-12)

    def test_terminating_direct_double_sum(self):
        a, b, c, d, x = -2.0, 0.4, 0.7, 1.1, 0.3
        got = appell_f3_zero_balanced(a, b, c, d, x, rel_tol=1e-13)
        e = a + b + c + d
        big_x = 0.5 * (1.0 - x)
        big_y = (x - 1.0) / (x + 1.0)
        total = 0.0
        for m in range(3):
            outer = pochhammer(a, m) * pochhammer(c, m) * big_x**m / math.factorial(m)
            inner = 0.0
            term = 1.0
            for k in range(400):
                if k > 0:
                    term *= (b + k - 1.0) * (d + k - 1.0) * big_y / ((e + m + k - 1.0) * k)
                inner += term
            total += outer / pochhammer(e, m) * inner
        assert got == pytest.approx(total, rel=1e-10)

    def test_limit_at_one(self):
        got = appell_f3_zero_balanced(0.5, 0.4, 0.7, 1.1, 1.0 - 1e-9)
        assert got == pytest.approx(1.0, abs=1e-8)


class TestHornH2:
    def test_at_origin(self):
        assert horn_h2(1.2, 0.5, 0.3, 0.4, 2.1, 0.0, 0.0).value == 1.0

    def test_b2_zero_collapses(self):
        got = horn_h2(1.2, 0.5, 0.0, 0.3, 2.1, 0.4, 0.77).value
        expect = hyp2f1(1.2, 0.5, 2.1, 0.4).value
        assert got == pytest.approx(expect, rel=1e-10)

    def test_terminating_matches_closed_form(self):
        lhs = horn_h2(1.2, 0.5, -2.0, 0.3, 2.1, 0.4, -1.0, rel_tol=1e-12).value
        rhs = h2_at_minus1(1.2, 0.5, -2.0, 0.3, 2.1, 0.4, rel_tol=1e-12)
        assert lhs == pytest.approx(rhs, rel=1e-9)

    def test_requires_y_inside_disc_without_termination(self):
        with pytest.raises(ParameterError):
            horn_h2(1.2, 0.5, 0.3, 0.4, 2.1, 0.4, -1.0)


class TestH2AtMinusOne:
    def test_x_zero_direct_k_sum(self):
        a0, b1, b2, c1, c2 = 1.2, 0.5, -2.0, 0.3, 2.1
        got = h2_at_minus1(a0, b1, b2, c1, c2, 0.0)
        direct = sum(
            (1.0 / pochhammer(a0 - k, k))
            * pochhammer(b2, k)
            * pochhammer(c1, k)
            * (-1.0) ** k
            / math.factorial(k)
            for k in range(3)
        )
        assert got == pytest.approx(direct, rel=1e-10)

    def test_degenerate_slots_reduce_to_gauss(self):
        a0, b1, c2, x = 0.6, 1.4, 2.1, 0.4
        got = h2_at_minus1(a0, b1, 0.0, 0.0, c2, x)
        expect = hyp2f1(a0, b1, c2, x).value
        assert got == pytest.approx(expect, rel=1e-10)

    def test_condition_violation(self):
        with pytest.raises(ParameterError):
            h2_at_minus1(1.2, 0.1, 0.5, 0.8, 2.1, 0.3)


class TestGaussHalf:
    def test_degenerate_top(self):
        assert gauss_half(1.0, 2.0) == pytest.approx(1.0, rel=1e-13)

    def test_arcsin_case(self):
        assert gauss_half(0.5, 1.5) == pytest.approx(math.pi / 4.0 * math.sqrt(2.0), rel=1e-13)

    def test_matches_series(self):
        got = gauss_half(0.3, 1.7)
        series = hyp2f1(0.3, 0.7, 1.7, 0.5, rel_tol=1e-13).value
        assert got == pytest.approx(series, rel=1e-11)

    def test_pole_rejected(self):
        with pytest.raises(ParameterError):
            gauss_half(0.3, -1.0)
