import math

import numpy as np
import pytest

from fracheat import (
    DomainError,
    Scheme,
    gamma,
    generating_residual,
    grunwald_weights,
    new_weights,
    qmatrix_report,
    resubstitution_residual,
)

ALPHAS = [round(1.1 + 0.1 * k, 1) for k in range(9)]  # 1.1 .. 1.9


class TestNewWeights:
    def test_classical_second_difference(self):
        ws = new_weights(2.0, 4)
        np.testing.assert_allclose(ws.w, [1.0, -2.0, 1.0, 0.0, 0.0], atol=1e-12)

    def test_first_weight_is_gamma(self):
        for alpha in (1.2, 1.5, 1.8, 2.0):
            assert new_weights(alpha, 2).w[0] == pytest.approx(gamma(alpha), rel=1e-13)

    def test_second_weight_closed_form(self):
        # second row of the system: w_1 = -w_0 * 2^(alpha-1)
        ws = new_weights(1.5, 2)
        assert ws.w[1] == pytest.approx(-1.2533141373155003, rel=1e-12)

    def test_resubstitution(self):
        for alpha in (1.2, 1.5, 1.8):
            ws = new_weights(alpha, 2048)
            assert resubstitution_residual(ws) <= 1e-10 * gamma(alpha)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            new_weights(1.0, 16)
        with pytest.raises(DomainError):
            new_weights(2.1, 16)
        with pytest.raises(DomainError):
            new_weights(1.5, 1)


class TestGrunwaldWeights:
    def test_classical_case(self):
        ws = grunwald_weights(2.0, 4)
        np.testing.assert_allclose(ws.w, [1.0, -2.0, 1.0, 0.0, 0.0], atol=1e-15)

    def test_leading_entries(self):
        ws = grunwald_weights(1.5, 4)
        assert ws.w[1] == pytest.approx(-1.5, abs=1e-15)
        assert ws.w[2] == pytest.approx(0.375, abs=1e-15)

    def test_matches_new_scheme_at_alpha_two(self):
        a = new_weights(2.0, 64).w
        b = grunwald_weights(2.0, 64).w
        np.testing.assert_allclose(a, b, atol=1e-12)

    def test_alpha_domain(self):
        with pytest.raises(DomainError):
            grunwald_weights(0.9, 8)


class TestGeneratingResidual:
    def test_alpha_two_closed_form(self):
        # both sides equal (1-t)^2 at alpha = 2
        ws = new_weights(2.0, 64)
        assert generating_residual(ws, 0.5) <= 1e-12

    def test_small_t(self):
        ws = new_weights(1.5, 2048)
        assert generating_residual(ws, 0.01) <= 1e-8

    @pytest.mark.parametrize("alpha", [1.2, 1.5, 1.8])
    def test_identity_on_t_grid(self, alpha):
        ws = new_weights(alpha, 2048)
        for t in (0.1, 0.3, 0.5, 0.7, 0.9):
            assert generating_residual(ws, t) <= 1e-8

    def test_domain_errors(self):
        ws = new_weights(1.5, 64)
        with pytest.raises(DomainError):
            generating_residual(ws, 0.95)
        with pytest.raises(DomainError):
            generating_residual(ws, 0.0)
        with pytest.raises(DomainError):
            generating_residual(grunwald_weights(1.5, 64), 0.5)


class TestSignStructure:
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_new_scheme_report(self, alpha):
        ws = new_weights(alpha, 1024)
        rep = qmatrix_report(ws)
        assert rep.w1_negative
        assert rep.others_positive
        assert rep.partial_sum_at_N < 0.0
        assert rep.partial_sums_increasing

    def test_partial_sums_shrink_under_extension(self):
        ws = new_weights(1.4, 4096)
        s = ws.partial_sums()
        prev = -math.inf
        for n in (256, 512, 1024, 2048, 4096):
            assert s[n] < 0.0
            assert s[n] > prev
            prev = s[n]
        assert abs(s[4096]) < abs(s[256])

    def test_grunwald_report(self):
        rep = qmatrix_report(grunwald_weights(1.5, 1024))
        assert rep.w1_negative
        assert rep.others_positive
        assert rep.partial_sum_at_N < 0.0
        assert rep.partial_sums_increasing

    def test_alpha_two_terminates(self):
        ws = new_weights(2.0, 8)
        assert ws.partial_sums()[-1] == pytest.approx(0.0, abs=1e-12)

    def test_scheme_tags(self):
        assert new_weights(1.5, 4).scheme is Scheme.NEW
        assert grunwald_weights(1.5, 4).scheme is Scheme.GRUNWALD
