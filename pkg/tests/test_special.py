"""Hypergeometric kernels against extended-precision references."""

import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdeform import (
    DomainError,
    confluent_limit_residual,
    gauss_2f1,
    jacobi_p,
    kummer_1f1,
    ln_gamma,
)

mpmath.mp.dps = 50


def mp_2f1(a, b, c, z):
    return float(mpmath.hyp2f1(a, b, c, z))


def mp_1f1(a, c, z):
    return float(mpmath.hyp1f1(a, c, z))


class TestLnGamma:
    def test_trivial_values(self):
        assert ln_gamma(1.0) == pytest.approx(0.0, abs=1e-14)
        assert ln_gamma(0.5) == pytest.approx(math.log(math.sqrt(math.pi)),
                                              rel=1e-13)
        assert ln_gamma(10.0) == pytest.approx(math.log(362880.0), rel=1e-13)

    def test_against_mpmath(self):
        rng = np.random.default_rng(7)
        for x in rng.uniform(1e-3, 170.0, size=200):
            assert ln_gamma(x) == pytest.approx(
                float(mpmath.loggamma(x)), rel=1e-13, abs=1e-13)

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            ln_gamma(0.0)
        with pytest.raises(DomainError):
            ln_gamma(-2.5)


class TestGauss2F1:
    def test_trivial(self):
        assert gauss_2f1(0.3, 4.1, 2.2, 0.0) == 1.0
        # a=1, b=c collapses to the geometric series
        assert gauss_2f1(1.0, 2.0, 2.0, 0.4) == pytest.approx(5.0 / 3.0,
                                                              rel=1e-14)

    def test_terminating_high_z(self):
        # degree-3 polynomial, z = 0.9 outside the direct-series zone
        ref = mp_2f1(-3, 2.7, 1.4, 0.9)
        assert gauss_2f1(-3.0, 2.7, 1.4, 0.9) == pytest.approx(ref, rel=1e-12)

    def test_direct_series_region(self):
        rng = np.random.default_rng(11)
        for _ in range(150):
            a, b = rng.uniform(-3.0, 4.0, size=2)
            c = rng.uniform(0.3, 5.0)
            z = rng.uniform(-0.5, 0.5)
            ref = mp_2f1(a, b, c, z)
            assert gauss_2f1(a, b, c, z) == pytest.approx(ref, rel=1e-10,
                                                          abs=1e-12)

    def test_connection_region(self):
        # z > 1/2 requires the 1-z transformation path
        rng = np.random.default_rng(13)
        for _ in range(150):
            a, b = rng.uniform(-2.0, 3.0, size=2)
            c = rng.uniform(0.5, 6.0)
            z = rng.uniform(0.55, 0.99)
            ref = mp_2f1(a, b, c, z)
            assert gauss_2f1(a, b, c, z) == pytest.approx(ref, rel=1e-9,
                                                          abs=1e-12)

    def test_far_negative_argument(self):
        rng = np.random.default_rng(17)
        for _ in range(50):
            a, b = rng.uniform(0.1, 2.5, size=2)
            c = rng.uniform(0.5, 5.0)
            z = rng.uniform(-0.99, -0.55)
            ref = mp_2f1(a, b, c, z)
            assert gauss_2f1(a, b, c, z) == pytest.approx(ref, rel=1e-10)

    def test_pochhammer_consistency(self):
        # terminating series vs brute-force extended-precision sum
        rng = np.random.default_rng(19)
        for _ in range(80):
            n = int(rng.integers(0, 21))
            b = rng.uniform(0.2, 6.0)
            c = rng.uniform(0.3, 6.0)
            z = rng.uniform(0.0, 1.0)
            with mpmath.workdps(60):
                total = mpmath.mpf(0)
                for k in range(n + 1):
                    total += (mpmath.rf(-n, k) * mpmath.rf(b, k)
                              / (mpmath.rf(c, k) * mpmath.factorial(k))
                              * mpmath.mpf(z) ** k)
            assert gauss_2f1(-float(n), b, c, z) == pytest.approx(
                float(total), rel=1e-12, abs=1e-13)

    @given(a=st.floats(-2.0, 2.0), b=st.floats(-2.0, 2.0),
           c=st.floats(0.5, 5.0), z=st.floats(-0.45, 0.45))
    @settings(max_examples=120, deadline=None)
    def test_euler_transformation(self, a, b, c, z):
        lhs = gauss_2f1(a, b, c, z)
        rhs = (1.0 - z) ** (c - a - b) * gauss_2f1(c - a, c - b, c, z)
        assert lhs == pytest.approx(rhs, rel=1e-9, abs=1e-9)

    def test_gauss_value_at_unity(self):
        # c - a - b > 0: limit z -> 1- equals the Gauss ratio of gammas
        a, b, c = 0.7, 0.4, 2.9
        ref = math.exp(ln_gamma(c) + ln_gamma(c - a - b)
                       - ln_gamma(c - a) - ln_gamma(c - b))
        assert gauss_2f1(a, b, c, 1.0 - 1e-12) == pytest.approx(ref, rel=1e-8)

    def test_degenerate_difference_path(self):
        # c - a - b an exact integer must still evaluate correctly
        for a, b, z in ((0.3, 0.7, 0.8), (1.2, 0.8, 0.7), (0.5, 0.5, 0.95)):
            c = a + b + 1.0
            ref = mp_2f1(a, b, c, z)
            assert gauss_2f1(a, b, c, z) == pytest.approx(ref, rel=1e-7)


class TestKummer1F1:
    def test_trivial(self):
        assert kummer_1f1(0.7, 1.9, 0.0) == 1.0
        assert kummer_1f1(1.0, 1.0, 2.5) == pytest.approx(math.exp(2.5),
                                                          rel=1e-13)

    def test_terminating_example(self):
        # 1 + (-2/1.5)*3 + ((-2)(-1)/(1.5*2.5))*(9/2) = -0.6
        ref = 1.0 - 2.0 * (3.0 / 1.5) + 2.0 * (9.0 / (1.5 * 2.5 * 2.0))
        assert ref == pytest.approx(-0.6)
        assert kummer_1f1(-2.0, 1.5, 3.0) == pytest.approx(ref, rel=1e-13)

    def test_against_mpmath_moderate(self):
        rng = np.random.default_rng(23)
        for _ in range(150):
            a = rng.uniform(-5.0, 5.0)
            c = rng.uniform(0.3, 8.0)
            z = rng.uniform(-50.0, 50.0)
            ref = mp_1f1(a, c, z)
            assert kummer_1f1(a, c, z) == pytest.approx(ref, rel=1e-9,
                                                        abs=1e-12)

    @given(a=st.floats(-3.0, 3.0), c=st.floats(0.5, 6.0),
           z=st.floats(0.1, 30.0))
    @settings(max_examples=120, deadline=None)
    def test_kummer_reflection(self, a, c, z):
        lhs = kummer_1f1(a, c, z)
        rhs = math.exp(z) * kummer_1f1(c - a, c, -z)
        assert lhs == pytest.approx(rhs, rel=1e-9, abs=1e-9)

    def test_large_z_sign_agreement(self):
        # beyond the series cutoff only the sign pattern is contractual
        a, c = -3.7, 2.1
        for z in (600.0, 900.0):
            ref = mpmath.hyp1f1(a, c, z)
            assert math.copysign(1.0, kummer_1f1(a, c, z)) == mpmath.sign(ref)


class TestJacobiP:
    def test_degree_zero_and_one(self):
        assert jacobi_p(0, 1.3, -0.2, 0.77) == 1.0
        alpha, beta, x = 1.5, 0.5, 0.3
        expected = (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0
        assert jacobi_p(1, alpha, beta, x) == pytest.approx(expected,
                                                            rel=1e-14)

    def test_matches_hypergeometric_route(self):
        # recurrence vs the Gamma-prefactor 2F1 form
        rng = np.random.default_rng(29)
        for _ in range(100):
            n = int(rng.integers(0, 13))
            alpha = rng.uniform(-0.9, 3.0)
            beta = rng.uniform(-0.9, 3.0)
            x = rng.uniform(-1.0, 1.0)
            pref = math.exp(ln_gamma(n + alpha + 1.0)
                            - ln_gamma(n + 1.0) - ln_gamma(alpha + 1.0))
            ref = pref * gauss_2f1(-float(n), n + alpha + beta + 1.0,
                                   alpha + 1.0, 0.5 * (1.0 - x))
            assert jacobi_p(n, alpha, beta, x) == pytest.approx(
                ref, rel=1e-11, abs=1e-11)

    def test_example_degree_four(self):
        ref = float(mpmath.jacobi(4, 1.5, 0.5, 0.3))
        assert jacobi_p(4, 1.5, 0.5, 0.3) == pytest.approx(ref, rel=1e-12)

    @given(n=st.integers(0, 10), alpha=st.floats(-0.5, 3.0),
           beta=st.floats(-0.5, 3.0), x=st.floats(-1.0, 1.0))
    @settings(max_examples=120, deadline=None)
    def test_reflection_symmetry(self, n, alpha, beta, x):
        lhs = jacobi_p(n, alpha, beta, -x)
        rhs = (-1.0) ** n * jacobi_p(n, beta, alpha, x)
        assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-10)


class TestConfluentLimit:
    def test_zero_argument_exact(self):
        assert confluent_limit_residual(0.8, 1.4, 0.0, 1e4) == 0.0

    def test_residual_shrinks(self):
        r3 = confluent_limit_residual(1.0, 1.0, 1.0, 1e3)
        r6 = confluent_limit_residual(1.0, 1.0, 1.0, 1e6)
        assert r3 < 1e-2
        assert r6 < 1e-5
        assert r6 < r3

    def test_generic_parameters(self):
        prev = math.inf
        for beta in (1e2, 1e3, 1e4, 1e5):
            r = confluent_limit_residual(0.6, 2.3, 2.0, beta)
            assert r < prev
            prev = r
