"""Quantization solvers for the three deformation regimes."""

import math

import numpy as np
import pytest

from qdeform import (
    METHOD_MORSE_ASYMPTOTIC,
    METHOD_MORSE_EXACT,
    METHOD_Q_GE_1,
    METHOD_Q_LT_1,
    DiracConstants,
    ParameterError,
    PotentialParams,
    SolverConfig,
    abc_params,
    disputed_q_lt_1,
    effective_eigenvalue,
    effective_strengths,
    gauss_2f1,
    kummer_1f1,
    solve_morse_asymptotic,
    solve_morse_exact,
    solve_q_ge_1,
    solve_q_lt_1,
    spectrum,
)

DC = DiracConstants(m=1.0, c_spin=0.0)


class TestSolveQGe1:
    def test_known_single_level(self):
        p = PotentialParams(25.0, 10.0, 1.0, 2.0)
        lv = solve_q_ge_1(0, DC, p)
        assert lv.energy == pytest.approx(0.587541449360766, abs=1e-9)
        assert lv.method == METHOD_Q_GE_1
        assert lv.e_tilde == pytest.approx(
            effective_eigenvalue(lv.energy, DC), rel=1e-13)

    def test_roots_satisfy_quantization(self):
        p = PotentialParams(25.0, 18.0, 0.5, 1.0)
        levels = spectrum(DC, p)
        assert len(levels) >= 3
        for lv in levels:
            a, _, _ = abc_params(lv.energy, DC, p)
            assert a + lv.n_r == pytest.approx(0.0, abs=1e-7)

    def test_energies_strictly_increasing(self):
        p = PotentialParams(25.0, 18.0, 0.5, 1.0)
        es = [lv.energy for lv in spectrum(DC, p)]
        assert es == sorted(es)
        assert len(set(es)) == len(es)

    def test_rejects_q_below_one(self):
        p = PotentialParams(25.0, 10.0, 1.0, 0.5)
        with pytest.raises(ParameterError):
            solve_q_ge_1(0, DC, p)

    def test_shallow_well_binds_nothing(self):
        # this well's effective depth never reaches the first level
        p = PotentialParams(4.0, 1.0, 1.0, 2.0)
        assert spectrum(DC, p) == []


class TestSolveQLt1:
    def test_known_single_level(self):
        p = PotentialParams(25.0, 10.0, 1.0, 0.3)
        levels = solve_q_lt_1(DC, p)
        assert len(levels) == 1
        assert levels[0].energy == pytest.approx(0.624387194, abs=1e-8)
        assert levels[0].method == METHOD_Q_LT_1

    def test_roots_are_2f1_zeros(self):
        p = PotentialParams(25.0, 18.0, 0.5, 0.3)
        levels = solve_q_lt_1(DC, p)
        assert len(levels) >= 3
        sq = math.sqrt(p.q)
        z0 = 4.0 * sq / (1.0 + sq) ** 2
        for lv in levels:
            a, b, c = abc_params(lv.energy, DC, p)
            # scale-free smallness: compare against a nearby non-zero value
            off = abs(gauss_2f1(*abc_params(lv.energy + 1e-3, DC, p), z0))
            assert abs(gauss_2f1(a, b, c, z0)) < 1e-5 * max(off, 1e-30)

    def test_levels_indexed_consecutively(self):
        p = PotentialParams(25.0, 18.0, 0.5, 0.3)
        levels = solve_q_lt_1(DC, p)
        assert [lv.n_r for lv in levels] == list(range(len(levels)))

    def test_rejects_out_of_range_q(self):
        with pytest.raises(ParameterError):
            solve_q_lt_1(DC, PotentialParams(25.0, 10.0, 1.0, 1.5))
        with pytest.raises(ParameterError):
            solve_q_lt_1(DC, PotentialParams(25.0, 10.0, 1.0, 0.0))


class TestSolveMorse:
    P = PotentialParams(25.0, 10.0, 1.0, 0.0)

    def test_known_single_level(self):
        levels = solve_morse_exact(DC, self.P)
        assert len(levels) == 1
        assert levels[0].energy == pytest.approx(0.629900745, abs=1e-8)
        assert levels[0].method == METHOD_MORSE_EXACT

    def test_roots_are_1f1_zeros(self):
        p = PotentialParams(25.0, 18.0, 0.5, 0.0)
        levels = solve_morse_exact(DC, p)
        assert len(levels) >= 3
        for lv in levels:
            v1t, v2t = effective_strengths(lv.energy, DC, p)
            et = effective_eigenvalue(lv.energy, DC)
            eta = math.sqrt(-et) / p.alpha
            z = 4.0 * math.sqrt(v1t) / p.alpha
            a = 0.5 + eta - v2t / (2.0 * p.alpha * math.sqrt(v1t))
            assert abs(kummer_1f1(a, 2.0 * eta + 1.0, z)) < 1e-4 * abs(
                kummer_1f1(a + 0.05, 2.0 * eta + 1.0, z))

    def test_asymptotic_close_to_exact(self):
        lv_exact = solve_morse_exact(DC, self.P)[0]
        lv_asym = solve_morse_asymptotic(0, DC, self.P)
        assert lv_asym.method == METHOD_MORSE_ASYMPTOTIC
        assert lv_asym.energy == pytest.approx(lv_exact.energy, abs=1e-6)
        assert lv_asym.energy != lv_exact.energy

    def test_asymptotic_rejects_positive_q(self):
        with pytest.raises(ParameterError):
            solve_morse_asymptotic(0, DC, PotentialParams(25.0, 10.0, 1.0, 0.1))


class TestSpectrumDispatch:
    def test_method_tags_follow_regime(self):
        cases = [
            (2.0, METHOD_Q_GE_1),
            (1.0, METHOD_Q_GE_1),
            (0.5, METHOD_Q_LT_1),
            (0.0, METHOD_MORSE_EXACT),
        ]
        for q, tag in cases:
            p = PotentialParams(25.0, 10.0, 1.0, q)
            levels = spectrum(DC, p)
            assert levels, f"no levels at q={q}"
            assert all(lv.method == tag for lv in levels)

    def test_continuity_across_q_equals_one(self):
        p_lo = PotentialParams(25.0, 18.0, 0.5, 1.0 - 1e-6)
        p_hi = PotentialParams(25.0, 18.0, 0.5, 1.0)
        e_lo = [lv.energy for lv in spectrum(DC, p_lo)]
        e_hi = [lv.energy for lv in spectrum(DC, p_hi)]
        assert len(e_lo) == len(e_hi)
        for a, b in zip(e_lo, e_hi):
            assert a == pytest.approx(b, abs=1e-3)

    def test_config_validation(self):
        with pytest.raises(ParameterError):
            SolverConfig(scan_points=10)
        with pytest.raises(ParameterError):
            SolverConfig(tol_e=0.0)
        with pytest.raises(ParameterError):
            SolverConfig(max_levels=0)

    def test_deeper_well_binds_more(self):
        n_shallow = len(spectrum(DC, PotentialParams(25.0, 10.0, 1.0, 2.0)))
        n_deep = len(spectrum(DC, PotentialParams(250.0, 100.0, 1.0, 2.0)))
        assert n_deep > n_shallow


class TestDisputed:
    def test_disagrees_with_valid_solver(self):
        # the closed-form condition applied below q = 1 ignores the r = 0
        # boundary; its levels must not be trusted, only compared
        p = PotentialParams(25.0, 18.0, 0.5, 0.3)
        good = {lv.n_r: lv.energy for lv in solve_q_lt_1(DC, p)}
        disp = {lv.n_r: lv.energy for lv in disputed_q_lt_1(DC, p)}
        common = sorted(set(good) & set(disp))
        assert common
        gaps = [abs(good[n] - disp[n]) for n in common]
        assert max(gaps) > 1e-8

    def test_tag(self):
        p = PotentialParams(25.0, 10.0, 1.0, 0.3)
        for lv in disputed_q_lt_1(DC, p):
            assert lv.method == "disputed-closed-form"

    def test_rejects_q_at_least_one(self):
        with pytest.raises(ParameterError):
            disputed_q_lt_1(DC, PotentialParams(25.0, 10.0, 1.0, 1.0))
