"""Regime-dependent quantization of the bound-state energies.

Three procedures, dispatched on the deformation q:

* q >= 1: the closed-form condition a(E) = -n_r, where a is the first
  hypergeometric parameter (still implicit in E because the effective
  strengths depend on E);
* 0 < q < 1: zeros in E of 2F1(a(E), b(E), c(E); z0) with the fixed
  argument z0 = 4 sqrt(q)/(1 + sqrt(q))^2;
* q = 0 (Morse): zeros of 1F1 at argument 4 sqrt(Vt1)/alpha, plus the
  deep-well asymptotic level formula.

All equations are localized by a uniform scan over the bound window and
refined by bisection: the hypergeometric functions oscillate violently in
E near the window edge, so guaranteed bracketing beats fast iteration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .deformed import PotentialParams
from .effective import (
    DiracConstants,
    abc_params,
    bound_window,
    effective_eigenvalue,
    effective_strengths,
)
from .errors import NoRootError, ParameterError, QdeformError
from .special import gauss_2f1, kummer_1f1

__all__ = [
    "EnergyLevel",
    "SolverConfig",
    "METHOD_Q_GE_1",
    "METHOD_Q_LT_1",
    "METHOD_MORSE_EXACT",
    "METHOD_MORSE_ASYMPTOTIC",
    "METHOD_ORACLE",
    "solve_q_ge_1",
    "solve_q_lt_1",
    "solve_morse_exact",
    "solve_morse_asymptotic",
    "spectrum",
    "disputed_q_lt_1",
]

METHOD_Q_GE_1 = "closed-form-q>=1"
METHOD_Q_LT_1 = "transcendental-q<1"
METHOD_MORSE_EXACT = "morse-exact"
METHOD_MORSE_ASYMPTOTIC = "morse-asymptotic"
METHOD_ORACLE = "oracle"

_WINDOW_EPS_FACTOR = 1e-8


@dataclass(frozen=True)
class EnergyLevel:
    """One bound level: radial quantum number, Dirac energy, provenance."""

    n_r: int
    energy: float
    e_tilde: float
    method: str


@dataclass(frozen=True)
class SolverConfig:
    scan_points: int = 2000
    tol_e: float = 1e-10  # absolute, in units of M
    max_levels: int = 64

    def __post_init__(self):
        if self.scan_points < 100:
            raise ParameterError(f"scan_points must be >= 100, got {self.scan_points}")
        if self.tol_e <= 0.0:
            raise ParameterError(f"tol_e must be positive, got {self.tol_e}")
        if self.max_levels < 1:
            raise ParameterError(f"max_levels must be >= 1, got {self.max_levels}")


def _scan_window(dc: DiracConstants, cfg: SolverConfig):
    """Scan grid over the bound window: uniform bulk plus geometrically
    refined points toward both edges, where weakly bound levels cluster
    (the effective eigenvalue vanishes at the endpoints)."""
    lo, hi = bound_window(dc)
    eps = _WINDOW_EPS_FACTOR * dc.m
    width = hi - lo
    bulk = np.linspace(lo + eps, hi - eps, cfg.scan_points)
    # 4 points per octave from width/2 down to the eps offset
    n_oct = max(8, int(math.ceil(math.log2(width / (2.0 * eps)))))
    d = width * 0.5 * 2.0 ** (-np.arange(0, n_oct * 4) / 4.0)
    d = d[d > eps]
    edges = np.concatenate([lo + d, hi - d])
    grid = np.unique(np.concatenate([bulk, edges]))
    return grid[(grid > lo) & (grid < hi)]


def _safe_eval(f, e):
    try:
        v = f(e)
    except QdeformError:
        return math.nan
    return v if math.isfinite(v) or math.isinf(v) else math.nan


def _bisect(f, a, b, fa, fb, tol):
    """Plain bisection on a sign-change bracket; robust against wild slopes."""
    while b - a > tol:
        m = 0.5 * (a + b)
        fm = _safe_eval(f, m)
        if math.isnan(fm):
            # pathological point inside the bracket: nudge and give up early
            # if it persists
            m = a + 0.51 * (b - a)
            fm = _safe_eval(f, m)
            if math.isnan(fm):
                break
        if (fm < 0.0) == (fa < 0.0):
            a, fa = m, fm
        else:
            b, fb = m, fm
    return 0.5 * (a + b)


def _roots_on_grid(f, grid, tol):
    """All sign-change roots of f on a scan grid, bisection-refined.

    Failed evaluations are skipped.  When two adjacent cells both bracket a
    root the scan is refined locally 10x (double-root guard).
    """
    vals = np.array([_safe_eval(f, e) for e in grid])
    roots = []
    bracket_cells = []
    for i in range(len(grid) - 1):
        fa, fb = vals[i], vals[i + 1]
        if math.isnan(fa) or math.isnan(fb):
            continue
        if fa == 0.0:
            roots.append(grid[i])
            continue
        if (fa < 0.0) != (fb < 0.0):
            bracket_cells.append(i)

    refined = set()
    for j, i in enumerate(bracket_cells):
        if j + 1 < len(bracket_cells) and bracket_cells[j + 1] == i + 1:
            refined.update((i, i + 1))
    for i in bracket_cells:
        if i in refined:
            sub = np.linspace(grid[i], grid[i + 1], 11)
            subvals = np.array([_safe_eval(f, e) for e in sub])
            for k in range(10):
                fa, fb = subvals[k], subvals[k + 1]
                if math.isnan(fa) or math.isnan(fb):
                    continue
                if (fa < 0.0) != (fb < 0.0):
                    roots.append(_bisect(f, sub[k], sub[k + 1], fa, fb, tol))
        else:
            roots.append(_bisect(f, grid[i], grid[i + 1], vals[i], vals[i + 1], tol))

    roots.sort()
    deduped = []
    for r in roots:
        if not deduped or r - deduped[-1] > 10.0 * tol:
            deduped.append(r)
    return deduped


def _level(n_r, e, dc, method):
    return EnergyLevel(
        n_r=n_r, energy=e, e_tilde=effective_eigenvalue(e, dc), method=method
    )


def solve_q_ge_1(n_r, dc: DiracConstants, p: PotentialParams,
                 cfg: SolverConfig = SolverConfig()) -> EnergyLevel:
    """Level n_r of the singular well (q >= 1) from a(E) + n_r = 0."""
    if p.q < 1.0:
        raise ParameterError(f"solve_q_ge_1 requires q >= 1, got {p.q}")
    if n_r < 0:
        raise ParameterError(f"n_r must be non-negative, got {n_r}")

    def f(e):
        a, _, _ = abc_params(e, dc, p)
        return a + n_r

    grid = _scan_window(dc, cfg)
    roots = _roots_on_grid(f, grid, cfg.tol_e * dc.m)
    if not roots:
        raise NoRootError(
            f"no level n_r={n_r} for q={p.q}: quantization has no root in the window",
            sign_changes=0,
        )
    return _level(n_r, roots[0], dc, METHOD_Q_GE_1)


def solve_q_lt_1(dc: DiracConstants, p: PotentialParams,
                 cfg: SolverConfig = SolverConfig()) -> list[EnergyLevel]:
    """All levels of the regular well (0 < q < 1): zeros of 2F1 at z0."""
    if not (0.0 < p.q < 1.0):
        raise ParameterError(f"solve_q_lt_1 requires 0 < q < 1, got {p.q}")
    sq = math.sqrt(p.q)
    z0 = 4.0 * sq / (1.0 + sq) ** 2

    def g(e):
        a, b, c = abc_params(e, dc, p)
        return gauss_2f1(a, b, c, z0)

    grid = _scan_window(dc, cfg)
    roots = _roots_on_grid(g, grid, cfg.tol_e * dc.m)
    return [
        _level(n, e, dc, METHOD_Q_LT_1)
        for n, e in enumerate(roots[: cfg.max_levels])
    ]


def solve_morse_exact(dc: DiracConstants, p: PotentialParams,
                      cfg: SolverConfig = SolverConfig()) -> list[EnergyLevel]:
    """All levels of the Morse well (q = 0): zeros of 1F1 at 4 sqrt(Vt1)/alpha."""
    if p.q != 0.0:
        raise ParameterError(f"solve_morse_exact requires q = 0, got q={p.q}")

    def h(e):
        v1t, v2t = effective_strengths(e, dc, p)
        et = effective_eigenvalue(e, dc)
        if et >= 0.0:
            return math.nan
        eta = math.sqrt(-et) / p.alpha
        a = 0.5 - v2t / (2.0 * p.alpha * math.sqrt(v1t)) + eta
        c = 2.0 * eta + 1.0
        return kummer_1f1(a, c, 4.0 * math.sqrt(v1t) / p.alpha)

    grid = _scan_window(dc, cfg)
    roots = _roots_on_grid(h, grid, cfg.tol_e * dc.m)
    return [
        _level(n, e, dc, METHOD_MORSE_EXACT)
        for n, e in enumerate(roots[: cfg.max_levels])
    ]


def solve_morse_asymptotic(n_r, dc: DiracConstants, p: PotentialParams,
                           cfg: SolverConfig = SolverConfig()) -> EnergyLevel:
    """Deep-well asymptotic Morse level: eta(E) = s(E) - n_r - 1/2.

    Here s = Vt2/(2 alpha sqrt(Vt1)); the level exists only while
    s > n_r + 1/2 at the solution (eta > 0).
    """
    if p.q != 0.0:
        raise ParameterError(f"solve_morse_asymptotic requires q = 0, got q={p.q}")
    if n_r < 0:
        raise ParameterError(f"n_r must be non-negative, got {n_r}")

    def phi(e):
        v1t, v2t = effective_strengths(e, dc, p)
        et = effective_eigenvalue(e, dc)
        if et >= 0.0:
            return math.nan
        eta = math.sqrt(-et) / p.alpha
        return eta + n_r + 0.5 - v2t / (2.0 * p.alpha * math.sqrt(v1t))

    grid = _scan_window(dc, cfg)
    roots = _roots_on_grid(phi, grid, cfg.tol_e * dc.m)
    if not roots:
        raise NoRootError(
            f"no asymptotic Morse level n_r={n_r}: the well supports fewer states",
            sign_changes=0,
        )
    return _level(n_r, roots[0], dc, METHOD_MORSE_ASYMPTOTIC)


def spectrum(dc: DiracConstants, p: PotentialParams,
             cfg: SolverConfig = SolverConfig()) -> list[EnergyLevel]:
    """Full bound spectrum, dispatched on the deformation regime."""
    if p.q >= 1.0:
        levels = []
        for n_r in range(cfg.max_levels):
            try:
                levels.append(solve_q_ge_1(n_r, dc, p, cfg))
            except NoRootError:
                break
        return levels
    if p.q > 0.0:
        return solve_q_lt_1(dc, p, cfg)
    return solve_morse_exact(dc, p, cfg)


def disputed_q_lt_1(dc: DiracConstants, p: PotentialParams,
                    cfg: SolverConfig = SolverConfig()) -> list[EnergyLevel]:
    """The disputed closed-form levels for 0 < q < 1.

    This applies the q >= 1 polynomial quantization below its domain of
    validity, for comparison only; it ignores the r = 0 boundary and its
    energies are generally wrong in this regime.
    """
    if not (0.0 < p.q < 1.0):
        raise ParameterError(f"disputed_q_lt_1 requires 0 < q < 1, got {p.q}")

    def f_for(n_r):
        def f(e):
            a, _, _ = abc_params(e, dc, p)
            return a + n_r
        return f

    grid = _scan_window(dc, cfg)
    levels = []
    for n_r in range(cfg.max_levels):
        roots = _roots_on_grid(f_for(n_r), grid, cfg.tol_e * dc.m)
        if not roots:
            break
        levels.append(_level(n_r, roots[0], dc, "disputed-closed-form"))
    return levels
