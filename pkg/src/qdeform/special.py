"""Analytic kernels: log-gamma, Gauss 2F1, Kummer 1F1, Jacobi polynomials.

All evaluators are real-argument, double precision.  The hypergeometric
series are summed with compensated (Kahan) accumulation; the Gauss function
switches to the 1-z connection formula past z = 1/2, with an Euler-transform
fallback when the connection formula degenerates (c-a-b near an integer).
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
from scipy.special import gammaln, gammasgn, rgamma

from .errors import DomainError, NonConvergenceError, ParameterError

__all__ = [
    "ln_gamma",
    "gauss_2f1",
    "gauss_2f1_many",
    "kummer_1f1",
    "jacobi_p",
    "confluent_limit_residual",
]

_MAX_TERMS = 100_000
_DEGENERATE_TOL = 1e-6
_KUMMER_ASYM_Z = 500.0
_EXP_MAX = 745.0  # just above log(DBL_MAX); exp() past this is +inf


def ln_gamma(x: float) -> float:
    """log Gamma(x) for x > 0."""
    if x <= 0.0:
        raise DomainError(f"ln_gamma requires x > 0, got {x}")
    return float(gammaln(x))


def _nonpos_int_degree(x) -> int | None:
    """If x is a non-positive integer return n = -x, else None."""
    if x <= 0.0 and x == round(x):
        return int(-round(x))
    return None


def _safe_exp(L: float) -> float:
    if L > _EXP_MAX:
        return math.inf
    return math.exp(L)


def _kahan_series(ratio_fn, z, nterms=None):
    """Sum a hypergeometric-type series with term recurrence.

    ``ratio_fn(k)`` gives the z-free factor term_{k+1}/(term_k * z); z may
    be an array.  With ``nterms`` the sum is the exact truncation after that
    many post-leading terms (terminating series); otherwise summation stops
    once the term has been below 1e-16 of the running sum for 3 consecutive
    terms everywhere.
    """
    z = np.asarray(z, dtype=float)
    term = np.ones_like(z)
    s = np.ones_like(z)
    comp = np.zeros_like(z)
    small = np.zeros(z.shape, dtype=np.int64)
    kmax = nterms if nterms is not None else _MAX_TERMS
    for k in range(kmax):
        term = term * (ratio_fn(k) * z)
        y = term - comp
        t = s + y
        comp = (t - s) - y
        s = t
        if nterms is None:
            small = np.where(np.abs(term) <= 1e-16 * np.abs(s), small + 1, 0)
            if np.all(small >= 3):
                return s
    if nterms is None:
        raise NonConvergenceError(
            f"hypergeometric series did not converge in {_MAX_TERMS} terms"
        )
    return s


def _series_2f1(a, b, c, z, nterms=None):
    return _kahan_series(
        lambda k: (a + k) * (b + k) / ((c + k) * (k + 1.0)), z, nterms
    )


def _series_1f1(a, c, z, nterms=None):
    return _kahan_series(lambda k: (a + k) / ((c + k) * (k + 1.0)), z, nterms)


def _series_2f1_abs(a, b, c, z, n):
    """Sum of |terms| of the degree-n terminating series (cancellation gauge)."""
    return _kahan_series(
        lambda k: abs((a + k) * (b + k) / ((c + k) * (k + 1.0))),
        np.abs(z), nterms=n)


def _terminating_2f1_exact(a, b, c, z, n):
    """Degree-n terminating 2F1 in exact rational arithmetic.

    Floats convert to Fractions exactly, so the only rounding is the final
    cast back; used to rescue points lost to alternating-sum cancellation.
    """
    aF, bF, cF, zF = Fraction(a), Fraction(b), Fraction(c), Fraction(z)
    total = Fraction(1)
    term = Fraction(1)
    for k in range(n):
        term *= (aF + k) * (bF + k) * zF
        term /= (cF + k) * (k + 1)
        total += term
    return float(total)


def _check_2f1_params(a, b, c):
    """Return terminating degree n (or None); reject parameter poles."""
    na, nb = _nonpos_int_degree(a), _nonpos_int_degree(b)
    n = None
    if na is not None and nb is not None:
        n = min(na, nb)
    elif na is not None:
        n = na
    elif nb is not None:
        n = nb
    nc = _nonpos_int_degree(c)
    if nc is not None and (n is None or n > nc):
        raise ParameterError(
            f"2F1 pole: c={c} is a non-positive integer reached by the series"
        )
    return n


def _gamma_ratio_sign_log(num, den):
    """sign and log-magnitude of prod Gamma(num_i) / prod Gamma(den_i)."""
    sign = 1.0
    L = 0.0
    for x in num:
        sign *= gammasgn(x)
        L += gammaln(x)
    for x in den:
        g = gammasgn(x)
        if g == 0.0:  # pole in the denominator kills the whole term
            return 0.0, -math.inf
        sign *= g
        L -= gammaln(x)
    return sign, L


def gauss_2f1_many(a, b, c, z):
    """Gauss 2F1(a, b, c; z) elementwise over an array of arguments z.

    Shares one parameter triple across the whole array; used for sampling
    wavefunctions on radial grids.  Each z must satisfy |z| < 1 unless the
    series terminates.
    """
    n = _check_2f1_params(a, b, c)
    z = np.asarray(z, dtype=float)
    out = np.empty_like(z)
    if n is not None:
        out[...] = _series_2f1(a, b, c, z, nterms=n)
        if n >= 2:
            # alternating polynomial: where cancellation eats more than
            # ~3 digits, redo those points in exact rational arithmetic
            mag = _series_2f1_abs(a, b, c, z, n)
            bad = np.abs(out) < 1e-3 * mag
            if np.any(bad):
                flat = out.reshape(-1)
                zf = z.reshape(-1)
                for i in np.nonzero(bad.reshape(-1))[0]:
                    flat[i] = _terminating_2f1_exact(a, b, c, zf[i], n)
        return out
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("non-terminating 2F1 requires |z| < 1")

    direct = np.abs(z) <= 0.5
    if np.any(direct):
        out[direct] = _series_2f1(a, b, c, z[direct])

    neg = (~direct) & (z < 0.0)
    if np.any(neg):
        # Pfaff transform maps z in (-1, -1/2) to w in (1/3, 1/2)
        zn = z[neg]
        w = zn / (zn - 1.0)
        out[neg] = (1.0 - zn) ** (-a) * _series_2f1(a, c - b, c, w)

    upper = (~direct) & (z > 0.0)
    if np.any(upper):
        zu = z[upper]
        w = 1.0 - zu
        m = c - a - b
        if abs(m - round(m)) < _DEGENERATE_TOL:
            # Euler fallback: still a |z|<1 series, just slower near z=1
            out[upper] = w ** m * _series_2f1(c - a, c - b, c, zu)
        else:
            s1, L1 = _gamma_ratio_sign_log((c, m), (c - a, c - b))
            s2, L2 = _gamma_ratio_sign_log((c, -m), (a, b))
            f1 = _series_2f1(a, b, 1.0 - m, w)
            f2 = _series_2f1(c - a, c - b, 1.0 + m, w)
            Lw = L2 + m * np.log(w)
            t2 = s2 * np.exp(np.minimum(Lw, _EXP_MAX)) * f2
            t2 = np.where(Lw > _EXP_MAX, np.sign(s2 * f2) * np.inf, t2)
            out[upper] = s1 * _safe_exp(L1) * f1 + t2
    return out


def gauss_2f1(a, b, c, z) -> float:
    """Gauss hypergeometric 2F1(a, b, c; z) for real scalar arguments."""
    return float(gauss_2f1_many(a, b, c, np.atleast_1d(float(z)))[0])


def _kummer_asym(a, c, z):
    """Large-z > 0 dominant branch of 1F1 as (smooth_factor, log_magnitude).

    The value is smooth_factor * exp(log_magnitude); the smooth factor
    1/Gamma(a) carries the sign and the zero crossings at a = -n, which is
    what root bracketing needs.  Accurate for z >> |a|, |c|.
    """
    s = 1.0
    total = 1.0
    kmax = max(4, min(40, int(z) - 1))
    prev = abs(s)
    for k in range(kmax):
        s *= (c - a + k) * (1.0 - a + k) / ((k + 1.0) * z)
        if abs(s) > prev:  # asymptotic series: stop at the smallest term
            break
        prev = abs(s)
        total += s
    L = z + (a - c) * math.log(z) + gammaln(c)
    return gammasgn(c) * rgamma(a) * total, L


def kummer_1f1(a, c, z) -> float:
    """Confluent hypergeometric 1F1(a, c; z) for real scalar arguments.

    Direct compensated series for moderate z.  For large |z| the dominant
    asymptotic branch is used; there the magnitude saturates at the float
    range but signs and zero locations (a near -n) remain faithful, which
    is all the quantization root-finders require.
    """
    n = _nonpos_int_degree(a)
    nc = _nonpos_int_degree(c)
    if nc is not None and (n is None or n > nc):
        raise ParameterError(
            f"1F1 pole: c={c} is a non-positive integer reached by the series"
        )
    z = float(z)
    if z == 0.0:
        return 1.0
    if n is not None:
        return float(_series_1f1(a, c, np.atleast_1d(z), nterms=n)[0])
    if z < 0.0:
        # Kummer reflection 1F1(a,c;z) = e^z 1F1(c-a,c;-z): the direct
        # alternating series cancels catastrophically already at z ~ -20,
        # while the reflected series has (eventually) single-signed terms.
        if -z <= _KUMMER_ASYM_Z:
            return math.exp(z) * float(
                _series_1f1(c - a, c, np.atleast_1d(-z))[0])
        smooth, L = _kummer_asym(c - a, c, -z)
        return smooth * _safe_exp(L + z)
    if z <= _KUMMER_ASYM_Z:
        return float(_series_1f1(a, c, np.atleast_1d(z))[0])
    smooth, L = _kummer_asym(a, c, z)
    return smooth * _safe_exp(L)


def kummer_1f1_many(a, c, z):
    """Vector version of ``kummer_1f1`` over an array of arguments."""
    z = np.asarray(z, dtype=float)
    n = _nonpos_int_degree(a)
    if n is not None:
        return _series_1f1(a, c, z, nterms=n)
    out = np.empty_like(z)
    small = (z >= 0.0) & (z <= _KUMMER_ASYM_Z)
    if np.any(small):
        out[small] = _series_1f1(a, c, z[small])
    neg = (z < 0.0) & (z >= -_KUMMER_ASYM_Z)
    if np.any(neg):
        out[neg] = np.exp(z[neg]) * _series_1f1(c - a, c, -z[neg])
    rest = ~(small | neg)
    if np.any(rest):
        out[rest] = [kummer_1f1(a, c, zi) for zi in z[rest]]
    return out


def jacobi_p(n: int, alpha: float, beta: float, x):
    """Jacobi polynomial P_n^(alpha, beta)(x) by the three-term recurrence.

    Requires n >= 0 and alpha, beta > -1; x may be a scalar or array.
    """
    if n < 0 or n != int(n):
        raise DomainError(f"degree must be a non-negative integer, got {n}")
    if alpha <= -1.0 or beta <= -1.0:
        raise DomainError("jacobi_p requires alpha, beta > -1")
    n = int(n)
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev if p_prev.ndim else float(p_prev)
    p = (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0
    for k in range(2, n + 1):
        s = k + alpha + beta
        c1 = 2.0 * k * s * (2.0 * k + alpha + beta - 2.0)
        c2 = (2.0 * k + alpha + beta - 1.0) * (
            (2.0 * k + alpha + beta) * (2.0 * k + alpha + beta - 2.0) * x
            + alpha * alpha - beta * beta
        )
        c3 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + alpha + beta)
        p, p_prev = (c2 * p - c3 * p_prev) / c1, p
    return p if p.ndim else float(p)


def confluent_limit_residual(alpha, gamma, z, beta) -> float:
    """|2F1(alpha, beta, gamma; z/beta) - 1F1(alpha, gamma; z)|.

    Diagnostic for the confluent limit; decreases toward 0 as beta grows.
    """
    if beta <= 0.0 or abs(z / beta) >= 1.0:
        raise DomainError("need beta > 0 with |z/beta| < 1")
    return abs(gauss_2f1(alpha, beta, gamma, z / beta) - kummer_1f1(alpha, gamma, z))
