"""Critical-line special functions.

Scalar reference evaluators for the phase machinery on Re(s) = 1/2: the
Riemann-Siegel theta function (exact and asymptotic-series forms), complex
log-gamma, the principal branch of Lambert W, zeta on the critical line via
Euler-Maclaurin summation, the Hardy Z function, and principal-branch
argument extractors normalized by pi.

Accuracy targets are "working precision": phases whose magnitude grows like
t*log(t) are computed through one extended-precision smooth term and a
single error-free product with pi, so every returned binary64 phase is
within one ulp of the true value and all phase functions share the same
smooth-term double.  Zeta values carry absolute error around 1e-12 inside
the supported window 0 <= t <= 1e4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath as mp
import numpy as np
from scipy.special import loggamma as _scipy_loggamma

TWO_PI = 2.0 * math.pi
LN_PI = math.log(math.pi)

T_WINDOW_MAX = 1.0e4

# Internal working precision (decimal digits) for extended-precision paths.
_DPS = 40

# Switch point between the log-gamma route and the asymptotic route for the
# exact phase.  Above this the 8-term series is exact to far below one ulp.
_THETA_SERIES_MIN = 50.0

# |B_2|, |B_4|, ..., |B_16| as exact rationals.
_BERNOULLI_ABS = (
    Fraction(1, 6),
    Fraction(1, 30),
    Fraction(1, 42),
    Fraction(1, 30),
    Fraction(5, 66),
    Fraction(691, 2730),
    Fraction(7, 6),
    Fraction(3617, 510),
)

# Signed B_{2j} for the Euler-Maclaurin correction terms.
_BERNOULLI_SIGNED = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
)

_MAX_SERIES_ORDER = len(_BERNOULLI_ABS)


class AtZeroError(ArithmeticError):
    """Raised when an argument is requested at a point where zeta vanishes."""


def _theta_coefficient(k: int) -> Fraction:
    """Exact coefficient of t**-(2k+1) in the theta asymptotic series.

    c_k = (1 - 2**(1-2n)) * |B_2n| / (4n(2n-1)) with n = k + 1.
    """
    n = k + 1
    if n > _MAX_SERIES_ORDER:
        raise ValueError(f"series coefficients tabulated through order {_MAX_SERIES_ORDER}")
    return (1 - Fraction(1, 2 ** (2 * n - 1))) * _BERNOULLI_ABS[n - 1] / (4 * n * (2 * n - 1))


_THETA_COEFFS = tuple(float(_theta_coefficient(k)) for k in range(_MAX_SERIES_ORDER))


@dataclass(frozen=True)
class ThetaSeries:
    """Truncated asymptotic expansion of the phase function theta.

    coeffs[k] multiplies t**-(2k+1) on top of the closed main term
    (t/2)*log(t/(2*pi)) - t/2 - pi/8.  The default order of 4 carries the
    exact rationals 1/48, 7/5760, 31/80640, 127/430080.
    """

    order: int = 4
    coeffs: tuple[Fraction, ...] = field(init=False)

    def __post_init__(self) -> None:
        if not 0 <= self.order <= _MAX_SERIES_ORDER:
            raise ValueError(f"order must be in [0, {_MAX_SERIES_ORDER}]")
        object.__setattr__(
            self, "coeffs", tuple(_theta_coefficient(k) for k in range(self.order))
        )

    def __call__(self, t: float) -> float:
        return theta_series(t, self.order)


def log_gamma_complex(z: complex) -> complex:
    """Principal-branch log-gamma, continuous along vertical lines Re z > 0.

    Thin wrapper over a library evaluator; the imaginary part is the
    continuously tracked phase, not the principal argument of gamma(z).
    """
    z = complex(z)
    if z.real <= 0.0 and z.imag == 0.0 and z.real == int(z.real):
        raise ValueError(f"log-gamma pole at z = {z}")
    return complex(_scipy_loggamma(z))


@lru_cache(maxsize=131072)
def smooth_main(t: float) -> float:
    """Smooth main term (t/2pi) log(t/(2 pi e)) + 7/8, correctly rounded.

    This single double anchors the whole phase pipeline: the integer-argument
    approximations, the carriers, and both theta evaluators are built from
    it, so their binary64 rounding errors cancel in cross-identities.
    """
    if t <= 0.0:
        raise ValueError("smooth main term requires t > 0")
    with mp.workdps(_DPS):
        x = mp.mpf(t) / (2 * mp.pi)
        return float(x * mp.log(x) - x + mp.mpf(7) / 8)


def _two_prod(a: float, b: float) -> tuple[float, float]:
    """Dekker error-free product: a*b = p + e exactly."""
    p = a * b
    c = 134217729.0 * a
    ah = c - (c - a)
    al = a - ah
    c = 134217729.0 * b
    bh = c - (c - b)
    bl = b - bh
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, e


def _theta_correction(t: float, order: int) -> float:
    """Sum of coeffs[k] * t**-(2k+1) for k < order (theta units)."""
    w = 1.0 / (t * t)
    acc = 0.0
    for k in range(order - 1, -1, -1):
        acc = acc * w + _THETA_COEFFS[k]
    return acc / t


def _theta_from_main(t: float, order: int) -> float:
    """pi * (smooth_main(t) - 1) + correction, with one effective rounding."""
    p, e = _two_prod(math.pi, smooth_main(t) - 1.0)
    return p + (e + _theta_correction(t, order))


@lru_cache(maxsize=65536)
def _theta_loggamma(t: float) -> float:
    with mp.workdps(_DPS):
        return float(mp.siegeltheta(t))


def theta_exact(t: float) -> float:
    """Phase theta(t) = Im log-gamma(1/4 + it/2) - (t/2) log(pi), exact branch.

    Odd in t by construction.  Below t = 50 this goes through log-gamma in
    extended precision; above, through the asymptotic series whose
    truncation error is below 1e-19 there.
    """
    t = float(t)
    if not math.isfinite(t):
        raise ValueError("t must be finite")
    if abs(t) > 2.0 * T_WINDOW_MAX:
        raise ValueError(f"|t| beyond supported window {2.0 * T_WINDOW_MAX:g}")
    if t == 0.0:
        return 0.0
    sign, mag = math.copysign(1.0, t), abs(t)
    if mag < _THETA_SERIES_MIN:
        return sign * _theta_loggamma(mag)
    return sign * _theta_from_main(mag, _MAX_SERIES_ORDER)


def theta_series(t: float, order: int = 4) -> float:
    """Asymptotic form of theta(t): main term plus `order` correction terms.

    Valid for t >= 10; the order-4 truncation already sits below 1e-12 of
    theta_exact for t >= 50.
    """
    t = float(t)
    if t < 10.0:
        raise ValueError("asymptotic series requires t >= 10")
    if not 0 <= order <= _MAX_SERIES_ORDER:
        raise ValueError(f"order must be in [0, {_MAX_SERIES_ORDER}]")
    return _theta_from_main(t, order)


def lambert_w0(x: float, tol: float = 1e-15, max_iter: int = 50) -> float:
    """Principal branch W0 of the Lambert W function on [-1/e, inf).

    Halley iteration from a log-based initial guess, blended toward the
    square-root expansion near the branch point at -1/e.
    """
    x = float(x)
    branch = -1.0 / math.e
    if x < branch:
        if x > branch - 1e-15:
            x = branch
        else:
            raise ValueError(f"lambert_w0 domain is [-1/e, inf), got {x}")
    if x == 0.0:
        return 0.0
    if x == branch:
        return -1.0

    if x < branch + 0.25:
        # Branch-point expansion: W = -1 + p - p^2/3 + ... with p = sqrt(2(e x + 1)).
        p = math.sqrt(2.0 * (math.e * x + 1.0))
        w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * 11.0 / 72.0))
    elif x < math.e:
        w = math.log1p(x) * 0.7  # crude but inside the basin
    else:
        lx = math.log(x)
        w = lx - math.log(lx)

    for _ in range(max_iter):
        ew = math.exp(w)
        f = w * ew - x
        if f == 0.0:
            break
        wp1 = w + 1.0
        denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1)
        step = f / denom
        w -= step
        if abs(step) <= tol * max(1.0, abs(w)):
            break
    else:
        raise ArithmeticError(f"lambert_w0 failed to converge for x = {x}")

    residual = w * math.exp(w) - x
    if abs(residual) > 1e-14 * max(1.0, abs(x)):
        raise ArithmeticError(f"lambert_w0 residual {residual:g} too large for x = {x}")
    return w


def _em_truncation(t: float) -> int:
    return int(math.ceil(1.3 * t)) + 30


def _zeta_em(t: float, n_terms: int | None = None) -> complex:
    """Euler-Maclaurin evaluation of zeta(1/2 + it).

    Truncation point N = ceil(1.3 t) + 30 with six Bernoulli correction
    terms; the main sum is accumulated with error-free-transform summation.
    """
    t = float(t)
    n_big = n_terms if n_terms is not None else _em_truncation(t)
    if n_big < 2:
        n_big = 2
    s = complex(0.5, t)

    ks = np.arange(1, n_big, dtype=np.float64)
    weights = 1.0 / np.sqrt(ks)
    phases = t * np.log(ks)
    re = math.fsum(weights * np.cos(phases))
    im = -math.fsum(weights * np.sin(phases))
    total = complex(re, im)

    n_f = float(n_big)
    total += n_f ** (1 - s) / (s - 1.0)
    total += 0.5 * n_f ** (-s)

    # Bernoulli tail: sum_j B_2j/(2j)! * s(s+1)...(s+2j-2) * N^(1-s-2j)
    rising = s
    power = n_f ** (-s - 1.0)
    n_inv2 = n_f ** -2.0
    fact = 2.0
    for j, b2j in enumerate(_BERNOULLI_SIGNED, start=1):
        total += (float(b2j) / fact) * rising * power
        rising *= (s + (2 * j - 1)) * (s + 2 * j)
        power *= n_inv2
        fact *= (2 * j + 1) * (2 * j + 2)
    return total


def zeta_critical_line(t: float) -> complex:
    """zeta(1/2 + it) for 0 <= t <= 1e4, absolute accuracy ~1e-12."""
    t = float(t)
    if not 0.0 <= t <= T_WINDOW_MAX:
        raise ValueError(f"t outside supported window [0, {T_WINDOW_MAX:g}]")
    return _zeta_em(t)


def hardy_z(t: float) -> float:
    """Hardy Z(t) = e^{i theta(t)} zeta(1/2 + it), real on the critical line."""
    t = float(t)
    if not 2.0 <= t <= T_WINDOW_MAX:
        raise ValueError(f"t outside supported window [2, {T_WINDOW_MAX:g}]")
    z = _zeta_em(t)
    th = theta_exact(t)
    return math.cos(th) * z.real - math.sin(th) * z.imag


def wrap_half_turns(u: float) -> float:
    """Wrap to (-1, 1], units of half turns (value of angle/pi)."""
    w = math.remainder(u, 2.0)
    if w <= -1.0:
        w += 2.0
    return w


def arg_zeta_principal(t: float) -> float:
    """(1/pi) Arg zeta(1/2 + it) with the principal branch, in (-1, 1]."""
    z = zeta_critical_line(t)
    if abs(z) < 1e-12:
        raise AtZeroError(f"zeta vanishes at t = {t} to working precision")
    return math.atan2(z.imag, z.real) / math.pi


def arg_gamma_quarter(t: float) -> float:
    """(1/pi) Arg gamma(1/4 + it/2) with the principal branch, in (-1, 1].

    Odd in t.  Computed from the continuous phase of log-gamma, wrapped to
    the principal range; the gamma value itself underflows for large t so
    the phase route is the only stable one.
    """
    t = float(t)
    if abs(t) > 2.0 * T_WINDOW_MAX:
        raise ValueError(f"|t| beyond supported window {2.0 * T_WINDOW_MAX:g}")
    if t == 0.0:
        return 0.0
    if t < 0.0:
        return -arg_gamma_quarter(-t)
    phase = log_gamma_complex(complex(0.25, 0.5 * t)).imag / math.pi
    return wrap_half_turns(phase)
