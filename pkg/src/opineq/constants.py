"""Scalar constants behind the reverse inequalities.

All of them are maxima of smooth 1-D objectives over a spectral interval:
the Kantorovich constant and its p-power generalization, the chord-ratio
constant alpha, the chord-gap constant beta0, the additive power constant
beta_p with its closed form, and the chord-based (alpha, beta) pair used in
the scalar bound <Phi(f(A))x,x> <= beta + alpha*f(<Phi(A)x,x>).

Maximization is a 4096-point scan followed by golden-section refinement;
objectives here have at most a few extrema, so scan+refine is robust.
scipy is deliberately not pulled in for a one-screen optimizer.
"""
from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np

from .hermitian import DomainError, SpectralInterval

_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0
SCAN_POINTS = 4096
XTOL = 1e-12


def _interval(iv) -> SpectralInterval:
    if isinstance(iv, SpectralInterval):
        return iv
    m, M = iv
    return SpectralInterval(float(m), float(M))


def golden_max(f: Callable[[np.ndarray], np.ndarray], lo: float, hi: float,
               xtol: float = XTOL, scan_points: int = SCAN_POINTS):
    """Global max of a smooth f on [lo, hi]: coarse scan, then golden section
    inside the best bracket. Returns (argmax, value). f must accept arrays."""
    if hi < lo:
        raise ValueError(f"empty interval [{lo}, {hi}]")
    if hi == lo:
        return lo, float(f(np.asarray(lo, dtype=float)))
    xs = np.linspace(lo, hi, scan_points)
    vals = np.asarray(f(xs), dtype=float)
    if not np.all(np.isfinite(vals)):
        raise ValueError("objective is not finite on the interval")
    k = int(np.argmax(vals))
    best = float(vals[k])
    a = float(xs[max(k - 1, 0)])
    b = float(xs[min(k + 1, scan_points - 1)])
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc = float(f(np.asarray(c)))
    fd = float(f(np.asarray(d)))
    while (b - a) > xtol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = float(f(np.asarray(c)))
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = float(f(np.asarray(d)))
    x = (a + b) / 2.0
    fx = float(f(np.asarray(x)))
    if fx >= best:
        return x, fx
    return float(xs[k]), best


class ChordCoefficients(NamedTuple):
    slope: float
    intercept: float

    def __call__(self, t):
        return self.slope * t + self.intercept


def chord_coefficients(f, m: float, M: float) -> ChordCoefficients:
    """Secant line of f through (m, f(m)) and (M, f(M))."""
    if not (0 < m < M):
        raise DomainError(f"need 0 < m < M, got ({m}, {M})")
    fm = float(f(np.asarray(m, dtype=float)))
    fM = float(f(np.asarray(M, dtype=float)))
    slope = (fM - fm) / (M - m)
    intercept = (M * fm - m * fM) / (M - m)
    return ChordCoefficients(slope, intercept)


def kantorovich_constant(iv) -> float:
    iv = _interval(iv)
    m, M = iv.m, iv.M
    return (M + m) ** 2 / (4.0 * M * m)


def generalized_kantorovich(p: float, iv) -> float:
    """K(p, m, M), the reversal factor in Phi(A^p) <= K * Phi(A)^p.

    Defined here for p >= 1 or p <= 0 (the range the inequalities use);
    p in {0, 1} and m = M return the continuity limit 1.
    """
    iv = _interval(iv)
    m, M = iv.m, iv.M
    p = float(p)
    if 1e-8 < p < 1 - 1e-8:
        raise DomainError(f"K(p, m, M) is exposed for p >= 1 or p <= 0, got p={p}")
    if abs(p) < 1e-8 or abs(p - 1) < 1e-8 or m == M:
        return 1.0
    lead = (m * M ** p - M * m ** p) / ((p - 1.0) * (M - m))
    inner = (p - 1.0) / p * (M ** p - m ** p) / (m * M ** p - M * m ** p)
    return lead * inner ** p


def alpha_constant(f, iv) -> float:
    """max over [m, M] of chord(t)/f(t); >= 1 for convex positive f."""
    iv = _interval(iv)
    m, M = iv.m, iv.M
    if m == M:
        return 1.0
    chord = chord_coefficients(f, m, M)
    ts = np.linspace(m, M, 64)
    if np.min(np.asarray(f(ts), dtype=float)) <= 0:
        raise DomainError("alpha_constant needs f > 0 on [m, M]")
    _, value = golden_max(lambda t: chord(t) / f(t), m, M)
    return value


def beta0_constant(f, iv) -> float:
    """max over [m, M] of f(t) - chord(t); 0 for affine f, > 0 for strictly
    concave f."""
    iv = _interval(iv)
    m, M = iv.m, iv.M
    if m == M:
        return 0.0
    chord = chord_coefficients(f, m, M)
    _, value = golden_max(lambda t: f(t) - chord(t), m, M)
    return value


def beta_p_constant(p: float, iv) -> float:
    """Additive constant for the p-power triangle-type bound:
    beta_p = 2 * beta0[t^(1/p); m^p, M^p], in closed form.

    The gap s^(1/p) - chord(s) on [m^p, M^p] is maximized where the
    derivative matches the chord slope, at s* = (p*a)^(p/(1-p)).
    """
    iv = _interval(iv)
    m, M = iv.m, iv.M
    p = float(p)
    if p < 1:
        raise DomainError(f"beta_p is defined for p >= 1, got p={p}")
    if m == M or abs(p - 1) < 1e-12:
        return 0.0
    mp, Mp = m ** p, M ** p
    a = (M - m) / (Mp - mp)
    b = (m * Mp - M * mp) / (Mp - mp)
    s_star = (p * a) ** (p / (1.0 - p))
    s_star = min(max(s_star, mp), Mp)
    gap = s_star ** (1.0 / p) - a * s_star - b
    return 2.0 * gap


def mond_pecaric_beta(f, iv, alpha: float) -> float:
    """beta = max over [m, M] of chord(t) - alpha*f(t), the additive half of
    the chord bound for convex f."""
    iv = _interval(iv)
    m, M = iv.m, iv.M
    if m == M:
        return float((1.0 - alpha) * f(np.asarray(m, dtype=float)))
    chord = chord_coefficients(f, m, M)
    _, value = golden_max(lambda t: chord(t) - alpha * f(t), m, M)
    return value


__all__ = [
    "ChordCoefficients", "golden_max", "chord_coefficients",
    "kantorovich_constant", "generalized_kantorovich", "alpha_constant",
    "beta0_constant", "beta_p_constant", "mond_pecaric_beta",
]
