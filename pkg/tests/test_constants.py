"""Reversal constants against hand-derived values and the grid oracle.

The oracle route (dense grid maximum) and the production route (scan plus
golden-section refinement) share no maximizer code; agreement within 1e-8 is
the cross-check the acceptance gate leans on.
"""
import numpy as np
import pytest

from opineq.constants import (alpha_constant, beta0_constant, beta_p_constant,
                              chord_coefficients, generalized_kantorovich,
                              golden_max, kantorovich_constant,
                              mond_pecaric_beta)
from opineq.functions import by_name
from opineq.hermitian import DomainError, SpectralInterval
from opineq.oracle import (oracle_alpha, oracle_beta0, oracle_beta_p,
                           oracle_generalized_kantorovich, oracle_kantorovich,
                           oracle_mond_pecaric_beta)

INTERVALS = [(1.0, 2.0), (1.0, 4.0), (0.5, 3.0)]


def test_golden_max_quadratic():
    # argmax localization saturates near sqrt(eps) for a flat-top objective
    arg, val = golden_max(lambda t: 3.0 - (t - 1.0) ** 2, 0.0, 2.0)
    assert abs(arg - 1.0) < 1e-6 and abs(val - 3.0) < 1e-12


def test_golden_max_endpoint():
    arg, val = golden_max(lambda t: t, 0.0, 5.0)
    assert abs(val - 5.0) < 1e-9


def test_chord_interpolates_endpoints():
    f = by_name("t^2")
    chord = chord_coefficients(f, 1.0, 3.0)
    assert abs(chord(1.0) - 1.0) < 1e-12
    assert abs(chord(3.0) - 9.0) < 1e-12
    # slope (f(M)-f(m))/(M-m) = 4, intercept (M f(m) - m f(M))/(M-m) = -3
    assert abs(chord.slope - 4.0) < 1e-12 and abs(chord.intercept + 3.0) < 1e-12


def test_kantorovich_hand_values():
    assert abs(kantorovich_constant((1.0, 2.0)) - 9.0 / 8.0) < 1e-15
    assert abs(kantorovich_constant((1.0, 4.0)) - 25.0 / 16.0) < 1e-15
    assert abs(kantorovich_constant((1.0, 1.0)) - 1.0) < 1e-15


def test_generalized_kantorovich_special_points():
    iv = (1.0, 2.0)
    assert abs(generalized_kantorovich(2.0, iv) - 9.0 / 8.0) < 1e-14
    assert abs(generalized_kantorovich(-1.0, iv) - 9.0 / 8.0) < 1e-14
    assert generalized_kantorovich(1.0, iv) == 1.0
    assert generalized_kantorovich(0.0, iv) == 1.0


def test_generalized_kantorovich_interior_p_rejected():
    with pytest.raises(DomainError):
        generalized_kantorovich(0.5, (1.0, 2.0))


@pytest.mark.parametrize("m,M", INTERVALS)
def test_k2_closed_form(m, M):
    ref = (M + m) ** 2 / (4 * M * m)
    assert abs(generalized_kantorovich(2.0, (m, M)) - ref) <= 1e-12 * ref


def test_alpha_hand_value():
    # chord of t^2 over [1,2] is 3t-2; (3t-2)/t^2 peaks at t = 4/3 with value 9/8
    f = by_name("t^2")
    assert abs(alpha_constant(f, (1.0, 2.0)) - 9.0 / 8.0) < 1e-10


def test_alpha_of_linear_is_one():
    assert abs(alpha_constant(by_name("t"), (0.5, 3.0)) - 1.0) < 1e-12


def test_alpha_degenerate_interval():
    assert alpha_constant(by_name("t^2"), (2.0, 2.0)) == 1.0


def test_beta0_hand_value():
    # sqrt over [1,4]: max of sqrt(t) - (t+2)/3 at t = 9/4 is 1/12
    f = by_name("t^0.5")
    assert abs(beta0_constant(f, (1.0, 4.0)) - 1.0 / 12.0) < 1e-10
    assert beta0_constant(f, (3.0, 3.0)) == 0.0


def test_beta_p_closed_forms():
    assert abs(beta_p_constant(2.0, (1.0, 2.0)) - 1.0 / 6.0) < 1e-12
    for m, M in INTERVALS:
        ref = (M - m) ** 2 / (2 * (M + m))
        assert abs(beta_p_constant(2.0, (m, M)) - ref) <= 1e-10 * ref
    assert beta_p_constant(1.0, (1.0, 2.0)) == 0.0
    with pytest.raises(DomainError):
        beta_p_constant(0.5, (1.0, 2.0))


def test_mond_pecaric_hand_values():
    f = by_name("t^2")
    iv = (1.0, 2.0)
    # alpha = 1: max of (3t-2) - t^2 at t = 3/2 is 1/4
    assert abs(mond_pecaric_beta(f, iv, 1.0) - 0.25) < 1e-10
    # alpha = 0: plain chord maximum, attained at M
    assert abs(mond_pecaric_beta(f, iv, 0.0) - 4.0) < 1e-10


def test_mond_pecaric_degenerate():
    f = by_name("t^2")
    assert abs(mond_pecaric_beta(f, (2.0, 2.0), 0.5) - 0.5 * 4.0) < 1e-12


def test_interval_validation():
    with pytest.raises(DomainError):
        kantorovich_constant((0.0, 1.0))
    with pytest.raises(DomainError):
        alpha_constant(by_name("t^2"), (2.0, 1.0))


def test_accepts_spectral_interval_objects():
    iv = SpectralInterval(1.0, 2.0)
    assert kantorovich_constant(iv) == kantorovich_constant((1.0, 2.0))


# dual-route agreement (the acceptance gate re-runs this at full scope)

@pytest.mark.parametrize("m,M", INTERVALS)
def test_oracle_agreement_kantorovich(m, M):
    assert abs(kantorovich_constant((m, M)) - oracle_kantorovich(m, M)) < 1e-8


@pytest.mark.parametrize("m,M", INTERVALS)
@pytest.mark.parametrize("p", [-1.0, 1.5, 2.0, 3.0])
def test_oracle_agreement_generalized(m, M, p):
    got = generalized_kantorovich(p, (m, M))
    assert abs(got - oracle_generalized_kantorovich(p, m, M)) < 1e-8


@pytest.mark.parametrize("m,M", INTERVALS)
@pytest.mark.parametrize("fname", ["t^2", "t^1.5"])
def test_oracle_agreement_alpha(m, M, fname):
    f = by_name(fname)
    assert abs(alpha_constant(f, (m, M)) - oracle_alpha(f, m, M)) < 1e-8


@pytest.mark.parametrize("m,M", INTERVALS)
def test_oracle_agreement_beta0(m, M):
    f = by_name("t^0.5")
    assert abs(beta0_constant(f, (m, M)) - oracle_beta0(f, m, M)) < 1e-8


@pytest.mark.parametrize("m,M", INTERVALS)
@pytest.mark.parametrize("p", [1.25, 1.5, 2.0])
def test_oracle_agreement_beta_p(m, M, p):
    assert abs(beta_p_constant(p, (m, M)) - oracle_beta_p(p, m, M)) < 1e-8


@pytest.mark.parametrize("m,M", INTERVALS)
@pytest.mark.parametrize("alpha", [0.0, 1.0, 1.7])
def test_oracle_agreement_mond_pecaric(m, M, alpha):
    f = by_name("t^2")
    got = mond_pecaric_beta(f, (m, M), alpha)
    assert abs(got - oracle_mond_pecaric_beta(f, m, M, alpha)) < 1e-8


def test_chord_dominates_convex_function():
    # the scalar fact behind every beta: chord >= f on [m, M] for convex f
    f = by_name("t^2")
    chord = chord_coefficients(f, 0.5, 3.0)
    ts = np.linspace(0.5, 3.0, 501)
    assert (chord(ts) - ts**2 >= -1e-12).all()
