import math

import pytest

from laguerre_spread.laguerre_core import PolySpec
from laguerre_spread.moments import log_moment, moment, standard_deviation
from laguerre_spread.shannon import (PI_SQRT2_OVER_E, entropy_E, entropy_J, golden_section,
                                     kl_objective, minimise_m, optimize_bound, power_moment,
                                     scale_parameter, shannon_asymptotic, shannon_bound,
                                     shannon_length)
from laguerre_spread.special_fn import EULER_GAMMA, digamma

from oracles import entropy_E_mpmath

GRID = [(n, a) for n in range(11) for a in (0, 5)]


def test_entropy_J_examples():
    assert entropy_J(PolySpec(0, 0)) == 1
    assert entropy_J(PolySpec(2, 0)) == 5
    assert entropy_J(PolySpec(1, 1)) == pytest.approx(4 - (1.5 - EULER_GAMMA), rel=1e-14)


def test_entropy_E_examples():
    assert entropy_E(PolySpec(0, 0))[0] == pytest.approx(0, abs=1e-12)
    # p^2 = 1/120 is constant, so E = -log p^2 = +log 120
    assert entropy_E(PolySpec(0, 5))[0] == pytest.approx(math.log(120), rel=1e-12)


@pytest.mark.parametrize("n, alpha", [(1, 0), (3, 0), (2, 2), (4, 5), (3, 0.5)])
def test_entropy_E_against_mpmath(n, alpha):
    value, err = entropy_E(PolySpec(n, alpha))
    assert err < 1e-8
    assert value == pytest.approx(entropy_E_mpmath(n, alpha), abs=1e-8)


def test_shannon_length_examples():
    r = shannon_length(PolySpec(0, 0))
    assert r.S == pytest.approx(1, abs=1e-12) and r.N == pytest.approx(math.e, rel=1e-12)
    r = shannon_length(PolySpec(0, 5))
    # entropy of the Gamma(6, 1) law: 6 + log Gamma(6) - 5 psi(6)
    assert r.S == pytest.approx(6 - 5 * digamma(6) + math.log(120), rel=1e-12)


def test_shannon_length_n5_inside_bounds():
    spec = PolySpec(5, 0)
    N = shannon_length(spec).N
    assert N <= optimize_bound(spec, "joint").value + 1e-7
    assert N <= optimize_bound(spec, "m-zero").value + 1e-7


def test_shannon_asymptotic():
    assert shannon_asymptotic(PolySpec(100, 0)) == pytest.approx(2 * math.pi / math.e * 100)
    with pytest.raises(ValueError):
        shannon_asymptotic(PolySpec(0, 0))


def test_shannon_asymptotic_ratio_n50():
    # slow convergence: S - log(2 pi n / e) decays roughly like n^(-1/3)
    spec = PolySpec(50, 0)
    ratio = shannon_length(spec).N / shannon_asymptotic(spec)
    assert 0.9 <= ratio <= 1.1, ratio


def test_shannon_asymptotic_ratio_decreasing():
    ratios = [shannon_length(PolySpec(n, 0)).N / shannon_asymptotic(PolySpec(n, 0))
              for n in (10, 50, 100)]
    assert ratios[0] > ratios[1] > ratios[2] > 1


def test_bound_examples():
    assert shannon_bound(PolySpec(0, 0), 1, 0).value == pytest.approx(math.e, rel=1e-14)
    spec = PolySpec(0, 5)
    assert shannon_bound(spec, 1, 5).value == pytest.approx(shannon_length(spec).N, rel=1e-10)


def test_bound_domain():
    with pytest.raises(ValueError):
        shannon_bound(PolySpec(1, 0), 0, 0)
    with pytest.raises(ValueError):
        shannon_bound(PolySpec(1, 0), 1, -1)


@pytest.mark.parametrize("n, alpha", GRID)
def test_bound_above_shannon(n, alpha):
    spec = PolySpec(n, alpha)
    N = shannon_length(spec).N
    mean_log = log_moment(spec)
    for b in (0.5, 1, 1.5, 2, 3, 7, 12, 20):
        xb = power_moment(spec, b)
        for m in (-0.9, -0.3, 0, 1, 5, 12):
            assert shannon_bound(spec, b, m, mean_log=mean_log, xb=xb).value >= N - 1e-7


@pytest.mark.parametrize("n", range(11))
def test_shannon_below_gaussian_length(n):
    spec = PolySpec(n, 5)
    assert shannon_length(spec).N <= math.sqrt(2 * math.pi * math.e) * standard_deviation(spec)


@pytest.mark.parametrize("n, alpha, b, m", [(3, 0, 4, 0), (5, 0, 10, -0.3), (2, 5, 6, 2)])
def test_scale_stationary(n, alpha, b, m):
    spec = PolySpec(n, alpha)
    xb = moment(spec, b).value
    mean_log = log_moment(spec)
    c = scale_parameter(b, m, xb)
    centre = kl_objective(b, m, c, xb, mean_log)
    for eps in (0.01, -0.01):
        assert kl_objective(b, m, c * (1 + eps), xb, mean_log) > centre
    # and the optimised objective is the log of the bound
    bound = shannon_bound(spec, b, m, mean_log=mean_log, xb=xb).value
    assert centre == pytest.approx(math.log(bound), rel=1e-12)


def test_optimizer_examples():
    r = optimize_bound(PolySpec(5, 0), "m-zero")
    assert r.b == 8 and r.m == 0
    r = optimize_bound(PolySpec(5, 0), "joint")
    assert r.b == 10 and r.m == pytest.approx(-0.327, abs=0.005)
    r = optimize_bound(PolySpec(0, 5), "joint")
    assert r.b == 1 and r.m == pytest.approx(5, abs=1e-5)


def test_optimizer_mode_check():
    with pytest.raises(ValueError):
        optimize_bound(PolySpec(1, 0), "other")


def test_continuous_b_not_worse():
    spec = PolySpec(4, 0)
    integer = optimize_bound(spec, "m-zero")
    cont = optimize_bound(spec, "m-zero", continuous_b=True)
    assert cont.value <= integer.value * (1 + 1e-12)
    assert abs(cont.b - integer.b) <= 1


def test_golden_section_quadratic():
    x, fx = golden_section(lambda t: (t - 0.3) ** 2 + 1, -2, 5, tol=1e-9)
    assert x == pytest.approx(0.3, abs=1e-7) and fx == pytest.approx(1)


def test_minimise_m_multimodal_picks_best_basin():
    f = lambda t: min((t + 0.5) ** 2 + 0.2, (t - 3) ** 2)
    m, val = minimise_m(f, -1, 6)
    assert m == pytest.approx(3, abs=1e-5) and val == pytest.approx(0, abs=1e-10)


@pytest.mark.parametrize("n", [20, 40])
def test_ratio_above_limit(n):
    for alpha in (0, 5):
        spec = PolySpec(n, alpha)
        assert shannon_length(spec).N / standard_deviation(spec) > PI_SQRT2_OVER_E
