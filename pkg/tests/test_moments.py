import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from scipy import integrate

from laguerre_spread.laguerre_core import PolySpec, density
from laguerre_spread.moments import (DivergentMomentError, fisher_information, fisher_length,
                                     log_moment, moment, standard_deviation,
                                     standard_deviation_from_moments)
from laguerre_spread.quadrature import power_expectation
from laguerre_spread.special_fn import EULER_GAMMA, digamma


@pytest.mark.parametrize("n, alpha, k, expected", [
    (0, 0, 1, 1),
    (0, 0, 2, 2),
    (1, 0, 1, 3),
])
def test_moment_examples(n, alpha, k, expected):
    mv = moment(PolySpec(n, alpha), k)
    assert mv.exact == expected and mv.convergent


@pytest.mark.parametrize("n", range(0, 9))
@pytest.mark.parametrize("alpha", [0, 0.5, 3])
@pytest.mark.parametrize("k", [-1, 1, 2, 3, 5])
def test_moment_against_quadrature(n, alpha, k):
    spec = PolySpec(n, alpha)
    if k + alpha + 1 <= 0:
        return
    ref = power_expectation(spec, k).value
    assert moment(spec, k).value == pytest.approx(ref, rel=1e-9)


def test_negative_moment_fractional_alpha_quadrature():
    spec = PolySpec(4, 1.5)
    ref = power_expectation(spec, -2).value
    assert moment(spec, -2).value == pytest.approx(ref, rel=1e-9)


def test_divergent_moment():
    with pytest.raises(DivergentMomentError):
        moment(PolySpec(3, 0), -1)
    mv = moment(PolySpec(3, 0.5), -2, strict=False)
    assert not mv.convergent and math.isinf(mv.value)


@given(st.integers(0, 30), st.sampled_from([0, 1, 2, 0.5, 7.5, -0.5]))
def test_zeroth_moment_is_one(n, alpha):
    assert moment(PolySpec(n, alpha), 0).value == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("n, alpha, expected", [
    (0, 0, 1.0),
    (1, 0, math.sqrt(5)),
    (2, 5, math.sqrt(38)),
])
def test_standard_deviation_examples(n, alpha, expected):
    assert standard_deviation(PolySpec(n, alpha)) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("n", range(21))
@pytest.mark.parametrize("alpha", [0, 1, 2, 5, 7.5])
def test_standard_deviation_identity(n, alpha):
    spec = PolySpec(n, alpha)
    assert abs(standard_deviation(spec) - standard_deviation_from_moments(spec)) <= 1e-10


@pytest.mark.parametrize("n, alpha, expected", [
    (2, 0, 9.0),
    (1, 2, 7 / 3),
    (3, 0.5, math.inf),
    (3, -0.5, math.inf),
    (3, 1, math.inf),
])
def test_fisher_information(n, alpha, expected):
    assert fisher_information(PolySpec(n, alpha)) == pytest.approx(expected)


@pytest.mark.parametrize("n, alpha, expected", [
    (0, 0, 1.0),
    (1, 2, math.sqrt(3 / 7)),
    (3, 1, 0.0),
])
def test_fisher_length(n, alpha, expected):
    assert fisher_length(PolySpec(n, alpha)) == pytest.approx(expected)


@pytest.mark.parametrize("n", range(21))
@pytest.mark.parametrize("alpha", [0, 2, 5])
def test_fisher_below_standard_deviation(n, alpha):
    spec = PolySpec(n, alpha)
    assert fisher_length(spec) <= standard_deviation(spec)


@pytest.mark.parametrize("alpha, expected", [
    (0, -EULER_GAMMA),
    (1, 1 - EULER_GAMMA),
    (5, 137 / 60 - EULER_GAMMA),
])
def test_log_moment_examples(alpha, expected):
    assert log_moment(PolySpec(0, alpha)) == pytest.approx(expected, abs=1e-9)


@pytest.mark.parametrize("alpha", [-0.5, 0, 0.5, 1, 2.5, 5, 7.5])
def test_log_moment_n0_digamma(alpha):
    assert abs(log_moment(PolySpec(0, alpha)) - digamma(alpha + 1)) <= 1e-9


@pytest.mark.parametrize("n, alpha", [(3, 0), (5, 2), (8, 0.5)])
def test_log_moment_plain_quadrature(n, alpha):
    spec = PolySpec(n, alpha)
    ref = integrate.quad(lambda x: math.log(x) * density(spec, x), 0, 200, limit=800,
                         points=None)[0]
    assert log_moment(spec) == pytest.approx(ref, abs=1e-7)


def test_moment_exact_for_negative_order():
    mv = moment(PolySpec(5, 2), -2)
    assert mv.exact == Fraction(13, 6)
