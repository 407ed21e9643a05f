"""Ordinary moments, standard deviation, Fisher information and <log x>."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .laguerre_core import PolySpec, evaluate_damped
from .quadrature import QuadratureError, integrate_pieces
from .special_fn import exact_gamma, gen_binomial, log_gamma


class DivergentMomentError(ValueError):
    """<x^k> does not exist because k + alpha + 1 <= 0."""


@dataclass(frozen=True)
class MomentValue:
    order: int
    value: float
    convergent: bool = True
    exact: Fraction | None = None


def moment(spec: PolySpec, k: int, strict: bool = True) -> MomentValue:
    """<x^k> from the closed-form sum

        n! Gamma(k+a+1) / Gamma(n+a+1) * sum_r binom(k, n-r)^2 binom(k+a+r, r).

    Negative integer ``k`` is allowed while k + a + 1 > 0. For integer alpha
    the sum is carried out in exact rationals, which sidesteps cancellation
    in the alternating negative-order case.
    """
    n = spec.n
    if int(k) != k:
        raise ValueError("moment order must be an integer; use quadrature for real orders")
    k = int(k)
    if not k + spec.a + 1 > 0:
        if strict:
            raise DivergentMomentError(
                f"<x^{k}> diverges for alpha={spec.alpha} (needs k + alpha + 1 > 0)")
        return MomentValue(k, math.inf, False)

    alpha = spec.exact_alpha
    if alpha is not None:
        total = sum(gen_binomial(Fraction(k), n - r) ** 2
                    * gen_binomial(Fraction(k) + alpha + r, r) for r in range(n + 1))
        value = (math.factorial(n) * exact_gamma(k + alpha + 1)
                 / exact_gamma(n + alpha + 1) * total)
        return MomentValue(k, float(value), True, value)

    a = spec.a
    terms = [gen_binomial(float(k), n - r) ** 2 * gen_binomial(k + a + r, r)
             for r in range(n + 1)]
    scale = math.exp(log_gamma(n + 1) + log_gamma(k + a + 1) - log_gamma(n + a + 1))
    return MomentValue(k, scale * math.fsum(terms), True)


def standard_deviation(spec: PolySpec) -> float:
    """Closed form sqrt(2n^2 + 2(a+1)n + a + 1)."""
    n, a = spec.n, spec.a
    return math.sqrt(2 * n * n + 2 * (a + 1) * n + a + 1)


def standard_deviation_from_moments(spec: PolySpec) -> float:
    m1 = moment(spec, 1)
    m2 = moment(spec, 2)
    if m1.exact is not None and m2.exact is not None:
        return math.sqrt(m2.exact - m1.exact ** 2)
    return math.sqrt(m2.value - m1.value ** 2)


def fisher_information(spec: PolySpec) -> float:
    """Fisher information of the density; ``math.inf`` for 0 != alpha <= 1."""
    n, a = spec.n, spec.a
    if a == 0:
        return float(4 * n + 1)
    if a > 1:
        return ((2 * n + 1) * a + 1) / (a * a - 1)
    return math.inf


def fisher_length(spec: PolySpec) -> float:
    """1/sqrt(F), taken as 0 when F is infinite."""
    info = fisher_information(spec)
    return 0.0 if math.isinf(info) else 1.0 / math.sqrt(info)


def log_moment(spec: PolySpec, epsabs: float = 1e-12) -> float:
    """<log x> by root-split quadrature.

    The log x factor rides on the algebraic-logarithmic weight of the first
    piece; later pieces carry it explicitly.
    """
    def smooth(x):
        p = evaluate_damped(spec, x)
        return p * p

    res = integrate_pieces(spec, smooth, power=spec.a, log_weight=True, epsabs=epsabs)
    if res.error > 1e-9:
        raise QuadratureError(f"<log x> error estimate {res.error:.3g} above 1e-9",
                              estimate=res.value, error=res.error)
    return res.value
