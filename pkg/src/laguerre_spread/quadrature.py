"""Root-split adaptive quadrature for functionals of the Rakhmanov density.

[0, X] is cut at the zeros of the polynomial, each piece is integrated with
QUADPACK's adaptive Gauss-Kronrod rule, and the piece touching the origin
absorbs the x^power factor into an algebraic weight so that non-integer
alpha poses no difficulty. X is pushed out until an analytic bound on the
remaining tail drops below ``tail_tol``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .laguerre_core import PolySpec, RakhmanovDensity, evaluate_damped, roots as poly_roots


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to reach the requested accuracy."""

    def __init__(self, message, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


@dataclass(frozen=True)
class QuadResult:
    value: float
    error: float
    tail: float
    cutoff: float


def tail_bound(spec: PolySpec, cutoff: float, zeros=None) -> float:
    """Upper bound on int_X^inf rho (|log rho| + |log x| + 1) dx.

    Beyond the last zero, d log rho / dx is bounded by its value at X, so
    rho decays at least like exp(-kappa (x - X)). Returns inf when X is too
    close to the zeros for that argument.
    """
    zeros = poly_roots(spec) if zeros is None else zeros
    a = spec.a
    if len(zeros) and cutoff <= zeros[-1]:
        return math.inf
    pull = float(np.sum(1.0 / (cutoff - zeros))) if len(zeros) else 0.0
    kappa = 1.0 - max(a, 0.0) / cutoff - 2.0 * pull
    if kappa <= 0.25:
        return math.inf
    log_rho = float(RakhmanovDensity(spec).log(cutoff))
    rho = math.exp(log_rho)
    slope = 1.0 + max(-a, 0.0) / cutoff
    level = abs(log_rho) + abs(math.log(cutoff)) + 1.0
    return rho * (level / kappa + (slope + 1.0 / cutoff) / kappa**2)


def support_cutoff(spec: PolySpec, tail_tol: float = 1e-12, zeros=None) -> tuple[float, float]:
    """Smallest X on the default schedule with ``tail_bound(X) < tail_tol``."""
    zeros = poly_roots(spec) if zeros is None else zeros
    last = zeros[-1] if len(zeros) else 0.0
    cutoff = last + 40.0 + 10.0 * math.log(1 + spec.n + abs(spec.a))
    tail = tail_bound(spec, cutoff, zeros)
    while tail >= tail_tol:
        cutoff += 10.0
        tail = tail_bound(spec, cutoff, zeros)
    return cutoff, tail


def integrate_pieces(spec: PolySpec, smooth, power: float = 0.0, *,
                     log_weight: bool = False, epsabs: float = 1e-13,
                     epsrel: float = 1e-12, limit: int = 400,
                     tail_tol: float = 1e-12, breakpoints=None,
                     cutoff: float | None = None, strict: bool = True) -> QuadResult:
    """Integrate x^power * [log x] * smooth(x) over [0, inf).

    ``smooth`` must be finite on (0, X]. With ``log_weight`` the extra log x
    factor is handled by the weighted rule on the first piece. The tail
    beyond X is not added; its bound is reported in ``QuadResult.tail``.
    """
    zeros = poly_roots(spec) if breakpoints is None else np.asarray(breakpoints)
    if cutoff is None:
        cutoff, tail = support_cutoff(spec, tail_tol, poly_roots(spec))
    else:
        tail = tail_bound(spec, cutoff, poly_roots(spec))
    edges = [0.0] + [float(z) for z in zeros if 0 < z < cutoff] + [cutoff]

    total = []
    err = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        for i, (lo, hi) in enumerate(zip(edges[:-1], edges[1:])):
            try:
                if i == 0 and (power != 0.0 or log_weight):
                    value, e = integrate.quad(
                        smooth, lo, hi, weight="alg-loga" if log_weight else "alg",
                        wvar=(power, 0.0), epsabs=epsabs, epsrel=epsrel, limit=limit)
                else:
                    def full(x, _p=power, _l=log_weight):
                        out = smooth(x)
                        if _p:
                            out *= x ** _p
                        if _l:
                            out *= math.log(x)
                        return out

                    value, e = integrate.quad(full, lo, hi, epsabs=epsabs,
                                              epsrel=epsrel, limit=limit)
            except integrate.IntegrationWarning as exc:
                if strict:
                    raise QuadratureError(
                        f"quadrature on [{lo:.6g}, {hi:.6g}] did not converge: {exc}",
                        estimate=math.fsum(total), error=err) from exc
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    value, e = integrate.quad(smooth, lo, hi, limit=limit)
            total.append(value)
            err += e
    return QuadResult(math.fsum(total), err, tail, cutoff)


def expectation(spec: PolySpec, func, **kwargs) -> QuadResult:
    """<func(x)> under the Rakhmanov density."""
    def smooth(x):
        p = evaluate_damped(spec, x)
        return p * p * func(x)

    return integrate_pieces(spec, smooth, power=spec.a, **kwargs)


def entropic_moment_quad(spec: PolySpec, q: float, **kwargs) -> QuadResult:
    """W_q = int rho^q dx by root-split quadrature."""
    q = float(q)

    def smooth(x):
        p = evaluate_damped(spec, x)
        return abs(p) ** (2 * q)

    return integrate_pieces(spec, smooth, power=spec.a * q, **kwargs)


def power_expectation(spec: PolySpec, b: float, **kwargs) -> QuadResult:
    """<x^b> with x^b folded into the algebraic weight (any b > -1 - alpha)."""
    def smooth(x):
        p = evaluate_damped(spec, x)
        return p * p

    return integrate_pieces(spec, smooth, power=spec.a + b, **kwargs)
