"""Shannon entropy and length, their asymptotics, and variational upper bounds.

S = E_n + J_n with

    E_n = -int w p^2 log p^2 dx      (quadrature)
    J_n = -int w p^2 log w dx = 2n + a + 1 - a psi(a+n+1).

Upper bounds come from KL[rho, f] >= 0 with the trial density
f(x) ∝ x^m exp(-c x^b). The scale c is eliminated analytically, leaving

    N <= Gamma(beta) e^beta / (b beta^beta) <x^b>^beta exp(-m <log x>),

with beta = (1+m)/b, to be minimised over (b, m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .laguerre_core import PolySpec, evaluate_damped
from .moments import log_moment, moment, standard_deviation
from .quadrature import QuadratureError, integrate_pieces, power_expectation
from .special_fn import digamma, log_gamma

PI_SQRT2_OVER_E = math.pi * math.sqrt(2.0) / math.e
B_RANGE = (1, 64)
GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class ShannonReport:
    spec: PolySpec
    S: float
    N: float
    E: float
    J: float
    error: float


@dataclass(frozen=True)
class BoundResult:
    b: float
    m: float
    beta: float
    value: float
    optimized: bool = False


def entropy_J(spec: PolySpec) -> float:
    """2n + a + 1 - a psi(a+n+1)."""
    n, a = spec.n, spec.a
    if a == 0:
        return float(2 * n + 1)
    return 2 * n + a + 1 - a * digamma(a + n + 1)


def entropy_E(spec: PolySpec, epsabs: float = 1e-12) -> tuple[float, float]:
    """-int x^a e^-x p^2 log p^2 dx and its error estimate (incl. tail bound).

    p^2 log p^2 is continuous through the zeros (t log t -> 0), so the only
    trouble is the kink there, which the root split puts on piece endpoints.
    """
    def smooth(x):
        p = evaluate_damped(spec, x)
        sq = p * p
        if sq == 0.0:
            return 0.0
        # log p^2 = log(e^-x p^2) + x
        return -sq * (math.log(sq) + x)

    res = integrate_pieces(spec, smooth, power=spec.a, epsabs=epsabs)
    err = res.error + res.tail
    if err > 1e-8:
        raise QuadratureError(f"E_n error estimate {err:.3g} above 1e-8",
                              estimate=res.value, error=err)
    return res.value, err


def shannon_length(spec: PolySpec) -> ShannonReport:
    """Shannon entropy S = E + J and length N = exp(S)."""
    E, err = entropy_E(spec)
    J = entropy_J(spec)
    S = E + J
    return ShannonReport(spec, S, math.exp(S), E, J, err)


def shannon_asymptotic(spec: PolySpec) -> float:
    """Large-n estimate (2 pi / e) n^(a+1) / (n+a+1)^a."""
    n, a = spec.n, spec.a
    if n < 1:
        raise ValueError("the asymptotic Shannon length needs n >= 1")
    return 2 * math.pi / math.e * math.exp((a + 1) * math.log(n) - a * math.log(n + a + 1))


def power_moment(spec: PolySpec, b: float) -> float:
    """<x^b>: closed form for integer b, quadrature otherwise."""
    if float(b).is_integer():
        return moment(spec, int(b)).value
    return power_expectation(spec, b).value


def _log_bound(b: float, m: float, log_xb: float, mean_log: float) -> float:
    beta = (1 + m) / b
    return (log_gamma(beta) + beta - math.log(b) - beta * math.log(beta)
            + beta * log_xb - m * mean_log)


def shannon_bound(spec: PolySpec, b: float, m: float = 0.0, *,
                  mean_log: float | None = None, xb: float | None = None) -> BoundResult:
    """Upper bound on N for trial parameters (b, m).

    ``mean_log`` and ``xb`` may be passed in to reuse <log x> and <x^b>.
    For m = 0, <log x> is not needed.
    """
    if not b > 0:
        raise ValueError(f"b must be > 0, got {b}")
    if not m > -1:
        raise ValueError(f"m must be > -1, got {m}")
    if xb is None:
        xb = power_moment(spec, b)
    if m != 0 and mean_log is None:
        mean_log = log_moment(spec)
    value = math.exp(_log_bound(b, m, math.log(xb), mean_log or 0.0))
    return BoundResult(b, m, (1 + m) / b, value)


def scale_parameter(b: float, m: float, xb: float) -> float:
    """Optimal scale c = (1+m) / (b <x^b>) of the trial density."""
    return (1 + m) / (b * xb)


def kl_objective(b: float, m: float, c: float, xb: float, mean_log: float) -> float:
    """-int rho log f for f = b c^beta / Gamma(beta) x^m exp(-c x^b), before
    the scale is optimised."""
    beta = (1 + m) / b
    return log_gamma(beta) - math.log(b) - beta * math.log(c) - m * mean_log + c * xb


def golden_section(func, lo: float, hi: float, tol: float = 1e-6,
                   max_iter: int = 200) -> tuple[float, float]:
    """Minimise a unimodal ``func`` on [lo, hi]; returns (argmin, min)."""
    x1 = hi - GOLDEN * (hi - lo)
    x2 = lo + GOLDEN * (hi - lo)
    f1, f2 = func(x1), func(x2)
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - GOLDEN * (hi - lo)
            f1 = func(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + GOLDEN * (hi - lo)
            f2 = func(x2)
    x = 0.5 * (lo + hi)
    return x, func(x)


def minimise_m(objective, lo: float, hi: float, samples: int = 17,
               tol: float = 1e-6) -> tuple[float, float]:
    """Golden-section over m after a coarse scan.

    The scan picks the best of ``samples`` equispaced points; the search then
    runs on the bracket formed by its neighbours. On a unimodal objective this
    is the global minimiser; otherwise it refines the best sampled basin.
    """
    step = (hi - lo) / (samples - 1)
    grid = [lo + i * step for i in range(samples)]
    values = [objective(m) for m in grid]
    best = min(range(samples), key=values.__getitem__)
    a = grid[max(best - 1, 0)]
    b = grid[min(best + 1, samples - 1)]
    m, val = golden_section(objective, a, b, tol)
    if values[best] < val:
        return grid[best], values[best]
    return m, val


def optimize_bound(spec: PolySpec, mode: str = "m-zero", b_range=B_RANGE,
                   continuous_b: bool = False, tol: float = 1e-6) -> BoundResult:
    """Lowest bound over integer b in ``b_range`` (and m in joint mode).

    Modes: ``"m-zero"`` fixes m = 0; ``"joint"`` also minimises over
    m in (-1 + 1e-6, 3a + 6]. Ties go to the smaller b. With
    ``continuous_b`` the best integer b is refined by golden-section on
    [b - 1, b + 1] (m-zero mode only).
    """
    if mode not in ("m-zero", "joint"):
        raise ValueError(f"unknown mode {mode!r}")
    mean_log = log_moment(spec) if mode == "joint" else 0.0
    m_lo, m_hi = -1.0 + 1e-6, 3.0 * spec.a + 6.0

    best = None
    for b in range(b_range[0], b_range[1] + 1):
        log_xb = math.log(moment(spec, b).value)
        if mode == "m-zero":
            m, val = 0.0, _log_bound(b, 0.0, log_xb, 0.0)
        else:
            m, val = minimise_m(lambda mm: _log_bound(b, mm, log_xb, mean_log),
                                m_lo, m_hi, tol=tol)
        if best is None or val < best[2] - 1e-12 * abs(best[2]):
            best = (b, m, val)
    b, m, val = best
    if continuous_b and mode == "m-zero":
        b, val = golden_section(
            lambda bb: _log_bound(bb, 0.0, math.log(power_moment(spec, bb)), 0.0),
            max(b - 1.0, 1e-3), b + 1.0, tol)
    return BoundResult(float(b), m, (1 + m) / b, math.exp(val), optimized=True)


def shannon_standard_deviation_ratio(spec: PolySpec) -> float:
    """N / Delta x, which tends to pi sqrt(2) / e for large n."""
    return shannon_length(spec).N / standard_deviation(spec)
