"""Entropic moments through the terminating Lauricella F_A sum.

Setting t_i = 1/q, alpha_i = alpha, m_i = n, r = 2q, mu = alpha q and
beta = 0 in the linearization of a product of Laguerre polynomials leaves
only the k = 0 coefficient

    Theta_0 = Gamma(aq+1) binom(n+a, n)^(2q)
              * F_A(aq+1; -n, ..., -n, 0; a+1, ..., a+1, 1; 1/q, ..., 1/q, 1)

and W_q = [n!/Gamma(a+n+1)]^q q^-(aq+1) Theta_0. Every (-n)_j vanishes for
j > n and the last numerator parameter is 0, so F_A is a finite sum over
j_1..j_2q in {0..n}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .laguerre_core import PolySpec
from .renyi import (RenyiResult, TermBudgetExceeded, adaptive_float_sum, exact_mode,
                    parse_order, term_cap)
from .special_fn import exact_gamma, exact_power, gen_binomial, log_gamma, pochhammer


@dataclass(frozen=True)
class Theta0Value:
    """Theta_0 and the bookkeeping of its finite F_A sum.

    ``value`` is exact (Fraction) only when Gamma(aq+1) and binom(n+a, n)
    are rational, i.e. integer alpha and integer alpha*q.
    """

    value: Fraction | float
    lauricella: Fraction | float
    terms: int


def _index_terms(n: int, alpha, exact: bool) -> list:
    """(-n)_j / ((a+1)_j j!) for j = 0..n."""
    if exact:
        return [pochhammer(-n, j) / (pochhammer(Fraction(alpha) + 1, j) * math.factorial(j))
                for j in range(n + 1)]
    a = float(alpha)
    return [pochhammer(float(-n), j) / (pochhammer(a + 1, j) * math.factorial(j))
            for j in range(n + 1)]


def _power_sums_exact(factors: list[Fraction], copies: int) -> tuple[list[Fraction], int]:
    """Sum of prod_i factors[j_i] over all j-tuples, grouped by J = sum j_i.

    Tuples are walked depth-first in lexicographic order with the partial
    product carried down; everything is scaled to integers by the common
    denominator first.
    """
    denom = math.lcm(*(f.denominator for f in factors))
    ints = [int(f * denom) for f in factors]
    live = [(j, v) for j, v in enumerate(ints) if v]
    top = (len(factors) - 1) * copies
    sums = [0] * (top + 1)
    count = 0

    def walk(depth, partial, J):
        nonlocal count
        if depth == copies - 1:
            for j, v in live:
                sums[J + j] += partial * v
            count += len(live)
            return
        for j, v in live:
            walk(depth + 1, partial * v, J + j)

    if copies == 0:
        return [Fraction(1)], 1
    walk(0, 1, 0)
    scale = denom ** copies
    return [Fraction(s, scale) for s in sums], count


def _power_sums_ctx(ctx, factors: list, copies: int) -> tuple[list, list, int]:
    """Signed and absolute tuple sums grouped by J, in an mpmath context."""
    top = (len(factors) - 1) * copies
    signed = [ctx.zero] * (top + 1)
    magnitude = [ctx.zero] * (top + 1)
    absf = [abs(f) for f in factors]
    count = 0

    def walk(depth, partial, apartial, J):
        nonlocal count
        if depth == copies - 1:
            for j, v in enumerate(factors):
                signed[J + j] += partial * v
                magnitude[J + j] += apartial * absf[j]
            count += len(factors)
            return
        for j, v in enumerate(factors):
            walk(depth + 1, partial * v, apartial * absf[j], J + j)

    if copies == 0:
        return [ctx.one], [ctx.one], 1
    walk(0, ctx.one, ctx.one, 0)
    return signed, magnitude, count


def lauricella_theta0(spec: PolySpec, q, precision: str = "auto") -> Theta0Value:
    """Theta_0 for the 2q-fold product of L_n^(alpha)."""
    q = parse_order(q)
    n = spec.n
    copies = int(2 * q)
    if (n + 1) ** copies > term_cap():
        raise TermBudgetExceeded(
            f"F_A sum needs (n+1)^(2q) = {(n + 1) ** copies} terms, cap is {term_cap()} "
            f"(raise SPREAD_TERM_CAP to allow more)")
    exact = exact_mode(spec, q, precision)
    if exact:
        alpha = spec.exact_alpha
        shift = alpha * q + 1
        sums, count = _power_sums_exact(_index_terms(n, alpha, True), copies)
        fa = sum(pochhammer(shift, J) * (1 / q) ** J * s for J, s in enumerate(sums))
        value = exact_gamma(shift) * gen_binomial(n + alpha, n) ** copies * fa
        return Theta0Value(value, fa, count)

    count = 0

    def build(ctx):
        nonlocal count
        a, qc = ctx.mpf(spec.a), ctx.mpf(q.numerator) / q.denominator
        shift = a * qc + 1
        factors = [ctx.rf(-n, j) / (ctx.rf(a + 1, j) * ctx.factorial(j)) for j in range(n + 1)]
        signed, magnitude, count = _power_sums_ctx(ctx, factors, copies)
        weights = [ctx.rf(shift, J) / qc ** J for J in range(len(signed))]
        fa = ctx.fsum(w * s for w, s in zip(weights, signed))
        fa_abs = ctx.fsum(w * s for w, s in zip(weights, magnitude))
        scale = ctx.gamma(shift) * ctx.binomial(n + a, n) ** copies
        return scale * fa, scale * fa_abs

    value = adaptive_float_sum(build)
    log_binom = log_gamma(n + spec.a + 1) - log_gamma(n + 1) - log_gamma(spec.a + 1)
    fa = value * math.exp(-log_gamma(spec.a * float(q) + 1) - copies * log_binom)
    return Theta0Value(value, fa, count)


def entropic_moment_algebraic(spec: PolySpec, q, precision: str = "auto") -> RenyiResult:
    """W_q = [n!/Gamma(a+n+1)]^q q^-(aq+1) Theta_0."""
    q = parse_order(q)
    theta = lauricella_theta0(spec, q, precision)
    n = spec.n
    if isinstance(theta.value, Fraction):
        alpha = spec.exact_alpha
        inv_norm2 = Fraction(math.factorial(n)) / exact_gamma(alpha + n + 1)
        rational, radicand = exact_power(inv_norm2, q)
        rational *= q ** -(alpha * q + 1) * theta.value
        return RenyiResult.from_exact(spec, q, "algebraic", rational, radicand, theta.terms)

    a, qf = spec.a, float(q)
    scale = math.exp(qf * (log_gamma(n + 1) - log_gamma(a + n + 1))
                     - (a * qf + 1) * math.log(qf))
    return RenyiResult(spec, q, "algebraic", scale * theta.value, terms=theta.terms)


def renyi_length_algebraic(spec: PolySpec, q, precision: str = "auto") -> RenyiResult:
    """Renyi length W_q^(-1/(q-1)) from the Lauricella route.

    Returns the full :class:`RenyiResult`; read ``.length`` for the value.
    """
    q = parse_order(q)
    if q == 1:
        raise ValueError("the Renyi length needs q != 1")
    return entropic_moment_algebraic(spec, q, precision)


def closed_form_n1(spec: PolySpec, q, precision: str = "auto") -> RenyiResult:
    """Single-sum form for n = 1.

    W_q = Gamma(aq+1) (1+a)^(2q) / (Gamma(a+2)^q q^(aq+1))
          * sum_k binom(2q, k) (aq+1)_k (-1/(q(a+1)))^k,

    i.e. a terminating 2F0(-2q, aq+1; ; -1/(q(a+1))).
    """
    q = parse_order(q)
    if spec.n != 1:
        raise ValueError("closed_form_n1 needs n = 1")
    copies = int(2 * q)
    if exact_mode(spec, q, precision):
        alpha = spec.exact_alpha
        shift = alpha * q + 1
        x = Fraction(-1) / (q * (alpha + 1))
        series = sum(math.comb(copies, k) * pochhammer(shift, k) * x ** k
                     for k in range(copies + 1))
        inv, radicand = exact_power(1 / exact_gamma(alpha + 2), q)
        rational = (exact_gamma(shift) * (1 + alpha) ** copies * inv
                    * q ** -(alpha * q + 1) * series)
        return RenyiResult.from_exact(spec, q, "closed_n1", rational, radicand, copies + 1)
    a, qf = spec.a, float(q)
    shift = a * qf + 1
    x = -1.0 / (qf * (a + 1))
    series = math.fsum(math.comb(copies, k) * pochhammer(shift, k) * x ** k
                       for k in range(copies + 1))
    scale = math.exp(log_gamma(shift) + copies * math.log(1 + a) - qf * log_gamma(a + 2)
                     - (a * qf + 1) * math.log(qf))
    return RenyiResult(spec, q, "closed_n1", scale * series, terms=copies + 1)


def closed_form_n0(spec: PolySpec, q, precision: str = "auto") -> RenyiResult:
    """W_q = Gamma(aq+1) / (Gamma(a+1)^q q^(aq+1)) for n = 0."""
    q = parse_order(q)
    if spec.n != 0:
        raise ValueError("closed_form_n0 needs n = 0")
    if exact_mode(spec, q, precision):
        alpha = spec.exact_alpha
        inv, radicand = exact_power(1 / exact_gamma(alpha + 1), q)
        rational = exact_gamma(alpha * q + 1) * inv * q ** -(alpha * q + 1)
        return RenyiResult.from_exact(spec, q, "closed_n0", rational, radicand, 1)
    a, qf = spec.a, float(q)
    log_w = log_gamma(a * qf + 1) - qf * log_gamma(a + 1) - (a * qf + 1) * math.log(qf)
    return RenyiResult(spec, q, "closed_n0", math.exp(log_w), terms=1)
