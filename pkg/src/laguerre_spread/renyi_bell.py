"""Entropic moments through partial Bell polynomials.

The p-th power of a polynomial sum_k c_k x^k has coefficients

    p!/(k+p)! B_{k+p,p}(c_0, 2! c_1, ..., (k+1)! c_k),

and integrating each power of x against x^(aq) e^(-qx) gives W_q as a finite
sum over k = 0..2nq.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .laguerre_core import CoefficientVector, PolySpec, coefficients
from .renyi import RenyiResult, adaptive_float_sum, exact_mode, parse_order
from .special_fn import exact_gamma, exact_power, is_exact


@dataclass(frozen=True)
class BellValue:
    m: int
    l: int
    value: Fraction | float


def partitions(m: int, l: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Multiplicity vectors (j_1, ..., j_{m-l+1}) of partitions of m into l parts.

    Every yielded vector satisfies sum j_i = l and sum i j_i = m. Parts larger
    than ``max_part`` are excluded. Vectors come out in colexicographic order
    (the largest part size varies slowest).
    """
    width = m - l + 1
    if l < 0 or m < 0 or width < 1 and not (m == 0 and l == 0):
        return
    if m == 0 and l == 0:
        yield ()
        return
    cap = width if max_part is None else min(width, max_part)
    mult = [0] * width

    def place(size, left_parts, left_total):
        # parts of size <= `size` still to place
        if left_parts == 0:
            if left_total == 0:
                yield tuple(mult)
            return
        if size == 0:
            return
        # remaining parts must fit: each at least 1, each at most `size`
        if left_total < left_parts or left_total > left_parts * size:
            return
        most = min(left_parts, left_total // size)
        for j in range(most, -1, -1):
            mult[size - 1] = j
            yield from place(size - 1, left_parts - j, left_total - j * size)
        mult[size - 1] = 0

    yield from place(cap, l, m)


def count_partitions(m: int, l: int) -> int:
    """Partitions of m into exactly l positive parts (plain recursion)."""
    if l == 0:
        return 1 if m == 0 else 0
    if m < l:
        return 0
    return count_partitions(m - 1, l - 1) + count_partitions(m - l, l)


def bell_polynomial(m: int, l: int, a: Sequence) -> BellValue:
    """Partial Bell polynomial B_{m,l}(a_1, ..., a_{m-l+1}).

    ``a`` may be shorter than m-l+1 when the missing arguments are zero; a
    longer sequence is a dimension error. Zero arguments prune the partitions
    that would use them.
    """
    if not 1 <= l <= m:
        if l > m >= 0:
            return BellValue(m, l, 0)
        raise ValueError(f"need 1 <= l <= m, got m={m}, l={l}")
    width = m - l + 1
    if len(a) > width:
        raise ValueError(f"B_{{{m},{l}}} takes {width} arguments, got {len(a)}")
    exact = all(is_exact(x) for x in a)
    scaled = [Fraction(x) / math.factorial(i + 1) if exact else x / math.factorial(i + 1)
              for i, x in enumerate(a)]
    top = len(a)
    while top and scaled[top - 1] == 0:
        top -= 1
    terms = []
    for mult in partitions(m, l, max_part=top):
        if any(j and scaled[i] == 0 for i, j in enumerate(mult[:top])):
            continue
        coef = math.factorial(m)
        for j in mult:
            coef //= math.factorial(j)
        term = coef
        for i, j in enumerate(mult[:top]):
            if j:
                term *= scaled[i] ** j
        terms.append(term)
    if exact:
        return BellValue(m, l, sum(terms, Fraction(0)))
    if all(isinstance(t, float) for t in terms):
        return BellValue(m, l, math.fsum(terms))
    return BellValue(m, l, sum(terms))


def _bell_arguments(c: Sequence, k: int) -> list:
    """(c_0, 2! c_1, ..., (k+1)! c_k) with c_i = 0 beyond the degree."""
    return [math.factorial(i + 1) * c[i] for i in range(min(k + 1, len(c)))]


def polynomial_power_coefficients(coeffs, p: int) -> list:
    """Monomial coefficients of (sum_k c_k x^k)^p via Bell polynomials.

    ``coeffs`` is a plain sequence c_0..c_n or a :class:`CoefficientVector`
    (whose exact scaling is used when it is rational).
    """
    if p < 1:
        raise ValueError("power must be >= 1")
    c = coeffs.scaled() if isinstance(coeffs, CoefficientVector) else list(coeffs)
    n = len(c) - 1
    out = []
    for k in range(n * p + 1):
        b = bell_polynomial(k + p, p, _bell_arguments(c, k)).value
        ratio = Fraction(math.factorial(p), math.factorial(k + p))
        out.append(b * ratio if isinstance(b, (Fraction, int)) else b * float(ratio))
    return out


def entropic_moment_bell(spec: PolySpec, q, precision: str = "auto") -> RenyiResult:
    """W_q = sum_k Gamma(aq+k+1)/q^(aq+k+1) (2q)!/(k+2q)! B_{k+2q,2q}(...).

    q = 1 is accepted and returns the normalisation W_1 = 1.
    """
    q = parse_order(q)
    p = int(2 * q)
    n = spec.n
    exact = exact_mode(spec, q, precision)
    if exact:
        vec = coefficients(spec, exact=True)
        parts = vec.parts
        alpha = spec.exact_alpha
        shift = alpha * q
        total = Fraction(0)
        for k in range(n * p + 1):
            bell = bell_polynomial(k + p, p, _bell_arguments(parts, k)).value
            total += (exact_gamma(shift + k + 1) / q ** (shift + k + 1)
                      * Fraction(math.factorial(p), math.factorial(k + p)) * bell)
        norm, radicand = exact_power(vec.norm2, q)
        return RenyiResult.from_exact(spec, q, "bell", total * norm, radicand, n * p + 1)

    def build(ctx):
        a, qc = ctx.mpf(spec.a), ctx.mpf(q.numerator) / q.denominator
        shift = a * qc
        c = [(-1) ** k * math.comb(n, k) / ctx.gamma(a + k + 1) for k in range(n + 1)]
        c_abs = [abs(x) for x in c]
        signed, magnitude = [], []
        for k in range(n * p + 1):
            weight = (ctx.gamma(shift + k + 1) / qc ** (shift + k + 1)
                      * ctx.factorial(p) / ctx.factorial(k + p))
            signed.append(weight * bell_polynomial(k + p, p, _bell_arguments(c, k)).value)
            magnitude.append(weight * bell_polynomial(k + p, p, _bell_arguments(c_abs, k)).value)
        norm = (ctx.gamma(n + a + 1) / ctx.factorial(n)) ** qc
        return ctx.fsum(signed) * norm, ctx.fsum(magnitude) * norm

    return RenyiResult(spec, q, "bell", adaptive_float_sum(build), terms=n * p + 1)


def renyi_length_bell(spec: PolySpec, q, precision: str = "auto") -> RenyiResult:
    """Renyi length from the Bell route; read ``.length`` on the result."""
    q = parse_order(q)
    if q == 1:
        raise ValueError("the Renyi length needs q != 1")
    return entropic_moment_bell(spec, q, precision)


def onicescu_information(spec: PolySpec, precision: str = "auto") -> RenyiResult:
    """Onicescu information W_2; its ``.length`` is the second-order Renyi length."""
    return entropic_moment_bell(spec, 2, precision)
