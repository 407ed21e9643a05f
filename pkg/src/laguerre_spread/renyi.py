"""Shared result type and helpers for the two entropic-moment engines."""

from __future__ import annotations

import math
import os

import mpmath
from dataclasses import dataclass
from fractions import Fraction

from .laguerre_core import PolySpec
from .special_fn import log_fraction

DEFAULT_TERM_CAP = 10**8


class TermBudgetExceeded(RuntimeError):
    """A finite-sum engine would need more terms than the configured cap."""


def term_cap() -> int:
    raw = os.environ.get("SPREAD_TERM_CAP")
    return int(float(raw)) if raw else DEFAULT_TERM_CAP


def parse_order(q) -> Fraction:
    """Validate an entropic order q with 2q a positive integer."""
    if isinstance(q, str):
        q = Fraction(q)
    elif isinstance(q, float) and not math.isfinite(q):
        raise ValueError("q must be finite")
    q = Fraction(q)
    if (2 * q).denominator != 1 or q <= 0:
        raise ValueError(f"q must be a positive multiple of 1/2, got {q}")
    return q


def _squarefree_split(k: int) -> tuple[int, int]:
    """Write k = s^2 * r with r as small as trial division finds."""
    s, r, p = 1, k, 2
    while p * p <= r:
        while r % (p * p) == 0:
            r //= p * p
            s *= p
        p += 1 if p == 2 else 2
    return s, r


def canonical_surd(rational: Fraction, radicand: Fraction) -> tuple[Fraction, int]:
    """Normalise rational * sqrt(radicand) to r * sqrt(s) with integer s."""
    radicand = Fraction(radicand)
    if radicand == 1:
        return Fraction(rational), 1
    num, den = radicand.numerator, radicand.denominator
    out, inside = _squarefree_split(num * den)
    return Fraction(rational) * out / den, inside


def exact_mode(spec: PolySpec, q: Fraction, precision: str) -> bool:
    """Resolve ``precision`` ('auto', 'exact' or 'float') to a boolean."""
    alpha = spec.exact_alpha
    possible = alpha is not None and (alpha * q).denominator == 1
    if precision == "float":
        return False
    if precision == "exact":
        if not possible:
            raise ValueError(
                f"exact mode needs integer alpha and integer alpha*q "
                f"(alpha={spec.alpha}, q={q})")
        return True
    if precision == "auto":
        return possible
    raise ValueError(f"unknown precision {precision!r}")


@dataclass(frozen=True)
class RenyiResult:
    """Finite-sum value of int x^(aq) e^(-qx) p_n(x)^(2q) dx and its Renyi length.

    For even 2q (or n = 0) this is the entropic moment W_q. For odd 2q and
    n >= 1 the polynomial power keeps its sign, so the sum is a signed
    integral rather than int rho^q; ``is_entropic_moment`` is False and
    ``length`` refuses to answer.

    In exact mode the value equals ``rational * sqrt(radicand)`` with integer
    ``radicand`` (1 whenever q is an integer).
    """

    spec: PolySpec
    q: Fraction
    engine: str
    W: float
    rational: Fraction | None = None
    radicand: int = 1
    terms: int = 0

    @classmethod
    def from_exact(cls, spec, q, engine, rational, radicand, terms=0):
        rational, radicand = canonical_surd(rational, radicand)
        value = float(rational) * math.sqrt(radicand)
        return cls(spec, q, engine, value, rational, radicand, terms)

    @property
    def exact(self) -> bool:
        return self.rational is not None

    @property
    def is_entropic_moment(self) -> bool:
        return self.q.numerator % 2 == 0 or self.q.denominator == 1 or self.spec.n == 0

    @property
    def length(self) -> float:
        """W_q^(-1/(q-1))."""
        if self.q == 1:
            raise ValueError("the Renyi length is undefined at q = 1")
        if not self.is_entropic_moment:
            raise ValueError(
                f"odd 2q = {2 * self.q} with n = {self.spec.n}: the finite sum is the "
                "signed integral of p^(2q), not an entropic moment")
        if self.exact:
            log_w = log_fraction(self.rational) + 0.5 * math.log(self.radicand)
        else:
            if not self.W > 0:
                raise ArithmeticError(f"non-positive entropic moment {self.W!r}")
            log_w = math.log(self.W)
        return math.exp(-log_w / float(self.q - 1))

    def same_exact_value(self, other: "RenyiResult") -> bool:
        return (self.exact and other.exact and self.rational == other.rational
                and self.radicand == other.radicand)


def adaptive_float_sum(build, start_dps: int = 30, target_digits: int = 16,
                       max_dps: int = 2000) -> float:
    """Evaluate a cancelling sum in floating point with enough working digits.

    ``build(ctx)`` returns ``(signed, magnitude)`` computed in the mpmath
    context ``ctx``, where ``magnitude`` is the same sum over absolute
    values of the terms. The working precision is raised until the digits
    lost to cancellation, log10(magnitude/|signed|), leave ``target_digits``
    correct digits.
    """
    dps = start_dps
    while True:
        ctx = mpmath.MPContext()
        ctx.dps = dps
        signed, magnitude = build(ctx)
        if signed == 0:
            lost = dps
        else:
            lost = max(0.0, float(ctx.log10(magnitude / abs(signed))))
        needed = int(math.ceil(lost)) + target_digits + 4
        if needed <= dps:
            return float(signed)
        if dps >= max_dps:
            raise ArithmeticError(f"cancellation beyond {max_dps} working digits")
        dps = min(max(needed, 2 * dps), max_dps)
