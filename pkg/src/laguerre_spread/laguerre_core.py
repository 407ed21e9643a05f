"""Orthonormal Laguerre polynomials and their Rakhmanov density.

The orthonormal polynomial is evaluated with the three-term recurrence

    sqrt((k+1)(k+a+1)) p_{k+1} = (2k+a+1-x) p_k - sqrt(k(k+a)) p_{k-1},

started from p_0 = Gamma(a+1)^(-1/2). The monomial coefficients are kept
for the exact combinatorial route only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .special_fn import as_exact, exact_gamma, log_gamma


@dataclass(frozen=True)
class PolySpec:
    """Degree ``n`` and parameter ``alpha`` of L_n^(alpha)."""

    n: int
    alpha: float | int | Fraction = 0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise ValueError(f"degree must be a non-negative integer, got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        if not self.alpha > -1:
            raise ValueError(f"alpha must be > -1, got {self.alpha}")

    @property
    def a(self) -> float:
        return float(self.alpha)

    @property
    def exact_alpha(self) -> Fraction | None:
        """alpha as a Fraction when it is an integer, else None."""
        try:
            value = as_exact(self.alpha)
        except TypeError:
            return None
        return value if value.denominator == 1 else None

    @property
    def log_norm2(self) -> float:
        """log of Gamma(n+a+1)/n!."""
        return log_gamma(self.n + self.a + 1) - log_gamma(self.n + 1)


@dataclass(frozen=True)
class CoefficientVector:
    """Monomial coefficients of the orthonormal polynomial, stored split.

    The coefficient of x^k is ``sqrt(norm2) * parts[k]`` with
    ``norm2 = Gamma(n+a+1)/n!`` and
    ``parts[k] = (-1)^k binom(n, k) / Gamma(a+k+1)``. Keeping the square root
    outside lets even powers of the polynomial stay rational.
    """

    spec: PolySpec
    parts: tuple
    norm2: Fraction | float
    exact: bool

    def values(self) -> np.ndarray:
        """Floating coefficients c_0..c_n."""
        root = math.sqrt(float(self.norm2))
        return np.array([root * float(p) for p in self.parts])

    def scaled(self) -> list:
        """Coefficients c_k, exact when sqrt(norm2) is rational."""
        if self.exact:
            root = _rational_sqrt(self.norm2)
            if root is not None:
                return [root * p for p in self.parts]
        return list(self.values())

    def __len__(self):
        return len(self.parts)


def _rational_sqrt(x: Fraction) -> Fraction | None:
    num, den = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if num * num == x.numerator and den * den == x.denominator:
        return Fraction(num, den)
    return None


def coefficients(spec: PolySpec, exact: bool | None = None) -> CoefficientVector:
    """Split monomial coefficients of the orthonormal L_n^(alpha).

    Exact (Fraction) entries are produced for integer alpha unless
    ``exact=False``; other alpha always take the float path.
    """
    n = spec.n
    alpha = spec.exact_alpha
    if exact is None:
        exact = alpha is not None
    if exact and alpha is None:
        raise ValueError(f"exact coefficients need integer alpha, got {spec.alpha}")
    if exact:
        parts = tuple(
            Fraction((-1) ** k * math.comb(n, k)) / exact_gamma(alpha + k + 1)
            for k in range(n + 1)
        )
        norm2 = exact_gamma(n + alpha + 1) / math.factorial(n)
        return CoefficientVector(spec, parts, norm2, True)
    a = spec.a
    parts = tuple(
        (-1) ** k * math.comb(n, k) * math.exp(-log_gamma(a + k + 1))
        for k in range(n + 1)
    )
    return CoefficientVector(spec, parts, math.exp(spec.log_norm2), False)


def _recurrence(n: int, a: float, x, with_derivative: bool = False, damped: bool = False):
    x = np.asarray(x, dtype=float)
    p_prev = np.zeros_like(x)
    start = -0.5 * log_gamma(a + 1)
    p = np.exp(start - 0.5 * x) if damped else np.full_like(x, math.exp(start))
    d_prev = np.zeros_like(x)
    d = np.zeros_like(x)
    for k in range(n):
        scale = math.sqrt((k + 1) * (k + a + 1))
        back = math.sqrt(k * (k + a))
        p_next = ((2 * k + a + 1 - x) * p - back * p_prev) / scale
        if with_derivative:
            d_next = ((2 * k + a + 1 - x) * d - p - back * d_prev) / scale
            d_prev, d = d, d_next
        p_prev, p = p, p_next
    return (p, d) if with_derivative else p


def evaluate_orthonormal(spec: PolySpec, x):
    """Value of the orthonormal polynomial at ``x`` (scalar or array)."""
    out = _recurrence(spec.n, spec.a, x)
    return float(out) if np.ndim(out) == 0 else out


def evaluate_damped(spec: PolySpec, x):
    """e^(-x/2) times the orthonormal polynomial, free of overflow for large x.

    The recurrence is linear, so the damping factor is applied to the
    starting value only.
    """
    out = _recurrence(spec.n, spec.a, x, damped=True)
    return float(out) if np.ndim(out) == 0 else out


def evaluate_with_derivative(spec: PolySpec, x):
    p, d = _recurrence(spec.n, spec.a, x, with_derivative=True)
    if np.ndim(p) == 0:
        return float(p), float(d)
    return p, d


def horner(coeffs, x):
    """Evaluate sum_k coeffs[k] x^k."""
    acc = 0.0
    for c in reversed(list(coeffs)):
        acc = acc * x + c
    return acc


def log_weight(spec: PolySpec, x):
    """log(x^alpha e^-x) for x > 0."""
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore"):
        return spec.a * np.log(x) - x


def density(spec: PolySpec, x):
    """Rakhmanov density rho(x) = x^alpha e^-x p_n(x)^2 for ``x >= 0``."""
    xa = np.asarray(x, dtype=float)
    if np.any(xa < 0):
        raise ValueError("density is defined for x >= 0 only")
    p = _recurrence(spec.n, spec.a, xa, damped=True)
    with np.errstate(divide="ignore", invalid="ignore"):
        if spec.a == 0:
            w = np.ones_like(xa)
        else:
            w = np.where(xa > 0, np.exp(spec.a * np.log(np.where(xa > 0, xa, 1.0))),
                         0.0 if spec.a > 0 else np.inf)
    out = w * p * p
    return float(out) if np.ndim(out) == 0 else out


def roots(spec: PolySpec) -> np.ndarray:
    """Zeros of L_n^(alpha) in ascending order.

    Eigenvalues of the symmetric Jacobi matrix, then one Newton step on
    the recurrence value.
    """
    n, a = spec.n, spec.a
    if n == 0:
        return np.empty(0)
    k = np.arange(n, dtype=float)
    diag = 2 * k + a + 1
    off = np.sqrt(k[1:] * (k[1:] + a))
    nodes = eigh_tridiagonal(diag, off, eigvals_only=True)
    with np.errstate(all="ignore"):
        p, d = _recurrence(n, a, nodes, with_derivative=True, damped=True)
        step = np.where(np.isfinite(p / d), p / d, 0.0)
    nodes = nodes - step
    return np.sort(nodes)


@dataclass(frozen=True)
class RakhmanovDensity:
    """Callable density of one polynomial, with its zeros cached."""

    spec: PolySpec

    @cached_property
    def roots(self) -> np.ndarray:
        return roots(self.spec)

    def __call__(self, x):
        return density(self.spec, x)

    def log(self, x):
        """log rho(x) for x > 0, -inf at the zeros."""
        p = _recurrence(self.spec.n, self.spec.a, x, damped=True)
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore"):
            return self.spec.a * np.log(x) + 2.0 * np.log(np.abs(p))
