"""Scalar special functions and exact combinatorial primitives.

Exact values are carried as :class:`fractions.Fraction`; floating paths use
``float``. Nothing here holds state.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

ExactScalar = Fraction

EULER_GAMMA = 0.57721566490153286060651209008240243

# Bernoulli numbers B_2k / (2k) for the asymptotic digamma series.
_PSI_SERIES = (
    1.0 / 12,
    -1.0 / 120,
    1.0 / 252,
    -1.0 / 240,
    1.0 / 132,
    -691.0 / 32760,
    1.0 / 12,
)


def is_exact(value) -> bool:
    return isinstance(value, Rational)


def as_exact(value) -> Fraction:
    """Convert an int, Fraction or integral float to a Fraction.

    Non-integral floats are rejected so that a float never leaks silently
    into an exact computation.
    """
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, float) and value.is_integer():
        return Fraction(int(value))
    raise TypeError(f"cannot represent {value!r} exactly")


def log_gamma(x: float) -> float:
    """Natural log of the gamma function for ``x > 0``."""
    x = float(x)
    if not x > 0:
        raise ValueError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def digamma(x: float) -> float:
    """Digamma function psi(x) for ``x > 0``.

    Shifts the argument above 10 with psi(x) = psi(x+1) - 1/x, then applies
    the asymptotic series in 1/x^2.
    """
    x = float(x)
    if not x > 0:
        raise ValueError(f"digamma requires x > 0, got {x}")
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    tail = 0.0
    for coef in reversed(_PSI_SERIES):
        tail = tail * inv2 + coef
    return acc + math.log(x) - 0.5 / x - tail * inv2


def pochhammer(a, n: int):
    """Rising factorial (a)_n = a (a+1) ... (a+n-1).

    Exact when ``a`` is an int or Fraction, float otherwise.
    """
    if n < 0:
        raise ValueError("pochhammer order must be non-negative")
    if is_exact(a):
        out = Fraction(1)
        a = Fraction(a)
    else:
        out = 1.0
        a = float(a)
    for i in range(n):
        out *= a + i
        if out == 0:
            break
    return out


def falling_factorial(a, n: int):
    out = Fraction(1) if is_exact(a) else 1.0
    for i in range(n):
        out *= a - i
    return out


def gen_binomial(a, b: int):
    """Generalised binomial coefficient binom(a, b) for integer ``b >= 0``.

    Uses the falling-factorial form a (a-1) ... (a-b+1) / b!, which is finite
    for every real ``a`` and gives exact zeros where the gamma-ratio form has
    poles. Exact input gives a Fraction.
    """
    if b < 0:
        return Fraction(0) if is_exact(a) else 0.0
    num = falling_factorial(a, b)
    if is_exact(a):
        return Fraction(num) / math.factorial(b)
    return num / math.factorial(b)


def exact_gamma(x) -> Fraction:
    """Gamma(x) for a positive integer ``x``, as an exact integer Fraction."""
    x = as_exact(x)
    if x.denominator != 1 or x <= 0:
        raise ValueError(f"exact gamma needs a positive integer, got {x}")
    return Fraction(math.factorial(int(x) - 1))


def exact_power(base: Fraction, exponent: Fraction) -> tuple[Fraction, Fraction]:
    """Split ``base**exponent`` for half-integer exponents.

    Returns ``(rational, radicand)`` with base**exponent equal to
    rational * sqrt(radicand); radicand is 1 for integer exponents.
    """
    exponent = Fraction(exponent)
    if exponent.denominator == 1:
        return Fraction(base) ** int(exponent), Fraction(1)
    if exponent.denominator != 2:
        raise ValueError("only integer and half-integer exponents are exact")
    lower = (exponent - Fraction(1, 2))
    return Fraction(base) ** int(lower), Fraction(base)


def log_fraction(x: Fraction) -> float:
    """Natural log of a positive Fraction without float overflow."""
    if x <= 0:
        raise ValueError("log of non-positive value")
    return math.log(x.numerator) - math.log(x.denominator)
