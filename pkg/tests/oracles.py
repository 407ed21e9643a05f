"""Independent reference computations used only by the tests.

None of these go through the package's recurrence, coefficient split or
finite-sum engines: they use scipy.special / mpmath evaluations, direct
polynomial convolution and brute-force enumeration.
"""

import itertools
import math
from fractions import Fraction

import mpmath
import numpy as np
from scipy import integrate, special


def laguerre_monomials(n, alpha):
    """Exact monomial coefficients of the *standard* L_n^(alpha), integer alpha."""
    return [Fraction((-1) ** k * math.comb(n + alpha, n - k), math.factorial(k))
            for k in range(n + 1)]


def poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_pow(a, p):
    out = [Fraction(1)]
    for _ in range(p):
        out = poly_mul(out, a)
    return out


def signed_power_integral(n, alpha, q):
    """int x^(aq) e^(-qx) Lt_n(x)^(2q) dx, exactly, as (rational, norm2 power q).

    Convolution power of the standard polynomial, then term-by-term gamma
    integrals. Returns (rational r, radicand s) with value r * sqrt(s) when q
    is half-integer, s = 1 otherwise. Integer alpha*q only.
    """
    q = Fraction(q)
    p = int(2 * q)
    shift = alpha * q
    assert shift.denominator == 1
    coeffs = poly_pow(laguerre_monomials(n, alpha), p)
    total = sum(c * math.factorial(int(shift) + k) / q ** (int(shift) + k + 1)
                for k, c in enumerate(coeffs))
    # orthonormal factor (n!/Gamma(n+a+1))^q
    inv = Fraction(math.factorial(n), math.factorial(n + alpha))
    whole = int(q) if q.denominator == 1 else int(q - Fraction(1, 2))
    total *= inv ** whole
    radicand = 1 if q.denominator == 1 else inv
    return total, radicand


def lauricella_bruteforce(n, alpha, q):
    """F_A(aq+1; -n..-n, 0; a+1..a+1, 1; 1/q..1/q, 1) by plain itertools.product."""
    q = Fraction(q)
    p = int(2 * q)
    shift = alpha * q + 1
    total = Fraction(0)
    for js in itertools.product(range(n + 1), repeat=p):
        J = sum(js)
        term = Fraction(1)
        for j in js:
            num = Fraction(1)
            den = Fraction(1)
            for i in range(j):
                num *= -n + i
                den *= alpha + 1 + i
            term *= num / (den * math.factorial(j))
        rising = Fraction(1)
        for i in range(J):
            rising *= shift + i
        total += rising * term / q ** J
    return total


def rho_scipy(n, alpha, x):
    """Rakhmanov density through scipy's generalised Laguerre polynomial."""
    x = np.asarray(x, dtype=float)
    log_norm = special.gammaln(n + 1) - special.gammaln(n + alpha + 1)
    L = special.eval_genlaguerre(n, alpha, x)
    with np.errstate(divide="ignore"):
        return np.exp(log_norm + alpha * np.log(x) - x) * L * L


def fisher_fd(n, alpha, lower=0.0, rel_step=1e-4):
    """int rho'^2/rho dx with rho' by central differences, split at the zeros."""
    def integrand(x):
        h = rel_step * x
        r = rho_scipy(n, alpha, x)
        if r == 0:
            return 0.0
        d = (rho_scipy(n, alpha, x + h) - rho_scipy(n, alpha, x - h)) / (2 * h)
        return d * d / r

    zeros = special.roots_genlaguerre(n, alpha)[0] if n else np.empty(0)
    top = (zeros[-1] if n else 0.0) + 80.0
    # geometric split near the origin, where rho'^2/rho may blow up
    near = [lower * 10.0 ** k for k in range(1, 40) if lower * 10.0 ** k < min(1.0, top)] if lower > 0 else []
    edges = sorted({lower, *near, *(z for z in zeros if z > lower), top})
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        total += integrate.quad(integrand, lo, hi, epsabs=1e-12, epsrel=1e-11, limit=500)[0]
    return total


def entropy_E_mpmath(n, alpha, dps=30):
    """-int w Lt^2 log Lt^2 with mpmath at higher precision."""
    mpmath.mp.dps = dps
    norm = mpmath.factorial(n) / mpmath.gamma(n + alpha + 1)

    def f(x):
        L2 = norm * mpmath.laguerre(n, alpha, x) ** 2
        if L2 == 0:
            return mpmath.mpf(0)
        return -x ** alpha * mpmath.e ** (-x) * L2 * mpmath.log(L2)

    zeros = list(special.roots_genlaguerre(n, alpha)[0]) if n else []
    return float(mpmath.quad(f, [0] + zeros + [mpmath.inf]))
