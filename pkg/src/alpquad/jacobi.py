"""Jacobi polynomial helpers: exact shifted expansions and stable evaluation.

Two views of the same objects are needed. Exact identity checks work with
the full coefficient expansion of P_m^{(alpha,beta)}(1-2u) as a polynomial
in u over rationals; numerical code evaluates P_m^{(alpha,beta)}(t) through
the standard three-term recurrence, which stays accurate at degrees where
monomial coefficients are hopeless in double precision.

Integer alpha may be negative here: the formal series extension with
generalized binomial prefactor is what the reciprocity construction needs.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .exactpoly import Polynomial

__all__ = [
    "pochhammer",
    "binomial_general",
    "jacobi_shifted_coefficients",
    "jacobi_eval",
    "jacobi_derivative_eval",
]


def pochhammer(a: int, m: int) -> Fraction:
    """Rising factorial a (a+1) ... (a+m-1); empty product for m = 0."""
    out = Fraction(1)
    for i in range(m):
        out *= a + i
    return out


def binomial_general(z: int, m: int) -> Fraction:
    """Binomial coefficient by the product formula, valid for negative z.

    C(z, m) = z (z-1) ... (z-m+1) / m!, which agrees with math.comb for
    z >= m >= 0 and extends to the negative integer arguments the formal
    reciprocity path produces.
    """
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    if z >= 0:
        return Fraction(comb(z, m)) if z >= m else Fraction(0)
    num = Fraction(1)
    for i in range(m):
        num *= z - i
    for i in range(2, m + 1):
        num /= i
    return num


def jacobi_shifted_coefficients(m: int, alpha: int, beta: int = 0) -> Polynomial:
    """Exact coefficients of P_m^{(alpha,beta)}(1-2u) as a polynomial in u.

    Uses the terminating hypergeometric series

        C(m+alpha, m) * sum_j [(-m)_j (m+alpha+beta+1)_j] / [(alpha+1)_j j!] u^j,

    with the generalized binomial prefactor so that negative integer alpha
    is admitted whenever no denominator factor (alpha+1)_j vanishes for
    j <= m.

    Raises ValueError if a Pochhammer denominator vanishes inside the
    series range.
    """
    if m < 0:
        raise ValueError(f"degree must be nonnegative, got {m}")
    if alpha < 0 and 0 < -(alpha + 1) + 1 <= m:
        # (alpha+1)_j hits zero once alpha + j = 0, i.e. j = -alpha <= m
        raise ValueError(
            f"series denominator (alpha+1)_j vanishes for alpha={alpha}, m={m}"
        )
    prefactor = binomial_general(m + alpha, m)
    coeffs = []
    term = Fraction(1)
    for j in range(m + 1):
        coeffs.append(prefactor * term)
        # ratio from u^j to u^{j+1}
        term *= Fraction((-m + j) * (m + alpha + beta + 1 + j), (alpha + 1 + j) * (j + 1))
    return Polynomial(coeffs)


def jacobi_eval(m: int, alpha: float, beta: float, t):
    """P_m^{(alpha,beta)}(t) by the standard three-term recurrence.

    Accepts scalar or ndarray t. Forward recurrence on the dominant
    solution; relative error stays near machine precision for the integer
    parameter ranges used here (alpha <= ~60, m <= ~30).
    """
    if m < 0:
        raise ValueError(f"degree must be nonnegative, got {m}")
    if m == 0:
        return 1.0 + 0.0 * t if hasattr(t, "shape") else 1.0
    pm2 = 1.0 + 0.0 * t if hasattr(t, "shape") else 1.0
    pm1 = (alpha + 1) + (alpha + beta + 2) * (t - 1) / 2
    for j in range(2, m + 1):
        c0 = 2 * j * (j + alpha + beta) * (2 * j + alpha + beta - 2)
        c1 = (2 * j + alpha + beta - 1) * (alpha * alpha - beta * beta)
        c2 = (2 * j + alpha + beta - 1) * (2 * j + alpha + beta) * (2 * j + alpha + beta - 2)
        c3 = 2 * (j + alpha - 1) * (j + beta - 1) * (2 * j + alpha + beta)
        pm1, pm2 = ((c2 * t + c1) * pm1 - c3 * pm2) / c0, pm1
    return pm1


def jacobi_derivative_eval(m: int, alpha: float, beta: float, t):
    """d/dt P_m^{(alpha,beta)}(t) via the parameter-shifted identity."""
    if m == 0:
        return 0.0 * t if hasattr(t, "shape") else 0.0
    return 0.5 * (m + alpha + beta + 1) * jacobi_eval(m - 1, alpha + 1, beta + 1, t)
