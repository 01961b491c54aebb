"""Dense univariate polynomial arithmetic over exact rational coefficients.

Everything here is exact: coefficients are `fractions.Fraction`, so equality
checks and integrals are decisive (no floating point anywhere). Polynomials
are immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]

__all__ = ["Polynomial", "inner_product"]


class Polynomial:
    """Immutable dense polynomial, coefficient of x^l stored at index l."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> "Polynomial":
        if power < 0:
            raise ValueError(f"power must be nonnegative, got {power}")
        return cls([0] * power + [coeff])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients in ascending power order, trailing zeros stripped."""
        return self._coeffs

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def low_power(self) -> int:
        """Smallest power with a nonzero coefficient."""
        if not self._coeffs:
            raise ValueError("zero polynomial has no lowest power")
        return next(l for l, c in enumerate(self._coeffs) if c != 0)

    def coeff(self, power: int) -> Fraction:
        """Coefficient of x^power (zero outside the stored range)."""
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                if a:
                    for j, b in enumerate(other._coeffs):
                        out[i + j] += a * b
            return Polynomial(out)
        return Polynomial([c * Fraction(other) for c in self._coeffs])

    __rmul__ = __mul__

    def shifted(self, powers: int) -> "Polynomial":
        """Multiply by x^powers; negative powers require divisibility by x."""
        if powers >= 0:
            if self.is_zero:
                return self
            return Polynomial([Fraction(0)] * powers + list(self._coeffs))
        drop = -powers
        if any(c != 0 for c in self._coeffs[:drop]):
            raise ValueError(f"polynomial is not divisible by x^{drop}")
        return Polynomial(self._coeffs[drop:])

    def derivative(self) -> "Polynomial":
        return Polynomial([l * c for l, c in enumerate(self._coeffs)][1:])

    def integrate01(self) -> Fraction:
        """Exact integral over [0, 1]."""
        return sum((c / (l + 1) for l, c in enumerate(self._coeffs)), Fraction(0))

    def max_abs_coeff(self) -> Fraction:
        return max((abs(c) for c in self._coeffs), default=Fraction(0))

    def float_coeffs(self) -> tuple[float, ...]:
        return tuple(float(c) for c in self._coeffs)

    def __call__(self, x):
        """Horner evaluation; exact when x is a Fraction or int."""
        acc = Fraction(0) if isinstance(x, (Fraction, int)) else 0.0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for l, c in enumerate(self._coeffs):
            if c == 0:
                continue
            term = str(c) if l == 0 else (f"{c}*x" if l == 1 else f"{c}*x^{l}")
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")


def inner_product(p: Polynomial, q: Polynomial) -> Fraction:
    """Exact L2 inner product on [0, 1] with unit weight."""
    return (p * q).integrate01()
