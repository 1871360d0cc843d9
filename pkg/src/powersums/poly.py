"""Dense univariate polynomials over the rationals, in the variable ``n``."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable

from .exact import RationalLike, as_rational


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def _clear_denominators(coeffs: tuple[Fraction, ...]) -> tuple[list[int], int]:
    den = lcm(*(c.denominator for c in coeffs))
    return [c.numerator * (den // c.denominator) for c in coeffs], den


class Polynomial:
    """Immutable polynomial with ascending coefficients.

    ``coeffs[i]`` is the coefficient of ``n**i``.  Trailing zeros are always
    stripped, so the zero polynomial has ``coeffs == ()`` and equality is plain
    tuple equality.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        object.__setattr__(self, "coeffs", _trim([as_rational(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _raw(cls, coeffs: list[Fraction]) -> "Polynomial":
        # Skips conversion; caller guarantees Fraction entries.
        p = cls.__new__(cls)
        object.__setattr__(p, "coeffs", _trim(coeffs))
        return p

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1) -> "Polynomial":
        return cls([0] * k + [c])

    @classmethod
    def linear(cls, a: RationalLike, b: RationalLike) -> "Polynomial":
        """``a*n + b``."""
        return cls([b, a])

    @property
    def degree(self) -> int:
        """Degree; ``-1`` marks the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError("negative exponent")
        return self.coeffs[i] if i < len(self.coeffs) else Fraction(0)

    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        from .formatting import format_polynomial

        return format_polynomial(self, "plain")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial._raw([c * other for c in self.coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        # Convolve over integers, then restore the common denominator.
        a, da = _clear_denominators(self.coeffs)
        b, db = _clear_denominators(other.coeffs)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        den = da * db
        return Polynomial._raw([Fraction(c, den) for c in out])

    __rmul__ = __mul__

    def __truediv__(self, c: RationalLike) -> "Polynomial":
        """Division by a nonzero scalar."""
        c = as_rational(c)
        if c == 0:
            raise ZeroDivisionError("division by zero")
        return Polynomial._raw([x / c for x in self.coeffs])

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result, base = Polynomial([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def eval(self, x: RationalLike) -> Fraction:
        """Horner evaluation at an exact point."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = eval

    def scale_shift(self, a: RationalLike, b: RationalLike) -> "Polynomial":
        """Return ``q`` with ``q(n) = self(a*n + b)``."""
        inner = Polynomial.linear(a, b)
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc


N = Polynomial([0, 1])


def falling_factorial(k: int) -> Polynomial:
    """``(n)_k = n (n-1) ... (n-k+1)``, with ``(n)_0 = 1``."""
    result = Polynomial([1])
    for i in range(k):
        result = result * Polynomial.linear(1, -i)
    return result
