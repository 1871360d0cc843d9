"""Geometric sums and Fibonacci numbers, all exact."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import RationalLike, as_rational


def geometric_sum(a0: RationalLike, r: RationalLike, n: int) -> Fraction:
    """``a0 (1 + r + ... + r^n)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    a0, r = as_rational(a0), as_rational(r)
    if r == 1:
        return a0 * (n + 1)
    return a0 * (1 - r ** (n + 1)) / (1 - r)


@dataclass(frozen=True)
class Surd5:
    """``a + b*sqrt(5)`` with rational ``a, b``."""

    a: Fraction
    b: Fraction

    def __add__(self, other: "Surd5") -> "Surd5":
        return Surd5(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Surd5") -> "Surd5":
        return Surd5(self.a - other.a, self.b - other.b)

    def __mul__(self, other: "Surd5") -> "Surd5":
        return Surd5(self.a * other.a + 5 * self.b * other.b, self.a * other.b + self.b * other.a)

    def __pow__(self, k: int) -> "Surd5":
        if k < 0:
            raise ValueError("negative power")
        result, base = Surd5(Fraction(1), Fraction(0)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "Surd5":
        return Surd5(self.a, -self.b)


PHI = Surd5(Fraction(1, 2), Fraction(1, 2))


def fib_doubling(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")

    def pair(m: int) -> tuple[int, int]:
        # (F_m, F_{m+1})
        if m == 0:
            return 0, 1
        f, g = pair(m >> 1)
        even = f * (2 * g - f)
        odd = f * f + g * g
        return (odd, even + odd) if m & 1 else (even, odd)

    return pair(n)[0]


def fib_binet(n: int) -> int:
    """``(phi^n - psi^n)/sqrt(5)`` where ``psi^n`` is the conjugate of ``phi^n``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    p = PHI**n
    f = 2 * p.b
    if f.denominator != 1:
        raise ArithmeticError(f"non-integral Binet value {f} at n={n}")
    return f.numerator


def fib_square_sum(n: int) -> tuple[int, int]:
    """``(F_1^2 + ... + F_n^2, F_n * F_{n+1})``; the two agree."""
    if n < 1:
        raise ValueError("n must be positive")
    total, f, g = 0, 0, 1
    for _ in range(n):
        f, g = g, f + g
        total += f * f
    return total, fib_doubling(n) * fib_doubling(n + 1)
