"""Closed forms of differentiated geometric series, and their limit at x = 1.

Starting from ``1 + x + ... + x^n = (x^(n+1) - 1) / (x - 1)``, repeatedly
applying ``x d/dx`` (or ``d/dx``) keeps the right-hand side in the shape
``N(x) / (x - 1)^k`` where the numerator ``N`` is a sum of terms
``c(n) * x^(eps*n + shift)`` with ``c`` a polynomial in ``n`` and ``eps`` in
{0, 1}.  For a numerator ``f`` over ``(x - 1)^k``::

    x d/dx [f / (x-1)^k] = [x (x-1) f' - k x f] / (x-1)^(k+1)
      d/dx [f / (x-1)^k] = [(x-1) f' - k f]     / (x-1)^(k+1)

so the denominator power grows by exactly one per operator.  The value at
``x = 1`` is then recovered by L'Hopital's rule: differentiate the numerator
``k`` times (each intermediate numerator vanishes at ``x = 1``) and divide by
``k!``.  Evaluating a numerator at ``x = 1`` just sums the coefficient
polynomials, whatever the exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable

from .poly import Polynomial


class LHopitalError(ArithmeticError):
    """Raised when a numerator fails to vanish at x = 1 before the last step."""


@dataclass(frozen=True)
class ExpTerm:
    """``coeff(n) * x^(eps*n + shift)``."""

    coeff: Polynomial
    eps: int
    shift: int

    def __post_init__(self):
        if self.eps not in (0, 1):
            raise ValueError("eps must be 0 or 1")
        if self.coeff.is_zero():
            raise ValueError("zero coefficient")
        if self.eps == 0 and self.shift < 0:
            raise ValueError("negative constant power of x")

    @property
    def key(self) -> tuple[int, int]:
        return (self.eps, self.shift)

    def evaluate(self, n: int, x: Fraction) -> Fraction:
        return self.coeff.eval(n) * Fraction(x) ** (self.eps * n + self.shift)


@dataclass(frozen=True)
class ExpPoly:
    """Canonical sum of :class:`ExpTerm`: merged keys, sorted by (eps, shift) descending."""

    terms: tuple[ExpTerm, ...] = ()

    @classmethod
    def from_terms(cls, terms: Iterable[ExpTerm | tuple[Polynomial, int, int]]) -> "ExpPoly":
        acc: dict[tuple[int, int], Polynomial] = {}
        for t in terms:
            if isinstance(t, ExpTerm):
                coeff, eps, shift = t.coeff, t.eps, t.shift
            else:
                coeff, eps, shift = t
            key = (eps, shift)
            acc[key] = acc[key] + coeff if key in acc else coeff
        ordered = sorted(acc.items(), reverse=True)
        return cls(tuple(ExpTerm(c, e, s) for (e, s), c in ordered if not c.is_zero()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "ExpPoly") -> "ExpPoly":
        return ExpPoly.from_terms(self.terms + other.terms)

    def __neg__(self) -> "ExpPoly":
        return ExpPoly(tuple(ExpTerm(-t.coeff, t.eps, t.shift) for t in self.terms))

    def __sub__(self, other: "ExpPoly") -> "ExpPoly":
        return self + (-other)

    def scale(self, c: Polynomial | int | Fraction) -> "ExpPoly":
        return ExpPoly.from_terms((t.coeff * c, t.eps, t.shift) for t in self.terms)

    def coefficient(self, eps: int, shift: int) -> Polynomial:
        for t in self.terms:
            if t.key == (eps, shift):
                return t.coeff
        return Polynomial()

    def evaluate(self, n: int, x: Fraction) -> Fraction:
        """Instantiate at concrete ``n`` and ``x``."""
        return sum((t.evaluate(n, x) for t in self.terms), Fraction(0))


def expoly_ddx(num: ExpPoly) -> ExpPoly:
    """Term-wise ``d/dx``; ``c(n) x^(eps*n+j)`` goes to ``c(n)(eps*n+j) x^(eps*n+j-1)``."""
    out = []
    for t in num.terms:
        if t.eps:
            coeff = t.coeff * Polynomial.linear(1, t.shift)
        else:
            if t.shift == 0:
                continue
            coeff = t.coeff * t.shift
        out.append((coeff, t.eps, t.shift - 1))
    return ExpPoly.from_terms(out)


def expoly_mul_affine_x(num: ExpPoly, mode: str) -> ExpPoly:
    """Multiply by ``x`` (``mode="times_x"``) or ``x - 1`` (``"times_x_minus_1"``)."""
    shifted = ExpPoly(tuple(ExpTerm(t.coeff, t.eps, t.shift + 1) for t in num.terms))
    if mode == "times_x":
        return shifted
    if mode == "times_x_minus_1":
        return shifted - num
    raise ValueError(f"unknown mode {mode!r}")


def expoly_eval_at_one(num: ExpPoly) -> Polynomial:
    return sum((t.coeff for t in num.terms), Polynomial())


@dataclass(frozen=True)
class GeomRational:
    """``numerator / (x - 1)^denom_power``."""

    numerator: ExpPoly
    denom_power: int

    def evaluate(self, n: int, x: Fraction) -> Fraction:
        x = Fraction(x)
        if x == 1:
            raise ZeroDivisionError("x = 1 is a pole of the closed form; use lhopital_limit")
        return self.numerator.evaluate(n, x) / (x - 1) ** self.denom_power


def geometric_seed() -> GeomRational:
    """``(x^(n+1) - 1) / (x - 1)``."""
    num = ExpPoly.from_terms([(Polynomial([1]), 1, 1), (Polynomial([-1]), 0, 0)])
    return GeomRational(num, 1)


def apply_x_ddx(g: GeomRational) -> GeomRational:
    k = g.denom_power
    if k < 1:
        raise ValueError("denom_power must be >= 1")
    f = g.numerator
    x_xm1_df = expoly_mul_affine_x(expoly_mul_affine_x(expoly_ddx(f), "times_x_minus_1"), "times_x")
    k_x_f = expoly_mul_affine_x(f, "times_x").scale(k)
    return GeomRational(x_xm1_df - k_x_f, k + 1)


def apply_ddx(g: GeomRational) -> GeomRational:
    k = g.denom_power
    if k < 1:
        raise ValueError("denom_power must be >= 1")
    f = g.numerator
    num = expoly_mul_affine_x(expoly_ddx(f), "times_x_minus_1") - f.scale(k)
    return GeomRational(num, k + 1)


def lhopital_trace(g: GeomRational) -> list[ExpPoly]:
    """Numerators ``N, N', ..., N^(k)`` visited while taking the limit at x = 1.

    Every entry except the last is checked to vanish at x = 1.
    """
    trace = [g.numerator]
    for step in range(g.denom_power):
        if not expoly_eval_at_one(trace[-1]).is_zero():
            raise LHopitalError(
                f"L'Hopital precondition violated: numerator nonzero at x=1 after {step} steps"
            )
        trace.append(expoly_ddx(trace[-1]))
    return trace


def lhopital_limit(g: GeomRational) -> Polynomial:
    """Limit of ``g`` as x -> 1, as a polynomial in n."""
    top = lhopital_trace(g)[-1]
    return expoly_eval_at_one(top) / factorial(g.denom_power)


def x_ddx_pipeline(d: int) -> GeomRational:
    """``(x d/dx)^d`` applied to the geometric seed."""
    g = geometric_seed()
    for _ in range(d):
        g = apply_x_ddx(g)
    return g
