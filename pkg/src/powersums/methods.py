"""Four independent constructions of the power-sum polynomial.

``p_d(n) = 0^d + 1^d + ... + n^d`` (with ``0^0 = 1``, so ``p_0(n) = n + 1``)
is computed by

* ``lhopital``: ``(x d/dx)^d`` of the geometric series, limit at ``x = 1``;
* ``matrix``: interpolation through ``n = 1..d+1`` with a Vandermonde system
  solved by Cramer's rule;
* ``stirling``: expand ``m^d`` in falling powers and sum each falling power in
  closed form;
* ``euler_maclaurin``: the Bernoulli-number boundary corrections to
  ``n^(d+1)/(d+1)``.

Bernoulli numbers here use ``B_1 = +1/2``.  The correction term
``sum_j B_j/j! (f^(j-1)(n) - f^(j-1)(0))`` with that sign counts ``f(1..n)``;
for ``d >= 1`` the ``m = 0`` term is zero so this is the full sum.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import comb, factorial

from .linalg import cramer_solve, vandermonde
from .poly import Polynomial, falling_factorial
from .symbolic import apply_ddx, geometric_seed, lhopital_limit, x_ddx_pipeline


class MethodTag(str, enum.Enum):
    LHOPITAL = "lhopital"
    MATRIX = "matrix"
    STIRLING = "stirling"
    EULER_MACLAURIN = "euler_maclaurin"


def _check_nonneg(name: str, v: int) -> None:
    if v < 0:
        raise ValueError(f"{name} must be non-negative, got {v}")


def brute_force_power_sum(d: int, n: int) -> int:
    _check_nonneg("d", d)
    _check_nonneg("n", n)
    total = 0
    for m in range(n + 1):
        term = 1
        for _ in range(d):
            term *= m
        total += term
    return total


def power_sum_lhopital(d: int) -> Polynomial:
    _check_nonneg("d", d)
    return lhopital_limit(x_ddx_pipeline(d))


def power_sum_matrix(d: int) -> Polynomial:
    _check_nonneg("d", d)
    if d == 0:
        # the zero-constant-term ansatz fails here: p_0(0) = 1
        return Polynomial([1, 1])
    rhs = [brute_force_power_sum(d, i) for i in range(1, d + 2)]
    a = cramer_solve(vandermonde(d), rhs)
    return Polynomial([0, *a])


def stirling_table(max_k: int) -> list[list[int]]:
    """Rows ``S[k][0..k]`` of Stirling numbers of the second kind."""
    _check_nonneg("max_k", max_k)
    table = [[1]]
    for k in range(1, max_k + 1):
        prev = table[-1]
        row = [0] * (k + 1)
        for j in range(1, k + 1):
            row[j] = (j * prev[j] if j < k else 0) + prev[j - 1]
        table.append(row)
    return table


def falling_power_sum_poly(k: int) -> Polynomial:
    """``q_k(n) = sum_{m=0..n} (m+k)_k = (n+k+1)_{k+1} / (k+1)``."""
    _check_nonneg("k", k)
    return falling_factorial(k + 1).scale_shift(1, k + 1) / (k + 1)


def _falling_sum_from_zero(j: int) -> Polynomial:
    # sum_{m=0..n} (m)_j = (n+1)_{j+1} / (j+1)
    return falling_factorial(j + 1).scale_shift(1, 1) / (j + 1)


def power_sum_stirling(d: int) -> Polynomial:
    _check_nonneg("d", d)
    row = stirling_table(d)[d]
    total = Polynomial()
    for j, s in enumerate(row):
        if s:
            total = total + _falling_sum_from_zero(j) * s
    return total


def bernoulli_table(max_j: int) -> list[Fraction]:
    """``B_0..B_max_j`` with ``B_1 = +1/2``.

    Runs ``sum_{j=0..m} C(m+1, j) B_j = 0`` (which produces ``B_1 = -1/2``) and
    flips the sign of ``B_1`` afterwards.
    """
    _check_nonneg("max_j", max_j)
    b = [Fraction(1)]
    for m in range(1, max_j + 1):
        if m >= 3 and m % 2:
            b.append(Fraction(0))
            continue
        s = sum((comb(m + 1, j) * b[j] for j in range(m)), Fraction(0))
        b.append(-s / (m + 1))
    if max_j >= 1:
        b[1] = -b[1]
    return b


def power_sum_euler_maclaurin(d: int) -> Polynomial:
    _check_nonneg("d", d)
    if d == 0:
        return Polynomial([1, 1])
    bern = bernoulli_table(d)
    coeffs = [Fraction(0)] * (d + 2)
    coeffs[d + 1] = Fraction(1, d + 1)
    fd = factorial(d)
    for j in range(1, d + 1):
        # B_j / j! * f^(j-1)(n), f^(j-1)(n) = d!/(d-j+1)! n^(d-j+1)
        coeffs[d - j + 1] += bern[j] / factorial(j) * Fraction(fd, factorial(d - j + 1))
    return Polynomial(coeffs)


def sum_k_times_k_minus_1() -> Polynomial:
    """``sum_{k=1..n} k(k-1)`` from two plain derivatives of the geometric series."""
    return lhopital_limit(apply_ddx(apply_ddx(geometric_seed())))


def recover_p2_via_plain_derivative() -> Polynomial:
    """``sum k^2 = sum k(k-1) + sum k``."""
    return sum_k_times_k_minus_1() + power_sum_lhopital(1)


_DISPATCH = {
    MethodTag.LHOPITAL: power_sum_lhopital,
    MethodTag.MATRIX: power_sum_matrix,
    MethodTag.STIRLING: power_sum_stirling,
    MethodTag.EULER_MACLAURIN: power_sum_euler_maclaurin,
}


def power_sum(d: int, method: MethodTag | str = MethodTag.LHOPITAL) -> Polynomial:
    return _DISPATCH[MethodTag(method)](d)
