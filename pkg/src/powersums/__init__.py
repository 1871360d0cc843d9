"""Exact power sums ``0^d + 1^d + ... + n^d`` computed four independent ways."""

from .exact import Rational, format_rational, make_rational, parse_rational
from .linalg import Matrix, cramer_solve, determinant, gauss_solve, vandermonde
from .methods import (
    MethodTag,
    bernoulli_table,
    brute_force_power_sum,
    falling_power_sum_poly,
    power_sum,
    power_sum_euler_maclaurin,
    power_sum_lhopital,
    power_sum_matrix,
    power_sum_stirling,
    recover_p2_via_plain_derivative,
    stirling_table,
)
from .poly import Polynomial, falling_factorial
from .sequences import Surd5, fib_binet, fib_doubling, fib_square_sum, geometric_sum
from .symbolic import (
    ExpPoly,
    ExpTerm,
    GeomRational,
    apply_ddx,
    apply_x_ddx,
    geometric_seed,
    lhopital_limit,
)

__version__ = "0.1.0"
