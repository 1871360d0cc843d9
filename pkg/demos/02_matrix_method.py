"""
Interpolating p_d with a Vandermonde system
===========================================

Evaluate the sum at n = 1..d+1 and solve for the coefficients.
"""

from powersums.linalg import cramer_solve, determinant, gauss_solve, vandermonde
from powersums.methods import brute_force_power_sum, power_sum_matrix
from powersums.formatting import format_polynomial
from powersums.exact import format_rational

# d = 1: [[1, 1], [2, 4]] a = [1, 3]
m = vandermonde(1)
rhs = [brute_force_power_sum(1, i) for i in (1, 2)]
print("matrix:", [[int(x) for x in row] for row in m.to_rows()], "rhs:", rhs, "det:", determinant(m))
print("Cramer:", [format_rational(a) for a in cramer_solve(m, rhs)])
print("elimination:", [format_rational(a) for a in gauss_solve(m, rhs)])
print()

for d in (2, 3, 6):
    print(f"p_{d}(n) =", format_polynomial(power_sum_matrix(d)))

# determinants grow quickly: product of i times product of (j - i)
print()
for d in (5, 10, 20):
    print(f"det V_{d} has {len(str(determinant(vandermonde(d)).numerator))} digits")
