"""
Falling powers, Stirling numbers and Bernoulli numbers
======================================================

Two more closed forms for the same polynomial.
"""

from powersums.exact import format_rational
from powersums.formatting import format_polynomial
from powersums.methods import (
    bernoulli_table,
    falling_power_sum_poly,
    power_sum_euler_maclaurin,
    power_sum_stirling,
    stirling_table,
)

# S(k, j): m^k = sum_j S(k, j) (m)_j
for row in stirling_table(6):
    print(" ".join(f"{s:4d}" for s in row))
print()

# sum_{m=0..n} (m+k)_k = (n+k+1)_{k+1} / (k+1)
for k in range(4):
    q = falling_power_sum_poly(k)
    print(f"q_{k}(n) = {format_polynomial(q)}   q_{k}(5) = {q.eval(5)}")
print()

print("p_5 via Stirling:", format_polynomial(power_sum_stirling(5)))
print()

# B_1 = +1/2 is what makes the boundary corrections add up to the inclusive sum
print("B_0..B_12:", [format_rational(b) for b in bernoulli_table(12)])
print("p_5 via Euler-Maclaurin:", format_polynomial(power_sum_euler_maclaurin(5)))
