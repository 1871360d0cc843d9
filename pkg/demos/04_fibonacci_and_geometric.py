"""
Geometric sums and Fibonacci squares
====================================
"""

from fractions import Fraction

from powersums.exact import format_rational
from powersums.sequences import PHI, fib_binet, fib_doubling, fib_square_sum, geometric_sum

print(geometric_sum(1, 2, 10), format_rational(geometric_sum(1, Fraction(1, 2), 10)), geometric_sum(1, 1, 10))

# Binet's formula computed in Q(sqrt 5): phi^n = a + b sqrt5, F_n = 2b
p = PHI**12
print(f"phi^12 = {p.a} + {p.b}*sqrt(5)  ->  F_12 = {fib_binet(12)}")
print("F_300 =", fib_doubling(300))

# squares F_1..F_n tile an F_n x F_{n+1} rectangle
for n in (5, 10, 11):
    s, prod = fib_square_sum(n)
    print(f"n={n}: sum of squares {s}, F_n*F_(n+1) = {prod}")
