"""
Power sums from the geometric series
====================================

Apply ``x d/dx`` to ``1 + x + ... + x^n`` and let ``x -> 1``.
"""

from powersums.symbolic import (
    expoly_eval_at_one,
    expoly_mul_affine_x,
    lhopital_limit,
    lhopital_trace,
    x_ddx_pipeline,
)
from powersums.formatting import format_polynomial


def show(num):
    parts = []
    for t in num.terms:
        exp = (f"n+{t.shift}" if t.shift > 0 else f"n{t.shift}" if t.shift else "n") if t.eps else str(t.shift)
        parts.append(f"({format_polynomial(t.coeff)}) x^({exp})")
    return " + ".join(parts) or "0"


# seed, then one and two applications of x d/dx
for d in range(3):
    g = x_ddx_pipeline(d)
    print(f"d={d}: [{show(g.numerator)}] / (x-1)^{g.denom_power}")
print()

# every numerator before the last one vanishes at x = 1, so the limit takes
# exactly denom_power = d + 1 differentiations
g = x_ddx_pipeline(2)
for i, num in enumerate(lhopital_trace(g)):
    print(f"step {i}: numerator at x=1 is {format_polynomial(expoly_eval_at_one(num))}")
print("limit:", format_polynomial(lhopital_limit(g)))
print()

# multiplying by (x - 1) gives back the quotient-rule form over (x - 1)^4
print("over (x-1)^4:", show(expoly_mul_affine_x(g.numerator, "times_x_minus_1")))
print()

# larger d works the same way
for d in (4, 5, 10):
    print(f"p_{d}(n) =", format_polynomial(lhopital_limit(x_ddx_pipeline(d))))
