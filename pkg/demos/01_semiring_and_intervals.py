"""Scalar idempotent semirings: arithmetic, residuation, star, exact intervals.

Run:  python demos/01_semiring_and_intervals.py
"""

from tropkit.errors import Divergent
from tropkit.semiring import (
    MAX_PLUS,
    MAX_TIMES,
    MIN_PLUS,
    interval,
    iv_binary,
    scalar,
    sr_add,
    sr_mul,
    sr_residual,
    sr_star,
    zero,
)

print("max-plus: addition is max, multiplication is +, zero is -inf")
print("  3 + 5       =", sr_add(scalar(3), scalar(5)))
print("  -inf + 7    =", sr_add(zero(MAX_PLUS), scalar(7)))
print("  3 * 5       =", sr_mul(scalar(3), scalar(5)))
print("  -inf * 5    =", sr_mul(zero(MAX_PLUS), scalar(5)), "(absorbing)")

print()
print("residuation x/y is the greatest lam with lam*y <= x: subtraction here")
print("  5 / 3       =", sr_residual(scalar(5), scalar(3)))
print("  -inf / 3    =", sr_residual(zero(MAX_PLUS), scalar(3)))

print()
print("the same operations in (Q+, max, *): residuation is division")
print("  4 + 6       =", sr_add(scalar(4, MAX_TIMES), scalar(6, MAX_TIMES)))
print("  6 / 2       =", sr_residual(scalar(6, MAX_TIMES), scalar(2, MAX_TIMES)))

print()
print("star a* = 1 + a + a^2 + ... converges exactly when a is below the unit")
print("  (-2)*       =", sr_star(scalar(-2)))
print("  0*          =", sr_star(scalar(0)))
try:
    sr_star(scalar(1))
except Divergent as exc:
    print("  1*          -> Divergent:", exc)

print()
print("min-plus is the order dual: its bottom is +inf and 2 + 5 = 2")
print("  2 + 5       =", sr_add(scalar(2, MIN_PLUS), scalar(5, MIN_PLUS)))

print()
print("interval arithmetic: monotone ops evaluated endpointwise are EXACT,")
print("residuation is antitone in the denominator so its endpoints cross over")
a, b = interval(1, 2), interval(0, 3)
print("  [1,2] + [0,3]  =", iv_binary("add", a, b))
print("  [1,2] * [0,3]  =", iv_binary("mul", a, b))
print("  [1,2] / [0,3]  =", iv_binary("residual", a, b))
