"""Semiring matrix invariants: bideterminant, permanent, rook polynomial,
singularity notions, and standard transformations.

Run:  python demos/06_matrix_invariants.py
"""

from tropkit.determ import (
    StandardTransform,
    apply_standard_transform,
    bideterminant,
    is_pattern_singular,
    is_trop_singular,
    permanent,
    rook_coefficients,
)
from tropkit.semiring import MAX_TIMES, scalar
from tropkit.tropmat import matrix

print("over (Q+, max, *) the bideterminant splits permutation sums by parity")
a = matrix([[1, 2], [3, 4]], MAX_TIMES)
bd = bideterminant(a)
print("  A = [[1,2],[3,4]]:  (|A|+, |A|-) =", (bd.plus, bd.minus))
print("  unequal parts, yet A is not invertible over this semiring")

print()
print("a matrix with equal bideterminant parts that is still pattern-regular")
b = matrix([[0, 0, 1], [1, 1, 0], [0, 0, 1]], MAX_TIMES)
bd3 = bideterminant(b)
print("  parts:", (bd3.plus, bd3.minus), " pattern:", is_pattern_singular(b))

print()
print("max-plus permanent = optimal assignment value")
m = matrix([[0, 3], [2, 1]])
print("  per([[0,3],[2,1]]) =", permanent(m))
print("  rook coefficients:", rook_coefficients(m))
print("  tropically singular (max attained twice)?", is_trop_singular(m))
print("  the flat matrix [[0,0],[0,0]] is:", is_trop_singular(matrix([[0, 0], [0, 0]])))

print()
print("zero-pattern singularity over antinegative semirings")
print("  all-finite:", is_pattern_singular(matrix([[0, 0], [1, 1]])))
print("  zero row:  ", is_pattern_singular(matrix([["-inf", "-inf"], [1, 1]])))
print("  zero col:  ", is_pattern_singular(matrix([["-inf", 0], ["-inf", 1]])))

print()
print("standard transforms X -> P D X E Q; diagonal pairs c, -c and even")
print("permutation products preserve the bideterminant")
t = StandardTransform((1, 0), (scalar(2), scalar(2)), (scalar(-2), scalar(-2)), (1, 0))
tm = apply_standard_transform(m, t)
print("  T(X) =", tm)
print("  bideterminant before:", bideterminant(m))
print("  bideterminant after: ", bideterminant(tm))
