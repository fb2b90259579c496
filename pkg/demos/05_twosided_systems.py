"""Two-sided max-linear systems A x <= B x and their generator sets.

Run:  python demos/05_twosided_systems.py
"""

from tropkit.tropmat import matrix, vector
from tropkit.twosided import InequalitySystem, check_solution, row_generators, solve_system

a, b = vector([0, 3]), vector([2, 1])
print("single row: max(0 + x1, 3 + x2) <= max(2 + x1, 1 + x2)")
gens = row_generators(a, b)
print("generators:", gens.columns())
s = InequalitySystem(matrix([[0, 3]]), matrix([[2, 1]]))
for c in gens.columns():
    print("  ", c, "solves the row:", check_solution(s, c))

print()
print("the cone x1 <= x2 as a single inequality")
g2 = row_generators(vector([0, "-inf"]), vector(["-inf", 0]))
print("generators:", g2.columns())

print()
print("a full system: x1 <= x2 and x2 <= x1 pins the diagonal")
sys2 = InequalitySystem(
    matrix([[0, "-inf"], ["-inf", 0]]),
    matrix([["-inf", 0], [0, "-inf"]]),
)
print("generators:", solve_system(sys2).columns())

print()
print("A = B leaves everything free: the generators span the whole space")
aa = matrix([[0, 1], [1, 0]])
print("generators:", solve_system(InequalitySystem(aa, aa)).columns())
