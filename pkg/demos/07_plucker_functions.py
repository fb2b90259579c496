"""Tropical Plucker functions: normal-flow construction on the planar grid,
TP/DMTP relation checking, interval reconstruction, submodularity.

Run:  python demos/07_plucker_functions.py
"""

from fractions import Fraction
import random

from tropkit.plucker import (
    flow_tp,
    grid_edges,
    grid_net,
    is_dmtp,
    is_submodular,
    is_tp,
    mask_elements,
    reconstruct_from_intervals,
    subset_function,
)

rng = random.Random(7)
n = 3
weights = {e: Fraction(rng.randint(-3, 3)) for e in grid_edges(n)}
net = grid_net(n, weights)
print(f"random weights on the {n}x{n} grid; f(S) = best normal flow from S")
f = flow_tp(net)
for mask in range(1 << n):
    print(f"  f({set(mask_elements(mask)) or '{}'}) = {f.table[mask]}")

print()
print("flow functions satisfy the doubled-maximum (DMTP) relations:", bool(is_dmtp(f)))
print("this grid even gives exact 3-term Plucker equalities (TP):", bool(is_tp(f)))

print()
print("a TP-function is determined by the empty set and the intervals")
partial = f.restrict_to_intervals()
g = reconstruct_from_intervals(n, partial)
print("reconstruction from intervals equals the original:", g.table == f.table)

print()
print("perturbing one value breaks the relation, with a witness")
vals = {m: f.table[m] for m in range(1 << n)}
vals[0b101] += 1
bad = subset_function(n, vals)
check = is_tp(bad)
print("is_tp:", bool(check), " witness (A, i, j, k):", check.witness)

print()
print("submodularity of a TP-function can be read off the intervals alone")
print("  full check:    ", is_submodular(f))
print("  interval check:", is_submodular(f, on_intervals_only=True))
