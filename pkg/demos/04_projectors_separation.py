"""Projectors onto semimodules, Hilbert values, cyclic spectral radius,
and separation of several semimodules by idempotent halfspaces.

Run:  python demos/04_projectors_separation.py
"""

from tropkit.projector import (
    NotSeparable,
    cyclic_orbit,
    cyclic_spectral_radius,
    hilbert_value,
    project,
    semimodule,
    separate,
)
from tropkit.tropmat import vector

v1 = semimodule([[0, 0]])        # the diagonal ray
v2 = semimodule([[0, 2]])        # a shifted ray
x = vector([1, 3])
print("P_V(x) is the greatest point of V below x")
print("  V = span(0,0), x = (1,3):  P_V(x) =", project(v1, x))

print()
print("alternating projections between the two rays contract; the windowed")
print("Hilbert values along the orbit never decrease")
orbit = cyclic_orbit([v1, v2], vector([0, 0]), 3)
print("  orbit:", orbit)
print("  d_H windows:", [hilbert_value(orbit[i : i + 2]) for i in range(len(orbit) - 2)])

print()
print("the cyclic spectral radius is the largest Hilbert value of the family;")
print("it is certified by an exact eigenvector of the composed projector")
rep = cyclic_spectral_radius([v1, v2])
print("  radius =", rep.value, " on support", sorted(rep.support_set))
print("  witnesses:", rep.witness_vectors)
print("  d_H(witnesses) =", hilbert_value(rep.witness_vectors))

print()
print("radius below the unit means the semimodules meet only at zero and can")
print("be separated by halfspaces {x : u/x >= v/x}")
halves = separate([v1, v2])
for i, h in enumerate(halves):
    print(f"  H{i+1}: u = {h.u}, v = {h.v}")
print("  the diagonal ray sits in H1:", halves[0].contains(vector([5, 5])))
print("  the shifted ray sits in H2:", halves[1].contains(vector([5, 7])))
print("  no common point:", not (halves[0].contains(x) and halves[1].contains(x)))

print()
print("identical semimodules cannot be separated; the eigenvector is a witness")
res = separate([v1, v1])
assert isinstance(res, NotSeparable)
print("  NotSeparable with common point", res.witness)
