"""Idempotent assignment analysis: the Galois pair, subdifferentials,
strong regularity, normal forms, optimal distances and potentials.

Run:  python demos/08_assignment.py
"""

from tropkit.assign import (
    NotStronglyRegular,
    apply_b,
    assign_matrix,
    distances_potentials,
    normal_form,
    strong_regularity,
    subdifferential,
)

b = assign_matrix([[5, 1], [1, 5]])
print("B = [[5,1],[1,5]]")
print("(B f)_i = max_j (b_ij - f_j):  B(0,0) =", apply_b(b, [0, 0]))

print()
print("strong regularity: the assignment optimum is unique, with strict duals")
cert = strong_regularity(b)
print("  bijection:", cert.bijection, " f =", cert.f, " g =", cert.g)

print()
print("the subdifferential covering at the dual certificate is minimal")
rep = subdifferential(b, list(cert.g))
print("  mapping:", dict(rep.mapping))
print("  covering:", rep.is_covering, " minimal:", rep.is_minimal_covering)

print()
print("similar strongly normal form: zero diagonal, negative off-diagonal")
nf = normal_form(b, cert)
print("  C =", nf.data)

print()
print("optimal distances are the plus-closure of reduced costs; potentials")
print("are its row and column maxima and solve the Bellman fixed point")
bt, phi, phit = distances_potentials(b, cert.bijection)
print("  b~ =", bt)
print("  phi =", phi, " phi~ =", phit)

print()
print("a flat matrix has two optimal bijections: not strongly regular")
res = strong_regularity(assign_matrix([[0, 0], [0, 0]]))
assert isinstance(res, NotStronglyRegular)
print("  reason:", res.reason)
print("  tied bijections:", res.best_bijection, res.second_bijection)
