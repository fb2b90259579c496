"""Max-plus spectral theory: cycle means, critical graph, Collatz-Wielandt.

Run:  python demos/03_spectral_theory.py
"""

from tropkit.spectral import (
    collatz_wielandt_certificate,
    cycle_means_bruteforce,
    max_cycle_mean,
    spectral_analysis,
)
from tropkit.tropmat import matrix

a = matrix([["-inf", 2], [0, "-inf"]])
print("A =", a)
print("all simple cycles and their means:", cycle_means_bruteforce(a))
print("eigenvalue (Karp) =", max_cycle_mean(a))

res = spectral_analysis(a)
print()
print("critical nodes:", sorted(res.critical_nodes))
print("critical edges:", sorted(res.critical_edges))
print("critical classes:", [sorted(c) for c in res.critical_classes])
print("eigenvector generator per class:", list(res.eigenvectors))
v = res.eigenvectors[0]
print("exact check A v = lambda v:", a.apply(v) == v.scale(res.eigenvalue))

print()
print("a reducible example: only the best self-loop is critical")
b = matrix([[0, "-inf"], ["-inf", -1]])
res_b = spectral_analysis(b)
print("B =", b, " -> eigenvalue", res_b.eigenvalue, ", critical nodes", sorted(res_b.critical_nodes))

print()
print("the Collatz-Wielandt number: inf over finite u of max_i (A u - u)_i;")
print("for a linear map it equals the cycle-mean eigenvalue, certified by a")
print("finite super-eigenvector that attains the infimum")
lam, u = collatz_wielandt_certificate(a)
print("value =", lam, ", witness u =", u)
au = a.apply(u)
print("coordinatewise (A u - u):", [repr(au[i].value - u[i].value) for i in range(2)])
