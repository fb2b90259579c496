"""Max-plus spectral theory: cycle-mean eigenvalue, critical graph, eigenvectors.

The eigenvalue is the extremal cycle mean of the digraph of finite entries,
computed by Karp's recurrence. The critical graph collects the cycles that
attain it; its strongly connected components (the critical classes) index the
eigenvector generators, which are columns of the star of the normalized
matrix. Min-plus matrices are handled by duality through the canonical order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .errors import NoCycle, Unbounded
from .semiring import MAX_PLUS, MIN_PLUS, SemiringTag, TropScalar, one, sr_mul, sr_residual
from .tropmat import TropMatrix, TropVector, kleene_plus, kleene_star, vector


def _weight_grid(a: TropMatrix) -> List[List[Optional[Fraction]]]:
    """Finite entries as max-plus weights (min-plus negated), None = no edge."""
    flip = a.tag is MIN_PLUS
    grid: List[List[Optional[Fraction]]] = []
    for i in range(a.rows):
        row = []
        for j in range(a.cols):
            e = a[i, j]
            row.append(None if not e.is_finite else (-e.value if flip else e.value))
        grid.append(row)
    return grid


def _check_spectral_tag(a: TropMatrix) -> None:
    if not a.is_square:
        from .errors import DimensionMismatch

        raise DimensionMismatch("spectral theory needs a square matrix")
    if a.tag not in (MAX_PLUS, MIN_PLUS):
        raise ValueError("spectral theory is provided for max-plus and min-plus tags")


def max_cycle_mean(a: TropMatrix) -> TropScalar:
    """Extremal cycle mean (the eigenvalue) by Karp's recurrence.

    Max-plus: the maximum over cycles of weight/length. Min-plus: the
    minimum, via negation. Raises NoCycle when the digraph of finite
    entries is acyclic.
    """
    _check_spectral_tag(a)
    w = _weight_grid(a)
    n = a.rows
    # D[k][i] = best weight of a length-k walk ending at i, from anywhere.
    d: List[List[Optional[Fraction]]] = [[0] * n]
    for k in range(1, n + 1):
        prev = d[k - 1]
        cur: List[Optional[Fraction]] = [None] * n
        for j in range(n):
            if prev[j] is None:
                continue
            wj = w[j]
            base = prev[j]
            for i in range(n):
                wji = wj[i]
                if wji is None:
                    continue
                cand = base + wji
                if cur[i] is None or cand > cur[i]:
                    cur[i] = cand
        d.append(cur)
    best: Optional[Fraction] = None
    for i in range(n):
        dn = d[n][i]
        if dn is None:
            continue
        worst: Optional[Fraction] = None
        for k in range(n):
            dk = d[k][i]
            if dk is None:
                continue
            ratio = Fraction(dn - dk, n - k)
            if worst is None or ratio < worst:
                worst = ratio
        if worst is not None and (best is None or worst > best):
            best = worst
    if best is None:
        raise NoCycle("digraph of finite entries is acyclic")
    if a.tag is MIN_PLUS:
        best = -best
    return TropScalar(best, a.tag)


def cycle_means_bruteforce(a: TropMatrix) -> List[Tuple[Tuple[int, ...], Fraction]]:
    """All simple cycles (as node tuples) with their mean weights.

    Independent verification oracle for Karp: plain DFS enumeration,
    restricted to cycles whose smallest node is the start to avoid
    duplicates. Exponential; intended for small matrices.
    """
    _check_spectral_tag(a)
    w = _weight_grid(a)
    n = a.rows
    sign = -1 if a.tag is MIN_PLUS else 1
    out: List[Tuple[Tuple[int, ...], Fraction]] = []

    def dfs(start: int, node: int, path: List[int], weight: Fraction, seen: set) -> None:
        for nxt in range(start, n):
            wn = w[node][nxt]
            if wn is None:
                continue
            if nxt == start:
                total = weight + wn
                out.append((tuple(path), Fraction(sign * total, len(path))))
            elif nxt not in seen:
                seen.add(nxt)
                path.append(nxt)
                dfs(start, nxt, path, weight + wn, seen)
                path.pop()
                seen.remove(nxt)

    for s in range(n):
        dfs(s, s, [s], Fraction(0), {s})
    return out


def max_cycle_mean_bruteforce(a: TropMatrix) -> TropScalar:
    """Extremal cycle mean by explicit simple-cycle enumeration."""
    means = [m for _, m in cycle_means_bruteforce(a)]
    if not means:
        raise NoCycle("digraph of finite entries is acyclic")
    best = max(means) if a.tag is MAX_PLUS else min(means)
    return TropScalar(best, a.tag)


@dataclass(frozen=True)
class SpectralResult:
    eigenvalue: TropScalar
    critical_nodes: FrozenSet[int]
    critical_edges: FrozenSet[Tuple[int, int]]
    critical_classes: Tuple[FrozenSet[int], ...]
    eigenvectors: Tuple[TropVector, ...]


def _critical_sccs(nodes: FrozenSet[int], edges: FrozenSet[Tuple[int, int]]) -> List[FrozenSet[int]]:
    """Strongly connected components of the critical graph (Tarjan)."""
    adj: Dict[int, List[int]] = {v: [] for v in nodes}
    for i, j in edges:
        adj[i].append(j)
    index: Dict[int, int] = {}
    low: Dict[int, int] = {}
    counter = [0]
    stack: List[int] = []
    on_stack: set = set()
    comps: List[FrozenSet[int]] = []

    def strongconnect(v: int) -> None:
        work = [(v, iter(adj[v]))]
        index[v] = low[v] = counter[0]
        counter[0] += 1
        stack.append(v)
        on_stack.add(v)
        while work:
            node, it = work[-1]
            advanced = False
            for child in it:
                if child not in index:
                    index[child] = low[child] = counter[0]
                    counter[0] += 1
                    stack.append(child)
                    on_stack.add(child)
                    work.append((child, iter(adj[child])))
                    advanced = True
                    break
                if child in on_stack:
                    low[node] = min(low[node], index[child])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = set()
                while True:
                    u = stack.pop()
                    on_stack.discard(u)
                    comp.add(u)
                    if u == node:
                        break
                comps.append(frozenset(comp))

    for v in sorted(nodes):
        if v not in index:
            strongconnect(v)
    return sorted(comps, key=min)


def spectral_analysis(a: TropMatrix) -> SpectralResult:
    """Eigenvalue, critical graph, critical classes, and one generator each.

    A node is critical iff the plus-closure of the normalized matrix has a
    unit diagonal entry there; an edge (i, j) is critical iff it lies on a
    unit-weight cycle of the normalized matrix. Generators are the columns
    of the normalized star at the smallest node of each critical class and
    satisfy A v = lambda v exactly.
    """
    lam = max_cycle_mean(a)
    norm = a.scale(sr_residual(one(a.tag), lam))
    star = kleene_star(norm)
    plus = norm @ star
    unit = one(a.tag)
    nodes = frozenset(i for i in range(a.rows) if plus[i, i] == unit)
    edges = frozenset(
        (i, j)
        for i in range(a.rows)
        for j in range(a.cols)
        if not norm[i, j].is_zero and sr_mul(norm[i, j], star[j, i]) == unit
    )
    classes = tuple(_critical_sccs(nodes, edges))
    gens = tuple(star.column(min(c)) for c in classes)
    return SpectralResult(lam, nodes, edges, classes, gens)


def critical_graph(a: TropMatrix) -> SpectralResult:
    """Spec name for the graph part of the spectral analysis."""
    return spectral_analysis(a)


def eigenvectors(a: TropMatrix) -> List[TropVector]:
    """One eigenvector generator per critical class, unit at its representative."""
    return list(spectral_analysis(a).eigenvectors)


def collatz_wielandt_certificate(a: TropMatrix) -> Tuple[TropScalar, TropVector]:
    """The Collatz-Wielandt value with a finite super-eigenvector witness.

    The value is inf over finite u of the extremal coordinate of (A u) / u;
    for a linear map it equals the cycle-mean eigenvalue. The witness u
    (a finite completion built from the normalized star) attains the
    infimum exactly: max_i (A u)_i / u_i = lambda.
    """
    _check_spectral_tag(a)
    for i in range(a.rows):
        if all(not a[i, j].is_finite for j in range(a.cols)):
            raise Unbounded(f"row {i} is all zero; the infimum is unbounded below")
    lam = max_cycle_mean(a)
    norm = a.scale(sr_residual(one(a.tag), lam))
    star = kleene_star(norm)
    u = star.apply(vector([0] * a.rows, a.tag))
    au = a.apply(u)
    witnessed = None
    for i in range(a.rows):
        r = sr_residual(au[i], u[i])
        witnessed = r if witnessed is None else (witnessed + r)
    assert witnessed == lam, "certificate failed to attain the eigenvalue"
    return lam, u


def collatz_wielandt(a: TropMatrix) -> TropScalar:
    """Collatz-Wielandt number of the linear map induced by A."""
    return collatz_wielandt_certificate(a)[0]
