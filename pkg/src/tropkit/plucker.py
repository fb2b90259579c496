"""Tropical Plucker (TP) and DMTP subset functions.

TP-functions satisfy the tropicalized 3-term Plucker relation as an exact
equality of maxima; DMTP-functions satisfy the weaker "maximum attained at
least twice" form of the 3- and 4-term relations. Normal flows on the
planar grid digraph produce DMTP-functions, TP-functions are determined by
their values on the interval family, and submodularity of a TP-function can
be read off the intervals alone.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import Inconsistent, NoFlow, TooLarge

CHECK_CAP = 8
FLOW_CAP = 4

MINUS_INF = None  # recorded value when no normal flow exists for a subset


def subset_mask(elements: Iterable[int], n: int) -> int:
    """Bitmask of a subset of {1..n}: element i occupies bit i-1."""
    mask = 0
    for e in elements:
        if not 1 <= e <= n:
            raise ValueError(f"element {e} outside 1..{n}")
        mask |= 1 << (e - 1)
    return mask


def mask_elements(mask: int) -> Tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def interval_masks(n: int) -> List[int]:
    """Masks of the empty set and all intervals {i, ..., j}."""
    out = [0]
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            out.append(subset_mask(range(i, j + 1), n))
    return out


@dataclass(frozen=True)
class SubsetFunction:
    """Total function 2^{1..n} -> Q (None marking minus infinity)."""

    n: int
    table: Tuple[Optional[Fraction], ...]

    def __post_init__(self):
        if len(self.table) != 1 << self.n:
            raise ValueError("table must cover every subset")

    def value(self, subset: Union[int, Iterable[int]]) -> Optional[Fraction]:
        mask = subset if isinstance(subset, int) else subset_mask(subset, self.n)
        return self.table[mask]

    __call__ = value

    def is_finite(self) -> bool:
        return all(v is not None for v in self.table)

    def restrict_to_intervals(self) -> Dict[int, Fraction]:
        """The mapping on the empty set and the intervals; input of reconstruction."""
        return {m: self.table[m] for m in interval_masks(self.n)}


def subset_function(n: int, values: Mapping) -> SubsetFunction:
    """Build from any mapping of subsets (masks or iterables) to rationals."""
    table: List[Optional[Fraction]] = [None] * (1 << n)
    assigned = [False] * (1 << n)
    for key, val in values.items():
        mask = key if isinstance(key, int) else subset_mask(key, n)
        table[mask] = None if val is None else Fraction(val)
        assigned[mask] = True
    if not all(assigned):
        raise ValueError("subset function must be total on the power set")
    return SubsetFunction(n, tuple(table))


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


def _tp_triples(n: int):
    """All (A, i, j, k) with i < j < k disjoint from A."""
    for i, j, k in itertools.combinations(range(1, n + 1), 3):
        rest = [e for e in range(1, n + 1) if e not in (i, j, k)]
        for r in range(len(rest) + 1):
            for combo in itertools.combinations(rest, r):
                yield subset_mask(combo, n), i, j, k


def is_tp(f: SubsetFunction) -> CheckResult:
    """Exact 3-term tropical Plucker relation on every (A, i < j < k).

    f(A+ik) + f(A+j) = max(f(A+ij) + f(A+k), f(A+jk) + f(A+i)).
    Subsets where f records no flow (minus infinity) are excluded.
    """
    n = f.n
    if n > CHECK_CAP:
        raise TooLarge(f"TP check capped at n <= {CHECK_CAP}")
    for a, i, j, k in _tp_triples(n):
        bi, bj, bk = 1 << (i - 1), 1 << (j - 1), 1 << (k - 1)
        vals = (
            f.table[a | bi | bk], f.table[a | bj],
            f.table[a | bi | bj], f.table[a | bk],
            f.table[a | bj | bk], f.table[a | bi],
        )
        if any(v is None for v in vals):
            continue
        lhs = vals[0] + vals[1]
        rhs = max(vals[2] + vals[3], vals[4] + vals[5])
        if lhs != rhs:
            return CheckResult(False, (a, i, j, k))
    return CheckResult(True)


def _max_twice(values: Sequence[Fraction]) -> bool:
    m = max(values)
    return sum(1 for v in values if v == m) >= 2


def is_dmtp(f: SubsetFunction) -> CheckResult:
    """Maximum attained at least twice in every 3-term and 4-term triple."""
    n = f.n
    if n > CHECK_CAP:
        raise TooLarge(f"DMTP check capped at n <= {CHECK_CAP}")
    for a, i, j, k in _tp_triples(n):
        bi, bj, bk = 1 << (i - 1), 1 << (j - 1), 1 << (k - 1)
        vals = (
            f.table[a | bi | bk], f.table[a | bj],
            f.table[a | bi | bj], f.table[a | bk],
            f.table[a | bj | bk], f.table[a | bi],
        )
        if any(v is None for v in vals):
            continue
        triple = (vals[0] + vals[1], vals[2] + vals[3], vals[4] + vals[5])
        if not _max_twice(triple):
            return CheckResult(False, ("3-term", a, i, j, k))
    for i, j, k, l in itertools.combinations(range(1, n + 1), 4):
        rest = [e for e in range(1, n + 1) if e not in (i, j, k, l)]
        bi, bj, bk, bl = (1 << (e - 1) for e in (i, j, k, l))
        for r in range(len(rest) + 1):
            for combo in itertools.combinations(rest, r):
                a = subset_mask(combo, n)
                vals = (
                    f.table[a | bi | bk], f.table[a | bj | bl],
                    f.table[a | bi | bj], f.table[a | bk | bl],
                    f.table[a | bj | bk], f.table[a | bi | bl],
                )
                if any(v is None for v in vals):
                    continue
                triple = (vals[0] + vals[1], vals[2] + vals[3], vals[4] + vals[5])
                if not _max_twice(triple):
                    return CheckResult(False, ("4-term", a, i, j, k, l))
    return CheckResult(True)


Edge = Tuple[Tuple[int, int], Tuple[int, int]]


@dataclass(frozen=True)
class GridFlowNet:
    """The n x n planar grid: edges (i,j)->(i-1,j) and (i,j)->(i,j+1).

    Sources are the column-1 vertices read bottom-up (element s of the
    ground set sits at (n+1-s, 1)); sinks are the row-1 vertices left to
    right. This boundary labeling is a fixed convention of the artifact.
    """

    n: int
    edge_weights: Tuple[Tuple[Edge, Fraction], ...]

    @property
    def weights(self) -> Dict[Edge, Fraction]:
        return dict(self.edge_weights)

    def source(self, element: int) -> Tuple[int, int]:
        return (self.n + 1 - element, 1)

    def sink(self, index: int) -> Tuple[int, int]:
        return (1, index)


def grid_edges(n: int) -> List[Edge]:
    out: List[Edge] = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i > 1:
                out.append(((i, j), (i - 1, j)))
            if j < n:
                out.append(((i, j), (i, j + 1)))
    return out


def grid_net(n: int, weights: Mapping[Edge, object]) -> GridFlowNet:
    """Grid net with the given edge weights (missing edges weigh zero)."""
    table = []
    wmap = dict(weights)
    for e in grid_edges(n):
        table.append((e, Fraction(wmap.pop(e, 0))))
    if wmap:
        raise ValueError(f"weights given for non-grid edges: {sorted(wmap)}")
    return GridFlowNet(n, tuple(table))


def _all_paths(n: int, frm: Tuple[int, int], to: Tuple[int, int], used: frozenset):
    """Monotone grid paths frm -> to avoiding used edges, as edge tuples."""
    if frm == to:
        yield ()
        return
    i, j = frm
    ti, tj = to
    if i < ti or j > tj:
        return
    if i > 1:
        e = ((i, j), (i - 1, j))
        if e not in used:
            for rest in _all_paths(n, (i - 1, j), to, used | {e}):
                yield (e,) + rest
    if j < n:
        e = ((i, j), (i, j + 1))
        if e not in used:
            for rest in _all_paths(n, (i, j + 1), to, used | {e}):
                yield (e,) + rest


def _best_flow(net: GridFlowNet, sources: List[Tuple[int, int]], sinks: List[Tuple[int, int]]):
    """Max weight of an edge-disjoint path system routing sources to sinks."""
    w = net.weights
    best: List[Optional[Fraction]] = [None]

    def route(idx: int, remaining: Tuple[Tuple[int, int], ...], used: frozenset, acc: Fraction):
        if idx == len(sources):
            if best[0] is None or acc > best[0]:
                best[0] = acc
            return
        src = sources[idx]
        for pos, snk in enumerate(remaining):
            rest = remaining[:pos] + remaining[pos + 1:]
            for path in _all_paths(net.n, src, snk, used):
                route(idx + 1, rest, used | set(path), acc + sum((w[e] for e in path), Fraction(0)))

    route(0, tuple(sinks), frozenset(), Fraction(0))
    return best[0]


def flow_tp(net: GridFlowNet) -> SubsetFunction:
    """f(S') = max weight of a normal flow from S', for every S' in 2^S.

    A normal flow has divergence +1 on S', -1 on the first |S'| sinks and 0
    elsewhere; on the acyclic grid these are exactly the edge-disjoint path
    systems from the chosen sources onto the leading sinks. The result is a
    DMTP-function. Subsets admitting no flow are recorded as minus infinity
    and skipped by the relation checkers (the standard grid always routes).
    """
    n = net.n
    if n > FLOW_CAP:
        raise TooLarge(f"normal-flow enumeration capped at n <= {FLOW_CAP}")
    table: List[Optional[Fraction]] = [None] * (1 << n)
    table[0] = Fraction(0)
    for mask in range(1, 1 << n):
        elems = mask_elements(mask)
        sources = [net.source(e) for e in elems]
        sinks = [net.sink(r) for r in range(1, len(elems) + 1)]
        table[mask] = _best_flow(net, sources, sinks)
    return SubsetFunction(n, tuple(table))


def flow_value_bruteforce(net: GridFlowNet, subset: Iterable[int]) -> Optional[Fraction]:
    """Independent oracle: scan all 2^|E| edge subsets for the divergence
    constraints of a normal flow and maximize the weight. Tiny n only."""
    n = net.n
    edges = grid_edges(n)
    if len(edges) > 14:
        raise TooLarge("edge-subset scan is exponential; use n <= 2")
    w = net.weights
    elems = sorted(set(subset))
    sources = {net.source(e) for e in elems}
    sinks = {net.sink(r) for r in range(1, len(elems) + 1)}
    best: Optional[Fraction] = None
    for chosen in itertools.product((False, True), repeat=len(edges)):
        div: Dict[Tuple[int, int], int] = {}
        weight = Fraction(0)
        for flag, e in zip(chosen, edges):
            if not flag:
                continue
            a, b = e
            div[a] = div.get(a, 0) + 1
            div[b] = div.get(b, 0) - 1
            weight += w[e]
        ok = True
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                v = (i, j)
                want = (1 if v in sources else 0) - (1 if v in sinks else 0)
                if div.get(v, 0) != want:
                    ok = False
                    break
            if not ok:
                break
        if ok and (best is None or weight > best):
            best = weight
    return best


def reconstruct_from_intervals(n: int, interval_values: Mapping) -> SubsetFunction:
    """Extend values on the empty set and the intervals to a TP-function.

    Every non-interval set S has a gap witness (i, j, k): i, k in S, j not,
    i < j < k; the 3-term relation then determines f(S) from five sets that
    are strictly closer to the interval family. Propagation scans sets in
    ascending mask order with the lexicographically smallest usable witness,
    repeating until stable, and the result is verified to be TP.
    """
    if n > CHECK_CAP:
        raise TooLarge(f"reconstruction capped at n <= {CHECK_CAP}")
    needed = interval_masks(n)
    table: List[Optional[Fraction]] = [None] * (1 << n)
    known = [False] * (1 << n)
    given = {k if isinstance(k, int) else subset_mask(k, n): v for k, v in interval_values.items()}
    for m in needed:
        if m not in given:
            raise ValueError("interval data must cover the empty set and every interval")
        table[m] = Fraction(given[m])
        known[m] = True
    extra = set(given) - set(needed)
    if extra:
        raise ValueError("interval data mentions non-interval subsets")

    def witnesses(mask: int):
        elems = mask_elements(mask)
        inside = set(elems)
        for i, k in itertools.combinations(elems, 2):
            for j in range(i + 1, k):
                if j not in inside:
                    yield i, j, k

    progress = True
    while progress:
        progress = False
        for mask in range(1 << n):
            if known[mask]:
                continue
            for i, j, k in sorted(witnesses(mask)):
                bi, bj, bk = 1 << (i - 1), 1 << (j - 1), 1 << (k - 1)
                a = mask & ~bi & ~bk
                others = (a | bj, a | bi | bj, a | bk, a | bj | bk, a | bi)
                if all(known[m] for m in others):
                    rhs = max(
                        table[a | bi | bj] + table[a | bk],
                        table[a | bj | bk] + table[a | bi],
                    )
                    table[mask] = rhs - table[a | bj]
                    known[mask] = True
                    progress = True
                    break
    if not all(known):
        raise Inconsistent("reconstruction could not determine every subset")
    f = SubsetFunction(n, tuple(table))
    check = is_tp(f)
    if not check:
        raise Inconsistent(f"reconstructed function violates the 3-term relation at {check.witness}")
    return f


def is_submodular(f: SubsetFunction, on_intervals_only: bool = False) -> bool:
    """f(A) + f(B) >= f(A | B) + f(A & B) over all pairs, or interval pairs."""
    n = f.n
    if n > CHECK_CAP:
        raise TooLarge(f"submodularity check capped at n <= {CHECK_CAP}")
    masks = interval_masks(n) if on_intervals_only else list(range(1 << n))
    for a in masks:
        fa = f.table[a]
        if fa is None:
            continue
        for b in masks:
            fb, fu, fi = f.table[b], f.table[a | b], f.table[a & b]
            if None in (fb, fu, fi):
                continue
            if fa + fb < fu + fi:
                return False
    return True
