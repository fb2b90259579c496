"""Semiring matrix invariants: bideterminant, permanent, rook coefficients,
tropical and zero-pattern singularity, and standard transformations.

The bideterminant replaces the determinant over subtraction-free semirings:
the pair of permutation sums split by parity. The permanent is the full
permutation sum; over max-plus it is the optimal assignment value. All
enumerations are exact and capped.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import DimensionMismatch, TooLarge
from .semiring import SemiringTag, TropScalar, one, sr_add, sr_mul, zero
from .tropmat import TropMatrix

PERMANENT_CAP = 8
ROOK_CAP = 7
SUBSET_CAP = 3


def _perm_parity(perm: Sequence[int]) -> int:
    """0 for even, 1 for odd (cycle decomposition)."""
    seen = [False] * len(perm)
    parity = 0
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def _diag_product(a: TropMatrix, perm: Sequence[int]) -> TropScalar:
    acc = one(a.tag)
    for i, j in enumerate(perm):
        acc = sr_mul(acc, a[i, j])
    return acc


@dataclass(frozen=True)
class Bideterminant:
    plus: TropScalar
    minus: TropScalar


def bideterminant(a: TropMatrix) -> Bideterminant:
    """(|A|+, |A|-): permutation sums over even and odd permutations."""
    if not a.is_square:
        raise DimensionMismatch("bideterminant needs a square matrix")
    n = a.rows
    if n > PERMANENT_CAP:
        raise TooLarge(f"bideterminant enumeration capped at n <= {PERMANENT_CAP}")
    plus, minus = zero(a.tag), zero(a.tag)
    for perm in itertools.permutations(range(n)):
        term = _diag_product(a, perm)
        if _perm_parity(perm) == 0:
            plus = sr_add(plus, term)
        else:
            minus = sr_add(minus, term)
    return Bideterminant(plus, minus)


def permanent(a: TropMatrix) -> TropScalar:
    """Permutation sum over all of S_n; the optimal assignment value in max-plus."""
    if not a.is_square:
        raise DimensionMismatch("permanent needs a square matrix")
    n = a.rows
    if n > PERMANENT_CAP:
        raise TooLarge(f"permanent enumeration capped at n <= {PERMANENT_CAP}")
    acc = zero(a.tag)
    for perm in itertools.permutations(range(n)):
        acc = sr_add(acc, _diag_product(a, perm))
    return acc


def rook_coefficients(a: TropMatrix) -> List[TropScalar]:
    """[p_0, ..., p_min(m,n)]: p_0 = unit, p_j = sum of j x j subpermanents."""
    m, n = a.rows, a.cols
    if m > ROOK_CAP or n > ROOK_CAP:
        raise TooLarge(f"rook enumeration capped at {ROOK_CAP}")
    out = [one(a.tag)]
    for j in range(1, min(m, n) + 1):
        acc = zero(a.tag)
        for rows in itertools.combinations(range(m), j):
            for cols in itertools.combinations(range(n), j):
                sub = TropMatrix(tuple(tuple(a[r, c] for c in cols) for r in rows), a.tag)
                acc = sr_add(acc, permanent(sub))
        out.append(acc)
    return out


def is_trop_singular(a: TropMatrix) -> bool:
    """True iff the extremal permanent value is attained by >= 2 permutations.

    For idempotent addition this coincides with the general balanced-subset
    definition (split off one attaining permutation); is_trop_singular_subsets
    is the literal subset form, kept as a small-size cross-check.
    """
    if not a.is_square:
        raise DimensionMismatch("tropical singularity needs a square matrix")
    n = a.rows
    if n > PERMANENT_CAP:
        raise TooLarge(f"singularity enumeration capped at n <= {PERMANENT_CAP}")
    per = permanent(a)
    count = 0
    for perm in itertools.permutations(range(n)):
        if _diag_product(a, perm) == per:
            count += 1
            if count >= 2:
                return True
    return False


def is_trop_singular_subsets(a: TropMatrix) -> bool:
    """Literal general definition: some nonempty proper subset T of S_n
    balances the two permutation sums. Exponential in n!, capped small."""
    if not a.is_square:
        raise DimensionMismatch("tropical singularity needs a square matrix")
    n = a.rows
    if n > SUBSET_CAP:
        raise TooLarge(f"subset enumeration capped at n <= {SUBSET_CAP}")
    terms = [_diag_product(a, perm) for perm in itertools.permutations(range(n))]
    total = len(terms)
    for mask in range(1, (1 << total) - 1):
        left, right = zero(a.tag), zero(a.tag)
        for t in range(total):
            if mask >> t & 1:
                left = sr_add(left, terms[t])
            else:
                right = sr_add(right, terms[t])
        if left == right:
            return True
    return False


def is_pattern_singular(a: TropMatrix) -> str:
    """Zero-pattern singularity over antinegative semirings without zero
    divisors: A x = 0 with x != 0 forces an all-zero column, and dually for
    rows. Returns "right", "left", or "none" (right checked first)."""
    for j in range(a.cols):
        if all(a[i, j].is_zero for i in range(a.rows)):
            return "right"
    for i in range(a.rows):
        if all(a[i, j].is_zero for j in range(a.cols)):
            return "left"
    return "none"


def _perm_matrix(perm: Sequence[int], tag: SemiringTag) -> TropMatrix:
    n = len(perm)
    return TropMatrix(
        tuple(tuple(one(tag) if j == perm[i] else zero(tag) for j in range(n)) for i in range(n)),
        tag,
    )


def _diag_matrix(diag: Sequence[TropScalar], tag: SemiringTag) -> TropMatrix:
    n = len(diag)
    return TropMatrix(
        tuple(tuple(diag[i] if i == j else zero(tag) for j in range(n)) for i in range(n)), tag
    )


@dataclass(frozen=True)
class StandardTransform:
    """X -> P D X' E Q with permutations P, Q and invertible diagonals D, E."""

    p: Tuple[int, ...]
    d: Tuple[TropScalar, ...]
    e: Tuple[TropScalar, ...]
    q: Tuple[int, ...]
    transpose: bool = False

    def __post_init__(self):
        for s in self.d + self.e:
            if s.is_zero:
                raise ValueError("diagonal entries of a standard transform must be invertible")


def identity_transform(n: int, tag: SemiringTag, transpose: bool = False) -> StandardTransform:
    return StandardTransform(
        tuple(range(n)),
        tuple(one(tag) for _ in range(n)),
        tuple(one(tag) for _ in range(n)),
        tuple(range(n)),
        transpose,
    )


def apply_standard_transform(a: TropMatrix, t: StandardTransform) -> TropMatrix:
    """P D X' E Q with X' = A or its transpose; shapes are checked."""
    x = a.transpose() if t.transpose else a
    if len(t.p) != x.rows or len(t.d) != x.rows:
        raise DimensionMismatch("left factors do not match the row count")
    if len(t.q) != x.cols or len(t.e) != x.cols:
        raise DimensionMismatch("right factors do not match the column count")
    tag = a.tag
    return _perm_matrix(t.p, tag) @ _diag_matrix(t.d, tag) @ x @ _diag_matrix(t.e, tag) @ _perm_matrix(t.q, tag)
