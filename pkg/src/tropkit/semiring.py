"""Scalar idempotent semiring arithmetic with residuation, star, and exact intervals.

Four tagged semirings are supported:

    max-plus   (Q u {-inf}, max, +)     zero = -inf, unit = 0
    min-plus   (Q u {+inf}, min, +)     zero = +inf, unit = 0
    max-times  (Q+, max, *)             zero = 0,    unit = 1
    boolean    ({False, True}, or, and)

All numeric payloads are exact `fractions.Fraction`; floats are rejected so
that every identity tested downstream holds with equality, not tolerance.
The canonical order of an idempotent semiring (a <= b  iff  a + b == b) is
the one used everywhere; note that for min-plus it is the reverse of the
numeric order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DivisionByBottom, Divergent, TagMismatch


class SemiringTag(enum.Enum):
    MAX_PLUS = "max-plus"
    MIN_PLUS = "min-plus"
    MAX_TIMES = "max-times"
    BOOLEAN = "boolean"

    @property
    def is_semifield(self) -> bool:
        return self is not SemiringTag.BOOLEAN


MAX_PLUS = SemiringTag.MAX_PLUS
MIN_PLUS = SemiringTag.MIN_PLUS
MAX_TIMES = SemiringTag.MAX_TIMES
BOOLEAN = SemiringTag.BOOLEAN

ScalarLike = Union["TropScalar", Fraction, int, str, bool, None]


def _coerce_payload(value, tag: SemiringTag):
    """Turn a user-supplied payload into the internal representation.

    `None` stands for the bottom of max-plus (-inf) and min-plus (+inf).
    Strings accept "p/q", "-inf" and "+inf". Floats are rejected: the
    toolkit is exact by contract.
    """
    if tag is BOOLEAN:
        if isinstance(value, bool):
            return value
        if value in (0, 1):
            return bool(value)
        raise TypeError(f"boolean scalar needs a bool, got {value!r}")
    if value is None:
        if tag is MAX_TIMES:
            return Fraction(0)
        return None
    if isinstance(value, str):
        s = value.strip()
        if s in ("-inf", "-oo"):
            if tag is not MAX_PLUS:
                raise ValueError(f"-inf is not an element of {tag.value}")
            return None
        if s in ("+inf", "inf", "+oo"):
            if tag is not MIN_PLUS:
                raise ValueError(f"+inf is not an element of {tag.value}")
            return None
        value = Fraction(s)
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact rational required, got {value!r}")
    if isinstance(value, Fraction) and value.denominator == 1:
        value = int(value)  # integers stay machine ints: exact and fast
    if not isinstance(value, (int, Fraction)):
        raise TypeError(f"cannot interpret {value!r} as a {tag.value} scalar")
    if tag is MAX_TIMES and value < 0:
        raise ValueError("max-times scalars are nonnegative rationals")
    return value


@dataclass(frozen=True)
class TropScalar:
    """An element of a tagged idempotent semiring (value or bottom)."""

    value: object
    tag: SemiringTag

    def __post_init__(self):
        object.__setattr__(self, "value", _coerce_payload(self.value, self.tag))

    @classmethod
    def _fast(cls, value, tag: SemiringTag) -> "TropScalar":
        """Internal constructor for payloads already in canonical form."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "value", value)
        object.__setattr__(obj, "tag", tag)
        return obj

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        if self.tag is BOOLEAN:
            return self.value is False
        if self.tag is MAX_TIMES:
            return self.value == 0
        return self.value is None

    @property
    def is_finite(self) -> bool:
        """True when the payload is an honest rational (never for bottoms)."""
        return self.value is not None and not isinstance(self.value, bool)

    def same_tag(self, other: "TropScalar") -> None:
        if self.tag is not other.tag:
            raise TagMismatch(f"{self.tag.value} vs {other.tag.value}")

    # -- semiring operations ------------------------------------------------

    def __add__(self, other: "TropScalar") -> "TropScalar":
        return sr_add(self, other)

    def __mul__(self, other: "TropScalar") -> "TropScalar":
        return sr_mul(self, other)

    def __truediv__(self, other: "TropScalar") -> "TropScalar":
        return sr_residual(self, other)

    def star(self) -> "TropScalar":
        return sr_star(self)

    # -- canonical order (a <= b iff a + b == b) -----------------------------

    def __le__(self, other: "TropScalar") -> bool:
        if self.tag is not other.tag:
            raise TagMismatch(f"{self.tag.value} vs {other.tag.value}")
        a, b = self.value, other.value
        if self.tag is BOOLEAN:
            return (not a) or bool(b)
        if self.tag is MIN_PLUS:
            return a is None or (b is not None and b <= a)
        if a is None:
            return True
        return b is not None and a <= b

    def __ge__(self, other: "TropScalar") -> bool:
        return other.__le__(self)

    def __lt__(self, other: "TropScalar") -> bool:
        return self.__le__(other) and self != other

    def __gt__(self, other: "TropScalar") -> bool:
        return other.__le__(self) and self != other

    def __repr__(self) -> str:
        if self.tag is BOOLEAN:
            return "T" if self.value else "F"
        if self.value is None:
            return "-inf" if self.tag is MAX_PLUS else "+inf"
        return str(self.value)


def scalar(value: ScalarLike, tag: SemiringTag = MAX_PLUS) -> TropScalar:
    """Convenience constructor accepting ints, Fractions, "p/q", bottoms."""
    if isinstance(value, TropScalar):
        if value.tag is not tag:
            raise TagMismatch(f"{value.tag.value} vs {tag.value}")
        return value
    return TropScalar(value, tag)


def zero(tag: SemiringTag) -> TropScalar:
    if tag is BOOLEAN:
        return TropScalar(False, tag)
    return TropScalar(None, tag)


def one(tag: SemiringTag) -> TropScalar:
    if tag is BOOLEAN:
        return TropScalar(True, tag)
    if tag is MAX_TIMES:
        return TropScalar(1, tag)
    return TropScalar(0, tag)


def sr_add(a: TropScalar, b: TropScalar) -> TropScalar:
    """a + b in the tagged semiring (idempotent, commutative)."""
    if a.tag is not b.tag:
        raise TagMismatch(f"{a.tag.value} vs {b.tag.value}")
    tag = a.tag
    if tag is BOOLEAN:
        return a if a.value else b
    if a.value is None:
        return b
    if b.value is None:
        return a
    if tag is MIN_PLUS:
        return a if a.value <= b.value else b
    return a if a.value >= b.value else b


def sr_mul(a: TropScalar, b: TropScalar) -> TropScalar:
    """a * b in the tagged semiring; the zero is absorbing."""
    if a.tag is not b.tag:
        raise TagMismatch(f"{a.tag.value} vs {b.tag.value}")
    tag = a.tag
    if tag is BOOLEAN:
        return a if not a.value else b
    if tag is MAX_TIMES:
        return TropScalar._fast(a.value * b.value, tag)
    if a.value is None or b.value is None:
        return TropScalar._fast(None, tag)
    return TropScalar._fast(a.value + b.value, tag)


def sr_residual(x: TropScalar, y: TropScalar) -> TropScalar:
    """Residuation x / y = max{lam : lam * y <= x} (canonical order).

    Subtraction in max-plus and min-plus, division in max-times.
    """
    if x.tag is not y.tag:
        raise TagMismatch(f"{x.tag.value} vs {y.tag.value}")
    tag = x.tag
    if not tag.is_semifield:
        raise ValueError("residuation needs a semifield tag, not boolean")
    if y.is_zero:
        raise DivisionByBottom("residual denominator is the semiring zero")
    if x.is_zero:
        return zero(tag)
    if tag is MAX_TIMES:
        q = Fraction(x.value) / Fraction(y.value)
        return TropScalar._fast(int(q) if q.denominator == 1 else q, tag)
    return TropScalar._fast(x.value - y.value, tag)


def sr_star(a: TropScalar) -> TropScalar:
    """Star a* = 1 + a + a^2 + ...; diverges above the unit."""
    tag = a.tag
    if tag is BOOLEAN:
        return one(tag)
    if tag is MAX_TIMES:
        raise ValueError("scalar star is not provided for max-times")
    if a <= one(tag):
        return one(tag)
    raise Divergent(f"star of {a!r} is unbounded")


@dataclass(frozen=True)
class Interval:
    """Order interval [lo, hi] of same-tag scalars, lo <= hi canonically."""

    lo: TropScalar
    hi: TropScalar

    def __post_init__(self):
        self.lo.same_tag(self.hi)
        if not self.lo <= self.hi:
            raise ValueError(f"interval endpoints out of order: {self.lo!r}, {self.hi!r}")

    @property
    def tag(self) -> SemiringTag:
        return self.lo.tag

    def contains(self, x: TropScalar) -> bool:
        return self.lo <= x and x <= self.hi

    def __repr__(self) -> str:
        return f"[{self.lo!r}, {self.hi!r}]"


def interval(lo: ScalarLike, hi: ScalarLike, tag: SemiringTag = MAX_PLUS) -> Interval:
    return Interval(scalar(lo, tag), scalar(hi, tag))


def iv_binary(op: str, a: Interval, b: Interval) -> Interval:
    """Exact interval image of a monotone binary operation.

    add and mul are isotone in both arguments, so both endpoints are
    endpointwise images. residual is isotone in the numerator and antitone
    in the denominator: the image is [a.lo/b.hi, a.hi/b.lo]. Outputs are
    attained at input endpoints, which is what makes the estimates exact.
    """
    if a.tag is not b.tag:
        raise TagMismatch(f"{a.tag.value} vs {b.tag.value}")
    if op == "add":
        return Interval(sr_add(a.lo, b.lo), sr_add(a.hi, b.hi))
    if op == "mul":
        return Interval(sr_mul(a.lo, b.lo), sr_mul(a.hi, b.hi))
    if op == "residual":
        if b.lo.is_zero:
            raise DivisionByBottom("interval residual denominator contains the zero")
        return Interval(sr_residual(a.lo, b.hi), sr_residual(a.hi, b.lo))
    raise ValueError(f"unknown interval operation {op!r}")
