"""Exact interval numbers on [0, 1].

An interval number ``[lo, hi]`` is stored as two integer numerators over a
shared denominator, so every comparison is exact.  The denominator defaults
to :data:`DEFAULT_DENOMINATOR`; values built over different denominators can
still be mixed, they are rescaled to a common one on the fly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Union

DEFAULT_DENOMINATOR = 20

Number = Union[int, float, str, Fraction]


class EmptyCollection(ValueError):
    """rinf/rsup called on an empty collection."""


class OffGrid(ValueError):
    """A value is not an exact multiple of the requested denominator."""


def to_fraction(value: Number) -> Fraction:
    # floats go through str() so 0.3 means 3/10, not the binary neighbour
    if isinstance(value, float):
        return Fraction(str(value))
    return Fraction(value)


def _numerator(value: Number, den: int) -> int:
    frac = to_fraction(value) * den
    if frac.denominator != 1:
        raise OffGrid(f"{value} is not a multiple of 1/{den}")
    return frac.numerator


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _render(num: int, den: int) -> str:
    frac = Fraction(num, den)
    if frac.denominator == 1:
        return str(frac.numerator)
    d = frac.denominator
    while d % 2 == 0:
        d //= 2
    while d % 5 == 0:
        d //= 5
    if d != 1:
        return f"{frac.numerator}/{frac.denominator}"
    digits = 0
    while (frac * 10**digits).denominator != 1:
        digits += 1
    return f"{float(frac):.{digits}f}"


class IntervalNumber:
    """An element ``[lo, hi]`` of D[0,1] with ``0 <= lo <= hi <= 1``.

    Immutable.  Construct from numerators with ``IntervalNumber(lo_num,
    hi_num, den)`` or from decimals with :meth:`of`.
    """

    __slots__ = ("lo_num", "hi_num", "den", "_hash")

    def __init__(self, lo_num: int, hi_num: int, den: int = DEFAULT_DENOMINATOR):
        if den <= 0:
            raise ValueError("denominator must be positive")
        if not 0 <= lo_num <= hi_num <= den:
            raise ValueError(f"not an interval number: [{lo_num}/{den}, {hi_num}/{den}]")
        object.__setattr__(self, "lo_num", lo_num)
        object.__setattr__(self, "hi_num", hi_num)
        object.__setattr__(self, "den", den)
        g = gcd(gcd(lo_num, hi_num), den)
        object.__setattr__(self, "_hash", hash((lo_num // g, hi_num // g, den // g)))

    def __setattr__(self, name, value):
        raise AttributeError("IntervalNumber is immutable")

    def __reduce__(self):
        return (IntervalNumber, (self.lo_num, self.hi_num, self.den))

    @classmethod
    def of(cls, lo: Number, hi: Number | None = None, den: int = DEFAULT_DENOMINATOR) -> "IntervalNumber":
        """Build ``[lo, hi]`` from decimals or fractions; ``hi`` defaults to ``lo``."""
        if hi is None:
            hi = lo
        return cls(_numerator(lo, den), _numerator(hi, den), den)

    @classmethod
    def parse(cls, text: str, den: int = DEFAULT_DENOMINATOR) -> "IntervalNumber":
        m = re.fullmatch(r"\s*\[\s*([^,\]]+?)\s*,\s*([^,\]]+?)\s*\]\s*", text)
        if m is None:
            raise ValueError(f"cannot parse interval number {text!r}")
        return cls.of(m.group(1), m.group(2), den)

    @property
    def lo(self) -> Fraction:
        return Fraction(self.lo_num, self.den)

    @property
    def hi(self) -> Fraction:
        return Fraction(self.hi_num, self.den)

    @property
    def is_degenerate(self) -> bool:
        return self.lo_num == self.hi_num

    def rescale(self, den: int) -> "IntervalNumber":
        if den == self.den:
            return self
        return IntervalNumber(_numerator(self.lo, den), _numerator(self.hi, den), den)

    def __eq__(self, other):
        if not isinstance(other, IntervalNumber):
            return NotImplemented
        if self.den == other.den:
            return self.lo_num == other.lo_num and self.hi_num == other.hi_num
        return (self.lo_num * other.den == other.lo_num * self.den
                and self.hi_num * other.den == other.hi_num * self.den)

    def __hash__(self):
        return self._hash

    def __le__(self, other: "IntervalNumber") -> bool:
        return leq(self, other)

    def __lt__(self, other: "IntervalNumber") -> bool:
        return lt(self, other)

    def __ge__(self, other: "IntervalNumber") -> bool:
        return leq(other, self)

    def __gt__(self, other: "IntervalNumber") -> bool:
        return lt(other, self)

    def sort_key(self) -> tuple[Fraction, Fraction]:
        """Total lexicographic key (lo, hi); used for deterministic ordering only."""
        return (self.lo, self.hi)

    def __str__(self):
        return f"[{_render(self.lo_num, self.den)},{_render(self.hi_num, self.den)}]"

    def __repr__(self):
        return f"IntervalNumber{self}"


@dataclass(frozen=True)
class ExtendedInterval:
    """Sum of two interval numbers; endpoints live in [0, 2]."""

    lo_num: int
    hi_num: int
    den: int = DEFAULT_DENOMINATOR

    def __post_init__(self):
        if not 0 <= self.lo_num <= self.hi_num <= 2 * self.den:
            raise ValueError("extended interval endpoints must satisfy 0 <= lo <= hi <= 2")

    @property
    def lo(self) -> Fraction:
        return Fraction(self.lo_num, self.den)

    @property
    def hi(self) -> Fraction:
        return Fraction(self.hi_num, self.den)

    def __str__(self):
        return f"[{_render(self.lo_num, self.den)},{_render(self.hi_num, self.den)}]"


def zero(den: int = DEFAULT_DENOMINATOR) -> IntervalNumber:
    return IntervalNumber(0, 0, den)


def one(den: int = DEFAULT_DENOMINATOR) -> IntervalNumber:
    return IntervalNumber(den, den, den)


def half(den: int = DEFAULT_DENOMINATOR) -> IntervalNumber:
    if den % 2:
        raise OffGrid(f"0.5 is not a multiple of 1/{den}")
    return IntervalNumber(den // 2, den // 2, den)


def _aligned(a: IntervalNumber, b: IntervalNumber) -> tuple[int, int, int, int, int]:
    if a.den == b.den:
        return a.lo_num, a.hi_num, b.lo_num, b.hi_num, a.den
    den = _lcm(a.den, b.den)
    fa, fb = den // a.den, den // b.den
    return a.lo_num * fa, a.hi_num * fa, b.lo_num * fb, b.hi_num * fb, den


def rmin(a: IntervalNumber, b: IntervalNumber, *rest: IntervalNumber) -> IntervalNumber:
    """Componentwise minimum of two or more interval numbers."""
    if rest:
        return rinf((a, b) + rest)
    alo, ahi, blo, bhi, den = _aligned(a, b)
    return IntervalNumber(min(alo, blo), min(ahi, bhi), den)


def rmax(a: IntervalNumber, b: IntervalNumber, *rest: IntervalNumber) -> IntervalNumber:
    """Componentwise maximum of two or more interval numbers."""
    if rest:
        return rsup((a, b) + rest)
    alo, ahi, blo, bhi, den = _aligned(a, b)
    return IntervalNumber(max(alo, blo), max(ahi, bhi), den)


def rinf(values: Iterable[IntervalNumber]) -> IntervalNumber:
    it = iter(values)
    try:
        acc = next(it)
    except StopIteration:
        raise EmptyCollection("rinf of an empty collection") from None
    for v in it:
        acc = rmin(acc, v)
    return acc


def rsup(values: Iterable[IntervalNumber]) -> IntervalNumber:
    it = iter(values)
    try:
        acc = next(it)
    except StopIteration:
        raise EmptyCollection("rsup of an empty collection") from None
    for v in it:
        acc = rmax(acc, v)
    return acc


def leq(a: IntervalNumber, b: IntervalNumber) -> bool:
    if a.den == b.den:
        return a.lo_num <= b.lo_num and a.hi_num <= b.hi_num
    alo, ahi, blo, bhi, _ = _aligned(a, b)
    return alo <= blo and ahi <= bhi


def eq(a: IntervalNumber, b: IntervalNumber) -> bool:
    return a == b


def lt(a: IntervalNumber, b: IntervalNumber) -> bool:
    return leq(a, b) and a != b


def scalar_scale(k: Number, a: IntervalNumber) -> IntervalNumber:
    """``[k*lo, k*hi]`` for a rational ``0 <= k <= 1``.

    The result is expressed over ``a.den * k.denominator`` so it stays exact.
    """
    k = to_fraction(k)
    if not 0 <= k <= 1:
        raise ValueError("scale factor must lie in [0, 1]")
    den = a.den * k.denominator
    return IntervalNumber(a.lo_num * k.numerator, a.hi_num * k.numerator, den)


def add(a: IntervalNumber, b: IntervalNumber) -> ExtendedInterval:
    alo, ahi, blo, bhi, den = _aligned(a, b)
    return ExtendedInterval(alo + blo, ahi + bhi, den)


def exceeds_one(e: ExtendedInterval, strict_both: bool = False) -> bool:
    """Whether ``e > [1, 1]``.

    By default the interval order is used literally: ``[1,1] <= e`` and
    ``e != [1,1]``.  With ``strict_both`` both endpoints must exceed 1.
    """
    if strict_both:
        return e.lo_num > e.den and e.hi_num > e.den
    return e.lo_num >= e.den and e.hi_num >= e.den and e.hi_num > e.den


def complement(a: IntervalNumber) -> IntervalNumber:
    return IntervalNumber(a.den - a.hi_num, a.den - a.lo_num, a.den)


def grid_intervals(den: int = DEFAULT_DENOMINATOR) -> list[IntervalNumber]:
    """Every interval number whose endpoints are multiples of ``1/den``."""
    return [IntervalNumber(lo, hi, den) for lo in range(den + 1) for hi in range(lo, den + 1)]
