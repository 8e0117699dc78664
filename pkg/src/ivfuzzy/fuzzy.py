"""Interval-valued fuzzy sets, fuzzy points and level sets."""

from __future__ import annotations

import io
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, TextIO

from .algebra import CrispSubset, FinitePseudoBL
from .interval import (
    DEFAULT_DENOMINATOR,
    IntervalNumber,
    Number,
    _numerator,
    _render,
    add,
    complement,
    exceeds_one,
    half,
    leq,
    lt,
    rmax,
    rmin,
    to_fraction,
)


class NotDichotomous(ValueError):
    pass


class CarrierMismatch(ValueError):
    pass


class GridMissingHalf(ValueError):
    pass


def is_dichotomous(v: IntervalNumber) -> bool:
    """``v < [0.5,0.5]`` or ``[0.5,0.5] <= v``."""
    h = half(v.den) if v.den % 2 == 0 else None
    if h is None:
        return 2 * v.hi_num < v.den or 2 * v.lo_num >= v.den
    return lt(v, h) or leq(h, v)


class IVFuzzySet:
    """A total map from carrier indices to interval numbers.

    Every value must be comparable with ``[0.5,0.5]`` unless the set is
    built with ``allow_nondichotomous=True``; :attr:`dichotomous` records
    whether the constraint holds either way.
    """

    __slots__ = ("values", "dichotomous", "_hash")

    def __init__(self, values: Sequence[IntervalNumber], allow_nondichotomous: bool = False):
        values = tuple(values)
        if not values:
            raise ValueError("a fuzzy set needs at least one value")
        ok = all(is_dichotomous(v) for v in values)
        if not ok and not allow_nondichotomous:
            bad = next(i for i, v in enumerate(values) if not is_dichotomous(v))
            raise NotDichotomous(f"value {values[bad]} at element {bad} is not comparable with [0.5,0.5]")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "dichotomous", ok)
        object.__setattr__(self, "_hash", hash(values))

    def __setattr__(self, name, value):
        raise AttributeError("IVFuzzySet is immutable")

    def __reduce__(self):
        return (IVFuzzySet, (self.values, True))

    @classmethod
    def of(cls, pairs: Iterable[tuple[Number, Number]], den: int = DEFAULT_DENOMINATOR,
           allow_nondichotomous: bool = False) -> "IVFuzzySet":
        return cls([IntervalNumber.of(lo, hi, den) for lo, hi in pairs], allow_nondichotomous)

    @classmethod
    def constant(cls, value: IntervalNumber, n: int) -> "IVFuzzySet":
        return cls([value] * n)

    @classmethod
    def indicator(cls, subset: Iterable[int], n: int, inside: IntervalNumber,
                  outside: IntervalNumber) -> "IVFuzzySet":
        subset = set(subset)
        return cls([inside if x in subset else outside for x in range(n)])

    def __call__(self, x: int) -> IntervalNumber:
        return self.values[x]

    def __getitem__(self, x: int) -> IntervalNumber:
        return self.values[x]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if not isinstance(other, IVFuzzySet):
            return NotImplemented
        return self.values == other.values

    def __hash__(self):
        return self._hash

    @property
    def is_scalar(self) -> bool:
        return all(v.is_degenerate for v in self.values)

    def image(self) -> list[IntervalNumber]:
        return sorted(set(self.values), key=IntervalNumber.sort_key)

    def __str__(self):
        return "{" + ", ".join(f"{x}:{v}" for x, v in enumerate(self.values)) + "}"

    def __repr__(self):
        return f"IVFuzzySet({self})"


@dataclass(frozen=True)
class FuzzyPoint:
    """``U(x; t)``: value ``t`` at ``support`` and ``[0,0]`` elsewhere."""

    support: int
    value: IntervalNumber

    def __post_init__(self):
        if self.value.hi_num == 0:
            raise ValueError("a fuzzy point needs a nonzero value")


def belongs(p: FuzzyPoint, F: IVFuzzySet) -> bool:
    return leq(p.value, F[p.support])


def quasi_coincident(p: FuzzyPoint, F: IVFuzzySet, strict_both: bool = False) -> bool:
    return exceeds_one(add(F[p.support], p.value), strict_both)


def in_or_q(p: FuzzyPoint, F: IVFuzzySet, strict_both: bool = False) -> bool:
    return belongs(p, F) or quasi_coincident(p, F, strict_both)


def in_and_q(p: FuzzyPoint, F: IVFuzzySet, strict_both: bool = False) -> bool:
    return belongs(p, F) and quasi_coincident(p, F, strict_both)


def level_set(F: IVFuzzySet, t: IntervalNumber) -> CrispSubset:
    """``{x : F(x) >= t}``."""
    if t.hi_num == 0:
        raise ValueError("level sets are taken at thresholds above [0,0]")
    return frozenset(x for x, v in enumerate(F.values) if leq(t, v))


def _meet_closure(values: Iterable[IntervalNumber]) -> set[IntervalNumber]:
    closed = set(values)
    frontier = set(closed)
    while frontier:
        fresh = {rmin(a, b) for a in frontier for b in closed} - closed
        closed |= fresh
        frontier = fresh
    return closed


def critical_thresholds(F: IVFuzzySet, window: tuple[IntervalNumber, IntervalNumber],
                        degenerate: bool = False) -> list[IntervalNumber]:
    """Finite set of thresholds realizing every level set with ``low < t <= high``.

    A nonempty level set ``S = F_t`` is also the level set at
    ``rmin(rinf F(S), high)``, which stays inside the window.  Under the
    partial interval order ``rinf F(S)`` need not be an image value, so the
    candidates are the meet-closure of the image (or the lower endpoints,
    as degenerate intervals, when ``degenerate`` is set), clipped at
    ``high``.  The window top itself is always included.
    """
    low, high = window
    if not lt(low, high):
        raise ValueError(f"empty threshold window ({low}, {high}]")
    den = F[0].den
    if degenerate:
        base = {IntervalNumber(v.lo_num, v.lo_num, den) for v in F.values}
        top = IntervalNumber.of(high.lo, high.lo, den)
    else:
        base = _meet_closure(F.values)
        top = high
    found = set()
    for c in base | {top}:
        t = rmin(c, top)
        if t.hi_num > 0 and lt(low, t):
            found.add(t)
    return sorted(found, key=IntervalNumber.sort_key)


def level_sets(F: IVFuzzySet, window: tuple[IntervalNumber, IntervalNumber],
               degenerate: bool = False) -> list[tuple[IntervalNumber, CrispSubset]]:
    """Nonempty level sets in the window, each paired with a realizing threshold."""
    out = []
    for t in critical_thresholds(F, window, degenerate):
        s = level_set(F, t)
        if s:
            out.append((t, s))
    return out


def dichotomous_intervals(grid: Iterable[Number], den: int = DEFAULT_DENOMINATOR) -> list[IntervalNumber]:
    """Interval numbers with endpoints on ``grid`` that respect the dichotomy, in (lo, hi) order."""
    points = sorted({to_fraction(g) for g in grid})
    if to_fraction("0.5") not in points:
        raise GridMissingHalf("endpoint grid must contain 0.5")
    nums = [_numerator(p, den) for p in points]
    out = []
    for lo in nums:
        for hi in nums:
            if lo <= hi:
                v = IntervalNumber(lo, hi, den)
                if is_dichotomous(v):
                    out.append(v)
    return out


def count_iv_fuzzy_sets(alg: FinitePseudoBL, grid: Iterable[Number], den: int = DEFAULT_DENOMINATOR) -> int:
    return len(dichotomous_intervals(grid, den)) ** alg.n


def enumerate_iv_fuzzy_sets(alg: FinitePseudoBL | int, grid: Iterable[Number],
                            den: int = DEFAULT_DENOMINATOR) -> Iterator[IVFuzzySet]:
    """Every dichotomous fuzzy set with grid endpoints, in lexicographic order."""
    n = alg if isinstance(alg, int) else alg.n
    values = dichotomous_intervals(grid, den)
    for combo in itertools.product(values, repeat=n):
        yield IVFuzzySet(combo)


def fuzzy_set_at(index: int, values: Sequence[IntervalNumber], n: int) -> IVFuzzySet:
    """The ``index``-th set of :func:`enumerate_iv_fuzzy_sets` (mixed-radix decode)."""
    k = len(values)
    digits = []
    for _ in range(n):
        index, d = divmod(index, k)
        digits.append(d)
    return IVFuzzySet([values[d] for d in reversed(digits)])


def _pointwise(F: IVFuzzySet, G: IVFuzzySet, op) -> list[IntervalNumber]:
    if len(F) != len(G):
        raise CarrierMismatch("fuzzy sets live on carriers of different size")
    return [op(a, b) for a, b in zip(F.values, G.values)]


def union(F: IVFuzzySet, G: IVFuzzySet) -> IVFuzzySet:
    return IVFuzzySet(_pointwise(F, G, rmax), allow_nondichotomous=True)


def intersection(F: IVFuzzySet, G: IVFuzzySet) -> IVFuzzySet:
    return IVFuzzySet(_pointwise(F, G, rmin), allow_nondichotomous=True)


def set_complement(F: IVFuzzySet) -> IVFuzzySet:
    """Pointwise ``[1-hi, 1-lo]``; the result may violate the dichotomy (see ``.dichotomous``)."""
    return IVFuzzySet([complement(v) for v in F.values], allow_nondichotomous=True)


# -- thresholds for the belongs / quasi-coincidence quantifiers --------------

class ThresholdGrid:
    """An ordered, rmin-closed family of nonzero thresholds with a cached hash."""

    __slots__ = ("values", "_hash")

    def __init__(self, values: Iterable[IntervalNumber]):
        vals = sorted({v for v in values if v.hi_num > 0}, key=IntervalNumber.sort_key)
        self.values = tuple(vals)
        self._hash = hash(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, ThresholdGrid) and self.values == other.values


@lru_cache(maxsize=None)
def half_step_grid(den: int = DEFAULT_DENOMINATOR, degenerate: bool = False) -> ThresholdGrid:
    """All nonzero thresholds with endpoints on the ``1/(2*den)`` grid.

    Membership and quasi-coincidence tests against values on the ``1/den``
    grid are boolean combinations of endpoint comparisons with cut points on
    that grid.  Every open gap between cut points contains a half step, so
    this grid meets every region of thresholds those tests can distinguish.
    """
    d2 = 2 * den
    if degenerate:
        return ThresholdGrid(IntervalNumber(a, a, d2) for a in range(1, d2 + 1))
    return ThresholdGrid(IntervalNumber(a, b, d2) for a in range(d2 + 1) for b in range(a, d2 + 1))


@lru_cache(maxsize=1 << 16)
def first_escaping_threshold(bound: IntervalNumber, value: IntervalNumber, grid: ThresholdGrid,
                             strict_both: bool = False) -> IntervalNumber | None:
    """Smallest grid ``s <= bound`` with ``U(_, s)`` neither in nor q-coincident with ``value``."""
    for s in grid:
        if leq(s, bound) and not leq(s, value) and not exceeds_one(add(value, s), strict_both):
            return s
    return None


def default_grid_for(F: IVFuzzySet, degenerate: bool = False) -> ThresholdGrid:
    return half_step_grid(F[0].den, degenerate)


# -- text format --------------------------------------------------------------

def dumps(F: IVFuzzySet) -> str:
    out = io.StringIO()
    dump(F, out)
    return out.getvalue()


def dump(F: IVFuzzySet, fp: TextIO) -> None:
    for x, v in enumerate(F.values):
        fp.write(f"{x} {_render(v.lo_num, v.den)} {_render(v.hi_num, v.den)}\n")


def loads(text: str, den: int = DEFAULT_DENOMINATOR, allow_nondichotomous: bool = False) -> IVFuzzySet:
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 'idx lo hi'")
        idx = int(parts[0])
        if idx in entries:
            raise ValueError(f"line {lineno}: element {idx} given twice")
        entries[idx] = IntervalNumber.of(parts[1], parts[2], den)
    if not entries or sorted(entries) != list(range(len(entries))):
        raise ValueError("fuzzy set must list every element 0..n-1 exactly once")
    return IVFuzzySet([entries[i] for i in range(len(entries))], allow_nondichotomous)


def load(fp: TextIO, den: int = DEFAULT_DENOMINATOR, allow_nondichotomous: bool = False) -> IVFuzzySet:
    return loads(fp.read(), den, allow_nondichotomous)

