"""Fuzzy filter predicates on finite pseudo BL-algebras.

Each predicate evaluates its defining inequalities over every element
tuple of the algebra and returns a :class:`FilterVerdict`.  Conditions are
tagged ``F1`` ... ``F17``; a failing verdict names the first violated tag and
the lexicographically smallest witness for it.  The constant ``0.5``
appearing in the conditions is the interval ``[0.5,0.5]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable

from .algebra import FinitePseudoBL
from .fuzzy import IVFuzzySet, ThresholdGrid, default_grid_for, first_escaping_threshold
from .interval import IntervalNumber, half, leq, lt, one, rmax, rmin


class NonScalarSet(ValueError):
    pass


class BadThresholds(ValueError):
    pass


@dataclass(frozen=True)
class FilterVerdict:
    holds: bool
    violated_condition: str | None = None
    witness: tuple | None = None

    def __post_init__(self):
        if self.holds != (self.violated_condition is None):
            raise ValueError("a verdict holds exactly when no condition is violated")

    def __bool__(self):
        return self.holds

    def describe(self) -> str:
        if self.holds:
            return "holds"
        if not self.witness:
            return f"violates {self.violated_condition}"
        wit = ", ".join(str(w) for w in self.witness)
        return f"violates {self.violated_condition} at ({wit})"


HOLDS = FilterVerdict(True)

Check = Callable[[int, int], bool]


def _pairs(alg: FinitePseudoBL):
    return itertools.product(alg.elements, repeat=2)


def _scan_pairs(tag: str, alg: FinitePseudoBL, ok: Check) -> FilterVerdict | None:
    for x, y in _pairs(alg):
        if not ok(x, y):
            return FilterVerdict(False, tag, (x, y))
    return None


def _scan_ordered(tag: str, alg: FinitePseudoBL, ok: Check) -> FilterVerdict | None:
    for x, y in _pairs(alg):
        if alg.leq(x, y) and not ok(x, y):
            return FilterVerdict(False, tag, (x, y))
    return None


def _first(*verdicts) -> FilterVerdict:
    # each item is a zero-arg callable so later conditions are skipped after a failure
    for make in verdicts:
        v = make()
        if v is not None:
            return v
    return HOLDS


def _half(F: IVFuzzySet) -> IntervalNumber:
    return half(F[0].den)


# -- scalar fuzzy filters -------------------------------------------------------

def _require_scalar(F: IVFuzzySet) -> None:
    if not F.is_scalar:
        raise NonScalarSet("scalar fuzzy filters need degenerate interval values [a,a]")


def is_fuzzy_filter_scalar(alg: FinitePseudoBL, F: IVFuzzySet) -> FilterVerdict:
    """Classical fuzzy filter: ``mu(x*y) >= min(mu x, mu y)`` and monotone."""
    _require_scalar(F)
    V, p = F.values, alg.prod
    return _first(
        lambda: _scan_pairs("i", alg, lambda x, y: V[p[x][y]].lo_num >= min(V[x].lo_num, V[y].lo_num)),
        lambda: _scan_ordered("ii", alg, lambda x, y: V[x].lo_num <= V[y].lo_num),
    )


def is_fuzzy_implicative_filter_scalar(alg: FinitePseudoBL, F: IVFuzzySet) -> FilterVerdict:
    base = is_fuzzy_filter_scalar(alg, F)
    if not base:
        return base
    V, r, s = F.values, alg.arrow, alg.sarrow
    return _first(lambda: _scan_pairs(
        "iii", alg,
        lambda x, y: V[x].lo_num >= max(V[s[r[x][y]][x]].lo_num, V[r[s[x][y]][x]].lo_num)))


# -- interval valued fuzzy filters --------------------------------------------

def _F1(alg, V):
    p = alg.prod
    return _scan_pairs("F1", alg, lambda x, y: leq(rmin(V[x], V[y]), V[p[x][y]]))


def _F2(alg, V):
    return _scan_ordered("F2", alg, lambda x, y: leq(V[x], V[y]))


def is_iv_fuzzy_filter(alg: FinitePseudoBL, F: IVFuzzySet) -> FilterVerdict:
    V = F.values
    return _first(lambda: _F1(alg, V), lambda: _F2(alg, V))


def is_iv_evq_fuzzy_filter_pointwise(alg: FinitePseudoBL, F: IVFuzzySet,
                                     threshold_grid: ThresholdGrid | Iterable[IntervalNumber] | None = None,
                                     strict_both: bool = False) -> FilterVerdict:
    """Decide the belongs / in-or-q conditions by scanning thresholds.

    ``t`` and ``r`` in the product condition only matter through
    ``rmin(t, r)``, which ranges over all thresholds below
    ``rmin(F(x), F(y))``; the grid must therefore be closed under ``rmin``.
    With no grid, every threshold on the half-step grid of ``F``'s
    denominator is scanned, which is exhaustive.  Witnesses are
    ``(x, y, s)`` with ``s`` the offending threshold.
    """
    if threshold_grid is None:
        grid = default_grid_for(F)
    elif isinstance(threshold_grid, ThresholdGrid):
        grid = threshold_grid
    else:
        grid = ThresholdGrid(threshold_grid)
    V, p = F.values, alg.prod
    for x, y in _pairs(alg):
        s = first_escaping_threshold(rmin(V[x], V[y]), V[p[x][y]], grid, strict_both)
        if s is not None:
            return FilterVerdict(False, "F3", (x, y, s))
    for x, y in _pairs(alg):
        if alg.leq(x, y):
            s = first_escaping_threshold(V[x], V[y], grid, strict_both)
            if s is not None:
                return FilterVerdict(False, "F4", (x, y, s))
    return HOLDS


def _F5(alg, V, h):
    p = alg.prod
    return _scan_pairs("F5", alg, lambda x, y: leq(rmin(rmin(V[x], V[y]), h), V[p[x][y]]))


def _F6(alg, V, h):
    return _scan_ordered("F6", alg, lambda x, y: leq(rmin(V[x], h), V[y]))


def is_iv_evq_fuzzy_filter(alg: FinitePseudoBL, F: IVFuzzySet) -> FilterVerdict:
    """``F(x*y) >= rmin(F x, F y, 0.5)`` and ``x <= y => F y >= rmin(F x, 0.5)``."""
    V, h = F.values, _half(F)
    return _first(lambda: _F5(alg, V, h), lambda: _F6(alg, V, h))


def satisfies_F7_F8(alg: FinitePseudoBL, F: IVFuzzySet) -> FilterVerdict:
    """(F7) together with one of the residuated forms (F8) or (F8')."""
    V, h = F.values, _half(F)
    top, r, s = V[alg.one], alg.arrow, alg.sarrow
    f7 = _scan_pairs("F7", alg, lambda x, y: leq(rmin(V[x], h), top))
    if f7 is not None:
        return f7
    f8 = _scan_pairs("F8", alg, lambda x, y: leq(rmin(rmin(V[x], V[r[x][y]]), h), V[y]))
    if f8 is None:
        return HOLDS
    f8p = _scan_pairs("F8'", alg, lambda x, y: leq(rmin(rmin(V[x], V[s[x][y]]), h), V[y]))
    if f8p is None:
        return HOLDS
    return FilterVerdict(False, "F8", f8.witness)


def satisfies_F9_F10(alg: FinitePseudoBL, F: IVFuzzySet) -> FilterVerdict:
    V, h, p = F.values, _half(F), alg.prod
    return _first(
        lambda: _scan_pairs("F9", alg, lambda x, y: leq(rmin(V[x], V[y]), rmax(V[p[x][y]], h))),
        lambda: _scan_ordered("F10", alg, lambda x, y: leq(V[x], rmax(V[y], h))),
    )


def _check_thresholds(alpha: IntervalNumber, beta: IntervalNumber) -> None:
    if not lt(alpha, beta):
        raise BadThresholds(f"thresholds need alpha < beta, got {alpha} and {beta}")


def _F11_F12(alg, V, alpha, beta):
    p = alg.prod
    v = _scan_pairs("F11", alg, lambda x, y: leq(rmin(rmin(V[x], V[y]), beta), rmax(V[p[x][y]], alpha)))
    if v is None:
        v = _scan_ordered("F12", alg, lambda x, y: leq(rmin(V[x], beta), rmax(V[y], alpha)))
    return v


def is_threshold_fuzzy_filter(alg: FinitePseudoBL, F: IVFuzzySet, alpha: IntervalNumber,
                              beta: IntervalNumber) -> FilterVerdict:
    _check_thresholds(alpha, beta)
    return _first(lambda: _F11_F12(alg, F.values, alpha, beta))


# -- implicative, MV and G variants -------------------------------------------

def _F13(alg, V, h):
    r, s = alg.arrow, alg.sarrow
    return _first(
        lambda: _scan_pairs("F13", alg, lambda x, y: leq(rmin(V[s[r[x][y]][x]], h), V[x])),
        lambda: _scan_pairs("F13", alg, lambda x, y: leq(rmin(V[r[s[x][y]][x]], h), V[x])),
    )


def is_iv_evq_implicative_filter(alg: FinitePseudoBL, F: IVFuzzySet) -> FilterVerdict:
    """(F5), (F6) and (F13).  A set that is not a filter reports its F5/F6 violation."""
    base = is_iv_evq_fuzzy_filter(alg, F)
    if not base:
        return base
    V, h = F.values, _half(F)
    return _F13(alg, V, h)


def check_implicative_consequences(alg: FinitePseudoBL, F: IVFuzzySet) -> FilterVerdict:
    """The eight inequalities every implicative (in-or-q) fuzzy filter satisfies.

    Tags ``C1a`` ... ``C4b``: the ``a`` form of each pair starts from ``->``,
    the ``b`` form from ``~>``.
    """
    V, h = F.values, _half(F)
    r, s = alg.arrow, alg.sarrow

    def ge(lhs, rhs_arg):
        return leq(rmin(V[rhs_arg], h), V[lhs])

    conds = [
        ("C1a", lambda x, y: ge(x, r[r[x][y]][x])),
        ("C1b", lambda x, y: ge(x, s[s[x][y]][x])),
        ("C2a", lambda x, y: ge(r[s[r[y][x]][x]][y], r[x][y])),
        ("C2b", lambda x, y: ge(s[r[s[y][x]][x]][y], s[x][y])),
        ("C3a", lambda x, y: ge(r[s[y][x]][x], s[r[x][y]][y])),
        ("C3b", lambda x, y: ge(s[r[y][x]][x], r[s[x][y]][y])),
        ("C4a", lambda x, y: ge(s[r[y][x]][x], s[r[x][y]][y])),
        ("C4b", lambda x, y: ge(r[s[y][x]][x], s[s[x][y]][y])),
    ]
    return _first(*[(lambda tag=tag, ok=ok: _scan_pairs(tag, alg, ok)) for tag, ok in conds])


def satisfies_F14(alg: FinitePseudoBL, F: IVFuzzySet) -> FilterVerdict:
    V, h = F.values, _half(F)
    r, s = alg.arrow, alg.sarrow
    return _first(
        lambda: _scan_pairs("F14", alg, lambda x, y: leq(V[s[r[x][y]][x]], rmax(V[x], h))),
        lambda: _scan_pairs("F14", alg, lambda x, y: leq(V[r[s[x][y]][x]], rmax(V[x], h))),
    )


def is_threshold_implicative_filter(alg: FinitePseudoBL, F: IVFuzzySet, alpha: IntervalNumber,
                                    beta: IntervalNumber) -> FilterVerdict:
    """(F11), (F12) and (F15) for thresholds ``alpha < beta``."""
    _check_thresholds(alpha, beta)
    V, r, s = F.values, alg.arrow, alg.sarrow
    return _first(
        lambda: _F11_F12(alg, V, alpha, beta),
        lambda: _scan_pairs("F15", alg, lambda x, y: leq(rmin(V[s[r[x][y]][x]], beta), rmax(V[x], alpha))),
        lambda: _scan_pairs("F15", alg, lambda x, y: leq(rmin(V[r[s[x][y]][x]], beta), rmax(V[x], alpha))),
    )


def is_iv_evq_mv_filter(alg: FinitePseudoBL, F: IVFuzzySet) -> FilterVerdict:
    base = is_iv_evq_fuzzy_filter(alg, F)
    if not base:
        return base
    V, h = F.values, _half(F)
    r, s = alg.arrow, alg.sarrow
    return _first(
        lambda: _scan_pairs("F16", alg, lambda x, y: leq(rmin(V[r[x][y]], h), V[r[s[r[y][x]][x]][y]])),
        lambda: _scan_pairs("F16", alg, lambda x, y: leq(rmin(V[s[x][y]], h), V[s[r[s[y][x]][x]][y]])),
    )


def is_iv_evq_g_filter(alg: FinitePseudoBL, F: IVFuzzySet) -> FilterVerdict:
    base = is_iv_evq_fuzzy_filter(alg, F)
    if not base:
        return base
    V, h = F.values, _half(F)
    r, s = alg.arrow, alg.sarrow
    return _first(
        lambda: _scan_pairs("F17", alg, lambda x, y: leq(rmin(V[r[x][r[x][y]]], h), V[r[x][y]])),
        lambda: _scan_pairs("F17", alg, lambda x, y: leq(rmin(V[s[x][s[x][y]]], h), V[s[x][y]])),
    )


def arrows_agree(alg: FinitePseudoBL, F: IVFuzzySet) -> bool:
    """``F(x -> y) == F(x ~> y)`` for all x, y."""
    if alg.arrows_coincide:
        return True
    V, r, s = F.values, alg.arrow, alg.sarrow
    return all(V[r[x][y]] == V[s[x][y]] for x, y in _pairs(alg))


def unit_thresholds(den: int) -> tuple[IntervalNumber, IntervalNumber, IntervalNumber]:
    """``([0,0], [0.5,0.5], [1,1])`` over ``den``."""
    return IntervalNumber(0, 0, den), half(den), one(den)
