import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ivfuzzy import fuzzy as Z
from ivfuzzy.algebra import godel_chain
from ivfuzzy.fuzzy import (
    CarrierMismatch,
    FuzzyPoint,
    GridMissingHalf,
    IVFuzzySet,
    NotDichotomous,
    belongs,
    critical_thresholds,
    dichotomous_intervals,
    enumerate_iv_fuzzy_sets,
    fuzzy_set_at,
    in_and_q,
    in_or_q,
    intersection,
    level_set,
    level_sets,
    quasi_coincident,
    set_complement,
    union,
)
from ivfuzzy.interval import IntervalNumber, grid_intervals, half, leq, lt, one, zero

from conftest import example_set, iv

GRID = (0, 0.3, 0.5, 0.7, 1)
DICHOTOMOUS = [v for v in grid_intervals(20) if Z.is_dichotomous(v)]
fuzzy_sets = st.lists(st.sampled_from(DICHOTOMOUS), min_size=1, max_size=4).map(IVFuzzySet)


def test_dichotomy_enforced():
    with pytest.raises(NotDichotomous):
        IVFuzzySet.of([(0.3, 0.6)])
    assert not IVFuzzySet.of([(0.3, 0.6)], allow_nondichotomous=True).dichotomous


def test_points_need_nonzero_value():
    with pytest.raises(ValueError):
        FuzzyPoint(0, zero())


def test_belongs_examples():
    F = example_set({2}, 3)
    assert belongs(FuzzyPoint(2, iv(0.7, 0.8)), F)
    assert belongs(FuzzyPoint(0, F[0]), F)
    assert not belongs(FuzzyPoint(0, iv(0.3, 0.5)), F)


def test_quasi_coincidence_examples():
    F = IVFuzzySet.of([(0.7, 0.8), (0.5, 0.5), (0.2, 0.3)])
    assert quasi_coincident(FuzzyPoint(0, iv(0.3, 0.4)), F)
    assert not quasi_coincident(FuzzyPoint(1, iv(0.5)), F)
    assert not quasi_coincident(FuzzyPoint(2, iv(0.3, 0.4)), F)


def test_combined_relations():
    F = IVFuzzySet.of([(0.7, 0.8), (0.2, 0.3)])
    p = FuzzyPoint(0, iv(0.1, 0.1))          # belongs, no q
    assert in_or_q(p, F) and not in_and_q(p, F)
    p = FuzzyPoint(1, iv(0.4, 0.4))          # neither
    assert not in_or_q(p, F)
    p = FuzzyPoint(0, iv(0.6, 0.7))          # both
    assert in_and_q(p, F)


def test_level_set_examples():
    F = example_set({1, 2}, 3)
    assert level_set(F, half()) == {1, 2}
    assert level_set(F, IntervalNumber(1, 1)) == {0, 1, 2}
    assert level_set(F, iv(0.9)) == frozenset()
    with pytest.raises(ValueError):
        level_set(F, zero())


def test_critical_threshold_examples():
    F = example_set({2}, 3)
    assert critical_thresholds(F, (zero(), half())) == [iv(0.3, 0.4), half()]
    assert critical_thresholds(IVFuzzySet.constant(one(), 2), (zero(), half())) == [half()]


def test_critical_thresholds_include_meets_of_incomparable_values():
    # {0,1} is the level set at [0.5,0.6] only, which is no image value
    F = IVFuzzySet.of([(0.5, 0.9), (0.6, 0.6), (0, 0)])
    ts = critical_thresholds(F, (zero(), one()))
    assert iv(0.5, 0.6) in ts
    assert frozenset({0, 1}) in {s for _, s in level_sets(F, (zero(), one()))}


def test_critical_thresholds_reject_empty_window():
    with pytest.raises(ValueError):
        critical_thresholds(example_set({2}, 3), (half(), half()))


WINDOWS = [(zero(), half()), (zero(), one()), (half(), one()), (iv(0.3), iv(0.7))]


@settings(max_examples=150, deadline=None)
@given(fuzzy_sets, st.sampled_from(WINDOWS))
def test_critical_thresholds_are_complete(F, window):
    low, high = window
    listed = {s for _, s in level_sets(F, window)}
    # every threshold on the half-step grid inside the window
    for t in grid_intervals(40):
        if t.hi_num and lt(low, t) and leq(t, high):
            s = level_set(F, t)
            if s:
                assert s in listed, (F, t)


@settings(max_examples=100, deadline=None)
@given(fuzzy_sets, st.sampled_from(DICHOTOMOUS), st.sampled_from(DICHOTOMOUS))
def test_level_sets_antitone(F, s, t):
    if s.hi_num and t.hi_num and leq(s, t):
        assert level_set(F, t) <= level_set(F, s)


def test_dichotomous_count():
    vals = dichotomous_intervals(GRID)
    assert len(vals) == 11
    assert vals[0] == zero() and vals[-1] == one()
    with pytest.raises(GridMissingHalf):
        dichotomous_intervals((0, 0.3, 1))


def test_enumeration_count_and_order(g3):
    sets = list(enumerate_iv_fuzzy_sets(g3, GRID))
    assert len(sets) == 11 ** 3 == Z.count_iv_fuzzy_sets(g3, GRID)
    assert all(s.dichotomous for s in sets)
    vals = dichotomous_intervals(GRID)
    assert all(fuzzy_set_at(i, vals, 3) == s for i, s in enumerate(sets))


def test_set_operation_examples():
    F = example_set({2}, 3)
    assert union(F, F) == F
    assert intersection(F, IVFuzzySet.constant(one(), 3)) == F
    assert set_complement(F).values == (iv(0.6, 0.7), iv(0.6, 0.7), iv(0.2, 0.3))
    with pytest.raises(CarrierMismatch):
        union(F, IVFuzzySet.constant(one(), 2))


@given(fuzzy_sets)
def test_de_morgan(F):
    G = IVFuzzySet(list(reversed(F.values)))
    assert set_complement(union(F, G)) == intersection(set_complement(F), set_complement(G))
    assert set_complement(set_complement(F)) == F


def test_file_round_trip():
    F = example_set({1, 2}, 3)
    text = Z.dumps(F)
    assert text == "0 0.3 0.4\n1 0.7 0.8\n2 0.7 0.8\n"
    assert Z.loads("# ex\n" + text) == F
    with pytest.raises(ValueError):
        Z.loads("0 0 0\n2 1 1\n")
    with pytest.raises(ValueError):
        Z.loads("0 0 0\n0 1 1\n")
