import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ivfuzzy.algebra import enumerate_filters, godel_chain, is_implicative_filter, lukasiewicz_chain
from ivfuzzy.filters import (
    BadThresholds,
    FilterVerdict,
    NonScalarSet,
    arrows_agree,
    check_implicative_consequences,
    is_fuzzy_filter_scalar,
    is_fuzzy_implicative_filter_scalar,
    is_iv_evq_fuzzy_filter,
    is_iv_evq_fuzzy_filter_pointwise,
    is_iv_evq_g_filter,
    is_iv_evq_implicative_filter,
    is_iv_evq_mv_filter,
    is_iv_fuzzy_filter,
    is_threshold_fuzzy_filter,
    is_threshold_implicative_filter,
    satisfies_F7_F8,
    satisfies_F9_F10,
    satisfies_F14,
)
from ivfuzzy.fuzzy import FuzzyPoint, IVFuzzySet, dichotomous_intervals, in_or_q, belongs
from ivfuzzy.interval import IntervalNumber, grid_intervals, half, leq, one, rmin, zero

from conftest import example_set, iv

GRID_VALUES = dichotomous_intervals((0, 0.3, 0.5, 0.7, 1))
ALGS = [godel_chain(3), lukasiewicz_chain(3)]
TOP = IVFuzzySet.constant(one(), 3)


def sets_on(n=3):
    return st.lists(st.sampled_from(GRID_VALUES), min_size=n, max_size=n).map(IVFuzzySet)


def crisp(I, n, inside=one(), outside=zero()):
    return IVFuzzySet.indicator(I, n, inside, outside)


def scalar(values):
    return IVFuzzySet([IntervalNumber.of(v, v) for v in values])


# -- scalar fuzzy filters --------------------------------------------------------

def test_scalar_examples(g3):
    for I in enumerate_filters(g3):
        assert is_fuzzy_filter_scalar(g3, crisp(I, 3))
    assert is_fuzzy_filter_scalar(g3, scalar([0.4] * 3))
    v = is_fuzzy_filter_scalar(g3, scalar([0.7, 0.7, 0.3]))
    assert not v and v.violated_condition == "ii" and v.witness == (0, 2)


def test_scalar_predicates_reject_intervals(g3):
    with pytest.raises(NonScalarSet):
        is_fuzzy_filter_scalar(g3, example_set({2}, 3))


def test_scalar_implicative_examples(g3):
    assert is_fuzzy_implicative_filter_scalar(g3, crisp({1, 2}, 3))
    v = is_fuzzy_implicative_filter_scalar(g3, crisp({2}, 3))
    assert not v and v.violated_condition == "iii"


# -- (F1)-(F4) ----------------------------------------------------------------

def test_F1_F2_examples(g3):
    assert is_iv_fuzzy_filter(g3, TOP)
    for I in enumerate_filters(g3):
        assert is_iv_fuzzy_filter(g3, crisp(I, 3))
    assert is_iv_fuzzy_filter(g3, example_set({2}, 3))


def test_F3_F4_examples(g3):
    assert is_iv_evq_fuzzy_filter_pointwise(g3, example_set({2}, 3))
    assert is_iv_evq_fuzzy_filter_pointwise(g3, IVFuzzySet.constant(zero(), 3))
    # F(1)=[0.3,0.4], F(a)=[0.7,0.8]: q rescues t=[0.7,0.8] but [0,0.425] escapes
    v = is_iv_evq_fuzzy_filter_pointwise(g3, IVFuzzySet.of([(0.3, 0.4), (0.7, 0.8), (0.3, 0.4)]))
    assert not v and v.violated_condition == "F4"
    assert v.witness == (1, 2, IntervalNumber(0, 17, 40))


def _brute_F3_F4(alg, F, thresholds):
    V, p = F.values, alg.prod
    for x, y in itertools.product(alg.elements, repeat=2):
        below_x = [t for t in thresholds if leq(t, V[x])]
        below_y = [r for r in thresholds if leq(r, V[y])]
        for t in below_x:
            for r in below_y:
                if not in_or_q(FuzzyPoint(p[x][y], rmin(t, r)), F):
                    return False
        if alg.leq(x, y):
            if not all(in_or_q(FuzzyPoint(y, t), F) for t in below_x):
                return False
    return True


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(ALGS), sets_on())
def test_pointwise_agrees_with_brute_force(alg, F):
    thresholds = [t for t in grid_intervals(20) if t.hi_num]
    verdict = is_iv_evq_fuzzy_filter_pointwise(alg, F)
    brute = _brute_F3_F4(alg, F, thresholds)
    # the half-step grid is finer, so it can only find more violations
    if not brute:
        assert not verdict
    if not verdict:
        x, y, s = verdict.witness
        target = alg.prod[x][y] if verdict.violated_condition == "F3" else y
        if verdict.violated_condition == "F3":
            assert belongs(FuzzyPoint(x, s), F) and belongs(FuzzyPoint(y, s), F)
        else:
            assert alg.leq(x, y) and belongs(FuzzyPoint(x, s), F)
        assert not in_or_q(FuzzyPoint(target, s), F)


# -- (F5)-(F12) ----------------------------------------------------------------

def test_F5_F6_examples(g3):
    assert is_iv_evq_fuzzy_filter(g3, example_set({2}, 3))
    assert is_iv_evq_fuzzy_filter(g3, IVFuzzySet.of([(0.3, 0.35), (0.3, 0.35), (0.5, 0.6)]))
    v = is_iv_evq_fuzzy_filter(g3, IVFuzzySet.of([(0.7, 0.8), (0.7, 0.8), (0.3, 0.4)]))
    assert not v and v.violated_condition == "F6" and v.witness == (0, 2)


def test_F7_F8_examples(g3):
    assert satisfies_F7_F8(g3, example_set({2}, 3))
    assert satisfies_F7_F8(g3, TOP)
    v = satisfies_F7_F8(g3, IVFuzzySet.of([(0.7, 0.8), (0.7, 0.8), (0.3, 0.4)]))
    assert not v and v.violated_condition in ("F7", "F8")


def test_F9_F10_examples(g3):
    assert satisfies_F9_F10(g3, TOP)
    assert satisfies_F9_F10(g3, example_set({2}, 3))
    v = satisfies_F9_F10(g3, IVFuzzySet.of([(0, 0), (0.7, 0.8), (0.5, 0.5)]))
    assert not v and v.violated_condition == "F10" and v.witness == (1, 2)


def test_threshold_filter_needs_ordered_pair(g3):
    with pytest.raises(BadThresholds):
        is_threshold_fuzzy_filter(g3, TOP, half(), half())
    with pytest.raises(BadThresholds):
        is_threshold_fuzzy_filter(g3, TOP, iv(0.2, 0.6), iv(0.4, 0.5))
    for a, b in [(zero(), half()), (zero(), one()), (half(), one()), (iv(0.3), iv(0.7))]:
        assert is_threshold_fuzzy_filter(g3, TOP, a, b)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(ALGS), sets_on())
def test_threshold_forms_reduce(alg, F):
    assert bool(is_threshold_fuzzy_filter(alg, F, zero(), half())) == bool(is_iv_evq_fuzzy_filter(alg, F))
    assert bool(is_threshold_fuzzy_filter(alg, F, zero(), one())) == bool(is_iv_fuzzy_filter(alg, F))
    assert bool(is_threshold_implicative_filter(alg, F, zero(), half())) == \
        bool(is_iv_evq_implicative_filter(alg, F))


# -- implicative, MV, G --------------------------------------------------------

@pytest.mark.parametrize("alg", ALGS, ids=lambda a: a.descriptor)
def test_implicative_crisp_sets(alg):
    for I in enumerate_filters(alg):
        v = is_iv_evq_implicative_filter(alg, crisp(I, 3))
        assert bool(v) == is_implicative_filter(alg, I)
    assert is_iv_evq_implicative_filter(alg, TOP)


def test_lukasiewicz_top_only_not_implicative(l3):
    v = is_iv_evq_implicative_filter(l3, crisp({2}, 3))
    assert not v and v.violated_condition == "F13" and v.witness == (1, 0)


def test_non_filter_reports_inner_violation(g3):
    v = is_iv_evq_implicative_filter(g3, IVFuzzySet.of([(0.7, 0.8), (0.7, 0.8), (0.3, 0.4)]))
    assert v.violated_condition == "F6"


def test_consequence_examples(g3):
    assert check_implicative_consequences(g3, TOP)
    assert check_implicative_consequences(g3, crisp({1, 2}, 3))


def test_F14_F15_examples(g3):
    assert satisfies_F14(g3, TOP)
    for a, b in [(zero(), half()), (zero(), one()), (half(), one())]:
        assert is_threshold_implicative_filter(g3, TOP, a, b)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(ALGS), sets_on())
def test_implicative_implies_mv_and_g(alg, F):
    if is_iv_evq_implicative_filter(alg, F):
        assert is_iv_evq_mv_filter(alg, F)
        assert is_iv_evq_g_filter(alg, F)
        assert check_implicative_consequences(alg, F)


def test_mv_g_constant(g3):
    assert is_iv_evq_mv_filter(g3, TOP) and is_iv_evq_g_filter(g3, TOP)


@given(sets_on())
def test_arrows_agree_on_chains(F):
    assert arrows_agree(godel_chain(3), F)


def test_verdict_invariant():
    with pytest.raises(ValueError):
        FilterVerdict(True, "F1")
    assert FilterVerdict(False, "F2", (0, 1)).describe() == "violates F2 at (0, 1)"
