import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ivfuzzy.algebra import enumerate_filters, godel_chain, is_implicative_filter, lukasiewicz_chain
from ivfuzzy.fuzzy import IVFuzzySet
from ivfuzzy.implication import (
    And,
    Apply,
    BadThreshold,
    Const,
    ForAll,
    ImplicationOperator as Op,
    Implies,
    Member,
    Not,
    Or,
    UnboundVariable,
    Var,
    apply,
    implication_threshold_agreement,
    is_fuzzifying_implicative_filter,
    is_t_implication_based_implicative_filter,
    is_tautology_filter,
    lift,
    truth_value,
)
from ivfuzzy.interval import IntervalNumber, half, leq, one, zero

from conftest import example_set, intervals, iv

D = 20
# one row per operator: I(0.3, 0.7), I(0.7, 0.3), I(0.6, 0.4)
TABLE = {
    Op.EARLY_ZADEH: (14, 6, 8),
    Op.LUKASIEWICZ: (20, 12, 16),
    Op.GODEL: (20, 6, 8),
    Op.CONTRAPOSITION_GODEL: (20, 6, 8),
    Op.GAINES_RESCHER: (20, 0, 0),
    Op.KLEENE_DIENES: (14, 6, 8),
}


@pytest.mark.parametrize("op", list(Op), ids=lambda o: o.value)
def test_scalar_rows(op):
    assert (op.scalar(6, 14, D), op.scalar(14, 6, D), op.scalar(12, 8, D)) == TABLE[op]


@pytest.mark.parametrize("op", list(Op), ids=lambda o: o.value)
def test_boundary_identities(op):
    for b in range(D + 1):
        assert op.scalar(0, b, D) == D          # false implies anything
        if op in (Op.GAINES_RESCHER, Op.CONTRAPOSITION_GODEL):
            assert op.scalar(D, b, D) == (D if b == D else 0)
        else:
            assert op.scalar(D, b, D) == b      # I(1, b) = b
    assert op.scalar(D, D, D) == D
    if op is not Op.EARLY_ZADEH:
        assert all(op.scalar(a, D, D) == D for a in range(D + 1))


def test_early_zadeh_true_conclusion_is_not_one():
    # I_m(a, 1) = max(1 - a, a)
    assert Op.EARLY_ZADEH.scalar(10, D, D) == 10


@pytest.mark.parametrize("op", [o for o in Op if o is not Op.EARLY_ZADEH], ids=lambda o: o.value)
def test_monotonicity(op):
    r = range(0, D + 1, 2)
    for a, a2, b in itertools.product(r, r, r):
        if a <= a2:
            assert op.scalar(a2, b, D) <= op.scalar(a, b, D)
            assert op.scalar(b, a, D) <= op.scalar(b, a2, D)


def test_early_zadeh_not_antitone():
    assert Op.EARLY_ZADEH.scalar(0, 0, D) == D > Op.EARLY_ZADEH.scalar(10, 0, D)
    assert Op.EARLY_ZADEH.scalar(10, 0, D) < Op.EARLY_ZADEH.scalar(20, 20, D)


def test_apply_examples():
    assert apply(Op.LUKASIEWICZ, iv(0.3), iv(0.7)) == one()
    assert apply(Op.GAINES_RESCHER, iv(0.3), iv(0.2)) == zero()
    assert apply(Op.GODEL, iv(0.6), iv(0.4)) == iv(0.4)


def test_lift_reports_swaps():
    # I_g(0.3,0.6)=1 but I_g(0.7,0.6)=0.6: endpoints cross
    v, swapped = lift(Op.GODEL, iv(0.3, 0.7), iv(0.6, 0.6))
    assert swapped and v == iv(0.6, 1)
    assert lift(Op.LUKASIEWICZ, iv(0.3), iv(0.7))[1] is False


@given(intervals(), intervals())
def test_lifted_values_are_intervals(a, b):
    for op in Op:
        v = apply(op, a, b)
        assert v.lo_num <= v.hi_num


def test_from_name():
    assert Op.from_name("cg") is Op.CONTRAPOSITION_GODEL
    with pytest.raises(ValueError):
        Op.from_name("zz")


def test_truth_value_examples():
    F = IVFuzzySet.of([(0.7, 0.8), (0.3, 0.4)])
    x = Member(Var("x"))
    assert truth_value(x, F, {"x": 0}) == iv(0.7, 0.8)
    assert truth_value(Not(x), F, {"x": 0}) == iv(0.2, 0.3)
    assert truth_value(Implies(x, x), F, {"x": 1}) == one()
    assert truth_value(And(Member(Const(0)), Member(Const(1))), F) == iv(0.3, 0.4)
    assert truth_value(Or(Member(Const(0)), Member(Const(1))), F) == iv(0.7, 0.8)
    assert truth_value(ForAll("x", x), F) == iv(0.3, 0.4)
    with pytest.raises(UnboundVariable):
        truth_value(x, F)


def test_truth_value_of_compound_terms(g3):
    F = example_set({2}, 3)
    term = Member(Apply("prod", Var("x"), Var("y")))
    assert truth_value(term, F, {"x": 2, "y": 2}, algebra=g3) == iv(0.7, 0.8)
    assert truth_value(term, F, {"x": 2, "y": 1}, algebra=g3) == iv(0.3, 0.4)
    empty = ForAll("x", term, such_that=lambda alg, env: False)
    assert truth_value(empty, F, {"y": 0}, algebra=g3) == one()


def test_fuzzifying_examples(g3, l3):
    assert is_fuzzifying_implicative_filter(g3, IVFuzzySet.constant(one(), 3))
    for alg in (g3, l3):
        for I in enumerate_filters(alg):
            F = IVFuzzySet.indicator(I, 3, one(), zero())
            assert bool(is_fuzzifying_implicative_filter(alg, F)) == is_implicative_filter(alg, I)
    v = is_fuzzifying_implicative_filter(g3, example_set({2}, 3))
    assert not v and v.violated_condition == "F20"
    assert is_fuzzifying_implicative_filter(g3, example_set({1, 2}, 3))


def test_tautology_tags_depend_on_threshold(g3):
    F = example_set({2}, 3)
    assert is_tautology_filter(g3, F, half(), Op.GODEL).violated_condition == "F24"
    with pytest.raises(BadThreshold):
        is_tautology_filter(g3, F, zero(), Op.GODEL)


def test_t_implication_examples(g3):
    top = IVFuzzySet.constant(one(), 3)
    assert is_t_implication_based_implicative_filter(g3, top, half(), Op.GAINES_RESCHER)
    assert is_t_implication_based_implicative_filter(g3, IVFuzzySet.indicator({1, 2}, 3, one(), zero()),
                                                     half(), Op.GODEL)
    bad = IVFuzzySet.of([(0, 0), (0.7, 0.8), (0.3, 0.4)])   # F(1) below F(a)
    v = is_t_implication_based_implicative_filter(g3, bad, half(), Op.GAINES_RESCHER)
    assert not v and v.violated_condition == "F27" and v.witness == (1, 2)
    with pytest.raises(BadThreshold):
        is_t_implication_based_implicative_filter(g3, top, zero(), Op.GODEL)


def test_gaines_rescher_fails_product_condition():
    l3 = lukasiewicz_chain(3)
    F = IVFuzzySet.of([(0, 0), (0.7, 0.7), (1, 1)])   # F(a*a)=F(0) < F(a)
    v = is_t_implication_based_implicative_filter(l3, F, half(), Op.GAINES_RESCHER)
    assert not v and v.violated_condition == "F26" and v.witness == (1, 1)


@pytest.mark.parametrize("variant", ["gr", "g", "cg"])
def test_threshold_agreement_examples(g3, variant):
    assert implication_threshold_agreement(g3, IVFuzzySet.constant(one(), 3), variant)
    assert implication_threshold_agreement(g3, example_set({2}, 3), variant)
    with pytest.raises(ValueError):
        implication_threshold_agreement(g3, example_set({2}, 3), "b")
