"""Implication operators and implication-based fuzzy filters.

The six operators are defined on scalar truth values and lifted to interval
numbers componentwise: ``I([a,b], [c,d]) = [I(a,c), I(b,d)]``.  Operators
antitone in their first argument can produce ``I(a,c) > I(b,d)``; the
endpoints are then swapped, and :func:`lift` reports that it happened.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Callable, Mapping, Union

from .algebra import FinitePseudoBL
from .filters import HOLDS, FilterVerdict, is_threshold_implicative_filter, unit_thresholds
from .fuzzy import IVFuzzySet
from .interval import IntervalNumber, _aligned, complement, half, leq, one, rinf, rmax, rmin


def _mamdani(a: int, b: int, d: int) -> int:
    return max(d - a, min(a, b))


def _lukasiewicz(a: int, b: int, d: int) -> int:
    return min(d, d - a + b)


def _godel(a: int, b: int, d: int) -> int:
    return d if a <= b else b


def _contra_godel(a: int, b: int, d: int) -> int:
    return d if a <= b else d - a


def _gaines_rescher(a: int, b: int, d: int) -> int:
    return d if a <= b else 0


def _kleene_dienes(a: int, b: int, d: int) -> int:
    return max(d - a, b)


class ImplicationOperator(enum.Enum):
    """Scalar implication operators; values are the short CLI names."""

    EARLY_ZADEH = "m"
    LUKASIEWICZ = "a"
    GODEL = "g"
    CONTRAPOSITION_GODEL = "cg"
    GAINES_RESCHER = "gr"
    KLEENE_DIENES = "b"

    def scalar(self, a: int, b: int, den: int) -> int:
        """Apply to truth values ``a/den`` and ``b/den``; returns a numerator over ``den``."""
        return _SCALAR[self](a, b, den)

    @classmethod
    def from_name(cls, name: str) -> "ImplicationOperator":
        try:
            return cls(name)
        except ValueError:
            raise ValueError(f"unknown implication operator {name!r}; "
                             f"expected one of {', '.join(o.value for o in cls)}") from None


_SCALAR: dict[ImplicationOperator, Callable[[int, int, int], int]] = {
    ImplicationOperator.EARLY_ZADEH: _mamdani,
    ImplicationOperator.LUKASIEWICZ: _lukasiewicz,
    ImplicationOperator.GODEL: _godel,
    ImplicationOperator.CONTRAPOSITION_GODEL: _contra_godel,
    ImplicationOperator.GAINES_RESCHER: _gaines_rescher,
    ImplicationOperator.KLEENE_DIENES: _kleene_dienes,
}


def lift(op: ImplicationOperator, a: IntervalNumber, b: IntervalNumber) -> tuple[IntervalNumber, bool]:
    """Componentwise interval lifting; the flag is True when endpoints had to be swapped."""
    alo, ahi, blo, bhi, den = _aligned(a, b)
    f = _SCALAR[op]
    lo, hi = f(alo, blo, den), f(ahi, bhi, den)
    if lo > hi:
        return IntervalNumber(hi, lo, den), True
    return IntervalNumber(lo, hi, den), False


def apply(op: ImplicationOperator, a: IntervalNumber, b: IntervalNumber) -> IntervalNumber:
    return lift(op, a, b)[0]


# -- truth values of fuzzy propositions ---------------------------------------

class UnboundVariable(KeyError):
    pass


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    element: int


@dataclass(frozen=True)
class Apply:
    """A term ``left <op> right`` with op one of ``meet join prod arrow sarrow``."""

    op: str
    left: "Term"
    right: "Term"


Term = Union[Var, Const, Apply]


@dataclass(frozen=True)
class Member:
    """``[term in F]``."""

    term: Term


@dataclass(frozen=True)
class Not:
    body: "Proposition"


@dataclass(frozen=True)
class And:
    left: "Proposition"
    right: "Proposition"


@dataclass(frozen=True)
class Or:
    left: "Proposition"
    right: "Proposition"


@dataclass(frozen=True)
class Implies:
    premise: "Proposition"
    conclusion: "Proposition"


@dataclass(frozen=True)
class ForAll:
    """``[forall var. body]``, optionally restricted by a crisp side condition."""

    var: str
    body: "Proposition"
    such_that: Callable[[FinitePseudoBL, Mapping[str, int]], bool] | None = None


Proposition = Union[Member, Not, And, Or, Implies, ForAll]


def evaluate_term(term: Term, alg: FinitePseudoBL | None, assignment: Mapping[str, int]) -> int:
    if isinstance(term, Var):
        try:
            return assignment[term.name]
        except KeyError:
            raise UnboundVariable(term.name) from None
    if isinstance(term, Const):
        return term.element
    if alg is None:
        raise ValueError("compound terms need an algebra")
    table = getattr(alg, term.op)
    return table[evaluate_term(term.left, alg, assignment)][evaluate_term(term.right, alg, assignment)]


def truth_value(prop: Proposition, F: IVFuzzySet, assignment: Mapping[str, int] | None = None, *,
                algebra: FinitePseudoBL | None = None,
                implication: ImplicationOperator = ImplicationOperator.LUKASIEWICZ) -> IntervalNumber:
    """Compositional interval truth value.

    Membership reads ``F``, negation is the interval complement, ``and`` /
    ``or`` are rmin / rmax, implication is ``implication`` lifted to
    intervals and a universal quantifier is the rinf over the carrier.
    An empty range (every element excluded by ``such_that``) evaluates to [1,1].
    """
    env = dict(assignment or {})

    def go(p: Proposition, env: dict) -> IntervalNumber:
        if isinstance(p, Member):
            return F[evaluate_term(p.term, algebra, env)]
        if isinstance(p, Not):
            return complement(go(p.body, env))
        if isinstance(p, And):
            return rmin(go(p.left, env), go(p.right, env))
        if isinstance(p, Or):
            return rmax(go(p.left, env), go(p.right, env))
        if isinstance(p, Implies):
            return apply(implication, go(p.premise, env), go(p.conclusion, env))
        if isinstance(p, ForAll):
            carrier = algebra.elements if algebra is not None else range(len(F))
            vals = []
            for e in carrier:
                inner = {**env, p.var: e}
                if p.such_that is None or p.such_that(algebra, inner):
                    vals.append(go(p.body, inner))
            return rinf(vals) if vals else one(F[0].den)
        raise TypeError(f"not a proposition: {p!r}")

    return go(p=prop, env=env)


def _ordered(alg, env):
    return alg.leq(env["x"], env["y"])


X, Y = Var("x"), Var("y")


def implicative_filter_formulas() -> dict[str, Proposition]:
    """The four defining formulas of an implication-based implicative filter."""
    return {
        "F18": ForAll("x", ForAll("y", Implies(And(Member(X), Member(Y)), Member(Apply("prod", X, Y))))),
        "F19": ForAll("x", ForAll("y", Implies(Member(X), Member(Y)), such_that=_ordered)),
        "F20": ForAll("x", ForAll("y", Implies(Member(Apply("sarrow", Apply("arrow", X, Y), X)), Member(X)))),
        "F21": ForAll("x", ForAll("y", Implies(Member(Apply("arrow", Apply("sarrow", X, Y), X)), Member(X)))),
    }


class BadThreshold(ValueError):
    pass


def is_tautology_filter(alg: FinitePseudoBL, F: IVFuzzySet, t: IntervalNumber,
                        op: ImplicationOperator) -> FilterVerdict:
    """Evaluate the defining formulas through :func:`truth_value` and compare with ``t``.

    Tags follow the tautology form: ``F18``-``F21`` for ``t = [1,1]`` under
    Lukasiewicz, ``F22``-``F25`` otherwise.
    """
    if t.hi_num == 0:
        raise BadThreshold("tautology threshold must exceed [0,0]")
    offset = 0 if (op is ImplicationOperator.LUKASIEWICZ and t == one(t.den)) else 4
    for i, (tag, formula) in enumerate(implicative_filter_formulas().items()):
        if not leq(t, truth_value(formula, F, algebra=alg, implication=op)):
            return FilterVerdict(False, f"F{18 + offset + i}", ())
    return HOLDS


def is_fuzzifying_implicative_filter(alg: FinitePseudoBL, F: IVFuzzySet) -> FilterVerdict:
    """Each defining formula is a Lukasiewicz tautology (truth value [1,1])."""
    return is_tautology_filter(alg, F, one(F[0].den), ImplicationOperator.LUKASIEWICZ)


def is_t_implication_based_implicative_filter(alg: FinitePseudoBL, F: IVFuzzySet, t: IntervalNumber,
                                               op: ImplicationOperator) -> FilterVerdict:
    """Closed-form conditions ``I(premise, conclusion) >= t`` over all element pairs."""
    if t.hi_num == 0 or not leq(t, one(t.den)):
        raise BadThreshold("threshold must satisfy [0,0] < t <= [1,1]")
    V, p, r, s = F.values, alg.prod, alg.arrow, alg.sarrow

    def ok(a, b):
        return leq(t, apply(op, a, b))

    conds = (
        ("F26", False, lambda x, y: ok(rmin(V[x], V[y]), V[p[x][y]])),
        ("F27", True, lambda x, y: ok(V[x], V[y])),
        ("F28", False, lambda x, y: ok(V[s[r[x][y]][x]], V[x])),
        ("F29", False, lambda x, y: ok(V[r[s[x][y]][x]], V[x])),
    )
    for tag, ordered, cond in conds:
        for x, y in itertools.product(alg.elements, repeat=2):
            if ordered and not alg.leq(x, y):
                continue
            if not cond(x, y):
                return FilterVerdict(False, tag, (x, y))
    return HOLDS


def lifting_swaps(alg: FinitePseudoBL, F: IVFuzzySet, op: ImplicationOperator) -> int:
    """How many implication evaluations in the closed-form conditions needed an endpoint swap."""
    V, p, r, s = F.values, alg.prod, alg.arrow, alg.sarrow
    count = 0
    for x, y in itertools.product(alg.elements, repeat=2):
        args = [(rmin(V[x], V[y]), V[p[x][y]]), (V[s[r[x][y]][x]], V[x]), (V[r[s[x][y]][x]], V[x])]
        if alg.leq(x, y):
            args.append((V[x], V[y]))
        count += sum(lift(op, a, b)[1] for a, b in args)
    return count


THRESHOLD_VARIANTS = {
    "gr": (ImplicationOperator.GAINES_RESCHER, "zero", "one"),
    "g": (ImplicationOperator.GODEL, "zero", "half"),
    "cg": (ImplicationOperator.CONTRAPOSITION_GODEL, "half", "one"),
}


def variant_thresholds(variant: str, den: int) -> tuple[ImplicationOperator, IntervalNumber, IntervalNumber]:
    z, h, o = unit_thresholds(den)
    named = {"zero": z, "half": h, "one": o}
    try:
        op, a, b = THRESHOLD_VARIANTS[variant]
    except KeyError:
        raise ValueError(f"unknown variant {variant!r}; expected gr, g or cg") from None
    return op, named[a], named[b]


def implication_threshold_agreement(alg: FinitePseudoBL, F: IVFuzzySet, variant: str) -> FilterVerdict:
    """Compare the 0.5-implication-based predicate with its threshold counterpart.

    ``gr`` pairs Gaines-Rescher with thresholds ([0,0],[1,1]), ``g`` pairs
    Goedel with ([0,0],[0.5,0.5]) and ``cg`` pairs contraposition-Goedel
    with ([0.5,0.5],[1,1]).  Holds when both sides give the same answer; a
    disagreement carries ``(implication_side, threshold_side)`` as witness.
    """
    den = F[0].den
    op, alpha, beta = variant_thresholds(variant, den)
    left = bool(is_t_implication_based_implicative_filter(alg, F, half(den), op))
    right = bool(is_threshold_implicative_filter(alg, F, alpha, beta))
    if left == right:
        return HOLDS
    return FilterVerdict(False, f"T-{variant}", (left, right))
