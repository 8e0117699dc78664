# %% [markdown]
# # Implication operators and implication-based filters
#
# Six scalar implications, lifted to intervals endpoint by endpoint.  The
# lifting can cross endpoints for operators antitone in the premise; that
# is reported instead of hidden.

# %%
from ivfuzzy.algebra import godel_chain
from ivfuzzy.fuzzy import IVFuzzySet
from ivfuzzy.implication import (
    ImplicationOperator,
    implication_threshold_agreement,
    is_fuzzifying_implicative_filter,
    is_t_implication_based_implicative_filter,
    lift,
)
from ivfuzzy.interval import IntervalNumber, half

a, b = IntervalNumber.of(0.3, 0.7), IntervalNumber.of(0.6)
for op in ImplicationOperator:
    value, swapped = lift(op, a, b)
    print(f"{op.name:22} {value}  swapped={swapped}")

# %% [markdown]
# Filters defined by truth values: each defining formula must evaluate to
# at least t.

# %%
g3 = godel_chain(3)
F = IVFuzzySet.indicator({1, 2}, 3, IntervalNumber.of(0.7, 0.8), IntervalNumber.of(0.3, 0.4))
print("fuzzifying implicative:", bool(is_fuzzifying_implicative_filter(g3, F)))
for op in ImplicationOperator:
    print(op.value, is_t_implication_based_implicative_filter(g3, F, half(), op).describe())

# %% [markdown]
# Gaines-Rescher, Goedel and contraposition-Goedel at t=[0.5,0.5] line up
# with threshold filters for ([0,0],[1,1]), ([0,0],[0.5,0.5]) and
# ([0.5,0.5],[1,1]).

# %%
for variant in ("gr", "g", "cg"):
    print(variant, implication_threshold_agreement(g3, F, variant).describe())
