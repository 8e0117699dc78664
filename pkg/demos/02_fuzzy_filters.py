# %% [markdown]
# # Interval-valued fuzzy filters
#
# A fuzzy set assigns an interval number to each element of the algebra.
# Every value is either strictly below [0.5,0.5] or at least [0.5,0.5]
# (the dichotomy the enumeration respects).

# %%
from ivfuzzy.algebra import enumerate_filters, godel_chain
from ivfuzzy.filters import (
    is_iv_evq_fuzzy_filter,
    is_iv_evq_fuzzy_filter_pointwise,
    is_iv_evq_implicative_filter,
    is_iv_fuzzy_filter,
    satisfies_F7_F8,
)
from ivfuzzy.fuzzy import IVFuzzySet, critical_thresholds, level_sets
from ivfuzzy.interval import IntervalNumber, half, zero

g3 = godel_chain(3)
hi, lo = IntervalNumber.of(0.7, 0.8), IntervalNumber.of(0.3, 0.4)

# %% [markdown]
# The set that is [0.7,0.8] on a crisp filter and [0.3,0.4] elsewhere passes
# both the point-based conditions and their closed forms, for each filter.

# %%
for I in enumerate_filters(g3):
    F = IVFuzzySet.indicator(I, 3, hi, lo)
    print(F, bool(is_iv_evq_fuzzy_filter_pointwise(g3, F)), bool(is_iv_evq_fuzzy_filter(g3, F)),
          bool(satisfies_F7_F8(g3, F)), bool(is_iv_fuzzy_filter(g3, F)))

# %% [markdown]
# Verdicts carry the violated condition and a witness.

# %%
F = IVFuzzySet.indicator({2}, 3, hi, lo)
print(is_iv_evq_implicative_filter(g3, F).describe())

# %% [markdown]
# ## Level sets at finitely many thresholds
#
# Level sets only change at a finite set of thresholds.  Under the partial
# order, meets of incomparable values are needed as well.

# %%
print(critical_thresholds(F, (zero(), half())))
G = IVFuzzySet.of([(0.5, 0.9), (0.6, 0.6), (0, 0)])
for t, s in level_sets(G, (zero(), IntervalNumber.of(1))):
    print(t, sorted(s))

# %% [markdown]
# ## Where the point-based and closed forms disagree
#
# With the componentwise order, "t <= F(x)" and "t + F(y) > 1" can both
# miss for a threshold that is incomparable to F(y).  This set satisfies
# the closed form but not the point-based one:

# %%
H = IVFuzzySet.of([(0, 0), (0.5, 0.7), (0.5, 0.5)])
print(is_iv_evq_fuzzy_filter(g3, H).describe())
print(is_iv_evq_fuzzy_filter_pointwise(g3, H).describe())
