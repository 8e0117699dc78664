# %% [markdown]
# # Interval numbers and finite pseudo BL-algebras
#
# Interval numbers are closed subintervals of [0,1] stored exactly (integer
# numerators over a shared denominator).  The order is componentwise, so
# two intervals can be incomparable.

# %%
from ivfuzzy.interval import IntervalNumber, add, complement, exceeds_one, leq, rmax, rmin

a = IntervalNumber.of(0.2, 0.6)
b = IntervalNumber.of(0.4, 0.5)
print("rmin", rmin(a, b), " rmax", rmax(a, b))
print("comparable?", leq(a, b) or leq(b, a))
print("complement", complement(IntervalNumber.of(0.3, 0.4)))

# %% [markdown]
# Sums live in [0,2].  "Exceeds one" reads the interval order literally:
# [1,1] <= sum and sum != [1,1].

# %%
s = add(IntervalNumber.of(0.7, 0.8), IntervalNumber.of(0.3, 0.4))
print(s, exceeds_one(s), exceeds_one(s, strict_both=True))

# %% [markdown]
# ## Algebras as Cayley tables
#
# Goedel and Lukasiewicz chains are built in; every table is checked
# exhaustively against the axioms.

# %%
from ivfuzzy import algebra as A

g3, l3 = A.godel_chain(3), A.lukasiewicz_chain(3)
for alg in (g3, l3):
    print(alg.descriptor, "valid:", bool(A.validate(alg)),
          "derived laws:", bool(A.check_derived_properties(alg)))

print(A.dumps(l3))

# %% [markdown]
# Corrupting a single table entry is caught, with the first failing law and
# its smallest witness.

# %%
broken = g3.with_entry("prod", 1, 1, 2)
print(A.validate(broken).failures)

# %% [markdown]
# ## Crisp filters
#
# Filters are found by brute force over subsets containing the top element.

# %%
for alg in (g3, l3):
    for s in A.enumerate_filters(alg):
        tags = [t for t, f in (("implicative", A.is_implicative_filter), ("MV", A.is_mv_filter),
                               ("G", A.is_g_filter)) if f(alg, s)]
        print(alg.descriptor, "{" + ",".join(alg.name(x) for x in sorted(s)) + "}", tags)
