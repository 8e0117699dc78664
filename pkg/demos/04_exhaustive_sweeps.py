# %% [markdown]
# # Exhaustive sweeps
#
# A sweep enumerates every dichotomous fuzzy set with endpoints on a small
# grid (11 intervals for {0,0.3,0.5,0.7,1}) on each algebra, and checks a
# characterization for each one.  A clean sweep is only evidence at that
# scale.

# %%
from ivfuzzy.harness import SweepConfig, search_problem_4, verify_theorem

cfg = SweepConfig(algebras=("godel:3", "lukasiewicz:3"))
for tid in ("T3.2", "T3.7", "T3.8", "T4.3", "L4.9", "T4.10", "T5.4ii"):
    print(verify_theorem(cfg, tid).to_text())

# %% [markdown]
# Counterexamples come back with the least witness in enumeration order.

# %%
print(verify_theorem(cfg, "T3.5").to_text())
narrow = SweepConfig(algebras=("godel:3",), threshold_pairs=(("0.3", "0.7"),))
print(verify_theorem(narrow, "T3.10").to_text())

# %% [markdown]
# The open question about MV + G filters needs distinct residua, which the
# generated chains never have.

# %%
print(search_problem_4(cfg).to_text())

# %% [markdown]
# Reports are deterministic, whatever the number of worker processes.

# %%
a = verify_theorem(cfg, "P3.6").to_json()
b = verify_theorem(SweepConfig(algebras=cfg.algebras, parallelism=4), "P3.6").to_json()
print(a == b, a)
