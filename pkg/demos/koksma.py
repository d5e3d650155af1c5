# %% [markdown]
# # Koksma's inequality, and the factor 1/2 for even functions
#
# |mean of f over the points - ∫f| ≤ Var(f) · D*. For f symmetric about
# 1/2 this improves to (Var(f)/2) · D, with D the extremal discrepancy.
# Folding the points with t -> min(t, 1 - t) explains why.

# %%
from fractions import Fraction

import numpy as np

from lacunary.discrepancy import PointSet, extremal_discrepancy, star_discrepancy
from lacunary.functions import StepFunction
from lacunary.lil_lab import (
    fold_chain_check,
    koksma_check,
    random_point_set,
    random_symmetric_step_function,
    symmetric_koksma_check,
)

# %%
ps = PointSet.exact([Fraction(1, 3), Fraction(2, 3)])
print("star", star_discrepancy(ps).value, " extremal", extremal_discrepancy(ps).value)

# %% [markdown]
# The indicator of the middle third is symmetric with variation 2.

# %%
f = StepFunction.centered_indicator(Fraction(1, 3), Fraction(2, 3))
print(koksma_check(f, ps))
print(symmetric_koksma_check(f, ps))

# %% [markdown]
# Random symmetric step functions against random point sets, all exact.

# %%
rng = np.random.Generator(np.random.Philox(1))
worst = Fraction(0)
for _ in range(300):
    pts = random_point_set(rng, 50)
    g = random_symmetric_step_function(rng, 10)
    chain = fold_chain_check(g, pts)
    assert chain.holds
    if chain.rhs:
        worst = max(worst, chain.lhs / chain.rhs)
print("largest lhs/rhs ratio seen:", worst, float(worst))
