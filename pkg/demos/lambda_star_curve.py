# %% [markdown]
# # How large can the LIL constant get for n_k = 3^k - 1?
#
# For this sequence the limiting variance of the interval counts has a
# closed form, so the constant Λ*(x) in
#
#     limsup N D*_N(x) / sqrt(2 N log log N) = Λ*(x)   for almost every x,
#
# with D*_N(x) the star discrepancy of {n_1 x}, ..., {n_N x}, can be computed exactly at every rational x. We compare that formula
# with a brute-force maximisation over a ∈ [0, 1] and look at the shape
# of the curve.

# %%
from fractions import Fraction

import numpy as np

from lacunary.sigma_engine import (
    THEOREM1,
    lambda_star_numeric,
    lambda_star_sq_theorem1_exact,
    lambda_star_theorem1_closed,
    sigma_sq_closed_form_theorem1,
)

# %% [markdown]
# A few exact values. The curve reaches 1/2 at x = 7/24 and sqrt(2)/3 at
# x = 1/2; these are the two easiest to eyeball.

# %%
for x in [Fraction(0), Fraction(7, 24), Fraction(1, 3), Fraction(1, 2)]:
    lam = lambda_star_theorem1_closed(x)
    print(f"x = {str(x):>5}   Λ* = sqrt({lam.radicand}) ≈ {float(lam):.6f}")

# %% [markdown]
# The exact routine also reports where the supremum over a is attained.

# %%
value, a_best, _ = lambda_star_sq_theorem1_exact(Fraction(7, 24))
print("Λ*² =", value, "attained at a =", a_best)
print("σ²(a_best) =", sigma_sq_closed_form_theorem1(a_best, Fraction(7, 24)))

# %% [markdown]
# Now the whole curve on a 1/96 grid. The numeric column maximises the
# variance directly over a and never looks at the branch formula.

# %%
grid = [Fraction(i, 96) for i in range(97)]
closed = np.array([float(lambda_star_theorem1_closed(x)) for x in grid])
numeric = np.array([lambda_star_numeric(THEOREM1, x)[0] for x in grid])
print("max |closed - numeric| =", np.abs(closed - numeric).max())
print("min over x:", closed.min(), " max over x:", closed.max())

# %% [markdown]
# A text plot is enough to see the symmetry about x = 1/2. The constant
# falls from sqrt(1/3) at the ends to sqrt(2/9) in the middle, and it stays
# equal to sqrt(2/9) on all of [3/8, 5/8].

# %%
for x, v in zip(grid[::4], closed[::4]):
    print(f"{float(x):5.3f} {'#' * int(round(v * 80))}")
