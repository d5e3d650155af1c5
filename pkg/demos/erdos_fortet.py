# %% [markdown]
# # When the limiting variance depends on x
#
# The sequence n_k = 2^k - 1 is the classical counterexample of Erdős
# and Fortet. The sum of f(n_k x) with f(t) = cos 2πt + cos 4πt has a
# limiting variance that varies with x, because 2 n_k + 1 = n_{k+1}.
# The equation j1 n_k - j2 n_l = nu has a solution density we can
# estimate by counting, and the variance series does the rest.

# %%
import math
from fractions import Fraction

from lacunary.diophantine import GammaTable, count_solutions, estimate_gamma_table
from lacunary.exact_points import SequenceSpec
from lacunary.functions import TrigPoly
from lacunary.sigma_engine import sigma_sq_series

seq = SequenceSpec.powers_minus_one(2)

# %% [markdown]
# Counting solutions of 2 n_k - n_l = -1 up to N terms: the count grows
# linearly, one solution per k, so the density is 1.

# %%
for n in (10, 100, 1000, 10_000):
    print(n, count_solutions(seq, 2, 1, -1, n))

# %%
table = estimate_gamma_table(seq, 2, 10**4)
print({k: str(v) for k, v in table.entries.items()})

# %% [markdown]
# The predicted standard deviation is sqrt(2) |cos πx|.

# %%
f = TrigPoly.from_cos({1: 1, 2: 1})
for i in range(0, 100, 11):
    x = Fraction(i, 99)
    got = sigma_sq_series(f, table, x).sigma
    print(f"x = {float(x):.3f}  σ = {got:.6f}  predicted {math.sqrt(2) * abs(math.cos(math.pi * i / 99)):.6f}")

# %% [markdown]
# Flip the sign of the second harmonic with a table in which
# 2 n_k - n_l = 0 has density 1, and the sum telescopes. The variance
# then vanishes identically.

# %%
tele = GammaTable.from_pairs(2, {(2, 1, 0): 1})
g = TrigPoly.from_cos({1: 1, 2: -1})
print(max(sigma_sq_series(g, tele, Fraction(i, 99)).sigma for i in range(100)))
