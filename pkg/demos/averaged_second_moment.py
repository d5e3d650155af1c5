# %% [markdown]
# # Averaging over the interval position
#
# For a single arc [a, a+z) of length z, the second moment of
#
#     sum_k ( 1{ n_k x ∈ [a, a+z) } - z )
#
# over x depends on how the n_k interact. Averaged over a as well, every
# cross term disappears and the answer is exactly N z (1 - z), for any
# distinct integers. Here both facts are checked with exact arithmetic.

# %%
from fractions import Fraction
from itertools import combinations

from lacunary.lil_lab import (
    theorem4_cross_term,
    theorem4_exact,
    theorem4_monte_carlo,
    theorem4_pointwise,
)

# %%
z = Fraction(1, 3)
print("averaged:", theorem4_exact([1, 2], z), "expected", 2 * z * (1 - z))
print("a single cross term:", theorem4_cross_term(1, 2, z))

# %% [markdown]
# Without the average over a the answer can differ. For {1, 2} and z = 1/3
# the arc starting at 0 gives 5/9 rather than 4/9.

# %%
for a in [Fraction(0), Fraction(1, 6), Fraction(1, 2)]:
    print(f"a = {a}: {theorem4_pointwise([1, 2], z, a)}")

# %% [markdown]
# A sweep over all subsets of {1..8} of size up to 3 and several z.

# %%
bad = 0
for n in range(1, 4):
    for subset in combinations(range(1, 9), n):
        for zz in (Fraction(1, 5), Fraction(1, 2), Fraction(3, 4)):
            bad += theorem4_exact(subset, zz) != n * zz * (1 - zz)
print("mismatches:", bad)

# %% [markdown]
# And a scrambled Sobol estimate of the double integral, as a sanity check
# that does not share any code with the exact route.

# %%
print(theorem4_monte_carlo([3, 5, 7], Fraction(2, 5), log2_samples=18), 3 * Fraction(2, 5) * Fraction(3, 5))
