# %% [markdown]
# # Watching the LIL-normalised discrepancy
#
# For n_k = 2^k the limsup of N D*_N / sqrt(2 N log log N) is a constant
# depending only on the sequence (Fukuyama). At desk-scale N the
# trajectories are still far from their limsup, so this is an
# illustration of finite-N behaviour rather than a measurement of the
# constant.

# %%
import numpy as np

from lacunary.exact_points import SequenceSpec
from lacunary.lil_lab import simulate
from lacunary.sigma_engine import fukuyama_reference

# %%
recs = simulate(SequenceSpec.geometric(2), samples=16, seed=3, kind="star", n_max=2**16)
runmax = np.array([r.final_running_max for r in recs])
print("running maxima:", np.round(runmax, 3))
print("median", np.median(runmax), " limiting constant", fukuyama_reference(2))

# %% [markdown]
# One trajectory in detail: N, raw discrepancy, normalised value and its
# running maximum at each checkpoint.

# %%
for n, raw, norm, rm in recs[0].checkpoints[::3]:
    print(f"{n:>7} {raw:.5f} {norm:.4f} {rm:.4f}")

# %% [markdown]
# Runs are reproducible from the seed, whatever the thread count.

# %%
again = simulate(SequenceSpec.geometric(2), samples=16, seed=3, kind="star", n_max=2**16, workers=1)
print(all(a.checkpoints == b.checkpoints for a, b in zip(recs, again)))
