import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lacunary.discrepancy import PointSet, extremal_discrepancy, star_discrepancy
from lacunary.exact_points import SequenceSpec
from lacunary.functions import StepFunction, TrigPoly
from lacunary.lil_lab import (
    MAX_TRAJECTORY_N,
    StatKind,
    arc_autocorrelation,
    default_ladder,
    fold_chain_check,
    fold_points,
    koksma_check,
    random_point_set,
    random_step_function,
    random_symmetric_step_function,
    simulate,
    symmetric_koksma_check,
    theorem4_cross_term,
    theorem4_exact,
    theorem4_monte_carlo,
    theorem4_pointwise,
    theorem4_pointwise_failure_demo,
    trajectory,
)
from oracles import theorem4_by_grid

F = Fraction
distinct_ints = st.lists(st.integers(1, 64), min_size=1, max_size=8, unique=True)
zs = st.integers(1, 23).map(lambda i: Fraction(i, 24))


def test_theorem4_examples():
    assert theorem4_exact([1], F(1, 2)) == F(1, 4)
    assert theorem4_exact([1, 2], F(1, 3)) == F(4, 9)
    assert theorem4_exact([3, 5, 7], F(2, 5)) == F(18, 25)


@given(distinct_ints, zs)
def test_theorem4_identity(ns, z):
    assert theorem4_exact(ns, z) == z * (1 - z) * len(ns)


@given(st.integers(1, 64), st.integers(1, 64), zs)
def test_cross_terms_vanish(m, n, z):
    if m != n:
        assert theorem4_cross_term(m, n, z) == 0


def test_arc_autocorrelation_shape():
    z = F(3, 4)
    assert arc_autocorrelation(F(0), z) == z
    assert arc_autocorrelation(F(1, 2), z) == F(1, 2)
    assert arc_autocorrelation(F(1, 2), F(1, 4)) == 0


@pytest.mark.parametrize("ns, z", [([3, 5, 7], 0.4), ([1, 2], 1 / 3), ([2, 9, 11, 12], 0.75)])
def test_theorem4_against_grid_and_sobol(ns, z):
    exact = float(theorem4_exact(ns, F(z).limit_denominator(100)))
    assert abs(theorem4_by_grid(ns, z) - exact) < 2e-3
    assert abs(theorem4_monte_carlo(ns, F(z).limit_denominator(100), 18, seed=5) - exact) < 3e-3


def test_pointwise_values():
    # the half-length indicator has odd harmonics only, so {1, 2} never interact
    assert theorem4_pointwise_failure_demo([1, 2], F(1, 2), 0) == (F(1, 2), F(1, 2))
    value, target = theorem4_pointwise_failure_demo([1, 2], F(1, 3), 0)
    assert value == F(5, 9) and target == F(4, 9)
    for a in (F(0), F(1, 5), F(2, 3)):
        assert theorem4_pointwise([1], F(2, 7), a) == F(2, 7) * F(5, 7)


def test_pointwise_average_approaches_identity():
    m = 360
    avg = sum(theorem4_pointwise([1, 2], F(1, 3), F(i, m)) for i in range(m)) / m
    assert abs(avg - F(4, 9)) < F(1, 1000)


def test_theorem4_errors():
    for ns, z in [([1, 1], F(1, 2)), ([1], F(0)), ([1], F(1)), (list(range(1, 10)), F(1, 2)), ([65], F(1, 2))]:
        with pytest.raises(ValueError):
            theorem4_exact(ns, z)


def test_koksma_examples():
    f = StepFunction.centered_indicator(0, F(1, 2))
    assert koksma_check(f, PointSet.exact([F(1, 4)])) == (F(1, 2), F(3, 2), True)
    c = TrigPoly.from_cos({1: 1})
    lhs, rhs, ok = symmetric_koksma_check(c, PointSet.exact([F(1, 4), F(3, 4)]))
    assert lhs < 1e-15 and ok
    mids = PointSet.exact(F(2 * k - 1, 2000) for k in range(1, 1001))
    lhs, rhs, ok = koksma_check(f, mids)
    assert ok and rhs == F(1, 1000)
    with pytest.raises(ValueError):
        symmetric_koksma_check(TrigPoly.from_dict({1: (0, 1)}), mids)


@given(st.integers(0, 2**32))
def test_koksma_random_exact(seed):
    rng = np.random.Generator(np.random.Philox(seed))
    ps = random_point_set(rng, 60)
    assert koksma_check(random_step_function(rng), ps)[2]
    g = random_symmetric_step_function(rng)
    assert symmetric_koksma_check(g, ps)[2]
    chain = fold_chain_check(g, ps)
    assert chain.first_holds and chain.second_holds


@given(st.integers(0, 2**32))
def test_fold_property(seed):
    ps = random_point_set(np.random.Generator(np.random.Philox(seed)), 50)
    folded = fold_points(ps)
    assert all(0 <= p <= F(1, 2) for p in folded.points)
    doubled = PointSet.exact(2 * p for p in folded.points)
    assert star_discrepancy(doubled).value <= extremal_discrepancy(ps).value


def test_fold_examples():
    assert fold_points(PointSet.exact([F(7, 10)])).points == (F(3, 10),)
    assert fold_points(PointSet.exact([F(1, 2)])).points == (F(1, 2),)
    assert fold_points(PointSet.floats([0.7])).points.tolist() == [1 - 0.7]


def test_trajectory_at_zero_has_full_discrepancy():
    rec = trajectory(SequenceSpec.theorem1(), F(0), n_max=128)
    assert all(c[1] == 1.0 for c in rec.checkpoints)


def test_erdos_fortet_point_has_vanishing_sum():
    f = TrigPoly.from_cos({1: 1, 2: 1})
    rec = trajectory(SequenceSpec.powers_minus_one(2), F(1, 2), StatKind.FUNCTION_SUM, 4096, f=f)
    assert all(abs(c[2]) < 1e-12 for c in rec.checkpoints)


def test_trajectory_invariants_and_reproducibility():
    a = simulate(SequenceSpec.geometric(3), 4, seed=11, n_max=5000, workers=1)
    b = simulate(SequenceSpec.geometric(3), 4, seed=11, n_max=5000, workers=3)
    assert a == b
    for rec in a:
        ns = [c[0] for c in rec.checkpoints]
        runs = [c[3] for c in rec.checkpoints]
        assert ns == default_ladder(5000)
        assert all(y >= x for x, y in zip(runs, runs[1:]))
        assert rec.seed == 11
    assert len({r.x for r in a}) == 4


def test_trajectory_checkpoint_values_match_direct_computation():
    x = F(123456, 2147483587)
    rec = trajectory(SequenceSpec.geometric(2), x, StatKind.EXTREMAL_DISC, 300, ladder=[20, 300])
    from lacunary.exact_points import frac_part

    pts = PointSet.exact(frac_part(SequenceSpec.geometric(2), k, x) for k in range(1, 301))
    d = float(extremal_discrepancy(pts).value)
    assert math.isclose(rec.checkpoints[-1][1], d, rel_tol=1e-12)
    assert math.isclose(rec.checkpoints[-1][2], 300 * d / math.sqrt(600 * math.log(math.log(300))))


def test_trajectory_guards():
    with pytest.raises(MemoryError):
        trajectory(SequenceSpec.geometric(2), F(1, 3), n_max=MAX_TRAJECTORY_N + 1)
    with pytest.raises(ValueError):
        trajectory(SequenceSpec.geometric(2), F(1, 3), StatKind.FUNCTION_SUM, 100)
