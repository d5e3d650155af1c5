import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lacunary.discrepancy import (
    Kind,
    PointSet,
    brute_force_discrepancy,
    extremal_discrepancy,
    interval_deviation,
    lil_normalize,
    star_discrepancy,
)
from oracles import discrepancy_by_scan

points = st.lists(st.integers(0, 40).map(lambda i: Fraction(i, 40)), min_size=1, max_size=25)

F = Fraction
MIDPOINTS = [F(2 * k - 1, 20) for k in range(1, 11)]


@pytest.mark.parametrize(
    "pts, star, extremal",
    [
        (MIDPOINTS, F(1, 20), F(1, 10)),
        ([F(0)], F(1), F(1)),
        ([F(0), F(1, 2)], F(1, 2), F(1, 2)),
        ([F(1, 4), F(3, 4)], F(1, 4), F(1, 2)),
        # the closed interval [1/3, 2/3] holds both points but has length 1/3
        ([F(1, 3), F(2, 3)], F(1, 3), F(2, 3)),
    ],
)
def test_small_point_sets(pts, star, extremal):
    ps = PointSet.exact(pts)
    assert star_discrepancy(ps).value == star
    assert extremal_discrepancy(ps).value == extremal
    assert brute_force_discrepancy(ps, "star").value == star
    assert brute_force_discrepancy(ps, "extremal").value == extremal
    assert discrepancy_by_scan(pts, "star") == star
    assert discrepancy_by_scan(pts, "extremal") == extremal


@given(points)
def test_sorted_formulas_match_scan_oracle(pts):
    ps = PointSet.exact(pts)
    assert star_discrepancy(ps).value == discrepancy_by_scan(pts, "star")
    assert extremal_discrepancy(ps).value == discrepancy_by_scan(pts, "extremal")


@given(points)
def test_inequality_chain_and_lower_bound(pts):
    ps = PointSet.exact(pts)
    s, d = star_discrepancy(ps).value, extremal_discrepancy(ps).value
    assert s <= d <= 2 * s
    assert s >= Fraction(1, 2 * len(pts))


@given(points)
def test_witness_reproduces_value(pts):
    ps = PointSet.exact(pts)
    for res in (star_discrepancy(ps), extremal_discrepancy(ps), brute_force_discrepancy(ps, Kind.EXTREMAL)):
        assert interval_deviation(ps, res.witness) == res.value


@given(points)
def test_float_mode_agrees(pts):
    exact = PointSet.exact(pts)
    fl = PointSet.floats([float(p) for p in pts])
    assert math.isclose(star_discrepancy(fl).value, float(star_discrepancy(exact).value), abs_tol=1e-12)
    assert math.isclose(extremal_discrepancy(fl).value, float(extremal_discrepancy(exact).value), abs_tol=1e-12)


def test_float_mode_large_n_matches_exact():
    rng = np.random.default_rng(1)
    nums = rng.integers(0, 10**6, size=5000)
    exact = PointSet.exact(Fraction(int(v), 10**6) for v in nums)
    fl = PointSet.floats(nums / 10**6)
    assert abs(star_discrepancy(fl).value - float(star_discrepancy(exact).value)) < 1e-12


def test_lil_normalize():
    # 30-digit mpmath evaluation: 0.286094787836480...
    assert math.isclose(lil_normalize(100, 0.05), 0.28609478783648, rel_tol=1e-13)
    assert lil_normalize(3, 0) == 0
    assert lil_normalize(16, 0.1) > 0
    with pytest.raises(ValueError):
        lil_normalize(2, 0.1)


def test_errors():
    with pytest.raises(ValueError):
        PointSet.exact([])
    with pytest.raises(ValueError):
        PointSet.exact([Fraction(3, 2)])
    with pytest.raises(ValueError):
        brute_force_discrepancy(PointSet.exact([Fraction(0)] * 1001))


def test_duplicates_and_endpoint_one():
    ps = PointSet.exact([Fraction(1, 2)] * 3 + [Fraction(1)])
    assert star_discrepancy(ps).value == brute_force_discrepancy(ps).value == discrepancy_by_scan(list(ps.points), "star")
