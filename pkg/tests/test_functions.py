import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lacunary.functions import StepFunction, TrigPoly
from lacunary.lil_lab import random_step_function, random_symmetric_step_function

F = Fraction
fracs = st.integers(0, 59).map(lambda i: Fraction(i, 60))


def _quad(fn, m=200_000):
    t = (np.arange(m) + 0.5) / m
    return t, fn(t)


def test_indicator_basics():
    f = StepFunction.centered_indicator(0, F(1, 2))
    assert f.mean == 0 and f.variation == 2 and f.l2_norm_sq == F(1, 4)
    assert f(F(1, 4)) == F(1, 2) and f(F(3, 4)) == F(-1, 2) and f(F(1, 2)) == F(1, 2)
    assert f.symmetric is False
    assert StepFunction.centered_indicator(F(1, 4), F(3, 4)).symmetric


@given(fracs, fracs)
def test_indicator_invariants(a, length):
    f = StepFunction.centered_indicator(a, a + length)
    assert f.mean == 0
    assert f.l2_norm_sq == length * (1 - length)
    assert f.variation == 2  # a degenerate interval is a point spike of height 1


@given(st.integers(0, 10**6))
def test_step_function_fourier_by_quadrature(seed):
    f = random_step_function(np.random.default_rng(seed), 8)
    t, v = _quad(f.evaluate)
    js = np.arange(1, 6)
    a, b = f.fourier(js)
    for j, aj, bj in zip(js, a, b):
        assert math.isclose(aj, 2 * np.mean(v * np.cos(2 * np.pi * j * t)), abs_tol=2e-3)
        assert math.isclose(bj, 2 * np.mean(v * np.sin(2 * np.pi * j * t)), abs_tol=2e-3)
    assert math.isclose(float(f.mean), float(np.mean(v)), abs_tol=1e-3)
    assert np.all(np.abs(a) <= f.coefficient_bound(js) + 1e-12)


def test_indicator_fourier_half_interval():
    f = StepFunction.centered_indicator(0, F(1, 2))
    a, b = f.fourier(np.arange(1, 9))
    assert np.allclose(a, 0, atol=1e-15)
    assert np.allclose(b, [2 / (np.pi * j) if j % 2 else 0 for j in range(1, 9)], atol=1e-15)


def test_trig_poly_properties():
    c = TrigPoly.from_cos({1: 1})
    assert c.variation == 4 and c.l2_norm_sq == F(1, 2) and c.symmetric
    assert c.mean == 0
    s = TrigPoly.from_dict({1: (0, 1)})
    assert not s.symmetric  # sin 2 pi x is odd about 1/2
    assert TrigPoly.from_cos({1: 1, 2: 1}).symmetric


@given(st.dictionaries(st.integers(1, 4), st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1))
def test_trig_variation_by_sampling(coeffs):
    coeffs = {j: ab for j, ab in coeffs.items() if ab != (0, 0)}
    if not coeffs:
        return
    f = TrigPoly.from_dict(coeffs)
    t = np.linspace(0, 1, 400_001)
    sampled = float(np.sum(np.abs(np.diff(f.evaluate(t)))))
    assert math.isclose(float(f.variation), sampled, rel_tol=1e-6, abs_tol=1e-9)


@given(st.integers(0, 10**6))
def test_symmetric_generator(seed):
    f = random_symmetric_step_function(np.random.default_rng(seed))
    assert f.symmetric
    for i in range(50):
        y = F(i, 97)
        assert f(F(1, 2) - y) == f(F(1, 2) + y)


@given(st.integers(0, 10**6))
def test_variation_by_exact_probing(seed):
    f = random_step_function(np.random.default_rng(seed), 6)
    pts = sorted(set(f.breakpoints))
    probes = []
    for s, e in zip(pts, pts[1:] + [pts[0] + 1]):
        probes += [s, (s + e) / 2]
    probes.append(pts[0] + 1)
    vals = [f(p) for p in probes]
    assert f.variation == sum(abs(b - a) for a, b in zip(vals, vals[1:]))


def test_step_function_validation():
    with pytest.raises(ValueError):
        StepFunction((F(1, 2), F(1, 4)), (F(0), F(1)), (F(0), F(1)))
    with pytest.raises(ValueError):
        StepFunction.indicator(0, 1)
