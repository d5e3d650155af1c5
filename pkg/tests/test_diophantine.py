import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lacunary.diophantine import (
    MAX_N,
    GammaTable,
    count_solutions,
    estimate_gamma,
    estimate_gamma_table,
    gamma_table_theorem1,
    solution_pairs,
    symmetry_check,
)
from lacunary.exact_points import SequenceSpec, terms
from oracles import count_by_double_loop

T1 = SequenceSpec.theorem1()
G2 = SequenceSpec.geometric(2)
PM2 = SequenceSpec.powers_minus_one(2)


def test_count_examples():
    assert count_solutions(T1, 3, 1, 1, 10) == 5
    assert count_solutions(T1, 3, 1, 1, 20) == count_solutions(T1, 1, 3, -1, 20) == 10
    assert count_solutions(G2, 2, 1, 0, 15) == count_solutions(G2, 1, 2, 0, 15) == 14
    for n in (1, 7, 30):
        assert count_solutions(G2, 2, 1, 0, n) == n - 1
        assert count_solutions(T1, 1, 1, 0, n) == 0


def test_main_diagonal_count_is_half_n():
    for n in range(1, 41):
        assert count_solutions(T1, 3, 1, 1, n) == n // 2


@given(
    st.sampled_from([T1, G2, PM2, SequenceSpec.geometric(3)]),
    st.integers(1, 9),
    st.integers(1, 9),
    st.integers(-40, 40),
    st.integers(1, 14),
)
def test_count_matches_double_loop(seq, j1, j2, nu, n):
    assert count_solutions(seq, j1, j2, nu, n) == count_by_double_loop(terms(seq, n), j1, j2, nu)


@given(st.integers(1, 9), st.integers(1, 9), st.integers(-100, 100), st.integers(1, 25))
def test_symmetry_and_monotonicity(j1, j2, nu, n):
    assert symmetry_check(T1, j1, j2, nu, n)
    assert count_solutions(T1, j1, j2, nu, n) <= count_solutions(T1, j1, j2, nu, n + 1)


def test_solution_pairs_agree_with_counts():
    ts = terms(PM2, 60)
    pairs = solution_pairs(PM2, 3, 2, 60, 20, ts)
    for nu in range(-20, 21):
        assert sum(1 for *_, v in pairs if v == nu) == count_solutions(PM2, 3, 2, nu, 60)


def test_cost_guards():
    with pytest.raises(ValueError):
        count_solutions(G2, 2, 1, 0, MAX_N + 1)
    with pytest.raises(ValueError):
        count_solutions(T1, 3, 1, 1, 5000)


def test_gamma_table_theorem1():
    assert gamma_table_theorem1(2).entries == {}
    assert gamma_table_theorem1(3).entries == {(3, 1, 1): Fraction(1, 2), (1, 3, -1): Fraction(1, 2)}
    t = gamma_table_theorem1(9)
    assert len(t) == 6 and t.q == Fraction(8, 3)
    t.validate()


def test_gamma_table_validation():
    with pytest.raises(ValueError):
        GammaTable(3, {(3, 1, 1): Fraction(1, 2)})  # missing mirror
    with pytest.raises(ValueError):
        GammaTable.from_pairs(3, {(2, 2, 0): 1})
    with pytest.raises(ValueError):
        GammaTable.from_pairs(3, {(3, 1, 1): -1})
    with pytest.raises(ValueError):
        GammaTable.from_pairs(2, {(3, 1, 1): 1})


def test_gamma_table_json_round_trip():
    t = gamma_table_theorem1(30)
    doc = json.loads(t.to_json())
    assert {"j1": 3, "j2": 1, "nu": 1, "gamma": "1/2"} in doc["entries"]
    assert doc["d_max"] == 30
    back = GammaTable.from_json(t.to_json())
    assert back.entries == t.entries and back.q == t.q and back.kind == t.kind


def test_estimate_gamma_examples():
    rep = estimate_gamma(PM2, 2, 1, -1, [100, 1000, 10000])
    assert rep.counts == (99, 999, 9999) and rep.estimate == 1
    assert estimate_gamma(G2, 3, 1, 0, [10, 100]).estimate == 0
    rep = estimate_gamma(T1, 3, 1, 1, [10, 20, 40, 80])
    assert rep.estimate == Fraction(1, 2)
    assert all(d >= 0 for d in rep.deviations)


def test_estimated_table_for_powers_minus_one():
    t = estimate_gamma_table(PM2, 4, 2000)
    assert t.get(2, 1, -1) == 1 and t.get(1, 2, 1) == 1
    assert t.get(4, 1, -3) == 1  # 4(2^k - 1) - (2^(k+2) - 1) = -3
    assert all(j1 != j2 for j1, j2, _ in t.entries)
    t.validate()
