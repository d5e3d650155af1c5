from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lacunary.exact_points import (
    LARGE_PRIME,
    SIMULATION_PRIME,
    Family,
    SequenceSpec,
    UnitRational,
    frac_part,
    frac_parts_float,
    frac_residues,
    gap_ratio_lower_bound,
    hadamard_factor,
    parse_rational,
    random_unit_rational,
    term,
    term_mod,
    terms,
)
from oracles import frac_by_full_product

T1 = SequenceSpec.theorem1()
FAMILIES = [T1, SequenceSpec.geometric(2), SequenceSpec.geometric(3), SequenceSpec.powers_minus_one(2)]


@pytest.mark.parametrize(
    "seq, k, expected",
    [(T1, 1, 3), (T1, 2, 8), (T1, 4, 59048), (SequenceSpec.geometric(2), 5, 32), (T1, 3, 3**9)],
)
def test_term_values(seq, k, expected):
    assert term(seq, k) == expected


def test_theorem1_term_matches_defining_formula():
    for k in range(1, 41):
        want = 3 ** (k * k) if k % 2 else 3 ** ((k - 1) ** 2 + 1) - 1
        assert term(T1, k) == want


@pytest.mark.parametrize("seq", FAMILIES, ids=str)
def test_first_forty_terms_strictly_increasing(seq):
    ts = terms(seq, 40)
    assert all(b > a for a, b in zip(ts, ts[1:]))
    assert ts == [term(seq, k) for k in range(1, 41)]


def test_theorem1_gap_ratios_at_least_eight_thirds():
    ts = terms(T1, 41)
    assert min(Fraction(b, a) for a, b in zip(ts, ts[1:])) == Fraction(8, 3)


@pytest.mark.parametrize(
    "seq, k, x, expected",
    [
        (T1, 2, Fraction(1, 3), Fraction(2, 3)),
        (SequenceSpec.geometric(3), 4, Fraction(5, 7), Fraction(6, 7)),
        (T1, 4, Fraction(1, 7), Fraction(3, 7)),
        (T1, 7, Fraction(0), Fraction(0)),
    ],
)
def test_frac_part_examples(seq, k, x, expected):
    v = frac_part(seq, k, x)
    assert v == expected and isinstance(v, UnitRational)


@given(
    st.sampled_from(FAMILIES),
    st.integers(1, 12),
    st.integers(1, 2**64).flatmap(lambda q: st.tuples(st.integers(0, q - 1), st.just(q))),
)
def test_frac_part_modular_equals_full_product(seq, k, pq):
    x = Fraction(*pq)
    v = frac_part(seq, k, x)
    assert v == frac_by_full_product(term(seq, k), x)
    assert 0 <= v < 1 and v.den == Fraction(v).denominator


def test_frac_part_on_random_64_bit_denominators():
    rng = np.random.Generator(np.random.Philox(7))
    for _ in range(100):
        x = random_unit_rational(rng)
        for seq in FAMILIES:
            for k in (1, 5, 12):
                assert frac_part(seq, k, x) == frac_by_full_product(term(seq, k), x)


@given(st.sampled_from(FAMILIES), st.integers(1, 60), st.integers(2, 10**12))
def test_term_mod(seq, k, m):
    assert term_mod(seq, k, m) == term(seq, k) % m


@pytest.mark.parametrize("seq", FAMILIES, ids=str)
@pytest.mark.parametrize("den", [7, SIMULATION_PRIME, LARGE_PRIME, 2**64])
def test_float_points_round_exact_values_once(seq, den):
    x = Fraction(den // 3 + 1, den)
    got = frac_parts_float(seq, x, 300)
    want = [float(Fraction(r, x.denominator)) for r in frac_residues(seq, x, 300)]
    assert got.tolist() == want


def test_gap_ratio_lower_bound():
    assert gap_ratio_lower_bound(T1, 10) == Fraction(8, 3)
    assert gap_ratio_lower_bound(SequenceSpec.geometric(2), 100) == 2
    # the ratio (2^(k+1)-1)/(2^k-1) decreases, so the minimum sits at the last pair
    got = gap_ratio_lower_bound(SequenceSpec.powers_minus_one(2), 50)
    assert got == Fraction(2**50 - 1, 2**49 - 1)
    ts = terms(SequenceSpec.powers_minus_one(2), 50)
    assert got == min(Fraction(b, a) for a, b in zip(ts, ts[1:]))


def test_hadamard_factor():
    assert hadamard_factor(T1) == Fraction(8, 3)
    assert hadamard_factor(SequenceSpec.explicit([1, 3, 7, 20])) == Fraction(7, 3)


def test_primes_have_two_and_three_as_primitive_roots():
    from sympy import isprime, n_order

    for p in (SIMULATION_PRIME, LARGE_PRIME):
        assert isprime(p)
        assert n_order(2, p) == p - 1 and n_order(3, p) == p - 1


def test_unit_rational_validation():
    assert UnitRational(6, 14) == Fraction(3, 7)
    assert UnitRational(6, 14).num == 3
    with pytest.raises(ValueError):
        UnitRational(1)
    with pytest.raises(ValueError):
        UnitRational(-1, 3)


def test_random_unit_rational_is_reproducible():
    a = [random_unit_rational(np.random.Generator(np.random.Philox(3))) for _ in range(2)]
    assert a[0] == a[1] and a[0].den <= 2**64


def test_sequence_validation():
    with pytest.raises(ValueError):
        SequenceSpec.geometric(1)
    with pytest.raises(ValueError):
        SequenceSpec.explicit([3, 3])
    with pytest.raises(IndexError):
        term(SequenceSpec.explicit([1, 2]), 3)
    with pytest.raises(ValueError):
        term(T1, 0)
    assert SequenceSpec.from_name("powers_minus_one", 3).family is Family.POWERS_MINUS_ONE


def test_parse_rational():
    assert parse_rational(" 3/9 ") == Fraction(1, 3)
    assert parse_rational("0.25") == Fraction(1, 4)
    with pytest.raises(ValueError):
        parse_rational("")
