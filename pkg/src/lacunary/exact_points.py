"""Exact rational points of the unit interval and lacunary integer sequences.

The terms of the sequences handled here grow doubly exponentially (the
``theorem1`` family reaches ``3**1600`` at ``k = 40``), so fractional parts
``{n_k x}`` are only ever computed for rational ``x`` and, where possible,
without materialising ``n_k``: ``{n_k p/q} = ((n_k mod q) * p mod q) / q``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

__all__ = [
    "UnitRational",
    "Family",
    "SequenceSpec",
    "DEFAULT_DENOMINATOR",
    "LARGE_PRIME",
    "SIMULATION_PRIME",
    "parse_rational",
    "random_unit_rational",
    "term",
    "terms",
    "term_mod",
    "frac_part",
    "frac_residues",
    "frac_parts_float",
    "gap_ratio_lower_bound",
    "hadamard_factor",
]

DEFAULT_DENOMINATOR = 2**64
# 2 and 3 are primitive roots modulo both primes below, so theta**k mod p
# never degenerates for the geometric families used in simulations.
LARGE_PRIME = 2**64 - 59
SIMULATION_PRIME = 2147483587

MAX_EXPLICIT_TERMS = 10**6


class UnitRational(Fraction):
    """A reduced fraction ``num/den`` with ``0 <= num/den < 1``.

    Behaves exactly like :class:`fractions.Fraction`; arithmetic results are
    plain fractions and are not range-checked.
    """

    def __new__(cls, numerator=0, denominator=None):
        self = super().__new__(cls, numerator, denominator)
        if not 0 <= self < 1:
            raise ValueError(f"{self} is not in [0, 1)")
        return self

    @property
    def num(self) -> int:
        return self.numerator

    @property
    def den(self) -> int:
        return self.denominator

    def __repr__(self) -> str:
        return f"UnitRational({self.numerator}, {self.denominator})"


def parse_rational(text: str) -> Fraction:
    """Parse ``"P/Q"``, an integer, or a finite decimal string exactly."""
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    return Fraction(text)


def random_unit_rational(rng: np.random.Generator, den: int = DEFAULT_DENOMINATOR) -> UnitRational:
    """Uniform numerator in ``[0, den)`` over a fixed denominator."""
    if den < 1:
        raise ValueError("denominator must be positive")
    nbytes = (den.bit_length() + 7) // 8 + 1
    limit = 256**nbytes - (256**nbytes % den)
    while True:
        r = int.from_bytes(rng.bytes(nbytes), "little")
        if r < limit:
            return UnitRational(r % den, den)


class Family(str, enum.Enum):
    THEOREM1 = "theorem1"
    GEOMETRIC = "geometric"
    POWERS_MINUS_ONE = "powers-minus-one"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class SequenceSpec:
    """A strictly increasing sequence of positive integers ``n_1, n_2, ...``.

    Use the constructors :meth:`theorem1`, :meth:`geometric`,
    :meth:`powers_minus_one` and :meth:`explicit` rather than the raw fields.
    ``theorem1`` is ``3**(k*k)`` for odd ``k`` and ``3**((k-1)**2 + 1) - 1``
    for even ``k``.
    """

    family: Family
    base: int | None = None
    values: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.family in (Family.GEOMETRIC, Family.POWERS_MINUS_ONE):
            if self.base is None or self.base < 2:
                raise ValueError("base must be an integer >= 2")
        if self.family is Family.EXPLICIT:
            vals = self.values
            if not vals:
                raise ValueError("explicit sequence needs at least one term")
            if len(vals) > MAX_EXPLICIT_TERMS:
                raise ValueError(f"explicit sequences are capped at {MAX_EXPLICIT_TERMS} terms")
            if vals[0] < 1 or any(b <= a for a, b in zip(vals, vals[1:])):
                raise ValueError("explicit terms must be strictly increasing positive integers")

    @classmethod
    def theorem1(cls) -> SequenceSpec:
        return cls(Family.THEOREM1)

    @classmethod
    def geometric(cls, base: int) -> SequenceSpec:
        return cls(Family.GEOMETRIC, base=int(base))

    @classmethod
    def powers_minus_one(cls, base: int) -> SequenceSpec:
        return cls(Family.POWERS_MINUS_ONE, base=int(base))

    @classmethod
    def explicit(cls, values: Sequence[int]) -> SequenceSpec:
        return cls(Family.EXPLICIT, values=tuple(int(v) for v in values))

    @classmethod
    def from_name(cls, name: str, base: int | None = None, values=None) -> SequenceSpec:
        """Build from a CLI-style family name."""
        fam = Family(name.replace("_", "-").lower())
        if fam is Family.THEOREM1:
            return cls.theorem1()
        if fam is Family.GEOMETRIC:
            return cls.geometric(2 if base is None else base)
        if fam is Family.POWERS_MINUS_ONE:
            return cls.powers_minus_one(2 if base is None else base)
        return cls.explicit(values or ())

    @property
    def length(self) -> int | None:
        return len(self.values) if self.family is Family.EXPLICIT else None

    def __str__(self) -> str:
        if self.family is Family.EXPLICIT:
            return f"explicit[{len(self.values)}]"
        if self.base is None:
            return self.family.value
        return f"{self.family.value}({self.base})"


def _check_index(seq: SequenceSpec, k: int) -> None:
    if k < 1:
        raise ValueError(f"index k must be >= 1, got {k}")
    if seq.family is Family.EXPLICIT and k > len(seq.values):
        raise IndexError(f"k={k} exceeds explicit sequence length {len(seq.values)}")


def term(seq: SequenceSpec, k: int) -> int:
    """Return ``n_k`` exactly."""
    _check_index(seq, k)
    fam = seq.family
    if fam is Family.THEOREM1:
        if k % 2:
            return 3 ** (k * k)
        return 3 ** ((k - 1) ** 2 + 1) - 1
    if fam is Family.GEOMETRIC:
        return seq.base**k
    if fam is Family.POWERS_MINUS_ONE:
        return seq.base**k - 1
    return seq.values[k - 1]


def terms(seq: SequenceSpec, count: int) -> list[int]:
    """Return ``[n_1, ..., n_count]``."""
    if count < 0:
        raise ValueError("count must be non-negative")
    if count:
        _check_index(seq, count)
    fam = seq.family
    if fam is Family.EXPLICIT:
        return list(seq.values[:count])
    if fam in (Family.GEOMETRIC, Family.POWERS_MINUS_ONE):
        out = []
        p = 1
        shift = 1 if fam is Family.POWERS_MINUS_ONE else 0
        for _ in range(count):
            p *= seq.base
            out.append(p - shift)
        return out
    return [term(seq, k) for k in range(1, count + 1)]


def term_mod(seq: SequenceSpec, k: int, modulus: int) -> int:
    """Return ``n_k mod modulus`` without building ``n_k`` for power families."""
    _check_index(seq, k)
    if modulus < 1:
        raise ValueError("modulus must be positive")
    fam = seq.family
    if fam is Family.THEOREM1:
        if k % 2:
            return pow(3, k * k, modulus)
        return (3 * pow(3, (k - 1) ** 2, modulus) - 1) % modulus
    if fam is Family.GEOMETRIC:
        return pow(seq.base, k, modulus)
    if fam is Family.POWERS_MINUS_ONE:
        return (pow(seq.base, k, modulus) - 1) % modulus
    return seq.values[k - 1] % modulus


def frac_part(seq: SequenceSpec, k: int, x: Fraction) -> UnitRational:
    """Return ``{n_k x}`` exactly for rational ``x``.

    Examples
    --------
    >>> frac_part(SequenceSpec.geometric(3), 4, Fraction(5, 7))
    UnitRational(6, 7)
    """
    x = Fraction(x)
    p, q = x.numerator % x.denominator, x.denominator
    return UnitRational(term_mod(seq, k, q) * p % q, q)


def _power_residues(base: int, count: int, modulus: int) -> np.ndarray:
    # base**k mod modulus for k = 1..count; int64-safe since modulus < 2**31
    block = min(count, 4096)
    head = np.empty(block, dtype=np.int64)
    r = 1
    for i in range(block):
        r = r * base % modulus
        head[i] = r
    out = np.empty(count, dtype=np.int64)
    out[:block] = head
    step = pow(base, block, modulus)
    pos = block
    cur = head
    while pos < count:
        cur = cur * step % modulus
        n = min(block, count - pos)
        out[pos : pos + n] = cur[:n]
        pos += n
    return out


def frac_residues(seq: SequenceSpec, x: Fraction, count: int) -> Iterator[int]:
    """Yield ``n_k * num mod den`` for ``k = 1..count`` (so ``{n_k x} = r/den``)."""
    x = Fraction(x)
    p, q = x.numerator % x.denominator, x.denominator
    if count:
        _check_index(seq, count)
    fam = seq.family
    if fam in (Family.GEOMETRIC, Family.POWERS_MINUS_ONE):
        shift = 1 if fam is Family.POWERS_MINUS_ONE else 0
        r = 1
        for _ in range(count):
            r = r * seq.base % q
            yield (r - shift) * p % q
    else:
        for k in range(1, count + 1):
            yield term_mod(seq, k, q) * p % q


def frac_parts_float(seq: SequenceSpec, x: Fraction, count: int) -> np.ndarray:
    """``{n_k x}`` for ``k = 1..count`` as doubles, each rounded once from the exact value."""
    x = Fraction(x)
    p, q = x.numerator % x.denominator, x.denominator
    fam = seq.family
    if q < 2**31 and fam in (Family.GEOMETRIC, Family.POWERS_MINUS_ONE) and count:
        _check_index(seq, count)
        res = _power_residues(seq.base % q, count, q)
        if fam is Family.POWERS_MINUS_ONE:
            res = (res - 1) % q
        res = res * p % q
        return res.astype(np.float64) / q
    # int / int is correctly rounded
    return np.fromiter((r / q for r in frac_residues(seq, x, count)), dtype=np.float64, count=count)


def gap_ratio_lower_bound(seq: SequenceSpec, K: int) -> Fraction:
    """Return ``min_{1 <= k < K} n_{k+1}/n_k`` as an exact fraction."""
    if K < 2:
        raise ValueError("K must be >= 2")
    fam = seq.family
    if fam is Family.GEOMETRIC:
        _check_index(seq, K)
        return Fraction(seq.base)
    if fam is Family.POWERS_MINUS_ONE:
        # (b**(k+1) - 1)/(b**k - 1) = b + (b - 1)/(b**k - 1) decreases in k
        return Fraction(term(seq, K), term(seq, K - 1))
    ts = terms(seq, K)
    return min(Fraction(b, a) for a, b in zip(ts, ts[1:]))


def hadamard_factor(seq: SequenceSpec) -> Fraction:
    """Infimum of ``n_{k+1}/n_k`` over the whole sequence.

    ``theorem1`` ratios are ``8/3`` once, then alternately ``3 - 3**(-k*k)``
    and astronomically large; power families approach ``base`` from above.
    """
    fam = seq.family
    if fam is Family.THEOREM1:
        return Fraction(8, 3)
    if fam in (Family.GEOMETRIC, Family.POWERS_MINUS_ONE):
        return Fraction(seq.base)
    if len(seq.values) < 2:
        raise ValueError("need at least two terms")
    return gap_ratio_lower_bound(seq, len(seq.values))


def bits_of_terms(seq: SequenceSpec, count: int) -> int:
    """Approximate total bit length of ``n_1..n_count`` (cost guard helper)."""
    fam = seq.family
    if fam is Family.THEOREM1:
        return int(sum(k * k for k in range(1, count + 1)) * math.log2(3)) + count
    if fam in (Family.GEOMETRIC, Family.POWERS_MINUS_ONE):
        return int(count * (count + 1) / 2 * math.log2(seq.base)) + count
    return sum(v.bit_length() for v in seq.values[:count])
