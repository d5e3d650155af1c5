"""1-periodic functions of bounded variation: trigonometric polynomials and step functions.

Both kinds expose the same duck-typed surface used by the sigma engine and
the Koksma checkers:

``fourier(j)``
    ``(a_j, b_j)`` float arrays for ``f ~ sum a_j cos 2 pi j x + b_j sin 2 pi j x``.
``coefficient_bound(j)``
    a rigorous bound on ``max(|a_j|, |b_j|)``.
``variation``, ``mean``, ``l2_norm_sq``
    total variation over one period, integral over ``[0, 1]`` and the
    squared L2 norm of ``f - mean``.
``symmetric``
    whether ``f(1/2 - y) == f(1/2 + y)``, decided exactly.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

import numpy as np

__all__ = ["TrigPoly", "StepFunction", "BVFunction", "unit_phase"]


def unit_phase(j: np.ndarray, t) -> np.ndarray:
    """``{j t}`` as floats, reduced exactly first when ``t`` is a fraction.

    Keeps ``cos(2 pi j t)`` accurate for large ``j``.
    """
    j = np.asarray(j, dtype=np.int64)
    if isinstance(t, Fraction):
        num, den = t.numerator % t.denominator, t.denominator
        jmax = int(j.max()) if j.size else 0
        if den < 2**62 and num * max(jmax, 1) < 2**62:
            return ((j * num) % den).astype(np.float64) / den
        return np.array([(int(v) * num % den) / den for v in j.ravel()]).reshape(j.shape)
    return np.mod(j * float(t), 1.0)


@dataclass(frozen=True)
class TrigPoly:
    """Finite ``sum_j a_j cos 2 pi j x + b_j sin 2 pi j x`` (no constant term).

    Examples
    --------
    >>> f = TrigPoly.from_cos({1: 1, 2: 1})   # cos 2 pi x + cos 4 pi x
    >>> f.l2_norm_sq
    Fraction(1, 1)
    """

    coeffs: tuple[tuple[int, Fraction, Fraction], ...]

    def __post_init__(self):
        seen = set()
        for j, _, _ in self.coeffs:
            if j < 1 or j in seen:
                raise ValueError("frequencies must be distinct positive integers")
            seen.add(j)

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, tuple]) -> TrigPoly:
        items = tuple(
            (int(j), _num(a), _num(b)) for j, (a, b) in sorted(coeffs.items()) if a != 0 or b != 0
        )
        return cls(items)

    @classmethod
    def from_cos(cls, coeffs: Mapping[int, object]) -> TrigPoly:
        return cls.from_dict({j: (a, 0) for j, a in coeffs.items()})

    @property
    def degree(self) -> int:
        return max((j for j, _, _ in self.coeffs), default=0)

    @property
    def mean(self) -> Fraction:
        return Fraction(0)

    @property
    def l2_norm_sq(self):
        return sum(((a * a + b * b) / 2 for _, a, b in self.coeffs), Fraction(0))

    @property
    def symmetric(self) -> bool:
        # f(1/2+y) - f(1/2-y) = 2 sum (-1)^j b_j sin 2 pi j y
        return all(b == 0 for _, _, b in self.coeffs)

    @property
    def variation(self):
        """Total variation over one period; exact for a single cosine/sine term."""
        if len(self.coeffs) == 1:
            j, a, b = self.coeffs[0]
            amp_sq = Fraction(a) ** 2 + Fraction(b) ** 2 if _is_rational(a, b) else a * a + b * b
            if isinstance(amp_sq, Fraction):
                r = _fraction_sqrt(amp_sq)
                if r is not None:
                    return 4 * j * r
            return 4 * j * math.sqrt(float(amp_sq))
        if not self.coeffs:
            return Fraction(0)
        return _trig_variation(self)

    def fourier(self, j) -> tuple[np.ndarray, np.ndarray]:
        j = np.asarray(j, dtype=np.int64)
        a = np.zeros(j.shape)
        b = np.zeros(j.shape)
        for jj, aj, bj in self.coeffs:
            mask = j == jj
            a[mask] = float(aj)
            b[mask] = float(bj)
        return a, b

    def coefficient_bound(self, j) -> np.ndarray:
        a, b = self.fourier(j)
        return np.maximum(np.abs(a), np.abs(b))

    def __call__(self, x) -> float:
        return float(self.evaluate(np.array([float(x)]))[0]) if np.ndim(x) == 0 else self.evaluate(x)

    def evaluate(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        out = np.zeros_like(x)
        for j, a, b in self.coeffs:
            ph = 2 * np.pi * np.mod(j * x, 1.0)
            out += float(a) * np.cos(ph) + float(b) * np.sin(ph)
        return out


def _num(v):
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    return float(v)


def _is_rational(*vals) -> bool:
    return all(isinstance(v, (int, Fraction)) for v in vals)


def _fraction_sqrt(q: Fraction) -> Fraction | None:
    n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def _trig_variation(f: TrigPoly) -> float:
    # critical points: roots of f'(x) as a polynomial in z = exp(2 pi i x) on |z| = 1
    deg = f.degree
    c = np.zeros(2 * deg + 1, dtype=complex)  # coefficient of z^(k+deg)
    for j, a, b in f.coeffs:
        # f' = sum 2 pi j (-a sin + b cos)(2 pi j x); sin = (z^j - z^-j)/2i, cos = (z^j + z^-j)/2
        cj = 2 * np.pi * j * (float(b) / 2 - float(a) / 2j)
        c[deg + j] += cj
        c[deg - j] += np.conj(cj)
    roots = np.roots(c[::-1])
    on_circle = roots[np.abs(np.abs(roots) - 1) < 1e-7]
    xs = np.sort(np.mod(np.angle(on_circle) / (2 * np.pi), 1.0))
    if xs.size < 2:
        grid = np.linspace(0, 1, 20001)
        return float(np.sum(np.abs(np.diff(f.evaluate(grid)))))
    vals = f.evaluate(np.append(xs, xs[0] + 1))
    return float(np.sum(np.abs(np.diff(vals))))


@dataclass(frozen=True)
class StepFunction:
    """Periodic step function on the circle ``[0, 1)``.

    ``breakpoints`` are sorted, distinct and in ``[0, 1)``; ``values[i]`` is
    the value on the open arc ``(t_i, t_{i+1})`` (the last arc wraps through
    1) and ``point_values[i]`` is the value at ``t_i`` itself. All data are
    fractions, so evaluation, integrals and variation are exact.
    """

    breakpoints: tuple[Fraction, ...]
    values: tuple[Fraction, ...]
    point_values: tuple[Fraction, ...]
    constant: Fraction = Fraction(0)

    def __post_init__(self):
        m = len(self.breakpoints)
        if len(self.values) != m or len(self.point_values) != m:
            raise ValueError("breakpoints, values and point_values must have equal length")
        if any(not 0 <= t < 1 for t in self.breakpoints):
            raise ValueError("breakpoints must lie in [0, 1)")
        if any(b <= a for a, b in zip(self.breakpoints, self.breakpoints[1:])):
            raise ValueError("breakpoints must be strictly increasing")

    @classmethod
    def from_pieces(cls, breakpoints: Sequence, values: Sequence, point_values: Sequence | None = None) -> StepFunction:
        """Right-continuous by default (``point_values == values``)."""
        bp = [Fraction(t) for t in breakpoints]
        vals = [Fraction(v) for v in values]
        pv = vals if point_values is None else [Fraction(v) for v in point_values]
        order = sorted(range(len(bp)), key=bp.__getitem__)
        return cls(tuple(bp[i] for i in order), tuple(vals[i] for i in order), tuple(pv[i] for i in order))

    @classmethod
    def indicator(cls, a, b) -> StepFunction:
        """Periodised indicator of the closed interval ``[a, b]``, ``0 <= b - a < 1``."""
        a, b = Fraction(a), Fraction(b)
        length = b - a
        if not 0 <= length < 1:
            raise ValueError("need 0 <= b - a < 1")
        lo, hi = a % 1, b % 1
        if length == 0:
            return cls((lo,), (Fraction(0),), (Fraction(1),))
        if lo < hi:
            return cls((lo, hi), (Fraction(1), Fraction(0)), (Fraction(1), Fraction(1)))
        return cls((hi, lo), (Fraction(0), Fraction(1)), (Fraction(1), Fraction(1)))

    @classmethod
    def centered_indicator(cls, a, b) -> StepFunction:
        """``1_[a,b] - (b - a)`` extended with period 1."""
        return cls.indicator(a, b).centered()

    def centered(self) -> StepFunction:
        m = self.mean
        return StepFunction(
            self.breakpoints,
            tuple(v - m for v in self.values),
            tuple(v - m for v in self.point_values),
            self.constant - m if not self.breakpoints else Fraction(0),
        )

    def _arcs(self):
        bp = self.breakpoints
        ends = bp[1:] + (bp[0] + 1,)
        return zip(bp, ends, self.values)

    @property
    def mean(self) -> Fraction:
        if not self.breakpoints:
            return self.constant
        return sum(((e - s) * v for s, e, v in self._arcs()), Fraction(0))

    @property
    def l2_norm_sq(self) -> Fraction:
        if not self.breakpoints:
            return Fraction(0)
        sq = sum(((e - s) * v * v for s, e, v in self._arcs()), Fraction(0))
        return sq - self.mean**2

    @property
    def variation(self) -> Fraction:
        total = Fraction(0)
        m = len(self.breakpoints)
        for i in range(m):
            p = self.point_values[i]
            total += abs(p - self.values[i - 1]) + abs(self.values[i] - p)
        return total

    def __call__(self, x) -> Fraction:
        if not self.breakpoints:
            return self.constant
        x = Fraction(x) % 1
        bp = self.breakpoints
        i = bisect.bisect_left(bp, x)
        if i < len(bp) and bp[i] == x:
            return self.point_values[i]
        return self.values[i - 1]  # i == 0 wraps to the last arc

    def evaluate(self, x) -> np.ndarray:
        """Float evaluation; breakpoints themselves use ``point_values``."""
        x = np.mod(np.asarray(x, dtype=np.float64), 1.0)
        if not self.breakpoints:
            return np.full(x.shape, float(self.constant))
        bp = np.array([float(t) for t in self.breakpoints])
        vals = np.array([float(v) for v in self.values])
        pv = np.array([float(v) for v in self.point_values])
        i = np.searchsorted(bp, x, side="left")
        out = vals[i - 1]
        hit = (i < bp.size) & (bp[np.minimum(i, bp.size - 1)] == x)
        out[hit] = pv[i[hit]]
        return out

    def fourier(self, j) -> tuple[np.ndarray, np.ndarray]:
        j = np.asarray(j, dtype=np.int64)
        a = np.zeros(j.shape)
        b = np.zeros(j.shape)
        for s, e, v in self._arcs():
            if v == 0:
                continue
            ps, pe = 2 * np.pi * unit_phase(j, s), 2 * np.pi * unit_phase(j, e % 1)
            a += float(v) * (np.sin(pe) - np.sin(ps))
            b += float(v) * (np.cos(ps) - np.cos(pe))
        return a / (np.pi * j), b / (np.pi * j)

    def coefficient_bound(self, j) -> np.ndarray:
        # |a_j|, |b_j| <= Var f / (pi j)
        return float(self.variation) / (np.pi * np.asarray(j, dtype=np.float64))

    @property
    def symmetric(self) -> bool:
        """Exact test of ``f(x) == f(1 - x)`` on every piece."""
        if not self.breakpoints:
            return True
        pts = sorted(set(self.breakpoints) | {(1 - t) % 1 for t in self.breakpoints} | {Fraction(0), Fraction(1, 2)})
        probes = list(pts)
        probes += [(s + e) / 2 for s, e in zip(pts, pts[1:] + [pts[0] + 1])]
        return all(self(p) == self(1 - p) for p in probes)

    @property
    def degree(self) -> float:
        return math.inf


BVFunction = Union[TrigPoly, StepFunction]
