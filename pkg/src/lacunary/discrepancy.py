"""Star and extremal discrepancy of finite point sets in [0, 1].

Intervals are closed, so a point sitting on an endpoint counts. Suprema that
are only approached as a one-sided limit (e.g. ``a - #{x <= a}/N`` just below
a point) are reported with a half-open witness interval; recounting the
witness with its own open/closed flags reproduces the value exactly.

Exact mode works on fractions (internally on integer numerators over a
common denominator); float mode uses numpy and is meant for long
trajectories.
"""

from __future__ import annotations

import bisect
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Mode",
    "Kind",
    "PointSet",
    "Witness",
    "DiscrepancyResult",
    "star_discrepancy",
    "extremal_discrepancy",
    "brute_force_discrepancy",
    "lil_normalize",
    "interval_deviation",
]

BRUTE_FORCE_MAX_N = 1000


class Mode(str, enum.Enum):
    EXACT = "exact"
    FLOAT = "float"


class Kind(str, enum.Enum):
    STAR = "star"
    EXTREMAL = "extremal"


@dataclass(frozen=True)
class PointSet:
    """Points ``x_1..x_N`` in ``[0, 1]``.

    ``points`` is a tuple of fractions in exact mode and a read-only float64
    array in float mode.
    """

    points: tuple | np.ndarray
    mode: Mode = Mode.EXACT

    def __post_init__(self):
        if len(self.points) == 0:
            raise ValueError("point set is empty")

    @classmethod
    def exact(cls, points: Iterable) -> PointSet:
        pts = tuple(Fraction(p) for p in points)
        if pts and (min(pts) < 0 or max(pts) > 1):
            raise ValueError("points must lie in [0, 1]")
        return cls(pts, Mode.EXACT)

    @classmethod
    def floats(cls, points: Iterable[float]) -> PointSet:
        arr = np.array(points, dtype=np.float64)
        if arr.size and (arr.min() < 0 or arr.max() > 1 or not np.all(np.isfinite(arr))):
            raise ValueError("points must lie in [0, 1]")
        arr.setflags(write=False)
        return cls(arr, Mode.FLOAT)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class Witness:
    """Interval with endpoint types; ``closed_*`` False means open at that end."""

    a: Fraction | float
    b: Fraction | float
    closed_left: bool = True
    closed_right: bool = True

    def contains(self, x) -> bool:
        left = x >= self.a if self.closed_left else x > self.a
        right = x <= self.b if self.closed_right else x < self.b
        return left and right


@dataclass(frozen=True)
class DiscrepancyResult:
    value: Fraction | float
    kind: Kind
    witness: Witness

    def __float__(self) -> float:
        return float(self.value)


def interval_deviation(ps: PointSet, w: Witness):
    """``|#{x_k in w}/N - length(w)|`` recomputed directly from the points."""
    n = len(ps)
    count = sum(1 for p in ps.points if w.contains(p))
    if ps.mode is Mode.EXACT:
        return abs(Fraction(count, n) - (w.b - w.a))
    return abs(count / n - (w.b - w.a))


def _common_denominator(points: Sequence[Fraction]) -> tuple[list[int], int]:
    den = 1
    for p in points:
        den = den * p.denominator // math.gcd(den, p.denominator)
    return [p.numerator * (den // p.denominator) for p in points], den


def _sorted_extremes(ps: PointSet):
    """Largest upper gap ``k/N - x_(k)`` and lower gap ``x_(k) - (k-1)/N``.

    Ties resolve naturally: the upper gap is largest at the last copy of a
    repeated value and the lower gap at the first copy.
    """
    n = len(ps)
    if ps.mode is Mode.EXACT:
        nums, den = _common_denominator(ps.points)
        order = sorted(range(n), key=nums.__getitem__)
        best_up, k_up = None, 0
        best_lo, k_lo = None, 0
        for k, idx in enumerate(order, start=1):
            xn = nums[idx] * n  # scaled by n*den
            up = k * den - xn
            lo = xn - (k - 1) * den
            if best_up is None or up > best_up:
                best_up, k_up = up, k
            if best_lo is None or lo > best_lo:
                best_lo, k_lo = lo, k
        scale = n * den
        pts = [Fraction(nums[i], den) for i in order]
        return Fraction(best_up, scale), pts[k_up - 1], Fraction(best_lo, scale), pts[k_lo - 1]
    x = np.sort(np.asarray(ps.points), kind="stable")
    k = np.arange(1, n + 1)
    up = k / n - x
    lo = x - (k - 1) / n
    i_up = int(np.argmax(up))
    i_lo = int(np.argmax(lo))
    return float(up[i_up]), float(x[i_up]), float(lo[i_lo]), float(x[i_lo])


def star_discrepancy(ps: PointSet) -> DiscrepancyResult:
    """``D_N^* = sup_a |#{x_k <= a}/N - a|`` via the sorted-points formula.

    Examples
    --------
    >>> star_discrepancy(PointSet.exact([0, Fraction(1, 2)])).value
    Fraction(1, 2)
    """
    up, x_up, lo, x_lo = _sorted_extremes(ps)
    zero = Fraction(0) if ps.mode is Mode.EXACT else 0.0
    if up >= lo:
        return DiscrepancyResult(up, Kind.STAR, Witness(zero, x_up))
    return DiscrepancyResult(lo, Kind.STAR, Witness(zero, x_lo, closed_right=False))


def extremal_discrepancy(ps: PointSet) -> DiscrepancyResult:
    """``D_N = sup_{a <= b} |#{x_k in [a, b]}/N - (b - a)|``.

    Equals ``max_k(k/N - x_(k)) + max_k(x_(k) - (k-1)/N)``. With ``u`` the
    point attaining the first maximum and ``l`` the one attaining the second,
    the witness is ``[l, u]`` when ``l <= u`` (too many points), otherwise the
    open gap ``(u, l)`` (too few points).
    """
    up, x_up, lo, x_lo = _sorted_extremes(ps)
    value = up + lo
    if x_lo <= x_up:
        w = Witness(x_lo, x_up)
    else:
        w = Witness(x_up, x_lo, closed_left=False, closed_right=False)
    return DiscrepancyResult(value, Kind.EXTREMAL, w)


def brute_force_discrepancy(ps: PointSet, kind: Kind | str = Kind.STAR) -> DiscrepancyResult:
    """Oracle: scan every candidate interval built from ``{0, 1, x_1..x_N}``.

    Each candidate endpoint is tried both closed and open, which covers the
    one-sided limits at points. Cost is ``O(N^2 log N)``; guarded at
    ``N <= 1000``.
    """
    kind = Kind(kind)
    n = len(ps)
    if n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force limited to N <= {BRUTE_FORCE_MAX_N}")
    exact = ps.mode is Mode.EXACT
    pts = sorted(ps.points)
    zero, one = (Fraction(0), Fraction(1)) if exact else (0.0, 1.0)
    cands = sorted(set(pts) | {zero, one})

    def count(a, b, cl, cr):
        lo = bisect.bisect_left(pts, a) if cl else bisect.bisect_right(pts, a)
        hi = bisect.bisect_right(pts, b) if cr else bisect.bisect_left(pts, b)
        return max(hi - lo, 0)

    def dev(c, length):
        return abs(Fraction(c, n) - length) if exact else abs(c / n - length)

    best = None
    if kind is Kind.STAR:
        for b in cands:
            for cr in (True, False):
                if not cr and b == zero:
                    continue
                d = dev(count(zero, b, True, cr), b)
                if best is None or d > best[0]:
                    best = (d, Witness(zero, b, True, cr))
    else:
        for i, a in enumerate(cands):
            for b in cands[i:]:
                for cl in (True, False):
                    for cr in (True, False):
                        if a == b and not (cl and cr):
                            continue
                        d = dev(count(a, b, cl, cr), b - a)
                        if best is None or d > best[0]:
                            best = (d, Witness(a, b, cl, cr))
    return DiscrepancyResult(best[0], kind, best[1])


def lil_normalize(n: int, d) -> float:
    """``N d / sqrt(2 N log log N)``; needs ``N >= 3`` so that ``log log N > 0``."""
    if n < 3:
        raise ValueError("LIL normalisation needs N >= 3")
    return n * float(d) / math.sqrt(2 * n * math.log(math.log(n)))
