"""Trajectories of LIL-normalised statistics, the averaged variance identity, and Koksma checks.

The averaged identity: for distinct positive integers ``n_1..n_N`` and
``0 < z < 1``, averaging ``(sum_k I_[a,a+z](n_k x))^2`` over both ``x`` and the
start ``a`` gives exactly ``z (1 - z) N``, with ``I`` the centred, periodised
indicator. Every cross term reduces to the arc autocorrelation
``K_z(t) = (z - d)^+ + (z - (1 - d))^+``, ``d = min(t, 1 - t)``, whose mean over a
period is ``z^2``.
"""

from __future__ import annotations

import bisect
import enum
import functools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np
from scipy.stats import qmc

from .discrepancy import Mode, PointSet, extremal_discrepancy, lil_normalize, star_discrepancy
from .exact_points import SIMULATION_PRIME, SequenceSpec, frac_parts_float, random_unit_rational
from .functions import BVFunction, StepFunction

__all__ = [
    "StatKind",
    "TrajectoryRecord",
    "MAX_TRAJECTORY_N",
    "default_ladder",
    "trajectory",
    "simulate",
    "arc_autocorrelation",
    "theorem4_cross_term",
    "theorem4_exact",
    "theorem4_pointwise",
    "theorem4_pointwise_failure_demo",
    "theorem4_monte_carlo",
    "koksma_check",
    "symmetric_koksma_check",
    "fold_points",
    "fold_chain_check",
    "random_step_function",
    "random_symmetric_step_function",
    "random_point_set",
    "worker_count",
]

MAX_TRAJECTORY_N = 10**7
THEOREM4_MAX_N = 8
THEOREM4_MAX_TERM = 64


class StatKind(str, enum.Enum):
    STAR_DISC = "star"
    EXTREMAL_DISC = "extremal"
    FUNCTION_SUM = "function-sum"


@dataclass(frozen=True)
class TrajectoryRecord:
    """Checkpoints ``(N, raw, normalised, running max of normalised)`` for one ``x``.

    ``raw`` is ``D_N`` (or ``D_N^*``) for discrepancy kinds and the plain sum
    ``sum_{k<=N} f(n_k x)`` for function sums. ``seed`` and ``stream`` identify
    the random stream that drew ``x`` (``None`` when ``x`` was given).
    """

    x: Fraction
    kind: StatKind
    checkpoints: tuple[tuple[int, float, float, float], ...]
    seed: int | None = None
    stream: int | None = None
    f: BVFunction | None = field(default=None, compare=False)

    def __post_init__(self):
        ns = [c[0] for c in self.checkpoints]
        if any(b <= a for a, b in zip(ns, ns[1:])):
            raise ValueError("checkpoints must be strictly increasing in N")
        rm = [c[3] for c in self.checkpoints]
        if any(b < a for a, b in zip(rm, rm[1:])):
            raise ValueError("running max must be non-decreasing")

    @property
    def final_running_max(self) -> float:
        return self.checkpoints[-1][3]


def default_ladder(n_max: int, start: int = 16) -> list[int]:
    """Powers of two from ``start`` up to ``n_max``, with ``n_max`` appended if missing."""
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    out = []
    n = max(start, 4)
    while n <= n_max:
        out.append(n)
        n *= 2
    if not out or out[-1] != n_max:
        out.append(n_max)
    return out


def trajectory(
    seq: SequenceSpec,
    x,
    kind: StatKind | str = StatKind.STAR_DISC,
    n_max: int = 2**20,
    ladder: Sequence[int] | None = None,
    f: BVFunction | None = None,
    seed: int | None = None,
    stream: int | None = None,
) -> TrajectoryRecord:
    """Follow the LIL-normalised statistic of ``{n_k x}`` along a checkpoint ladder.

    Points are exact residues rounded once to doubles; the discrepancy is
    recomputed from scratch at each checkpoint.

    Examples
    --------
    >>> rec = trajectory(SequenceSpec.geometric(2), Fraction(0), n_max=64)
    >>> {c[1] for c in rec.checkpoints}
    {1.0}
    """
    kind = StatKind(kind)
    n_max = int(n_max)
    if n_max > MAX_TRAJECTORY_N:
        raise MemoryError(f"n_max={n_max} exceeds the memory guard {MAX_TRAJECTORY_N}")
    if kind is StatKind.FUNCTION_SUM and f is None:
        raise ValueError("function-sum trajectories need f")
    ladder = default_ladder(n_max) if ladder is None else sorted(set(int(n) for n in ladder))
    if ladder[0] < 3 or ladder[-1] > n_max:
        raise ValueError("ladder must lie in [3, n_max]")
    x = Fraction(x)
    pts = frac_parts_float(seq, x, ladder[-1])
    if kind is StatKind.FUNCTION_SUM:
        sums = np.cumsum(f.evaluate(pts))
    rows = []
    run = -math.inf
    for n in ladder:
        if kind is StatKind.FUNCTION_SUM:
            raw = float(sums[n - 1])
            norm = raw / math.sqrt(2 * n * math.log(math.log(n)))
        else:
            ps = PointSet(pts[:n], Mode.FLOAT)
            d = star_discrepancy(ps) if kind is StatKind.STAR_DISC else extremal_discrepancy(ps)
            raw = float(d.value)
            norm = lil_normalize(n, raw)
        run = max(run, norm)
        rows.append((n, raw, norm, run))
    return TrajectoryRecord(x, kind, tuple(rows), seed, stream, f)


def worker_count() -> int:
    """Thread count from ``LACUNARY_THREADS`` (default: number of CPUs)."""
    env = os.environ.get("LACUNARY_THREADS")
    if env:
        n = int(env)
        if n < 1:
            raise ValueError("LACUNARY_THREADS must be >= 1")
        return n
    return os.cpu_count() or 1


def simulate(
    seq: SequenceSpec,
    samples: int,
    seed: int,
    kind: StatKind | str = StatKind.STAR_DISC,
    n_max: int = 2**20,
    ladder: Sequence[int] | None = None,
    f: BVFunction | None = None,
    den: int = SIMULATION_PRIME,
    workers: int | None = None,
) -> list[TrajectoryRecord]:
    """Trajectories for ``samples`` random ``x = p/den``, one independent Philox stream each.

    Results come back in stream order whatever the number of workers, so a
    run is reproducible from ``seed`` alone.
    """
    children = np.random.SeedSequence(seed).spawn(samples)
    xs = [random_unit_rational(np.random.Generator(np.random.Philox(c)), den) for c in children]

    def run(i):
        return trajectory(seq, xs[i], kind, n_max, ladder, f, seed, i)

    workers = worker_count() if workers is None else workers
    if workers == 1:
        return [run(i) for i in range(samples)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, range(samples)))


# ---------------------------------------------------------------------------
# Averaged variance identity


def _check_theorem4_args(n_list: Sequence[int], z) -> tuple[list[int], Fraction]:
    ns = [int(n) for n in n_list]
    z = Fraction(z)
    if not 0 < z < 1:
        raise ValueError("z must lie in (0, 1)")
    if not ns:
        raise ValueError("need at least one integer")
    if len(set(ns)) != len(ns):
        raise ValueError("integers must be distinct")
    if any(n < 1 for n in ns):
        raise ValueError("integers must be positive")
    if len(ns) > THEOREM4_MAX_N or max(ns) > THEOREM4_MAX_TERM:
        raise ValueError(f"cost guard: N <= {THEOREM4_MAX_N} and n_k <= {THEOREM4_MAX_TERM}")
    return ns, z


def arc_autocorrelation(t, z):
    """Overlap length of the arcs ``[0, z]`` and ``[t, t + z]`` on the circle."""
    t = t % 1
    d = min(t, 1 - t)
    return max(z - d, 0) + max(z - (1 - d), 0)


def _piecewise_linear_integral(fn, knots: Iterable[Fraction]) -> Fraction:
    ks = sorted(set(knots))
    return sum(((b - a) * (fn(a) + fn(b)) / 2 for a, b in zip(ks, ks[1:])), Fraction(0))


def theorem4_cross_term(m: int, n: int, z) -> Fraction:
    """``int_0^1 [K_z({(m - n) x}) - z^2] dx`` for ``m != n``, exactly (always 0)."""
    if m == n:
        raise ValueError("cross terms need m != n")
    return _cross_term(abs(m - n), Fraction(z))


@functools.lru_cache(maxsize=4096)
def _cross_term(c: int, z: Fraction) -> Fraction:
    # K_z is linear in t between 0, z, 1/2, 1 - z, 1 (and their images)
    shape = {Fraction(0), z, Fraction(1, 2), 1 - z, Fraction(1)}
    knots = {(i + t) / c for i in range(c) for t in shape}
    return _piecewise_linear_integral(lambda x: arc_autocorrelation(c * x, z), knots) - z * z


def theorem4_exact(n_list: Sequence[int], z) -> Fraction:
    """``int int (sum_k I_[a,a+z](n_k x))^2 dx da`` as an exact rational.

    >>> theorem4_exact([1, 2], Fraction(1, 3))
    Fraction(4, 9)
    """
    ns, z = _check_theorem4_args(n_list, z)
    total = len(ns) * z * (1 - z)
    for m, n in combinations(ns, 2):
        total += 2 * theorem4_cross_term(m, n, z)
    return total


def _on_arc(t: Fraction, a: Fraction, z: Fraction) -> bool:
    return (t - a) % 1 <= z


def theorem4_pointwise(n_list: Sequence[int], z, a) -> Fraction:
    """``int_0^1 (sum_k I_[a,a+z](n_k x))^2 dx`` for one fixed ``a``, exactly.

    The integrand is constant between the breakpoints ``(i + a)/n_k`` and
    ``(i + a + z)/n_k``, so it is evaluated at cell midpoints.
    """
    ns, z = _check_theorem4_args(n_list, z)
    a = Fraction(a) % 1
    knots = {Fraction(0), Fraction(1)}
    for n in ns:
        for s in (a, (a + z) % 1):
            knots.update((i + s) / n for i in range(n))
    ks = sorted(knots)
    total = Fraction(0)
    for lo, hi in zip(ks, ks[1:]):
        mid = (lo + hi) / 2
        v = sum((1 if _on_arc(n * mid % 1, a, z) else 0) - z for n in ns)
        total += (hi - lo) * v * v
    return total


def theorem4_pointwise_failure_demo(n_list: Sequence[int], z, a) -> tuple[Fraction, Fraction]:
    """Return ``(pointwise value at a, z (1 - z) N)``; they differ for suitable ``a``."""
    ns, z = _check_theorem4_args(n_list, z)
    return theorem4_pointwise(ns, z, a), len(ns) * z * (1 - z)


def theorem4_monte_carlo(n_list: Sequence[int], z, log2_samples: int = 20, seed: int = 0) -> float:
    """Scrambled-Sobol estimate of the double integral over ``(x, a)``; an independent oracle."""
    ns = np.array([int(n) for n in n_list], dtype=np.float64)
    zf = float(z)
    u = qmc.Sobol(d=2, scramble=True, seed=np.random.Generator(np.random.Philox(seed))).random_base2(log2_samples)
    x, a = u[:, :1], u[:, 1:]
    inside = np.mod(np.mod(ns * x, 1.0) - a, 1.0) <= zf
    s = (inside - zf).sum(axis=1)
    return float(np.mean(s * s))


# ---------------------------------------------------------------------------
# Koksma inequalities


def _empirical_mean(f: BVFunction, ps: PointSet):
    if ps.mode is Mode.EXACT and isinstance(f, StepFunction):
        return sum((f(p) for p in ps.points), Fraction(0)) / len(ps)
    if isinstance(f, StepFunction):
        return float(np.mean(f.evaluate(np.asarray(ps.points, dtype=np.float64))))
    return float(np.mean(f.evaluate(np.array([float(p) for p in ps.points]))))


def _exact_pair(f: BVFunction, ps: PointSet) -> bool:
    return isinstance(f, StepFunction) and ps.mode is Mode.EXACT


def koksma_check(f: BVFunction, ps: PointSet):
    """``(|int f - mean f(x_k)|, Var f * D_N^*, holds)``; exact for step functions on exact points.

    >>> f = StepFunction.centered_indicator(0, Fraction(1, 2))
    >>> koksma_check(f, PointSet.exact([Fraction(1, 4)]))
    (Fraction(1, 2), Fraction(3, 2), True)
    """
    lhs = abs(f.mean - _empirical_mean(f, ps))
    rhs = f.variation * star_discrepancy(ps).value
    if not _exact_pair(f, ps):
        lhs, rhs = float(lhs), float(rhs)
    return lhs, rhs, lhs <= rhs


def symmetric_koksma_check(f: BVFunction, ps: PointSet):
    """Koksma for ``f(x) == f(1 - x)``: the bound becomes ``(Var f / 2) * D_N``."""
    if not f.symmetric:
        raise ValueError("f is not symmetric about 1/2")
    lhs = abs(f.mean - _empirical_mean(f, ps))
    rhs = f.variation / 2 * extremal_discrepancy(ps).value
    if not _exact_pair(f, ps):
        lhs, rhs = float(lhs), float(rhs)
    return lhs, rhs, lhs <= rhs


def fold_points(ps: PointSet) -> PointSet:
    """Reflect points above 1/2: ``x -> 1 - x``."""
    if ps.mode is Mode.EXACT:
        half = Fraction(1, 2)
        return PointSet.exact(p if p <= half else 1 - p for p in ps.points)
    x = np.asarray(ps.points)
    return PointSet.floats(np.where(x <= 0.5, x, 1.0 - x))


def _doubled(ps: PointSet) -> PointSet:
    if ps.mode is Mode.EXACT:
        return PointSet.exact(2 * p for p in ps.points)
    return PointSet.floats(2 * np.asarray(ps.points))


@dataclass(frozen=True)
class FoldChain:
    """``lhs <= middle <= rhs`` with ``middle = (Var f/2) D^*(2 fold(x))`` and ``rhs = (Var f/2) D(x)``."""

    lhs: Fraction | float
    middle: Fraction | float
    rhs: Fraction | float

    @property
    def first_holds(self) -> bool:
        return self.lhs <= self.middle

    @property
    def second_holds(self) -> bool:
        return self.middle <= self.rhs

    @property
    def holds(self) -> bool:
        return self.first_holds and self.second_holds


def fold_chain_check(f: BVFunction, ps: PointSet) -> FoldChain:
    if not f.symmetric:
        raise ValueError("f is not symmetric about 1/2")
    half_var = f.variation / 2
    lhs = abs(f.mean - _empirical_mean(f, ps))
    middle = half_var * star_discrepancy(_doubled(fold_points(ps))).value
    rhs = half_var * extremal_discrepancy(ps).value
    if not _exact_pair(f, ps):
        lhs, middle, rhs = float(lhs), float(middle), float(rhs)
    return FoldChain(lhs, middle, rhs)


# ---------------------------------------------------------------------------
# Random exact test objects


def _rand_fraction(rng: np.random.Generator, den: int) -> Fraction:
    return Fraction(int(rng.integers(0, den)), den)


def random_step_function(rng: np.random.Generator, max_jumps: int = 20, den: int = 64) -> StepFunction:
    """Step function with up to ``max_jumps`` rational breakpoints and independent point values."""
    m = int(rng.integers(1, max_jumps + 1))
    bps = sorted({_rand_fraction(rng, den) for _ in range(m)})
    vals = [Fraction(int(rng.integers(-8, 9)), int(rng.integers(1, 5))) for _ in bps]
    # point values either match a neighbour or are arbitrary spikes
    pvs = []
    for i, v in enumerate(vals):
        r = rng.random()
        pvs.append(v if r < 0.4 else vals[i - 1] if r < 0.7 else Fraction(int(rng.integers(-8, 9)), 2))
    return StepFunction(tuple(bps), tuple(vals), tuple(pvs))


def random_symmetric_step_function(rng: np.random.Generator, max_jumps: int = 20, den: int = 64) -> StepFunction:
    """Step function with ``f(x) == f(1 - x)``, built from up to ``max_jumps`` mirrored breakpoints."""
    half = Fraction(1, 2)
    m = max(1, int(rng.integers(1, max_jumps + 1)) // 2)
    left = sorted({_rand_fraction(rng, den) * half for _ in range(m)} | ({half} if rng.random() < 0.5 else set()))
    # values on the arcs of [0, 1/2] between consecutive left breakpoints
    arcs = {t: Fraction(int(rng.integers(-8, 9)), int(rng.integers(1, 5))) for t in left}
    points = {t: (arcs[t] if rng.random() < 0.5 else Fraction(int(rng.integers(-8, 9)), 2)) for t in left}
    bps = sorted(set(left) | {(1 - t) % 1 for t in left})

    def value_on(mid: Fraction) -> Fraction:
        y = mid if mid <= half else 1 - mid
        i = bisect.bisect_right(left, y) - 1
        return arcs[left[i]] if i >= 0 else arcs[left[-1]]

    ends = bps[1:] + [bps[0] + 1]
    vals = [value_on(((s + e) / 2) % 1) for s, e in zip(bps, ends)]
    pvs = [points[t] if t in points else points[(1 - t) % 1] for t in bps]
    f = StepFunction(tuple(bps), tuple(vals), tuple(pvs))
    if not f.symmetric:  # pragma: no cover - construction guarantees symmetry
        raise AssertionError("constructed step function is not symmetric")
    return f


def random_point_set(rng: np.random.Generator, max_n: int = 200, den: int = 256) -> PointSet:
    """Exact point set of size ``1..max_n`` on the grid ``i/den``, including 1 occasionally."""
    n = int(rng.integers(1, max_n + 1))
    return PointSet.exact(Fraction(int(v), den) for v in rng.integers(0, den + 1, size=n))
