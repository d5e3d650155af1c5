"""Limit variance ``sigma_f^2(x)`` of lacunary sums and the discrepancy constants built from it.

Two evaluation routes are provided:

* the truncated double Fourier series
  ``||f||^2 + sum_nu sum_{j1,j2} gamma/2 [(a a' + b b') cos 2 pi nu x + (b a' - a b') sin 2 pi nu x]``
  for any gamma table, reporting a rigorous bound on the truncation error;
* exact rational closed forms for the ``theorem1`` sequence, whose table
  ``gamma[3j, j, j] = 1/2`` turns the series into a convolution. For an
  interval ``[a, b]`` of length ``L``::

      sigma^2 = L (1 - L) - L^2 + (1/3) sum_d |[3a, 3b] ∩ ([a + x, b + x] + d)|

  and for ``[0, a]`` the equivalent form
  ``a(1 - a) + (1 - a){3a}/3 - (1/3) |[0, 1 - a] ∩ arc[x - {3a}, x]|``.

``Lambda^*(x) = sup_a sigma_[0,a](x)`` and ``Lambda(x) = sup_{a<=b} sigma_[a,b](x)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np
from scipy.special import digamma, polygamma

from .diophantine import GammaTable
from .functions import BVFunction, StepFunction, TrigPoly, unit_phase

__all__ = [
    "SigmaValue",
    "SqrtRational",
    "LambdaCurve",
    "indicator_fourier",
    "sigma_sq_series",
    "sigma_sq_series_intervals",
    "sigma_sq_closed_form_theorem1",
    "sigma_sq_interval_theorem1",
    "lambda_star_theorem1_closed",
    "lambda_star_sq_theorem1_exact",
    "lambda_star_numeric",
    "lambda_extremal_numeric",
    "lambda_curve_theorem1",
    "theorem2_average_check",
    "theorem2_norm_integral",
    "gamma_bound_check",
    "fukuyama_reference",
    "symmetry_relation_check",
    "THEOREM1",
]

THEOREM1 = "theorem1"
DEFAULT_J_MAX = 30_000


@dataclass(frozen=True)
class SigmaValue:
    """``value`` approximates ``sigma^2``; the exact limit lies within ``tail_bound``."""

    value: float | Fraction
    tail_bound: float
    path: str
    j_max: int | None = None
    nu_max: int | None = None
    table_truncated: bool = False

    @property
    def sigma(self) -> float:
        return math.sqrt(max(float(self.value), 0.0))


@dataclass(frozen=True)
class SqrtRational:
    """The real number ``sqrt(radicand)`` kept exact."""

    radicand: Fraction

    def __float__(self) -> float:
        return math.sqrt(self.radicand)

    def exact(self) -> Fraction | None:
        n, d = math.isqrt(self.radicand.numerator), math.isqrt(self.radicand.denominator)
        if n * n == self.radicand.numerator and d * d == self.radicand.denominator:
            return Fraction(n, d)
        return None

    def __repr__(self) -> str:
        return f"sqrt({self.radicand})"


# ---------------------------------------------------------------------------
# Fourier series route


def indicator_fourier(a, b, j):
    """Fourier coefficients ``(a_j, b_j)`` of the centred indicator of ``[a, b]``.

    ``a_j = (sin 2 pi j b - sin 2 pi j a)/(pi j)``,
    ``b_j = (cos 2 pi j a - cos 2 pi j b)/(pi j)``.
    """
    j = np.asarray(j, dtype=np.int64)
    if all(isinstance(v, (int, Fraction)) for v in (a, b)):
        a, b = Fraction(a), Fraction(b)
    pa, pb = 2 * np.pi * unit_phase(j, a), 2 * np.pi * unit_phase(j, b)
    return (np.sin(pb) - np.sin(pa)) / (np.pi * j), (np.cos(pa) - np.cos(pb)) / (np.pi * j)


def _table_arrays(gamma: GammaTable):
    if not gamma.entries:
        z = np.zeros(0, dtype=np.int64)
        return z, z, z, np.zeros(0)
    keys = np.array(list(gamma.entries.keys()), dtype=np.int64)
    g = np.array([float(v) for v in gamma.entries.values()])
    return keys[:, 0], keys[:, 1], keys[:, 2], g


def _hadamard_tail(k: float, q: Fraction, j_cut: int) -> float:
    """Bound on the omitted part of the series for all entries with ``max(j1, j2) > j_cut``.

    Uses ``|a_j|, |b_j| <= K/(pi j)`` and the row-sum bound
    ``sum_{j1 q^r < j2 <= j1 q^{r+1}} sum_nu gamma <= 1``.
    """
    q = float(q)
    m = math.floor(j_cut / q)
    harmonic = float(digamma(m + 1) + np.euler_gamma) if m >= 1 else 0.0
    inner = (q / j_cut) * harmonic + float(polygamma(1, m + 1))
    return 4 * k * k / math.pi**2 * q / (q - 1) * inner


def _theorem1_tail(k: float, j_cut: int) -> float:
    # entries (3j, j, j) and mirrors with 3j > j_cut: 2 * (1/4) * 4 K^2 / (pi^2 3 j^2) each j
    m = j_cut // 3
    return 2 * k * k / (3 * math.pi**2) * float(polygamma(1, m + 1))


def _unknown_tail(f: BVFunction, gamma: GammaTable) -> float:
    if isinstance(f, TrigPoly) and f.degree <= gamma.d_max:
        return 0.0
    k = float(f.variation)
    if gamma.kind == THEOREM1:
        return _theorem1_tail(k, gamma.d_max)
    if gamma.q is not None and gamma.q > 1:
        return _hadamard_tail(k, gamma.q, gamma.d_max)
    return math.inf


def sigma_sq_series(
    f: BVFunction,
    gamma: GammaTable,
    x,
    j_max: int = DEFAULT_J_MAX,
    nu_max: int | None = None,
) -> SigmaValue:
    """Truncated series for ``sigma_f^2(x)`` with a rigorous truncation bound.

    Entries with ``j1 > j_max``, ``j2 > j_max`` or ``|nu| > nu_max`` are left
    out and bounded through ``|a_j|, |b_j| <= Var f/(pi j)``; entries beyond
    the table's ``d_max`` are bounded structurally (``theorem1`` tables), by
    the Hadamard row-sum estimate (tables carrying ``q``), or not at all
    (``tail_bound = inf``).

    Examples
    --------
    >>> from lacunary.functions import TrigPoly
    >>> f = TrigPoly.from_cos({1: 1, 2: -1})
    >>> g = GammaTable.from_pairs(2, {(2, 1, 0): 1})
    >>> sigma_sq_series(f, g, Fraction(1, 3)).value
    0.0
    """
    J1, J2, NU, G = _table_arrays(gamma)
    j_eff = min(j_max, gamma.d_max)
    keep = (J1 <= j_eff) & (J2 <= j_eff)
    if nu_max is not None:
        keep &= np.abs(NU) <= nu_max
    tail = 0.0
    if np.any(~keep):
        bj1 = f.coefficient_bound(J1[~keep])
        bj2 = f.coefficient_bound(J2[~keep])
        tail += float(np.sum(G[~keep] / 2 * 4 * bj1 * bj2))
    tail += _unknown_tail(f, gamma)
    J1, J2, NU, G = J1[keep], J2[keep], NU[keep], G[keep]
    base = f.l2_norm_sq
    if J1.size == 0:
        value = float(base)
    else:
        js = np.arange(1, int(max(J1.max(), J2.max())) + 1)
        A, B = f.fourier(js)
        a1, b1, a2, b2 = A[J1 - 1], B[J1 - 1], A[J2 - 1], B[J2 - 1]
        ph = 2 * np.pi * _nu_phase(NU, x)
        terms = G / 2 * ((a1 * a2 + b1 * b2) * np.cos(ph) + (b1 * a2 - a1 * b2) * np.sin(ph))
        value = float(base) + float(math.fsum(terms))
    return SigmaValue(
        value, tail, "series", j_max=j_max, nu_max=nu_max, table_truncated=gamma.d_max < j_max
    )


def _nu_phase(nu: np.ndarray, x) -> np.ndarray:
    nu = np.asarray(nu, dtype=np.int64)
    sign = np.sign(nu)
    return sign * unit_phase(np.abs(nu), x if isinstance(x, Fraction) else float(x))


def sigma_sq_series_intervals(
    lo: np.ndarray, hi: np.ndarray, gamma: GammaTable, x, j_max: int = DEFAULT_J_MAX, chunk: int = 128
) -> np.ndarray:
    """Vectorised series value of ``sigma^2_[lo_i, hi_i](x)`` for many intervals."""
    lo = np.atleast_1d(np.asarray(lo, dtype=np.float64))
    hi = np.atleast_1d(np.asarray(hi, dtype=np.float64))
    length = hi - lo
    out = length * (1 - length)
    J1, J2, NU, G = _table_arrays(gamma)
    j_eff = min(j_max, gamma.d_max)
    keep = (J1 <= j_eff) & (J2 <= j_eff)
    J1, J2, NU, G = J1[keep], J2[keep], NU[keep], G[keep]
    if J1.size == 0:
        return out
    js, inv = np.unique(np.concatenate([J1, J2]), return_inverse=True)
    i1, i2 = inv[: J1.size], inv[J1.size :]
    ph = 2 * np.pi * _nu_phase(NU, x)
    cw, sw = G / 2 * np.cos(ph), G / 2 * np.sin(ph)
    for s in range(0, lo.size, chunk):
        pa = 2 * np.pi * np.mod(np.outer(lo[s : s + chunk], js), 1.0)
        pb = 2 * np.pi * np.mod(np.outer(hi[s : s + chunk], js), 1.0)
        A = (np.sin(pb) - np.sin(pa)) / (np.pi * js)
        B = (np.cos(pa) - np.cos(pb)) / (np.pi * js)
        a1, b1, a2, b2 = A[:, i1], B[:, i1], A[:, i2], B[:, i2]
        out[s : s + chunk] += ((a1 * a2 + b1 * b2) * cw + (b1 * a2 - a1 * b2) * sw).sum(axis=1)
    return out


# ---------------------------------------------------------------------------
# Closed forms for the theorem1 sequence


def _frac(v):
    return v - math.floor(v)


def _circle_overlap(s1, len1, s2, len2):
    """``sum_d |[s1, s1 + len1] ∩ [s2 + d, s2 + len2 + d]|`` for lengths in ``[0, 1]``."""
    off = _frac(s2 - s1)
    total = 0
    for d in (-1, 0, 1):
        lo = max(0, off + d)
        hi = min(len1, off + d + len2)
        if hi > lo:
            total += hi - lo
    return total


def sigma_sq_closed_form_theorem1(a, x) -> Fraction:
    """Exact ``sigma^2_[0,a](x)`` for the ``theorem1`` sequence.

    ``a(1 - a) + (1 - a){3a}/3 - (1/3) |[0, 1 - a] ∩ arc[x - {3a}, x]|``.

    >>> sigma_sq_closed_form_theorem1(Fraction(1, 2), Fraction(0))
    Fraction(1, 3)
    """
    a, x = Fraction(a), Fraction(x)
    if not (0 <= a <= 1 and 0 <= x <= 1):
        raise ValueError("need 0 <= a, x <= 1")
    frac3a = _frac(3 * a)
    overlap = _circle_overlap(Fraction(0), 1 - a, x - frac3a, frac3a)
    return a * (1 - a) + (1 - a) * frac3a / 3 - Fraction(overlap) / 3


def sigma_sq_interval_theorem1(a, b, x):
    """``sigma^2_[a,b](x)`` for the ``theorem1`` sequence via the convolution identity.

    Works on fractions (exact) or floats. Requires ``0 <= b - a <= 1``.
    """
    length = b - a
    if not 0 <= length <= 1:
        raise ValueError("need 0 <= b - a <= 1")
    # sum_d |[3a, 3b] ∩ [a + x + d, b + x + d]|, the first arc may wrap up to 3 times
    total = length * 0  # keeps the Fraction type when nothing overlaps
    base = 3 * a
    off = a + x
    shift = math.floor(base - off) - 1
    for d in range(shift, shift + 4 + 3):
        lo = max(base, off + d)
        hi = min(3 * b, off + d + length)
        if hi > lo:
            total += hi - lo
    return length * (1 - length) - length * length + total / 3


def _sigma_sq_theorem1_float(a: np.ndarray, b: np.ndarray, x: float) -> np.ndarray:
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    length = b - a
    off = a + x
    total = np.zeros(np.broadcast(a, b).shape)
    for d in range(-3, 4):
        lo = np.maximum(3 * a, off + d)
        hi = np.minimum(3 * b, off + d + length)
        total += np.clip(hi - lo, 0.0, None)
    return length * (1 - length) - length**2 + total / 3


def lambda_star_theorem1_closed(x) -> SqrtRational:
    """Piecewise formula for ``Lambda^*(x)`` of the ``theorem1`` sequence.

    ``(2 - x - 3x^2)/6`` on ``[0, 1/6]``, ``(25 - 24x)/72`` on ``[1/6, 3/8]``,
    ``2/9`` on ``[3/8, 1/2]``, mirrored for ``x > 1/2`` (values are radicands).
    """
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError("need 0 <= x <= 1")
    if x > Fraction(1, 2):
        x = 1 - x
    if x <= Fraction(1, 6):
        r = (-3 * x * x - x + 2) / 6
    elif x <= Fraction(3, 8):
        r = (-24 * x + 25) / 72
    else:
        r = Fraction(2, 9)
    return SqrtRational(r)


def _theorem1_breakpoints(x: Fraction) -> list[Fraction]:
    cands = {Fraction(0), Fraction(1, 3), Fraction(2, 3), Fraction(1), 1 - x}
    cands |= {(x + i) / 3 for i in range(-1, 4)}
    cands |= {(x + i) / 2 for i in range(-1, 3)}
    return sorted(c for c in cands if 0 <= c <= 1)


def _quadratic_through(xs, ys):
    (x0, x1, x2), (y0, y1, y2) = xs, ys
    d01 = (y1 - y0) / (x1 - x0)
    d12 = (y2 - y1) / (x2 - x1)
    c2 = (d12 - d01) / (x2 - x0)
    c1 = d01 - c2 * (x0 + x1)
    c0 = y0 - c1 * x0 - c2 * x0 * x0
    return c0, c1, c2


def lambda_star_sq_theorem1_exact(x) -> tuple[Fraction, Fraction, list[Fraction]]:
    """Exact ``max_a sigma^2_[0,a](x)`` by piecewise-quadratic maximisation.

    Returns ``(max value, maximising a, candidate points examined)``. On each
    cell between analytic breakpoints the closed form is quadratic in ``a``;
    that is re-checked at a fourth point before the cell is trusted.
    """
    x = Fraction(x)
    bps = _theorem1_breakpoints(x)
    cands = list(bps)
    for lo, hi in zip(bps, bps[1:]):
        if hi <= lo:
            continue
        xs = (lo, (lo + hi) / 2, hi)
        c0, c1, c2 = _quadratic_through(xs, [sigma_sq_closed_form_theorem1(p, x) for p in xs])
        for probe in (lo + (hi - lo) / 4, lo + 3 * (hi - lo) / 4):
            if c0 + c1 * probe + c2 * probe * probe != sigma_sq_closed_form_theorem1(probe, x):
                raise ArithmeticError(f"closed form not quadratic on [{lo}, {hi}] at x={x}")
        if c2 < 0:
            v = -c1 / (2 * c2)
            if lo < v < hi:
                cands.append(v)
    best_a = max(cands, key=lambda a: sigma_sq_closed_form_theorem1(a, x))
    return sigma_sq_closed_form_theorem1(best_a, x), best_a, sorted(set(cands))


def _golden_max(fn: Callable[[float], float], lo: float, hi: float, depth: int) -> tuple[float, float]:
    inv = (math.sqrt(5) - 1) / 2
    c = hi - inv * (hi - lo)
    d = lo + inv * (hi - lo)
    fc, fd = fn(c), fn(d)
    for _ in range(depth):
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - inv * (hi - lo)
            fc = fn(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + inv * (hi - lo)
            fd = fn(d)
    return (c, fc) if fc >= fd else (d, fd)


def _sigma_sq_star_fn(gamma, x, j_max) -> tuple[Callable[[np.ndarray], np.ndarray], bool]:
    if isinstance(gamma, str):
        if gamma != THEOREM1:
            raise ValueError(f"unknown closed form {gamma!r}")
        xf = float(x)
        return (lambda a: _sigma_sq_theorem1_float(np.zeros_like(a), a, xf)), True
    jm = DEFAULT_J_MAX if j_max is None else j_max
    return (lambda a: sigma_sq_series_intervals(np.zeros_like(a), a, gamma, x, jm)), False


def lambda_star_numeric(
    gamma: GammaTable | str,
    x,
    resolution: int = 512,
    depth: int = 60,
    j_max: int | None = None,
    breakpoints: bool = True,
) -> tuple[float, float]:
    """``sup_a sqrt(sigma^2_[0,a](x))`` by grid search and golden-section refinement.

    ``gamma`` is a table (series route) or ``"theorem1"`` for the closed form;
    on the closed form the analytic breakpoints and cell vertices are also
    evaluated, unless ``breakpoints=False``. Returns ``(Lambda^*, witness a)``.
    """
    if resolution < 64:
        raise ValueError("resolution must be >= 64")
    fn, closed = _sigma_sq_star_fn(gamma, x, j_max)
    grid = np.linspace(0.0, 1.0, resolution + 1)
    vals = fn(grid)
    best_i = int(np.argmax(vals))
    best_a, best_v = float(grid[best_i]), float(vals[best_i])
    scalar = lambda a: float(fn(np.array([a]))[0])  # noqa: E731
    peaks = [i for i in range(len(grid)) if vals[i] >= vals[max(i - 1, 0)] and vals[i] >= vals[min(i + 1, len(grid) - 1)]]
    # refine the strongest local maxima only
    peaks = sorted(peaks, key=lambda i: -vals[i])[:8]
    for i in peaks:
        lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, len(grid) - 1)]
        a, v = _golden_max(scalar, lo, hi, depth)
        if v > best_v:
            best_a, best_v = a, v
    if closed and breakpoints:
        xq = Fraction(x)
        value, a_star, _ = lambda_star_sq_theorem1_exact(xq)
        if float(value) >= best_v:
            best_a, best_v = float(a_star), float(value)
    return math.sqrt(max(best_v, 0.0)), float(best_a)


def lambda_extremal_numeric(
    gamma: GammaTable | str,
    x,
    grid: int = 64,
    depth: int = 40,
    j_max: int | None = None,
) -> tuple[float, tuple[float, float]]:
    """``sup_{a <= b} sqrt(sigma^2_[a,b](x))`` over a 2-D grid plus local refinement.

    For ``"theorem1"`` the convolution identity is used; for a table, the
    vectorised series.
    """
    if isinstance(gamma, str):
        if gamma != THEOREM1:
            raise ValueError(f"unknown closed form {gamma!r}")
        xf = float(x)
        fn = lambda lo, hi: _sigma_sq_theorem1_float(lo, hi, xf)  # noqa: E731
    else:
        jm = DEFAULT_J_MAX if j_max is None else j_max
        fn = lambda lo, hi: sigma_sq_series_intervals(lo, hi, gamma, x, jm)  # noqa: E731
    starts = np.linspace(0.0, 1.0, grid + 1)
    lengths = np.linspace(0.0, 1.0, grid + 1)[:-1]
    A, L = np.meshgrid(starts, lengths, indexing="ij")
    mask = A + L <= 1.0
    lo, ln = A[mask], L[mask]
    vals = fn(lo, lo + ln)
    order = np.argsort(-vals)[:6]
    best = (float(vals[order[0]]), float(lo[order[0]]), float(lo[order[0]] + ln[order[0]]))
    h = 1.0 / grid
    for idx in order:
        a0, l0 = float(lo[idx]), float(ln[idx])
        # coordinate-wise golden refinement in (a, length)
        for _ in range(3):
            a_lo, a_hi = max(a0 - h, 0.0), min(a0 + h, 1.0 - l0)
            if a_hi > a_lo:
                a0, _ = _golden_max(lambda a: float(fn(np.array([a]), np.array([a + l0]))[0]), a_lo, a_hi, depth)
            l_lo, l_hi = max(l0 - h, 0.0), min(l0 + h, 1.0 - a0, 1.0 - 1e-12)
            if l_hi > l_lo:
                l0, _ = _golden_max(lambda l: float(fn(np.array([a0]), np.array([a0 + l]))[0]), l_lo, l_hi, depth)
            h /= 2
        h = 1.0 / grid
        v = float(fn(np.array([a0]), np.array([a0 + l0]))[0])
        if v > best[0]:
            best = (v, a0, a0 + l0)
    return math.sqrt(max(best[0], 0.0)), (best[1], best[2])


@dataclass(frozen=True)
class LambdaCurve:
    """Rows ``(x, Lambda^* closed, Lambda^* numeric, witness a, |difference|)``."""

    x: tuple[Fraction, ...]
    closed: tuple[float, ...]
    numeric: tuple[float, ...]
    witness: tuple[float, ...]

    @property
    def abs_diff(self) -> np.ndarray:
        return np.abs(np.array(self.closed) - np.array(self.numeric))

    def rows(self):
        for x, c, n, w, d in zip(self.x, self.closed, self.numeric, self.witness, self.abs_diff):
            yield x, c, n, w, float(d)


def lambda_curve_theorem1(grid: int = 480, resolution: int = 512) -> LambdaCurve:
    """``Lambda^*`` on ``x = i/grid``: piecewise formula vs numeric maximisation of the closed form."""
    xs = tuple(Fraction(i, grid) for i in range(grid + 1))
    closed, numeric, wit = [], [], []
    for x in xs:
        closed.append(float(lambda_star_theorem1_closed(x)))
        v, a = lambda_star_numeric(THEOREM1, x, resolution=resolution)
        numeric.append(v)
        wit.append(a)
    return LambdaCurve(xs, tuple(closed), tuple(numeric), tuple(wit))


def symmetry_relation_check(a, x) -> bool:
    """``sigma_[0,a](x) == sigma_[0,1-a](1-x)`` in exact arithmetic."""
    a, x = Fraction(a), Fraction(x)
    return sigma_sq_closed_form_theorem1(a, x) == sigma_sq_closed_form_theorem1(1 - a, 1 - x)


# ---------------------------------------------------------------------------
# Averages, bounds, reference values


def theorem2_average_check(gamma: GammaTable, x, resolution: int = 8192, j_max: int = 3000) -> float:
    """``int_0^{1/2} sigma^2_[a, a+1/2](x) da`` from the series (expected 1/8).

    Uses the periodic trapezoid rule, which integrates every term of the
    truncated series exactly when ``2 * resolution`` exceeds ``j1 + j2``.
    """
    a = np.arange(resolution) / (2 * resolution)
    vals = sigma_sq_series_intervals(a, a + 0.5, gamma, x, j_max)
    return float(np.mean(vals) / 2)


def theorem2_norm_integral(gamma: GammaTable, resolution: int = 4096, j_max: int = 3000) -> float:
    """``int_0^1 sigma^2_[0,1/2](x) dx`` by the trapezoid rule on the series (expected >= 1/4)."""
    f = StepFunction.centered_indicator(0, Fraction(1, 2))
    J1, J2, NU, G = _table_arrays(gamma)
    keep = (J1 <= j_max) & (J2 <= j_max)
    J1, J2, NU, G = J1[keep], J2[keep], NU[keep], G[keep]
    if J1.size == 0:
        return float(f.l2_norm_sq)
    js = np.arange(1, int(max(J1.max(), J2.max())) + 1)
    A, B = f.fourier(js)
    a1, b1, a2, b2 = A[J1 - 1], B[J1 - 1], A[J2 - 1], B[J2 - 1]
    cc = G / 2 * (a1 * a2 + b1 * b2)
    ss = G / 2 * (b1 * a2 - a1 * b2)
    # phases nu * i / resolution reduced exactly before scaling by 2 pi
    ph = 2 * np.pi * (np.outer(np.mod(NU, resolution), np.arange(resolution)) % resolution) / resolution
    vals = float(f.l2_norm_sq) + cc @ np.cos(ph) + ss @ np.sin(ph)
    return float(vals.mean())


def gamma_bound_check(f: BVFunction, gamma: GammaTable, q) -> tuple[float, Fraction, bool]:
    """Compare the absolute gamma-weighted coefficient sum with ``2 (Var f)^2 q / (3(q - 1))``."""
    q = Fraction(q)
    if q <= 1:
        raise ValueError("q must exceed 1")
    var = f.variation
    rhs = 2 * Fraction(var) ** 2 * q / (3 * (q - 1)) if isinstance(var, (int, Fraction)) else 2 * var**2 * float(q) / (3 * float(q - 1))
    J1, J2, NU, G = _table_arrays(gamma)
    if J1.size == 0:
        return 0.0, rhs, True
    js = np.arange(1, int(max(J1.max(), J2.max())) + 1)
    A, B = f.fourier(js)
    a1, b1, a2, b2 = A[J1 - 1], B[J1 - 1], A[J2 - 1], B[J2 - 1]
    lhs = float(math.fsum(G / 2 * (np.abs(a1 * a2) + np.abs(b1 * b2) + np.abs(b1 * a2) + np.abs(a1 * b2))))
    return lhs, rhs, lhs <= float(rhs)


def fukuyama_reference(theta) -> float:
    """Limsup constant for ``n_k = theta^k``; pass ``"irrational"`` for the generic case."""
    if isinstance(theta, str):
        if theta.lower() != "irrational":
            raise ValueError("theta must be an integer >= 2 or 'irrational'")
        return 0.5
    theta = int(theta)
    if theta < 2:
        raise ValueError("theta must be >= 2")
    if theta == 2:
        return math.sqrt(42) / 9
    if theta % 2 == 0:
        return math.sqrt((theta + 1) * theta * (theta - 2)) / (2 * math.sqrt((theta - 1) ** 3))
    return math.sqrt(theta + 1) / (2 * math.sqrt(theta - 1))
