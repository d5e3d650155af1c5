"""Solution counts of ``j1 n_k - j2 n_l = nu`` and the densities ``gamma``.

``S(j1, j2, nu, N)`` counts pairs ``(k, l)`` with ``1 <= k, l <= N`` and
``(j1, k) != (j2, l)``; the exclusion only removes ``k == l`` when
``j1 == j2``. Counting is exact big-integer arithmetic with one binary search
per ``k`` over the sorted term list.
"""

from __future__ import annotations

import bisect
import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exact_points import Family, SequenceSpec, bits_of_terms, hadamard_factor, terms

__all__ = [
    "GammaTable",
    "ConvergenceReport",
    "count_solutions",
    "solution_pairs",
    "estimate_gamma",
    "estimate_gamma_table",
    "gamma_table_theorem1",
    "symmetry_check",
]

MAX_N = 10**4
# total bits of n_1..n_N we are willing to hold in memory
MAX_TERM_BITS = 2**31


def _term_list(seq: SequenceSpec, n: int) -> list[int]:
    if n < 1:
        raise ValueError("N must be >= 1")
    if n > MAX_N:
        raise ValueError(f"N={n} exceeds the cost guard N <= {MAX_N}")
    if bits_of_terms(seq, n) > MAX_TERM_BITS:
        raise ValueError(f"terms n_1..n_{n} of {seq} are too large to hold (cost guard)")
    return terms(seq, n)


def count_solutions(seq: SequenceSpec, j1: int, j2: int, nu: int, n: int) -> int:
    """Return ``S(j1, j2, nu, N)``.

    Examples
    --------
    >>> count_solutions(SequenceSpec.theorem1(), 3, 1, 1, 10)
    5
    """
    if j1 < 1 or j2 < 1:
        raise ValueError("j1 and j2 must be positive")
    ts = _term_list(seq, n)
    total = 0
    for k, nk in enumerate(ts, start=1):
        t = j1 * nk - nu
        if t % j2:
            continue
        m = t // j2
        i = bisect.bisect_left(ts, m)
        if i < n and ts[i] == m and not (j1 == j2 and i + 1 == k):
            total += 1
    return total


def solution_pairs(
    seq: SequenceSpec, j1: int, j2: int, n: int, nu_max: int, terms_cache: Sequence[int] | None = None
) -> list[tuple[int, int, int]]:
    """All ``(k, l, nu)`` with ``|nu| <= nu_max`` solving ``j1 n_k - j2 n_l = nu``."""
    ts = terms_cache if terms_cache is not None else _term_list(seq, n)
    out = []
    for k in range(1, n + 1):
        target = j1 * ts[k - 1]
        # j2 * n_l in [target - nu_max, target + nu_max]
        lo = -((nu_max - target) // j2)  # ceil((target - nu_max) / j2)
        i = bisect.bisect_left(ts, lo, 0, n)
        while i < n:
            nu = target - j2 * ts[i]
            if nu < -nu_max:
                break
            if not (j1 == j2 and i + 1 == k):
                out.append((k, i + 1, nu))
            i += 1
    return out


@dataclass
class GammaTable:
    """Sparse ``(j1, j2, nu) -> gamma`` with ``gamma[j1,j2,nu] == gamma[j2,j1,-nu]``.

    ``d_max`` is the largest frequency covered. ``q`` (a Hadamard growth
    factor of the underlying sequence) enables the generic tail estimate
    for frequencies beyond ``d_max``; ``kind == "theorem1"`` marks the
    closed-form table whose structure beyond ``d_max`` is known.
    """

    d_max: int
    entries: dict[tuple[int, int, int], Fraction] = field(default_factory=dict)
    q: Fraction | None = None
    kind: str = "explicit"

    def __post_init__(self):
        self.entries = {
            (int(j1), int(j2), int(nu)): Fraction(g) for (j1, j2, nu), g in self.entries.items() if g != 0
        }
        self.validate()

    def validate(self) -> None:
        for (j1, j2, nu), g in self.entries.items():
            if g < 0:
                raise ValueError(f"negative gamma at {(j1, j2, nu)}")
            if j1 == j2:
                raise ValueError(f"diagonal entry {(j1, j2, nu)} must vanish for Hadamard sequences")
            if not (1 <= j1 <= self.d_max and 1 <= j2 <= self.d_max):
                raise ValueError(f"entry {(j1, j2, nu)} outside d_max={self.d_max}")
            if self.entries.get((j2, j1, -nu)) != g:
                raise ValueError(f"entry {(j1, j2, nu)} lacks its mirror {(j2, j1, -nu)}")

    @classmethod
    def from_pairs(cls, d_max: int, pairs: Mapping[tuple[int, int, int], Fraction], **kw) -> GammaTable:
        """Build from one half of the table; mirrors are added automatically."""
        ent = {}
        for (j1, j2, nu), g in pairs.items():
            ent[(j1, j2, nu)] = Fraction(g)
            ent[(j2, j1, -nu)] = Fraction(g)
        return cls(d_max, ent, **kw)

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, j1: int, j2: int, nu: int) -> Fraction:
        return self.entries.get((j1, j2, nu), Fraction(0))

    def to_json(self) -> str:
        items = [
            {"j1": j1, "j2": j2, "nu": nu, "gamma": f"{g.numerator}/{g.denominator}"}
            for (j1, j2, nu), g in sorted(self.entries.items())
        ]
        doc = {"d_max": self.d_max, "entries": items}
        if self.q is not None:
            doc["q"] = f"{self.q.numerator}/{self.q.denominator}"
        if self.kind != "explicit":
            doc["kind"] = self.kind
        return json.dumps(doc, indent=1)

    @classmethod
    def from_json(cls, text: str) -> GammaTable:
        doc = json.loads(text)
        ent = {(e["j1"], e["j2"], e["nu"]): Fraction(str(e["gamma"])) for e in doc["entries"]}
        q = doc.get("q")
        return cls(int(doc["d_max"]), ent, q=None if q is None else Fraction(q), kind=doc.get("kind", "explicit"))


def gamma_table_theorem1(d_max: int) -> GammaTable:
    """Exact densities for the ``theorem1`` sequence: ``gamma[3j, j, j] = 1/2``.

    >>> sorted(gamma_table_theorem1(3).entries.items())
    [((1, 3, -1), Fraction(1, 2)), ((3, 1, 1), Fraction(1, 2))]
    """
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    half = Fraction(1, 2)
    pairs = {(3 * j, j, j): half for j in range(1, d_max // 3 + 1)}
    return GammaTable.from_pairs(d_max, pairs, q=Fraction(8, 3), kind="theorem1")


@dataclass(frozen=True)
class ConvergenceReport:
    """``S/N`` along a ladder of ``N`` for a single ``(j1, j2, nu)``.

    ``estimate`` is the increment slope ``(S(N_last) - S(N_prev)) / (N_last -
    N_prev)``, which drops the O(1) contribution of sporadic small-index
    solutions; ``last_ratio`` is the plain ``S(N_last)/N_last``.
    """

    j1: int
    j2: int
    nu: int
    ladder: tuple[int, ...]
    counts: tuple[int, ...]
    ratios: tuple[Fraction, ...]
    estimate: Fraction
    last_ratio: Fraction
    deviations: tuple[Fraction, ...]
    max_deviation: Fraction
    monotone: bool
    cauchy: bool

    @property
    def flagged(self) -> bool:
        return not (self.monotone and self.cauchy)


def _report(j1, j2, nu, ladder, counts) -> ConvergenceReport:
    ratios = tuple(Fraction(c, n) for c, n in zip(counts, ladder))
    if len(ladder) >= 2:
        est = Fraction(counts[-1] - counts[-2], ladder[-1] - ladder[-2])
    else:
        est = ratios[-1]
    devs = tuple(abs(r - est) for r in ratios)
    steps = [abs(b - a) for a, b in zip(ratios, ratios[1:])]
    diffs = [b - a for a, b in zip(ratios, ratios[1:])]
    monotone = all(d >= 0 for d in diffs) or all(d <= 0 for d in diffs)
    cauchy = all(b <= a for a, b in zip(steps, steps[1:]))
    return ConvergenceReport(
        j1, j2, nu, tuple(ladder), tuple(counts), ratios, est, ratios[-1], devs, max(devs), monotone, cauchy
    )


def estimate_gamma(seq: SequenceSpec, j1: int, j2: int, nu: int, ladder: Iterable[int]) -> ConvergenceReport:
    """Track ``S(j1, j2, nu, N)/N`` along an increasing ladder of ``N``."""
    ladder = [int(n) for n in ladder]
    if not ladder or any(b <= a for a, b in zip(ladder, ladder[1:])):
        raise ValueError("ladder must be non-empty and strictly increasing")
    ts = _term_list(seq, ladder[-1])
    nu_max = abs(nu)
    hits = [max(k, l) for k, l, v in solution_pairs(seq, j1, j2, ladder[-1], nu_max, ts) if v == nu]
    counts = [sum(1 for h in hits if h <= n) for n in ladder]
    return _report(j1, j2, nu, ladder, counts)


def estimate_gamma_table(
    seq: SequenceSpec, d_max: int, n: int, nu_max: int = 64, n_prev: int | None = None
) -> GammaTable:
    """Estimate every ``gamma[j1, j2, nu]`` with ``j1 != j2 <= d_max``, ``|nu| <= nu_max``.

    Uses the slope between ``N_prev`` (default ``N // 2``) and ``N``; entries
    whose count stops growing get density 0. Diagonal entries are dropped:
    they vanish for any Hadamard sequence.
    """
    n_prev = n // 2 if n_prev is None else n_prev
    if not 1 <= n_prev < n:
        raise ValueError("need 1 <= n_prev < n")
    ts = _term_list(seq, n)
    ent: dict[tuple[int, int, int], Fraction] = {}
    for j1 in range(1, d_max + 1):
        for j2 in range(1, d_max + 1):
            if j1 == j2:
                continue
            late = Counter(v for k, l, v in solution_pairs(seq, j1, j2, n, nu_max, ts) if max(k, l) > n_prev)
            for v, c in late.items():
                ent[(j1, j2, v)] = Fraction(c, n - n_prev)
    q = hadamard_factor(seq) if seq.family is not Family.EXPLICIT or len(seq.values) > 1 else None
    return GammaTable(d_max, ent, q=q, kind="estimated")


def symmetry_check(seq: SequenceSpec, j1: int, j2: int, nu: int, n: int) -> bool:
    """``S(j1, j2, nu, N) == S(j2, j1, -nu, N)``."""
    return count_solutions(seq, j1, j2, nu, n) == count_solutions(seq, j2, j1, -nu, n)
