"""Command-line entry point ``lacunary``.

Exit codes: 0 on success, 1 when a verified inequality or identity fails,
2 on usage or input errors. Output files start with ``#`` comment lines
holding a JSON run manifest; the wall-clock duration goes to stderr only so
that repeated runs produce byte-identical files.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from decimal import Context, Decimal
from fractions import Fraction
from itertools import combinations
from pathlib import Path

import numpy as np

from . import __version__
from .diophantine import MAX_N, GammaTable, count_solutions, estimate_gamma_table, gamma_table_theorem1
from .discrepancy import Kind, Mode, PointSet, extremal_discrepancy, star_discrepancy
from .exact_points import SequenceSpec, frac_part, parse_rational, terms
from .functions import BVFunction, StepFunction, TrigPoly
from .lil_lab import (
    fold_chain_check,
    koksma_check,
    random_point_set,
    random_step_function,
    random_symmetric_step_function,
    simulate,
    symmetric_koksma_check,
    theorem4_exact,
    theorem4_monte_carlo,
)
from .sigma_engine import (
    THEOREM1,
    fukuyama_reference,
    gamma_bound_check,
    lambda_extremal_numeric,
    lambda_star_numeric,
    lambda_star_theorem1_closed,
    lambda_star_sq_theorem1_exact,
    sigma_sq_closed_form_theorem1,
    sigma_sq_series,
    symmetry_relation_check,
    theorem2_average_check,
    theorem2_norm_integral,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# formatting helpers


def fmt(v) -> str:
    """17 significant digits; exact rationals are rounded once from the exact value."""
    if isinstance(v, Fraction):
        d = Context(prec=17).divide(Decimal(v.numerator), Decimal(v.denominator))
        return f"{float(d):.17g}"
    return f"{float(v):.17g}"


def ratio(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def manifest(args: argparse.Namespace, argv: list[str]) -> dict:
    return {
        "subcommand": " ".join(p for p in (args.command, getattr(args, "sub", None)) if p),
        "argv": argv,
        "seed": getattr(args, "seed", None),
        "version": __version__,
    }


def header(man: dict) -> str:
    return f"# lacunary run manifest: {json.dumps(man, sort_keys=True)}\n"


def emit(text: str, out: str | None, man: dict, comment: bool = True) -> None:
    body = (header(man) if comment else "") + text
    if out:
        Path(out).write_text(body)
    else:
        sys.stdout.write(body)


def emit_json(doc: dict, out: str | None, man: dict) -> None:
    doc = {"manifest": man, **doc}
    emit(json.dumps(doc, indent=1, sort_keys=False) + "\n", out, man, comment=False)


def rows_to_csv(columns: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    w.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# argument parsing helpers


def count_arg(text: str) -> int:
    """Integers written as ``1000``, ``1e6`` or ``2**20``."""
    try:
        if "**" in text:
            b, e = text.split("**")
            return int(b) ** int(e)
        v = float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a count: {text!r}") from exc
    if v != int(v) or v < 0:
        raise argparse.ArgumentTypeError(f"not a non-negative integer: {text!r}")
    return int(v)


def rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def ladder_arg(text: str) -> list[int]:
    return [count_arg(t) for t in text.split(",") if t.strip()]


def parse_function(text: str) -> BVFunction:
    """``indicator:a,b`` (centred), ``cos:1=1,2=-1`` or ``trig:1=a|b,3=a|b``."""
    kind, _, body = text.partition(":")
    try:
        if kind == "indicator":
            a, b = (parse_rational(t) for t in body.split(","))
            return StepFunction.centered_indicator(a, b)
        if kind in ("cos", "trig"):
            coeffs = {}
            for item in body.split(","):
                j, _, c = item.partition("=")
                if kind == "cos":
                    coeffs[int(j)] = (parse_rational(c), 0)
                else:
                    a, _, b = c.partition("|")
                    coeffs[int(j)] = (parse_rational(a), parse_rational(b or "0"))
            return TrigPoly.from_dict(coeffs)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse function {text!r}: {exc}") from exc
    raise UsageError(f"unknown function kind {kind!r}; use indicator:, cos: or trig:")


def sequence_from(args) -> SequenceSpec:
    values = None
    if args.family == "explicit":
        if not args.values:
            raise UsageError("explicit family needs --values")
        values = [int(v) for v in args.values.split(",")]
    return SequenceSpec.from_name(args.family, args.base, values)


def gamma_from(text: str) -> GammaTable | str:
    if text == THEOREM1:
        return THEOREM1
    try:
        return GammaTable.from_json(Path(text).read_text())
    except (OSError, KeyError, ValueError) as exc:
        raise UsageError(f"cannot read gamma table {text!r}: {exc}") from exc


def add_family(p: argparse.ArgumentParser, default: str | None = None) -> None:
    p.add_argument(
        "--family",
        required=default is None,
        default=default,
        choices=["theorem1", "geometric", "powers-minus-one", "explicit"],
    )
    p.add_argument("--base", type=int, default=None, help="base of geometric / powers-minus-one")
    p.add_argument("--values", default=None, help="comma-separated terms of an explicit sequence")


# ---------------------------------------------------------------------------
# subcommands


def cmd_terms(args, man) -> int:
    seq = sequence_from(args)
    emit("".join(f"{t}\n" for t in terms(seq, args.count)), args.out, man, comment=bool(args.out))
    return EXIT_OK


def cmd_frac(args, man) -> int:
    v = frac_part(sequence_from(args), args.k, args.x)
    emit(f"{ratio(v)} {fmt(v)}\n", args.out, man, comment=bool(args.out))
    return EXIT_OK


def read_points(path: str, mode: Mode) -> PointSet:
    try:
        lines = [ln.split(",")[0].strip() for ln in Path(path).read_text().splitlines()]
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    vals = [ln for ln in lines if ln and not ln.startswith("#")]
    if vals and not _is_number(vals[0]):
        vals = vals[1:]  # header row
    pts = [parse_rational(v) for v in vals]
    return PointSet.exact(pts) if mode is Mode.EXACT else PointSet.floats([float(p) for p in pts])


def _is_number(text: str) -> bool:
    try:
        parse_rational(text)
        return True
    except (ValueError, ZeroDivisionError):
        return False


def _value_doc(v) -> dict:
    if isinstance(v, Fraction):
        return {"exact": ratio(v), "decimal": fmt(v)}
    return {"decimal": fmt(v)}


def cmd_discrepancy(args, man) -> int:
    ps = read_points(args.points, Mode(args.mode))
    res = star_discrepancy(ps) if Kind(args.kind) is Kind.STAR else extremal_discrepancy(ps)
    w = res.witness
    doc = {
        "kind": args.kind,
        "mode": args.mode,
        "n": len(ps),
        "value": _value_doc(res.value),
        "witness_a": _value_doc(w.a),
        "witness_b": _value_doc(w.b),
        "closed_left": w.closed_left,
        "closed_right": w.closed_right,
    }
    emit_json(doc, args.out, man)
    return EXIT_OK


def cmd_dioph_count(args, man) -> int:
    s = count_solutions(sequence_from(args), args.j1, args.j2, args.nu, args.n)
    emit_json({"j1": args.j1, "j2": args.j2, "nu": args.nu, "n": args.n, "count": s}, args.out, man)
    return EXIT_OK


def cmd_dioph_gamma(args, man) -> int:
    seq = sequence_from(args)
    if args.exact and seq.family.value == THEOREM1:
        table = gamma_table_theorem1(args.dmax)
    else:
        ladder = args.ladder
        if len(ladder) < 2:
            raise UsageError("--ladder needs at least two sizes")
        table = estimate_gamma_table(seq, args.dmax, ladder[-1], args.numax, ladder[-2])
    text = table.to_json() + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _sigma_doc(f, gamma, x, j_max) -> dict:
    if gamma == THEOREM1:
        if isinstance(f, StepFunction) and f.breakpoints and f.breakpoints[0] == 0 and len(f.breakpoints) <= 2:
            a = f.breakpoints[1] if len(f.breakpoints) == 2 else Fraction(0)
            v = sigma_sq_closed_form_theorem1(a, x)
            return {"sigma_sq": _value_doc(v), "tail_bound": fmt(0.0), "path": "closed"}
        gamma = gamma_table_theorem1(max(j_max, 3))
    sv = sigma_sq_series(f, gamma, x, j_max)
    return {"sigma_sq": _value_doc(sv.value), "tail_bound": fmt(sv.tail_bound), "path": sv.path}


def cmd_sigma_eval(args, man) -> int:
    f = parse_function(args.f)
    doc = {"f": args.f, "x": ratio(args.x), **_sigma_doc(f, gamma_from(args.gamma), args.x, args.jmax)}
    emit_json(doc, args.out, man)
    return EXIT_OK


def cmd_sigma_curve(args, man) -> int:
    f = parse_function(args.f)
    gamma = gamma_from(args.gamma)
    rows = []
    for i in range(args.grid + 1):
        x = Fraction(i, args.grid)
        d = _sigma_doc(f, gamma, x, args.jmax)
        rows.append([fmt(x), d["sigma_sq"]["decimal"], d["tail_bound"], ratio(x)])
    emit(rows_to_csv(["x", "sigma_sq", "tail_bound", "x_exact"], rows), args.out, man)
    return EXIT_OK


def lambda_curve_rows(grid: int, resolution: int):
    rows = []
    for i in range(grid + 1):
        x = Fraction(i, grid)
        closed = float(lambda_star_theorem1_closed(x))
        numeric, a = lambda_star_numeric(THEOREM1, x, resolution=resolution)
        rows.append([fmt(x), fmt(closed), fmt(numeric), fmt(a), fmt(abs(closed - numeric)), ratio(x)])
    return rows


def cmd_lambda_star(args, man) -> int:
    if args.family != THEOREM1:
        raise UsageError("the closed form exists only for --family theorem1")
    if args.curve:
        rows = lambda_curve_rows(args.grid, args.resolution)
        text = rows_to_csv(["x", "lambda_closed", "lambda_numeric", "witness_a", "abs_diff", "x_exact"], rows)
        emit(text, args.out, man)
        worst = max(float(r[4]) for r in rows)
        return EXIT_OK if worst <= args.tol else EXIT_FAIL
    if args.x is None:
        raise UsageError("give --x or --curve")
    closed = lambda_star_theorem1_closed(args.x)
    numeric, a = lambda_star_numeric(THEOREM1, args.x, resolution=args.resolution)
    doc = {
        "x": ratio(args.x),
        "lambda_closed": fmt(float(closed)),
        "lambda_sq_closed": ratio(closed.radicand),
        "lambda_numeric": fmt(numeric),
        "witness_a": fmt(a),
    }
    emit_json(doc, args.out, man)
    return EXIT_OK


def cmd_simulate(args, man) -> int:
    f = parse_function(args.f) if args.f else None
    kind = "function-sum" if args.kind == "function-sum" else args.kind
    recs = simulate(sequence_from(args), args.samples, args.seed, kind, args.nmax, f=f)
    rows = [
        [ratio(r.x), n, fmt(raw), fmt(norm), fmt(run)] for r in recs for n, raw, norm, run in r.checkpoints
    ]
    emit(rows_to_csv(["x", "N", "stat", "normalized", "runmax"], rows), args.out, man)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


class Report:
    """Collects named checks and prints one line each."""

    def __init__(self, stream):
        self.stream = stream
        self.failed = 0

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        self.failed += not ok
        self.stream.write(f"{'PASS' if ok else 'FAIL'} {name}{': ' + detail if detail else ''}\n")

    @property
    def code(self) -> int:
        return EXIT_OK if self.failed == 0 else EXIT_FAIL


def verify_sigma_suite(args, rep: Report) -> None:
    table = gamma_table_theorem1(args.jmax)
    worst, over = 0.0, 0
    for i in range(args.grid):
        a = Fraction(2 * i + 1, 2 * args.grid)
        f = StepFunction.centered_indicator(0, a)
        for k in range(args.grid):
            x = Fraction(2 * k + 1, 2 * args.grid)
            sv = sigma_sq_series(f, table, x, args.jmax)
            err = abs(sv.value - float(sigma_sq_closed_form_theorem1(a, x)))
            worst = max(worst, err)
            over += err > sv.tail_bound
    rep.check("series within tail bound of closed form", over == 0, f"max error {worst:.3g}")
    sym = all(
        symmetry_relation_check(Fraction(i, 24), Fraction(k, 24)) for i in range(25) for k in range(25)
    )
    rep.check("sigma_[0,a](x) == sigma_[0,1-a](1-x)", sym)
    rep.check("Lambda*(7/24) == 1/2", lambda_star_theorem1_closed(Fraction(7, 24)).exact() == Fraction(1, 2))
    rep.check("Lambda*(1/2)^2 == 2/9", lambda_star_theorem1_closed(Fraction(1, 2)).radicand == Fraction(2, 9))
    agree = all(
        lambda_star_sq_theorem1_exact(Fraction(i, 96))[0] == lambda_star_theorem1_closed(Fraction(i, 96)).radicand
        for i in range(97)
    )
    rep.check("piecewise Lambda* equals exact maximisation on x = i/96", agree)


def verify_theorem4(args, rep: Report) -> None:
    zs = [Fraction(1, 5), Fraction(1, 3), Fraction(1, 2), Fraction(3, 4)]
    pool = range(1, args.pool + 1)
    bad = 0
    total = 0
    for n in range(1, args.max_n + 1):
        for subset in combinations(pool, n):
            for z in zs:
                total += 1
                bad += theorem4_exact(subset, z) != z * (1 - z) * n
    rep.check("averaged second moment equals z(1-z)N exactly", bad == 0, f"{total} cases, {bad} mismatches")
    if args.mc:
        rng = np.random.Generator(np.random.Philox(args.seed))
        worst = 0.0
        for t in range(args.mc):
            n = int(rng.integers(1, min(args.max_n, 4) + 1))
            subset = sorted(rng.choice(np.arange(1, args.pool + 1), size=n, replace=False).tolist())
            z = zs[int(rng.integers(len(zs)))]
            est = theorem4_monte_carlo(subset, z, 20, seed=args.seed + t)
            worst = max(worst, abs(est - float(z * (1 - z) * n)))
        rep.check("Sobol oracle within 3e-3", worst <= 3e-3, f"max deviation {worst:.3g}")


def verify_koksma(args, rep: Report) -> None:
    rng = np.random.Generator(np.random.Philox(args.seed))
    plain = sym = chain = 0
    for _ in range(args.trials):
        ps = random_point_set(rng, args.max_points)
        plain += not koksma_check(random_step_function(rng, args.max_jumps), ps)[2]
        g = random_symmetric_step_function(rng, args.max_jumps)
        sym += not symmetric_koksma_check(g, ps)[2]
        c = fold_chain_check(g, ps)
        chain += not (c.first_holds and c.second_holds)
    rep.check("Koksma inequality", plain == 0, f"{plain} violations in {args.trials}")
    rep.check("symmetric Koksma inequality", sym == 0, f"{sym} violations in {args.trials}")
    rep.check("fold chain", chain == 0, f"{chain} violations in {args.trials}")


def verify_lemma1(args, rep: Report) -> None:
    seq = SequenceSpec.theorem1()
    bad_main = bad_rest = 0
    for n in range(1, args.n + 1):
        for j in range(1, args.jmax // 3 + 1):
            bad_main += count_solutions(seq, 3 * j, j, j, n) != n // 2
    special = {(3 * j, j, j) for j in range(1, args.jmax // 3 + 1)}
    special |= {(j, 3 * j, -j) for j in range(1, args.jmax // 3 + 1)}
    n = args.n
    for j1 in range(1, args.jmax + 1):
        for j2 in range(1, args.jmax + 1):
            for nu in range(-args.numax, args.numax + 1):
                if (j1, j2, nu) not in special:
                    bad_rest += count_solutions(seq, j1, j2, nu, n) > 2
    rep.check("S(3j, j, j, N) == floor(N/2)", bad_main == 0, f"{bad_main} mismatches")
    rep.check("all other S <= 2", bad_rest == 0, f"{bad_rest} exceedances")


def verify_theorem2_average(args, rep: Report) -> None:
    table = gamma_table_theorem1(args.jmax)
    rng = np.random.Generator(np.random.Philox(args.seed))
    xs = [Fraction(int(rng.integers(0, 10**6)), 10**6) for _ in range(args.samples)]
    worst = max(abs(theorem2_average_check(table, x, j_max=args.jmax) - 0.125) for x in xs)
    rep.check("average of sigma^2 over half-length intervals is 1/8", worst <= 1e-4, f"max deviation {worst:.3g}")
    if args.extremal:
        lows = [lambda_extremal_numeric(table, x, j_max=args.jmax)[0] for x in xs]
        rep.check("extremal Lambda >= 1/2", min(lows) >= 0.499, f"min {min(lows):.6f}")
    norm = theorem2_norm_integral(table, j_max=args.jmax)
    rep.check("int sigma^2_[0,1/2](x) dx >= 1/4", norm >= 0.25 - 1e-6, f"{norm:.9f}")


def verify_bounds(args, rep: Report) -> None:
    for theta, ref in ((2, 0.720082), (3, 0.707107), (4, 0.608581)):
        v = fukuyama_reference(theta)
        rep.check(f"Fukuyama constant theta={theta}", round(v, 6) == ref, f"{v:.6f}")
    lhs, rhs, ok = gamma_bound_check(
        StepFunction.centered_indicator(0, Fraction(1, 2)), gamma_table_theorem1(args.jmax), Fraction(8, 3)
    )
    rep.check("gamma-weighted coefficient sum <= 64/15", ok and rhs == Fraction(64, 15), f"{lhs:.6f} <= {rhs}")


VERIFIERS = {
    "sigma-suite": verify_sigma_suite,
    "theorem4": verify_theorem4,
    "koksma": verify_koksma,
    "lemma1": verify_lemma1,
    "theorem2-average": verify_theorem2_average,
    "bounds": verify_bounds,
}


def cmd_verify(args, man) -> int:
    buf = io.StringIO()
    rep = Report(buf)
    VERIFIERS[args.sub](args, rep)
    emit(buf.getvalue(), args.out, man, comment=bool(args.out))
    return rep.code


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lacunary", description="Discrepancy and LIL tools for lacunary sequences.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def leaf(parent, name, fn, **kw):
        q = parent.add_parser(name, **kw)
        q.set_defaults(fn=fn)
        q.add_argument("--out", default=None, help="write to this file instead of stdout")
        return q

    q = leaf(sub, "terms", cmd_terms, help="print n_1..n_K")
    add_family(q)
    q.add_argument("--count", type=count_arg, required=True)

    q = leaf(sub, "frac", cmd_frac, help="exact {n_k x}")
    add_family(q)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--x", type=rational_arg, required=True)

    q = leaf(sub, "discrepancy", cmd_discrepancy, help="discrepancy of a point file")
    q.add_argument("--points", required=True)
    q.add_argument("--kind", choices=["star", "extremal"], default="star")
    q.add_argument("--mode", choices=["exact", "float"], default="exact")

    dioph = sub.add_parser("dioph", help="solution counts and gamma tables").add_subparsers(dest="sub", required=True)
    q = leaf(dioph, "count", cmd_dioph_count)
    add_family(q)
    for name in ("--j1", "--j2", "--nu"):
        q.add_argument(name, type=int, required=True)
    q.add_argument("--n", type=count_arg, required=True)
    q = leaf(dioph, "gamma", cmd_dioph_gamma)
    add_family(q)
    q.add_argument("--dmax", type=int, required=True)
    q.add_argument("--ladder", type=ladder_arg, default=[MAX_N // 2, MAX_N])
    q.add_argument("--numax", type=int, default=64)
    q.add_argument("--exact", action="store_true", help="emit the closed-form table when one is known")

    sigma = sub.add_parser("sigma", help="limit variance").add_subparsers(dest="sub", required=True)
    for name, fn in (("eval", cmd_sigma_eval), ("curve", cmd_sigma_curve)):
        q = leaf(sigma, name, fn)
        q.add_argument("--f", required=True, help="indicator:a,b | cos:j=c,... | trig:j=a|b,...")
        q.add_argument("--gamma", default=THEOREM1, help="JSON table file or 'theorem1'")
        q.add_argument("--jmax", type=count_arg, default=30000)
        if name == "eval":
            q.add_argument("--x", type=rational_arg, required=True)
        else:
            q.add_argument("--grid", type=int, default=64)

    q = leaf(sub, "lambda-star", cmd_lambda_star, help="Lambda* for the theorem1 sequence")
    q.add_argument("--family", default=THEOREM1)
    q.add_argument("--curve", action="store_true")
    q.add_argument("--grid", type=int, default=480)
    q.add_argument("--resolution", type=int, default=512)
    q.add_argument("--tol", type=float, default=1e-6)
    q.add_argument("--x", type=rational_arg, default=None)

    q = leaf(sub, "simulate", cmd_simulate, help="LIL trajectories for random x")
    add_family(q)
    q.add_argument("--kind", choices=["star", "extremal", "function-sum"], default="star")
    q.add_argument("--f", default=None)
    q.add_argument("--nmax", type=count_arg, default=2**20)
    q.add_argument("--samples", type=int, default=10)
    q.add_argument("--seed", type=int, required=True)

    verify = sub.add_parser("verify", help="run a verification suite").add_subparsers(dest="sub", required=True)
    q = leaf(verify, "sigma-suite", cmd_verify)
    q.add_argument("--grid", type=int, default=8)
    q.add_argument("--jmax", type=count_arg, default=30000)
    q = leaf(verify, "theorem4", cmd_verify)
    q.add_argument("--max-n", type=int, default=4)
    q.add_argument("--pool", type=int, default=12)
    q.add_argument("--mc", type=int, default=0, help="number of Sobol oracle cases")
    q.add_argument("--seed", type=int, default=0)
    q = leaf(verify, "koksma", cmd_verify)
    q.add_argument("--trials", type=int, default=10000)
    q.add_argument("--max-points", type=int, default=200)
    q.add_argument("--max-jumps", type=int, default=20)
    q.add_argument("--seed", type=int, default=0)
    q = leaf(verify, "lemma1", cmd_verify)
    q.add_argument("--n", type=int, default=40)
    q.add_argument("--jmax", type=int, default=9)
    q.add_argument("--numax", type=int, default=100)
    q = leaf(verify, "theorem2-average", cmd_verify)
    q.add_argument("--samples", type=int, default=10)
    q.add_argument("--jmax", type=count_arg, default=3000)
    q.add_argument("--extremal", action="store_true")
    q.add_argument("--seed", type=int, default=0)
    q = leaf(verify, "bounds", cmd_verify)
    q.add_argument("--jmax", type=count_arg, default=30000)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    man = manifest(args, argv)
    start = time.perf_counter()
    try:
        code = args.fn(args, man)
    except (UsageError, ValueError, IndexError, ZeroDivisionError, MemoryError) as exc:
        sys.stderr.write(f"lacunary: error: {exc}\n")
        return EXIT_USAGE
    sys.stderr.write(f"# duration {time.perf_counter() - start:.3f}s\n")
    return code


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_exit()
