"""Command-line front end: ``measure``, ``table`` and ``figure`` subcommands.

All output is CSV on stdout (header row, 12 significant digits, LF line
endings). Exit codes: 0 success, 2 invalid parameters, 3 numerical
consistency failure.
"""

from __future__ import annotations

import argparse
import io
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import reference_tables
from .laguerre_core import PolySpec
from .moments import fisher_length, standard_deviation
from .quadrature import entropic_moment_quad
from .renyi import RenyiResult, TermBudgetExceeded, parse_order
from .renyi_algebraic import entropic_moment_algebraic
from .renyi_bell import entropic_moment_bell
from .shannon import BoundResult, optimize_bound, shannon_asymptotic, shannon_length

EXIT_USAGE = 2
EXIT_NUMERIC = 3
FLOAT_RTOL = 1e-10
BOUND_SLACK = 1e-7


class ConsistencyError(RuntimeError):
    pass


def fmt(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return "nan"
    return f"{float(value):.12g}"


def fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{float(q):g}"


def write_csv(header, rows, out) -> None:
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(fmt(v) for v in row) + "\n")


@dataclass(frozen=True)
class SpreadingReportRow:
    n: int
    alpha: float
    delta_x: float
    fisher_length: float
    L2: float
    N: float
    N_asymptotic: float
    bound_m0: BoundResult
    bound_joint: BoundResult


def entropic_moment(spec: PolySpec, q, engine: str = "bell",
                    precision: str = "auto") -> RenyiResult:
    """W_q from one engine, or from both with a consistency check."""
    if engine == "algebraic":
        return entropic_moment_algebraic(spec, q, precision)
    if engine == "bell":
        return entropic_moment_bell(spec, q, precision)
    if engine != "both":
        raise ValueError(f"unknown engine {engine!r}")
    alg = entropic_moment_algebraic(spec, q, precision)
    bell = entropic_moment_bell(spec, q, precision)
    if alg.exact and bell.exact:
        if not alg.same_exact_value(bell):
            raise ConsistencyError(
                f"engines disagree at n={spec.n}, alpha={spec.alpha}, q={q}: "
                f"{alg.rational}*sqrt({alg.radicand}) vs {bell.rational}*sqrt({bell.radicand})")
    elif abs(alg.W - bell.W) > FLOAT_RTOL * abs(bell.W):
        raise ConsistencyError(
            f"engines disagree at n={spec.n}, alpha={spec.alpha}, q={q}: {alg.W!r} vs {bell.W!r}")
    return bell


def renyi_length(spec: PolySpec, q, engine: str, precision: str, err=sys.stderr) -> float:
    """Renyi length, falling back to quadrature where the finite sums do
    not give an entropic moment (odd 2q with n >= 1)."""
    res = entropic_moment(spec, q, engine, precision)
    if res.is_entropic_moment:
        return res.length
    err.write(f"note: q={fmt_q(res.q)} with n={spec.n} taken from quadrature of rho^q\n")
    w = entropic_moment_quad(spec, float(q)).value
    return w ** (-1.0 / float(res.q - 1))


def spreading_row(spec: PolySpec, engine: str = "bell", precision: str = "auto") -> SpreadingReportRow:
    shannon = shannon_length(spec)
    return SpreadingReportRow(
        n=spec.n,
        alpha=spec.a,
        delta_x=standard_deviation(spec),
        fisher_length=fisher_length(spec),
        L2=entropic_moment(spec, 2, engine, precision).length,
        N=shannon.N,
        N_asymptotic=shannon_asymptotic(spec) if spec.n >= 1 else math.nan,
        bound_m0=optimize_bound(spec, "m-zero"),
        bound_joint=optimize_bound(spec, "joint"),
    )


def check_row(row: SpreadingReportRow) -> list[str]:
    """Inequalities every row must satisfy; returns the violations."""
    problems = []
    if row.fisher_length > row.delta_x:
        problems.append(f"fisher length {row.fisher_length} > delta_x {row.delta_x}")
    for name, bound in (("m0", row.bound_m0), ("joint", row.bound_joint)):
        if bound.value < row.N - BOUND_SLACK:
            problems.append(f"bound_{name} {bound.value} < N {row.N}")
    if row.alpha > 0 and row.N > math.sqrt(2 * math.pi * math.e) * row.delta_x:
        problems.append(f"N {row.N} > sqrt(2 pi e) delta_x")
    if row.L2 > row.N * (1 + 1e-9):
        problems.append(f"L2 {row.L2} > N {row.N}")
    return problems


def cmd_measure(args, out, err) -> int:
    try:
        spec = PolySpec(args.n, _parse_alpha(args.alpha))
        orders = [parse_order(q) for q in (args.q or ["2"])]
    except (ValueError, ZeroDivisionError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    if any(q == 1 for q in orders):
        err.write("error: the Renyi length needs q != 1\n")
        return EXIT_USAGE
    try:
        row = spreading_row(spec, args.engine, args.precision)
        lengths = [renyi_length(spec, q, args.engine, args.precision, err) for q in orders]
    except ConsistencyError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_NUMERIC
    except (TermBudgetExceeded, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    header = ["n", "alpha", "delta_x", "fisher_length", "renyi_L2", "shannon_N",
              "shannon_N_asymptotic", "b_m0", "bound_m0", "b_joint", "m_joint",
              "bound_joint"] + [f"renyi_L_{fmt_q(q)}" for q in orders]
    values = [row.n, row.alpha, row.delta_x, row.fisher_length, row.L2, row.N,
              row.N_asymptotic, int(row.bound_m0.b), row.bound_m0.value,
              int(row.bound_joint.b), row.bound_joint.m, row.bound_joint.value] + lengths
    write_csv(header, [values], out)
    if args.check:
        problems = check_row(row)
        for p in problems:
            err.write(f"check failed: {p}\n")
        if problems:
            return EXIT_NUMERIC
    return 0


def table_rows(which: int, n_max: int = 10):
    alpha = reference_tables.ALPHA[which]
    mode = reference_tables.MODE[which]
    rows = []
    for n in range(n_max + 1):
        spec = PolySpec(n, alpha)
        bound = optimize_bound(spec, mode)
        rows.append([n, alpha, int(bound.b), bound.m, bound.value, shannon_length(spec).N])
    return rows


TABLE_HEADER = ["n", "alpha", "b_opt", "m_opt", "bound", "shannon_N"]


def table_divergences(which: int, rows) -> list[str]:
    """Differences between computed optima and the reference tables."""
    notes = []
    for row in rows:
        n, b, m = row[0], row[2], row[3]
        ref_b = reference_tables.B_OPT[which][n]
        if b != ref_b:
            notes.append(f"table {which} n={n}: b_opt {b} vs reference {ref_b}")
        if which in reference_tables.M_OPT:
            ref_m = reference_tables.M_OPT[which][n]
            if abs(m - ref_m) > 0.005:
                notes.append(f"table {which} n={n}: m_opt {m:.4f} vs reference {ref_m}")
    return notes


def cmd_table(args, out, err) -> int:
    rows = table_rows(args.which)
    write_csv(TABLE_HEADER, rows, out)
    if args.compare:
        notes = table_divergences(args.which, rows)
        for note in notes:
            err.write(f"divergence: {note}\n")
    return 0


def figure_rows(which: int):
    if which in (1, 2):
        alpha = 0 if which == 1 else 5
        header = ["n", "alpha", "shannon_N", "bound_m0", "bound_joint", "ratio_m0", "ratio_joint"]
        rows = []
        for n in range(11):
            spec = PolySpec(n, alpha)
            N = shannon_length(spec).N
            m0 = optimize_bound(spec, "m-zero").value
            joint = optimize_bound(spec, "joint").value
            rows.append([n, alpha, N, m0, joint, m0 / N, joint / N])
        return header, rows
    if which in (3, 4):
        alpha = 0 if which == 3 else 5
        header = ["n", "alpha", "delta_x", "fisher_length", "renyi_L2", "shannon_N"]
        rows = []
        for n in range(11):
            spec = PolySpec(n, alpha)
            rows.append([n, alpha, standard_deviation(spec), fisher_length(spec),
                         entropic_moment_bell(spec, 2).length, shannon_length(spec).N])
        return header, rows
    if which == 5:
        header = ["alpha", "n", "delta_x", "shannon_N"]
        rows = []
        for alpha in (0, 5):
            for n in range(21):
                spec = PolySpec(n, alpha)
                rows.append([alpha, n, standard_deviation(spec), shannon_length(spec).N])
        return header, rows
    raise ValueError(f"unknown figure {which}")


def cmd_figure(args, out, err) -> int:
    header, rows = figure_rows(args.which)
    write_csv(header, rows, out)
    return 0


def _parse_alpha(text: str):
    value = Fraction(text)
    return int(value) if value.denominator == 1 else float(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laguerre-spread",
        description="Spreading measures of the Rakhmanov density of Laguerre polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    m = sub.add_parser("measure", help="all measures for one (n, alpha)")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--alpha", default="0")
    m.add_argument("--q", action="append", help="Renyi order (2q integer); repeatable")
    m.add_argument("--engine", choices=("algebraic", "bell", "both"), default="both")
    m.add_argument("--precision", choices=("auto", "exact", "float"), default="auto",
                   help="auto: exact rationals when alpha and alpha*q are integers")
    m.add_argument("--check", action="store_true", help="exit 3 if an inequality fails")
    m.set_defaults(func=cmd_measure)

    t = sub.add_parser("table", help="optimal bound parameters for n = 0..10")
    t.add_argument("which", type=int, choices=(1, 2, 3, 4))
    t.add_argument("--compare", action="store_true",
                   help="report divergences from the reference values on stderr")
    t.set_defaults(func=cmd_table)

    f = sub.add_parser("figure", help="data series behind a figure")
    f.add_argument("which", type=int, choices=(1, 2, 3, 4, 5))
    f.set_defaults(func=cmd_figure)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    buffer = io.StringIO()
    code = args.func(args, buffer, err)
    out.write(buffer.getvalue())
    out.flush()
    return code


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
