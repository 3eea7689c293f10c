"""Command-line front end: ``setpeaks {enumerate,total,table,series,stirling,verify}``."""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence, TextIO

from . import closed_form
from .enumeration import PartitionClass, aggregate, iterate_rgs
from .qpoly import QPoly, deriv_q1
from .series import (
    coeff,
    default_order,
    nsp_derivative_series,
    nsp_series,
    sp_derivative_series,
    sp_series,
)
from .stirling import StirlingTable
from .words import format_letters, stats

STATS = ("sym", "nonsym", "peaks")
METHODS = ("closed", "brute", "series")


class UsageError(Exception):
    pass


def _class(n: int, k: int) -> PartitionClass:
    try:
        return PartitionClass(n, k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _formula_class(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise UsageError(f"need 1 <= k <= n, got n={n}, k={k}")


# -- enumerate ---------------------------------------------------------------

def cmd_enumerate(args, out: TextIO) -> int:
    pc = _class(args.n, args.k)
    if args.aggregate:
        totals = aggregate(pc, prefix_depth=args.prefix_split, workers=args.workers)
        out.write(totals.to_json() + "\n")
        return 0
    write = out.write
    if args.stats:
        write("word\tpeaks\tsym\tnonsym\trises\tdescents\trecords\n")
        for w in iterate_rgs(pc):
            s = stats(w)
            write(
                f"{format_letters(w, pc.k)}\t{s.peaks}\t{s.symmetric_peaks}\t"
                f"{s.non_symmetric_peaks}\t{s.rises}\t{s.descents}\t{s.records}\n"
            )
    elif pc.k <= 9:
        for w in iterate_rgs(pc):
            write("".join(map(str, w)) + "\n")
    else:
        for w in iterate_rgs(pc):
            write(",".join(map(str, w)) + "\n")
    return 0


# -- total / table -------------------------------------------------------------

def _brute_total(stat: str, n: int, k: int, prefix_split: int = 0, workers: int | None = None) -> int:
    a = aggregate(n, k, prefix_depth=prefix_split, workers=workers)
    return {"sym": a.total_sym, "nonsym": a.total_nonsym, "peaks": a.total_peaks}[stat]


def _series_total(stat: str, n: int, k: int) -> int:
    if stat == "peaks":
        return _series_total("sym", n, k) + _series_total("nonsym", n, k)
    build = sp_derivative_series if stat == "sym" else nsp_derivative_series
    return coeff(build(k, n), n)


def compute_total(stat: str, n: int, k: int, method: str, prefix_split: int = 0, workers: int | None = None) -> int:
    _formula_class(n, k)
    if method == "closed":
        return closed_form.TOTALS[stat](n, k)
    if method == "brute":
        return _brute_total(stat, n, k, prefix_split, workers)
    if method == "series":
        return _series_total(stat, n, k)
    raise UsageError(f"unknown method {method!r}")


def cmd_total(args, out: TextIO) -> int:
    value = compute_total(args.stat, args.n, args.k, args.method, args.prefix_split, args.workers)
    out.write(f"{value}\n")
    return 0


def triangle(stat: str, n_max: int) -> list[list[int]]:
    f = closed_form.TOTALS[stat]
    return [[f(n, k) for k in range(1, n + 1)] for n in range(1, n_max + 1)]


def cmd_table(args, out: TextIO) -> int:
    if args.nmax < 1:
        raise UsageError("--nmax must be >= 1")
    rows = triangle(args.stat, args.nmax)
    if args.format == "json":
        doc = {
            "stat": args.stat,
            "nmax": args.nmax,
            "rows": [{"n": n, "values": [str(v) for v in row]} for n, row in enumerate(rows, start=1)],
        }
        out.write(json.dumps(doc) + "\n")
    else:
        for n, row in enumerate(rows, start=1):
            out.write("\t".join([str(n), *map(str, row)]) + "\n")
    return 0


# -- series / stirling -----------------------------------------------------------

def cmd_series(args, out: TextIO) -> int:
    if args.k < 0:
        raise UsageError("--k must be nonnegative")
    order = default_order(args.k) if args.order is None else args.order
    if order < args.k:
        raise UsageError(f"--order {order} is below k={args.k}")
    if args.derivative:
        build = sp_derivative_series if args.gf == "sp" else nsp_derivative_series
        s = build(args.k, order)
        cells = [str(c) for c in s.coeffs]
    else:
        build = sp_series if args.gf == "sp" else nsp_series
        s = build(args.k, order)
        cells = [c.format() for c in s.coeffs]
    if args.format == "json":
        if args.derivative:
            payload = cells
        else:
            payload = [[str(v) for v in c] for c in s.coeffs]
        doc = {"gf": args.gf, "k": args.k, "order": order, "derivative": args.derivative, "coefficients": payload}
        out.write(json.dumps(doc) + "\n")
    else:
        for n, cell in enumerate(cells):
            out.write(f"{n}\t{cell}\n")
    return 0


def cmd_stirling(args, out: TextIO) -> int:
    if args.nmax < 0:
        raise UsageError("--nmax must be >= 0")
    t = StirlingTable(args.nmax)
    if args.format == "json":
        out.write(json.dumps({"nmax": args.nmax, "rows": [[str(v) for v in r] for r in t.rows]}) + "\n")
    else:
        out.write(t.to_tsv())
    return 0


# -- verify -------------------------------------------------------------------

@dataclass(frozen=True)
class Mismatch:
    n: int
    k: int
    statistic: str
    method_a: str
    value_a: object
    method_b: str
    value_b: object

    def tsv(self) -> str:
        def show(v):
            return v.format() if isinstance(v, QPoly) else str(v)

        return "\t".join(
            ["MISMATCH", str(self.n), str(self.k), self.statistic,
             self.method_a, show(self.value_a), self.method_b, show(self.value_b)]
        )


@dataclass
class CellResult:
    n: int
    k: int
    count: int
    total_sym: int
    total_nonsym: int
    distributions_checked: bool
    mismatches: list[Mismatch] = field(default_factory=list)


@dataclass
class VerifyReport:
    n_max: int
    results: list[CellResult]
    elapsed: float = 0.0

    @property
    def mismatches(self) -> list[Mismatch]:
        return [m for r in self.results for m in r.mismatches]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_cell(n: int, k: int, compare_distributions: bool, prefix_split: int = 0) -> CellResult:
    brute = aggregate(n, k, prefix_depth=prefix_split)
    order = n
    bad: list[Mismatch] = []

    routes = (
        ("sym", sp_series, sp_derivative_series, closed_form.total_symmetric,
         brute.total_sym, brute.q_distribution_sym),
        ("nonsym", nsp_series, nsp_derivative_series, closed_form.total_non_symmetric,
         brute.total_nonsym, brute.q_distribution_nonsym),
    )
    for stat, product, derivative, closed, brute_total, brute_dist in routes:
        product_coeff = coeff(product(k, order), n)
        candidates = (
            ("closed", closed(n, k)),
            ("series-derivative", coeff(derivative(k, order), n)),
            ("series-product", deriv_q1(product_coeff)),
        )
        for name, value in candidates:
            if value != brute_total:
                bad.append(Mismatch(n, k, stat, "brute", brute_total, name, value))
        if compare_distributions and product_coeff != brute_dist:
            bad.append(Mismatch(n, k, f"{stat}-distribution", "brute", brute_dist, "series-product", product_coeff))
    if closed_form.total_peaks(n, k) != brute.total_peaks:
        bad.append(Mismatch(n, k, "peaks", "brute", brute.total_peaks, "closed", closed_form.total_peaks(n, k)))
    return CellResult(n, k, brute.count, brute.total_sym, brute.total_nonsym, compare_distributions, bad)


def _verify_cell_args(args: tuple) -> CellResult:
    return verify_cell(*args)


def run_verify(
    n_max: int,
    totals_only: bool = False,
    dist_nmax: int = 10,
    prefix_split: int = 0,
    workers: int | None = None,
) -> VerifyReport:
    start = time.perf_counter()
    cells = [
        (n, k, (not totals_only) and n <= dist_nmax, prefix_split)
        for n in range(1, n_max + 1)
        for k in range(1, n + 1)
    ]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_verify_cell_args, cells))
    else:
        results = [verify_cell(*c) for c in cells]
    return VerifyReport(n_max, results, time.perf_counter() - start)


def cmd_verify(args, out: TextIO) -> int:
    if args.nmax < 1:
        raise UsageError("--nmax must be >= 1")
    report = run_verify(args.nmax, args.totals_only, args.dist_nmax, args.prefix_split, args.workers)
    out.write("n\tk\tcount\ttotal_sym\ttotal_nonsym\tdistributions\tstatus\n")
    for r in report.results:
        out.write(
            f"{r.n}\t{r.k}\t{r.count}\t{r.total_sym}\t{r.total_nonsym}\t"
            f"{'checked' if r.distributions_checked else 'skipped'}\t{'ok' if not r.mismatches else 'FAIL'}\n"
        )
    for m in report.mismatches:
        out.write(m.tsv() + "\n")
    out.write(f"classes={len(report.results)}\tmismatches={len(report.mismatches)}\n")
    print(f"verify: elapsed {report.elapsed:.2f}s", file=sys.stderr)
    return 0 if report.ok else 1


# -- entry point ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="setpeaks", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def parallel_flags(sp):
        sp.add_argument("--prefix-split", type=int, default=0, metavar="D",
                        help="split enumeration by RGS prefixes of length D")
        sp.add_argument("--workers", type=int, default=None, help="process pool size")

    e = sub.add_parser("enumerate", help="list every RGS in P(n, k)")
    e.add_argument("n", type=int)
    e.add_argument("k", type=int)
    e.add_argument("--stats", action="store_true", help="append statistic columns (TSV)")
    e.add_argument("--aggregate", action="store_true", help="print the aggregate JSON record instead")
    parallel_flags(e)
    e.set_defaults(func=cmd_enumerate)

    t = sub.add_parser("total", help="total of a statistic over P(n, k)")
    t.add_argument("--stat", choices=STATS, required=True)
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--method", choices=METHODS, default="closed")
    parallel_flags(t)
    t.set_defaults(func=cmd_total)

    tb = sub.add_parser("table", help="triangle of closed-form totals")
    tb.add_argument("--stat", choices=STATS, required=True)
    tb.add_argument("--nmax", type=int, required=True)
    tb.add_argument("--format", choices=("tsv", "json"), default="tsv")
    tb.set_defaults(func=cmd_table)

    s = sub.add_parser("series", help="coefficients of SP_k / NSP_k or their q-derivative at q=1")
    s.add_argument("--gf", choices=("sp", "nsp"), required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--order", type=int, default=None, help="truncation order (default 2k+10)")
    s.add_argument("--format", choices=("tsv", "json"), default="tsv")
    s.add_argument("--derivative", action="store_true")
    s.set_defaults(func=cmd_series)

    st = sub.add_parser("stirling", help="Stirling triangle S(n, k)")
    st.add_argument("--nmax", type=int, required=True)
    st.add_argument("--format", choices=("tsv", "json"), default="tsv")
    st.set_defaults(func=cmd_stirling)

    v = sub.add_parser("verify", help="cross-check brute force, closed forms and series")
    v.add_argument("--nmax", type=int, default=10)
    v.add_argument("--totals-only", action="store_true")
    v.add_argument("--dist-nmax", type=int, default=10,
                   help="compare full q-distributions only for n up to this bound")
    parallel_flags(v)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout if out is None else out
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"setpeaks {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
