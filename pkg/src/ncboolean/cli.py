"""Command line front-end: census, conversions, anticommutator solver, density table."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .anticommutator import FILTERS, anticommutator_boolean, census
from .cumulants import CumulantSequence, FreeModel, MomentSequence, convert, fraction_str, to_fraction
from .density import sample_grid, verify_density
from .distributions import AtomicDistribution
from .errors import InputError, NCBooleanError
from .partitions import (
    MAX_ACF,
    Coloring,
    enumerate_ac_friendly,
    enumerate_interval,
    enumerate_nc,
    enumerate_nc_colored,
)
from .series import (
    RationalSeries,
    moments_from_eta,
    solve_anticommutator_general,
    solve_anticommutator_same,
    sqrt,
)

MAX_AC_ORDER = 24
CHECK_TWO_N = 8


def census_series(order):
    """Coefficients 1..order of 1/2 - sqrt((1-8z)(1-2z-sqrt(1-8z))/(8z))."""
    w = order + 1  # one extra degree is lost dividing by z
    r = sqrt(RationalSeries([1, -8] + [0] * (w - 1)))
    inner = RationalSeries([1, -2] + [0] * (w - 1)) - r
    inner = RationalSeries._raw(inner.coeffs[1:]) * Fraction(1, 8)
    x = RationalSeries([1, -8] + [0] * (order - 1)) * inner
    return list((Fraction(1, 2) - sqrt(x)).coeffs[1:])


def _series_prediction(two_n, filt):
    n = two_n // 2
    if filt == "all":
        return census_series(n)[n - 1]
    # pairings: eta = z^2, even blocks: eta = z^2/(1-z^2); the weight of every
    # admissible partition is 1, so half the cumulant counts them
    coeffs = [0] * (2 * n + 1)
    for k in range(2, 2 * n + 1, 2):
        coeffs[k] = 1 if (filt == "even-blocks" or k == 2) else 0
    sol = solve_anticommutator_same(RationalSeries(coeffs), n)
    return sol.eta_ac.coeffs[n] / 2


def _emit(text, out):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows_csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _dump(obj):
    return json.dumps(obj, indent=2) + "\n"


def run_count(args):
    ok = True
    rows = []
    for two_n in args.acf:  # validate every size before counting any
        if two_n > MAX_ACF:
            raise InputError(f"2N = {two_n} exceeds the enumeration limit {MAX_ACF}")
    for two_n in args.acf:
        count = census(two_n, args.filter)
        row = {"two_n": two_n, "filter": args.filter, "count": count}
        if args.check:
            pred = _series_prediction(two_n, args.filter)
            row["predicted"] = fraction_str(pred)
            row["verdict"] = "MATCH" if pred == count else "MISMATCH"
            ok &= pred == count
        rows.append(row)
    if args.format == "csv":
        header = list(rows[0].keys())
        _emit(_rows_csv(header, [[r[h] for h in header] for r in rows]), args.out)
    else:
        _emit(_dump(rows), args.out)
    return 0 if ok else 1


def run_enumerate(args):
    if args.nc is not None:
        parts = enumerate_nc(args.nc)
    elif args.interval is not None:
        parts = enumerate_interval(args.interval)
    elif args.acf is not None:
        parts = enumerate_ac_friendly(args.acf)
    else:
        cols = Coloring(tuple(int(x) for x in args.colored.split(",")))
        parts = enumerate_nc_colored(cols.m, cols)
    if args.format == "csv":
        _emit("".join(f"{p}\n" for p in parts), args.out)
    else:
        _emit(_dump([p.to_lists() for p in parts]), args.out)
    return 0


def _read_values(args):
    if args.values is not None:
        vals = [v for v in args.values.split(",") if v.strip()]
    else:
        with open(args.input) as fh:
            data = json.load(fh)
        vals = data["values"] if isinstance(data, dict) else data
    vals = [to_fraction(v) for v in vals]
    if args.order is not None:
        if args.order > len(vals):
            raise InputError(f"order {args.order} exceeds the {len(vals)} input values")
        vals = vals[: args.order]
    if not vals:
        raise InputError("no input values")
    return vals


def run_convert(args):
    vals = _read_values(args)
    src = MomentSequence(tuple(vals)) if args.source == "moments" else CumulantSequence(tuple(vals), args.source)
    res = convert(src, args.source, args.target)
    _emit(_dump({"kind": args.target, "values": [fraction_str(v) for v in res.values]}), args.out)
    return 0


def _eta_input(atoms, eta, work):
    if atoms is not None:
        return AtomicDistribution.parse(atoms).eta(work)
    if eta is not None:
        vals = [to_fraction(v) for v in eta.split(",") if v.strip()]
        # a finite list is a polynomial eta series
        vals = vals[:work] + [Fraction(0)] * max(0, work - len(vals))
        return RationalSeries([0, *vals])
    return None


def run_anticommutator(args):
    n = args.order
    if not 1 <= n <= MAX_AC_ORDER:
        raise InputError(f"order must lie in 1..{MAX_AC_ORDER}")
    work = 2 * n
    ea = _eta_input(args.a, args.eta_a, work)
    if ea is None:
        raise InputError("distribution of a is required (--a or --eta-a)")
    eb = _eta_input(args.b, args.eta_b, work)
    if eb is None:
        sol = solve_anticommutator_same(ea, n)
        eb = ea
    else:
        sol = solve_anticommutator_general(ea, eb, n)
    out = {
        "order": n,
        "eta_ac": sol.eta_ac.to_json()["coefficients"],
        "moments": moments_from_eta(sol.eta_ac).to_json(),
    }
    if args.matrices:
        out["F_a"] = sol.F_a.to_json()
        if sol.F_b is not None:
            out["F_b"] = sol.F_b.to_json()
    ok = True
    if args.check:
        top = min(n, CHECK_TWO_N // 2)
        model = FreeModel.pair(
            CumulantSequence(ea.coeffs[1: top + 1], "boolean"),
            CumulantSequence(eb.coeffs[1: top + 1], "boolean"),
        )
        comb = [anticommutator_boolean(model, k) for k in range(1, top + 1)]
        ok = comb == list(sol.eta_ac.coeffs[1: top + 1])
        out["cross_check"] = {"orders": top, "combinatorial": [fraction_str(c) for c in comb], "match": ok}
    _emit(_dump(out), args.out)
    return 0 if ok else 1


def run_density(args):
    grid = sample_grid(args.samples)
    _emit(_rows_csv(["x", "f(x)"], [[repr(x), repr(y)] for x, y in grid]), args.out)
    ok = True
    if args.check:
        report = verify_density(args.order)
        stream = sys.stdout if args.out else sys.stderr
        stream.write("\n".join(report.lines()) + "\n")
        ok = report.passed
    return 0 if ok else 1


def _even_int(text):
    v = int(text)
    if v < 2 or v % 2:
        raise argparse.ArgumentTypeError(f"{text} is not a positive even integer")
    return v


def build_parser():
    p = argparse.ArgumentParser(prog="ncboolean", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=True):
        if fmt:
            sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--out", help="output file (default: stdout)")

    c = sub.add_parser("count", help="count ac-friendly partitions")
    c.add_argument("--acf", type=_even_int, nargs="+", required=True, metavar="2N")
    c.add_argument("--filter", choices=FILTERS, default="all")
    c.add_argument("--check", action=argparse.BooleanOptionalAction, default=True,
                   help="compare with the generating-series prediction")
    common(c)
    c.set_defaults(func=run_count)

    e = sub.add_parser("enumerate", help="list partitions")
    g = e.add_mutually_exclusive_group(required=True)
    g.add_argument("--nc", type=int)
    g.add_argument("--interval", type=int)
    g.add_argument("--acf", type=_even_int)
    g.add_argument("--colored", help="comma separated colours, e.g. 1,2,1")
    common(e)
    e.set_defaults(func=run_enumerate)

    v = sub.add_parser("convert", help="convert between moments and cumulants")
    v.add_argument("--from", dest="source", choices=("moments", "boolean", "free"), required=True)
    v.add_argument("--to", dest="target", choices=("moments", "boolean", "free"), required=True)
    src = v.add_mutually_exclusive_group(required=True)
    src.add_argument("--values", help="comma separated rationals, e.g. 1,2,4,8")
    src.add_argument("--input", help="JSON file: a list or {\"values\": [...]}")
    v.add_argument("--order", type=int)
    common(v, fmt=False)
    v.set_defaults(func=run_convert)

    a = sub.add_parser("anticommutator", help="eta series of ab + ba")
    a.add_argument("--a", help="atoms of a, e.g. 0:1/2,2:1/2")
    a.add_argument("--b", help="atoms of b (default: same law as a)")
    a.add_argument("--eta-a", help="eta coefficients of a from degree 1")
    a.add_argument("--eta-b", help="eta coefficients of b from degree 1")
    a.add_argument("--order", type=int, default=8)
    a.add_argument("--matrices", action="store_true", help="include the F matrices")
    a.add_argument("--check", action=argparse.BooleanOptionalAction, default=True,
                   help="compare low orders with the ac-friendly partition sum")
    common(a, fmt=False)
    a.set_defaults(func=run_anticommutator)

    d = sub.add_parser("density", help="sample the density of ab + ba for the (delta_0 + delta_2)/2 law")
    d.add_argument("--samples", type=int, default=200)
    d.add_argument("--order", type=int, default=6, help="highest moment checked")
    d.add_argument("--check", action=argparse.BooleanOptionalAction, default=True)
    common(d, fmt=False)
    d.set_defaults(func=run_density)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NCBooleanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
