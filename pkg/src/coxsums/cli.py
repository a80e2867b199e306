"""Command-line front end.

    cox info E8
    cox exponents I2(7)
    cox powersum E8 -n 2 --method all
    cox heights A2 -n 2
    cox table --types E6,E7,E8 --format latex
    cox verify --suite all --max-rank 12 --max-m 30 --n-max 12 --seed 42

Exit codes: 0 success, 1 verification or cross-method failure, 2 usage
error.  Machine output renders rationals as "a/b" strings (integers as
plain numbers) so no value ever passes through floating point.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import powersums as _powersums
from .catalog import (
    PROFILES,
    catalog,
    dual_partition,
    exponents,
    normalize,
    parameters,
    parse_type,
)
from . import verify as _verify
from .errors import CoxError

FORMATS = ("pretty", "json", "csv", "latex")


def _rational(value: Fraction | int):
    """JSON-facing value: plain int when integral, 'a/b' string otherwise."""
    f = Fraction(value)
    if f.denominator == 1:
        return int(f)
    return f"{f.numerator}/{f.denominator}"


def _text(value) -> str:
    if isinstance(value, (Fraction, int)):
        return str(_rational(value))
    if isinstance(value, (list, tuple)):
        return " ".join(_text(v) for v in value)
    return str(value)


@dataclass
class OutputDocument:
    columns: list[str]
    rows: list[dict]
    kv_pretty: bool = False  # render pretty format as key: value lines

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self._render_json()
        if fmt == "csv":
            return self._render_csv()
        if fmt == "latex":
            return self._render_latex()
        return self._render_pretty()

    def _json_value(self, value):
        if isinstance(value, (Fraction, int)):
            return _rational(value)
        if isinstance(value, (list, tuple)):
            return [self._json_value(v) for v in value]
        return value

    def _render_json(self) -> str:
        payload = [
            {col: self._json_value(row[col]) for col in self.columns}
            for row in self.rows
        ]
        if self.kv_pretty and len(payload) == 1:
            return json.dumps(payload[0], indent=2)
        return json.dumps(payload, indent=2)

    def _render_csv(self) -> str:
        lines = [",".join(self.columns)]
        for row in self.rows:
            lines.append(",".join(_text(row[col]) for col in self.columns))
        return "\n".join(lines)

    def _render_latex(self) -> str:
        columns = self.columns
        merged = [c for c in columns if c not in ("A", "B", "alpha", "beta")]
        if "A" in columns and "B" in columns:
            idx = merged.index("d") + 1 if "d" in merged else len(merged)
            merged[idx:idx] = ["A,B", "alpha,beta"]
        header = {
            "type": "type",
            "r": "$r$",
            "h": "$h$",
            "gamma": "$\\gamma$",
            "d": "$d$",
            "nu": "$\\nu$",
            "A,B": "$A,B$",
            "alpha,beta": "$\\alpha,\\beta$",
        }
        lines = [
            "\\begin{tabular}{l" + "r" * (len(merged) - 1) + "}",
            "\\hline",
            " & ".join(header.get(c, c.replace("_", "\\_")) for c in merged) + " \\\\",
            "\\hline",
        ]
        for row in self.rows:
            cells = []
            for col in merged:
                if col == "A,B":
                    cells.append(f"{_text(row['A'])},{_text(row['B'])}")
                elif col == "alpha,beta":
                    cells.append(f"{_text(row['alpha'])},{_text(row['beta'])}")
                else:
                    cells.append(_text(row[col]))
            lines.append(" & ".join(cells) + " \\\\")
        lines += ["\\hline", "\\end{tabular}"]
        return "\n".join(lines)

    def _render_pretty(self) -> str:
        if self.kv_pretty:
            lines = []
            for row in self.rows:
                for col in self.columns:
                    lines.append(f"{col}: {_text(row[col])}")
            return "\n".join(lines)
        table = [self.columns] + [
            [_text(row[col]) for col in self.columns] for row in self.rows
        ]
        widths = [max(len(line[i]) for line in table) for i in range(len(self.columns))]
        return "\n".join(
            "  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip()
            for line in table
        )


def _parse_beta(text: str | None) -> Fraction | None:
    if text is None:
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise CoxError(f"bad rational {text!r}: {e}") from None


def _profile_arg(args) -> str | None:
    return getattr(args, "profile", None)


# -- commands ----------------------------------------------------------------


def _cmd_info(args) -> int:
    t = normalize(parse_type(args.type))
    ps = parameters(t, _profile_arg(args), _parse_beta(args.beta))
    exps = exponents(t)
    dual = dual_partition(exps)
    row = {
        "type": t.name,
        "profile": _profile_arg(args) or "default",
        "r": ps.r,
        "h": ps.h,
        "gamma": ps.gamma,
        "d": ps.d,
        "nu": ps.nu,
        "alpha": ps.alpha,
        "beta": ps.beta,
        "A": ps.A,
        "B": ps.B,
        "V_plus": list(ps.V_plus),
        "V_minus": list(ps.V_minus),
        "exponents": list(exps.values),
        "dual_partition": list(dual.counts),
    }
    doc = OutputDocument(list(row), [row], kv_pretty=True)
    print(doc.render(args.format))
    return 0


def _cmd_exponents(args) -> int:
    t = normalize(parse_type(args.type))
    exps = exponents(t)
    dual = dual_partition(exps)
    row = {
        "type": t.name,
        "r": exps.rank,
        "h": exps.coxeter_number,
        "exponents": list(exps.values),
        "dual_partition": list(dual.counts),
    }
    doc = OutputDocument(list(row), [row], kv_pretty=True)
    print(doc.render(args.format))
    return 0


def _cmd_powersum(args) -> int:
    t = normalize(parse_type(args.type))
    if args.n < 0:
        raise CoxError("n must be >= 0")
    if args.p < 1:
        raise CoxError("p must be >= 1")
    if args.method == "closed" and args.n > 5:
        raise CoxError("the closed method needs n <= 5")
    params = parameters(t, _profile_arg(args), _parse_beta(args.beta))
    methods = []
    if args.method in ("direct", "all"):
        methods.append("direct")
    if args.method in ("todd", "all"):
        methods.append("todd")
    if args.method in ("closed", "all") and args.n <= 5:
        methods.append("closed")
    rows = []
    for method in methods:
        if method == "direct":
            res = _powersums.powersum_direct(t, args.n)
        elif method == "todd":
            res = _powersums.powersum_todd(t, args.n, args.p, params=params)
        else:
            res = _powersums.powersum_closed(t, args.n, params=params)
        rows.append(
            {
                "type": t.name,
                "n": args.n,
                "method": method,
                "p": args.p if method == "todd" else "",
                "value": res.value,
            }
        )
    doc = OutputDocument(["type", "n", "method", "p", "value"], rows)
    print(doc.render(args.format))
    values = {row["value"] for row in rows}
    if len(values) > 1:
        print("error: methods disagree", file=sys.stderr)
        return 1
    return 0


def _cmd_heights(args) -> int:
    t = normalize(parse_type(args.type))
    if args.n < 0:
        raise CoxError("n must be >= 0")
    if args.method == "closed" and args.n > 4:
        raise CoxError("the closed method needs n <= 4")
    params = parameters(t, _profile_arg(args), _parse_beta(args.beta))
    note = "" if t.is_crystallographic else "formal height sum"
    methods = []
    if args.method in ("direct", "all"):
        methods.append("direct")
    if args.method in ("closed", "all") and args.n <= 4:
        methods.append("closed")
    rows = []
    for method in methods:
        if method == "direct":
            res = _powersums.heightsum_direct(t, args.n)
        else:
            res = _powersums.heightsum_closed(t, args.n, params=params)
        rows.append(
            {
                "type": t.name,
                "n": args.n,
                "method": method,
                "value": res.value,
                "note": note,
            }
        )
    doc = OutputDocument(["type", "n", "method", "value", "note"], rows)
    print(doc.render(args.format))
    values = {row["value"] for row in rows}
    if len(values) > 1:
        print("error: methods disagree", file=sys.stderr)
        return 1
    return 0


def _cmd_table(args) -> int:
    if args.types:
        types = [
            normalize(parse_type(s)) for s in args.types.split(",")
        ]
    elif args.all:
        types = catalog(args.max_rank, args.max_m)
    else:
        raise CoxError("need --types or --all")
    if args.n_max < 0:
        raise CoxError("n-max must be >= 0")
    beta = _parse_beta(args.beta)
    columns = ["type", "r", "h", "gamma", "d", "nu", "alpha", "beta", "A", "B"]
    columns += [f"S{n}" for n in range(args.n_max + 1)]
    rows = []
    for t in types:
        ps = parameters(t, _profile_arg(args), beta)
        row = {
            "type": t.name,
            "r": ps.r,
            "h": ps.h,
            "gamma": ps.gamma,
            "d": ps.d,
            "nu": ps.nu,
            "alpha": ps.alpha,
            "beta": ps.beta,
            "A": ps.A,
            "B": ps.B,
        }
        for n in range(args.n_max + 1):
            row[f"S{n}"] = _powersums.powersum_direct(t, n).value
        rows.append(row)
    doc = OutputDocument(columns, rows)
    print(doc.render(args.format))
    return 0


def _cmd_verify(args) -> int:
    if args.jobs < 1:
        raise CoxError("jobs must be >= 1")
    suites = None if args.suite == "all" else [args.suite]
    tasks = _verify.build_tasks(
        max_rank=args.max_rank,
        max_m=args.max_m,
        n_max=args.n_max,
        seed=args.seed,
        suites=suites,
    )
    print(
        f"verify: suites={args.suite} max-rank={args.max_rank} "
        f"max-m={args.max_m} n-max={args.n_max} seed={args.seed}"
    )
    if args.jobs == 1:
        reports = [task() for _, _, task in tasks]
    else:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(lambda task: task[2](), tasks))
    single_suite = suites is not None
    by_suite: dict[str, list] = {}
    for report in reports:
        by_suite.setdefault(report.suite, []).append(report)
        if single_suite:
            status = "PASS" if report.passed else "FAIL"
            print(f"{report.suite} {report.subject}: {status}")
    failed_total = 0
    for suite, suite_reports in by_suite.items():
        failed = [rep for rep in suite_reports if not rep.passed]
        failed_total += len(failed)
        if failed:
            print(f"{suite}: FAIL ({len(failed)}/{len(suite_reports)} checks failed)")
            print(f"  witness: {failed[0].subject}: {failed[0].witness}")
        else:
            print(f"{suite}: PASS ({len(suite_reports)} checks)")
    if failed_total:
        print(f"{failed_total} check(s) failed")
        return 1
    print("all checks passed")
    return 0


# -- parser -------------------------------------------------------------------


def _add_format(parser) -> None:
    parser.add_argument("--format", choices=FORMATS, default="pretty")


def _add_profile_beta(parser) -> None:
    parser.add_argument(
        "--profile", choices=PROFILES, default=None,
        help="parameter profile (default: standard, redefined for plain I2)",
    )
    parser.add_argument(
        "--beta", default=None, metavar="RAT",
        help="override the arbitrary beta slot (rational, e.g. 7/2)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cox",
        description="Exact power sums of Coxeter exponents and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="parameters, exponents and dual partition")
    p.add_argument("type")
    _add_profile_beta(p)
    _add_format(p)
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("exponents", help="exponent list and dual partition")
    p.add_argument("type")
    _add_format(p)
    p.set_defaults(func=_cmd_exponents)

    p = sub.add_parser("powersum", help="sum of n-th powers of the exponents")
    p.add_argument("type")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--method", choices=("direct", "todd", "closed", "all"), default="all")
    p.add_argument("--p", type=int, default=1, help="free parameter of the todd method")
    _add_profile_beta(p)
    _add_format(p)
    p.set_defaults(func=_cmd_powersum)

    p = sub.add_parser("heights", help="sum of n-th powers of root heights")
    p.add_argument("type")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--method", choices=("direct", "closed", "all"), default="all")
    _add_profile_beta(p)
    _add_format(p)
    p.set_defaults(func=_cmd_heights)

    p = sub.add_parser("table", help="parameter and power-sum table")
    p.add_argument("--types", default=None, help="comma-separated type labels")
    p.add_argument("--all", action="store_true", help="every catalog type")
    p.add_argument("--max-rank", type=int, default=12)
    p.add_argument("--max-m", type=int, default=30)
    p.add_argument("--n-max", type=int, default=3)
    _add_profile_beta(p)
    _add_format(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="run identity verification suites")
    p.add_argument(
        "--suite", choices=("all",) + _verify.SUITE_NAMES, default="all"
    )
    p.add_argument("--max-rank", type=int, default=12)
    p.add_argument("--max-m", type=int, default=30)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument(
        "--seed", type=int, default=int(os.environ.get("COX_SEED", "42"))
    )
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (CoxError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # exit codes are pinned to {0, 1, 2}
        print(f"internal error: {e!r}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
