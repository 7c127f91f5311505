"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 oracle cap exceeded, 4 order violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import partitions as P
from .spectrum import (
    ORACLE_CAP,
    ROUTES,
    TooLarge,
    eta_new,
    sign,
    spectrum_table,
)
from .verify import SUITES

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_ORACLE_CAP = 3
EXIT_ORDER = 4

MAX_LISTED_FAILURES = 20


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _parse_or_none(text: str):
    try:
        return P.parse(text)
    except P.PartitionError as exc:
        _err(f"cannot parse {text!r}: {exc}")
        return None


def _signed(x: int) -> str:
    return f"{x:+d}" if x else "0"


# ---------------------------------------------------------------------------
# eig

def cmd_eig(args: argparse.Namespace) -> int:
    lam = _parse_or_none(args.partition)
    if lam is None:
        return EXIT_USAGE
    n = sum(lam)
    if args.method == "auto":
        values = {name: ROUTES[name](lam) for name in ("new", "renteln", "schur")}
        eta = values["new"]
        agree = len(set(values.values())) == 1
    else:
        try:
            if args.method == "character":
                eta = ROUTES["character"](lam, cap=args.oracle_cap)
            else:
                eta = ROUTES[args.method](lam)
        except TooLarge as exc:
            _err(f"{exc}; use a recurrence method instead")
            return EXIT_ORACLE_CAP
        agree = True
    print(f"partition: {P.format(lam, 'exponent')}")
    print(f"n: {n}")
    print(f"eta: {eta}")
    print(f"sign: {_signed(sign(eta))}")
    print(f"multiplicity: {P.dim(lam) ** 2}")
    if args.method == "auto":
        listing = ", ".join(f"{k}={v}" for k, v in values.items())
        print(f"routes: {listing} ({'agree' if agree else 'DISAGREE'})")
    else:
        print(f"method: {args.method}")
    return EXIT_OK if agree else EXIT_FAILED


# ---------------------------------------------------------------------------
# table

def _coverage(min_first_part: int | None) -> str:
    return "full" if min_first_part is None else f"first-part-at-least {min_first_part}"


def render_text(n: int, coverage: str, entries) -> str:
    rows = [(P.format(e.partition, "exponent"), str(e.eta), _signed(e.sign), str(e.multiplicity))
            for e in entries]
    head = ("partition", "eta", "sign", "multiplicity")
    widths = [max(len(r[i]) for r in rows + [head]) for i in range(4)]
    lines = [f"# n={n} coverage={coverage}"]
    for r in [head] + rows:
        lines.append("  ".join([r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:], widths[1:])]))
    return "\n".join(lines) + "\n"


def render_csv(n: int, entries) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "partition", "eta", "sign", "multiplicity"])
    for e in entries:
        writer.writerow([n, P.format(e.partition, "exponent"), e.eta, e.sign, e.multiplicity])
    return buf.getvalue()


def render_json(n: int, coverage: str, entries) -> str:
    doc = {
        "n": n,
        "coverage": coverage,
        "entries": [
            {
                "partition": list(e.partition),
                "eta": str(e.eta),
                "sign": e.sign,
                "multiplicity": str(e.multiplicity),
            }
            for e in entries
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def cmd_table(args: argparse.Namespace) -> int:
    entries = spectrum_table(args.n, args.min_first_part, jobs=args.jobs)
    coverage = _coverage(args.min_first_part)
    if args.format == "csv":
        out = render_csv(args.n, entries)
    elif args.format == "json":
        out = render_json(args.n, coverage, entries)
    else:
        out = render_text(args.n, coverage, entries)
    sys.stdout.write(out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify

def cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = False
    for name in names:
        kwargs = {}
        if args.max_n is not None:
            kwargs["max_n"] = min(args.max_n, 15) if name == "tables" and args.suite == "all" else args.max_n
        if name == "cross":
            kwargs["oracle_cap"] = args.oracle_cap
        start = time.perf_counter()
        try:
            report = SUITES[name](**kwargs)
        except ValueError as exc:
            _err(str(exc))
            return EXIT_USAGE
        elapsed = time.perf_counter() - start
        status = "ok" if report.passed else "FAILED"
        print(f"{name}: {report.cases} cases, {len(report.failures)} failures, "
              f"{elapsed:.2f}s [{status}]")
        for note in report.notes:
            print(f"  note: {note}")
        for failure in report.failures[:MAX_LISTED_FAILURES]:
            print(f"  fail: {failure}")
        if len(report.failures) > MAX_LISTED_FAILURES:
            print(f"  ... {len(report.failures) - MAX_LISTED_FAILURES} more")
        failed = failed or not report.passed
    return EXIT_FAILED if failed else EXIT_OK


# ---------------------------------------------------------------------------
# chain

def cmd_chain(args: argparse.Namespace) -> int:
    start = _parse_or_none(args.source)
    end = _parse_or_none(args.target)
    if start is None or end is None:
        return EXIT_USAGE
    try:
        chain = P.dominance_chain(start, end)
    except P.SizeMismatch as exc:
        _err(str(exc))
        return EXIT_USAGE
    except P.NotComparable as exc:
        _err(str(exc))
        return EXIT_ORDER
    same_first = bool(start) and start[0] == end[0]
    for i, p in enumerate(chain):
        line = f"{i:>3}  {P.format(p, 'exponent')}"
        if same_first:
            line += f"  |eta|={abs(eta_new(p))}"
        if i:
            m1, m2 = P.one_move(chain[i - 1], p)
            line += f"  move=({m1},{m2})"
        print(line)
    print(f"length: {len(chain) - 1}")
    return EXIT_OK


# ---------------------------------------------------------------------------

def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="derangement-spectrum",
        description="Exact eigenvalues of the derangement graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    eig = sub.add_parser("eig", help="eigenvalue for one partition")
    eig.add_argument("partition", help='e.g. "4,2,1^2" or "()"')
    eig.add_argument("--method", choices=["auto", *ROUTES], default="auto")
    eig.add_argument("--oracle-cap", type=_positive_int, default=ORACLE_CAP)
    eig.set_defaults(func=cmd_eig)

    table = sub.add_parser("table", help="eigenvalues for every partition of n")
    table.add_argument("n", type=_positive_int)
    table.add_argument("--min-first-part", type=_positive_int, default=None)
    table.add_argument("--format", choices=["text", "csv", "json"], default="text")
    table.add_argument("--jobs", type=_positive_int, default=1)
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="run verification suites")
    verify.add_argument("--suite", choices=["all", *SUITES], default="all")
    verify.add_argument("--max-n", type=int, default=None)
    verify.add_argument("--oracle-cap", type=_positive_int, default=10)
    verify.set_defaults(func=cmd_verify)

    chain = sub.add_parser("chain", help="single-box moves between dominance-comparable partitions")
    chain.add_argument("source")
    chain.add_argument("target")
    chain.set_defaults(func=cmd_chain)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
