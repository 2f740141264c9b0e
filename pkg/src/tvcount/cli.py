"""Command-line interface.

Subcommands: count, class, transvect, table, selftest.
Exit codes: 0 success, 1 usage error, 2 invalid problem, 3 self-test failure.
JSON outputs are a stable envelope {command, inputs, result, warnings} printed
as one canonical line (sorted keys); big integers are decimal strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import traceback
from fractions import Fraction

from .counting import admissible_tuples, degree_of_power_sum_locus, validate
from .cycles import PowerSumProblem, beta_pushforward
from .forms import BinaryForm, transvectant

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_SELFTEST = 3

# known exact degrees exercised by `selftest`
KNOWN_COUNTS = (
    (2, 3, 3, 2, 40),
    (4, 6, 3, 2, 3762),
    (3, 5, 5, 3, 29822),
    (4, 10, 5, 2, 626327),
)

DEGENERATE_WARNING = "a = 1 or b = 1: the locus is the whole space; the reported number is still the raw intersection product"


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1 (argparse defaults to 2, which is reserved for invalid problems)
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _print_envelope(command: str, inputs: dict, result, warnings: list[str]) -> None:
    envelope = {"command": command, "inputs": inputs, "result": result, "warnings": warnings}
    print(json.dumps(envelope, sort_keys=True))


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _count_payload(problem: PowerSumProblem, degree: int) -> dict:
    return {
        "m": problem.m,
        "n": problem.n,
        "a": problem.a,
        "b": problem.b,
        "d": problem.d,
        "gcd": problem.gcd,
        "degree": str(degree),
    }


def cmd_count(args) -> int:
    inputs = {k: getattr(args, k) for k in ("m", "n", "a", "b", "d") if getattr(args, k) is not None}
    if args.d is not None:
        if args.m is not None or args.n is not None:
            return _fail("give either --m/--n or --d, not both", EXIT_USAGE)
        if args.d % args.a or args.d % args.b:
            return _fail(f"d = {args.d} is not divisible by both a = {args.a} and b = {args.b}", EXIT_INVALID)
        m, n = args.d // args.a, args.d // args.b
    else:
        if args.m is None or args.n is None:
            return _fail("need --m and --n (or --d)", EXIT_USAGE)
        m, n = args.m, args.n
    try:
        problem = validate(m, n, args.a, args.b)
    except ValueError as exc:
        return _fail(str(exc), EXIT_INVALID)
    degree = degree_of_power_sum_locus(problem)
    warnings = [DEGENERATE_WARNING] if problem.degenerate else []
    if args.json:
        _print_envelope("count", inputs, _count_payload(problem, degree), warnings)
    else:
        for w in warnings:
            print(f"warning: {w}", file=sys.stderr)
        print(degree)
    return EXIT_OK


def cmd_class(args) -> int:
    try:
        cls = beta_pushforward(args.m, args.n)
    except ValueError as exc:
        return _fail(str(exc), EXIT_INVALID)
    if args.format == "json":
        _print_envelope("class", {"m": args.m, "n": args.n}, cls.to_dict(), [])
    elif args.format == "latex":
        print(cls.to_latex())
    else:
        print(cls)
    return EXIT_OK


def _parse_form(text: str) -> BinaryForm:
    coeffs = [Fraction(part.strip()) for part in text.split(",")]
    return BinaryForm(len(coeffs) - 1, coeffs)


def cmd_transvect(args) -> int:
    try:
        f = _parse_form(args.f)
        g = _parse_form(args.g)
    except (ValueError, ZeroDivisionError) as exc:
        return _fail(f"malformed coefficient list: {exc}", EXIT_USAGE)
    if args.binomial:
        f = BinaryForm.from_binomial(f.degree, f.coeffs)
        g = BinaryForm.from_binomial(g.degree, g.coeffs)
    try:
        t = transvectant(f, g)
    except ValueError as exc:
        return _fail(str(exc), EXIT_INVALID)
    if args.json:
        inputs = {"f": args.f, "g": args.g, "binomial": bool(args.binomial)}
        _print_envelope("transvect", inputs, t.to_dict(), [])
    else:
        print(",".join(str(c) for c in t.coeffs))
    return EXIT_OK


def _table_row(problem: PowerSumProblem) -> tuple[int, int, int, int, int, int, int]:
    return (
        problem.d,
        problem.a,
        problem.b,
        problem.m,
        problem.n,
        problem.gcd,
        degree_of_power_sum_locus(problem),
    )


def _worker_cap(n_jobs: int) -> int:
    raw = os.environ.get("TVCOUNT_THREADS", "").strip()
    if not raw:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        print(f"warning: ignoring non-integer TVCOUNT_THREADS={raw!r}", file=sys.stderr)
        return 1
    if cap <= 0:
        return 1
    return min(cap, n_jobs)


def cmd_table(args) -> int:
    problems = admissible_tuples(args.max_d)
    workers = _worker_cap(len(problems)) if problems else 1
    if workers > 1:
        try:
            from concurrent.futures import ProcessPoolExecutor

            with ProcessPoolExecutor(max_workers=workers) as pool:
                rows = list(pool.map(_table_row, problems))
        except OSError as exc:
            print(f"warning: parallel evaluation unavailable ({exc}); running serially", file=sys.stderr)
            rows = [_table_row(p) for p in problems]
    else:
        rows = [_table_row(p) for p in problems]
    rows.sort(key=lambda r: (r[0], r[1], r[2]))

    header = ("d", "a", "b", "m", "n", "gcd", "degree")
    if args.csv:
        print(",".join(header))
        for row in rows:
            print(",".join(str(v) for v in row))
    else:
        cells = [header] + [tuple(str(v) for v in row) for row in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
        for r in cells:
            print("  ".join(v.rjust(w) for v, w in zip(r, widths)))
    return EXIT_OK


def cmd_selftest(args) -> int:
    failures = 0
    for m, n, a, b, expected in KNOWN_COUNTS:
        got = degree_of_power_sum_locus(validate(m, n, a, b))
        status = "PASS" if got == expected else "FAIL"
        if got != expected:
            failures += 1
        print(f"{status} (m,n,a,b)=({m},{n},{a},{b}): expected {expected}, got {got}")
    return EXIT_OK if failures == 0 else EXIT_SELFTEST


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="tvcount",
        description="Exact degree of the locus of degree-d binary forms expressible as f^a + g^b.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_count = sub.add_parser("count", help="degree of the f^a + g^b locus")
    p_count.add_argument("--m", type=int, help="degree of f (with --n; or use --d)")
    p_count.add_argument("--n", type=int, help="degree of g")
    p_count.add_argument("--a", type=int, required=True, help="first power")
    p_count.add_argument("--b", type=int, required=True, help="second power")
    p_count.add_argument("--d", type=int, help="total degree; sets m = d/a, n = d/b")
    p_count.add_argument("--json", action="store_true", help="print a JSON envelope")
    p_count.set_defaults(func=cmd_count)

    p_class = sub.add_parser("class", help="pushed-forward fundamental class for (m, n)")
    p_class.add_argument("--m", type=int, required=True)
    p_class.add_argument("--n", type=int, required=True)
    p_class.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p_class.set_defaults(func=cmd_class)

    p_tv = sub.add_parser("transvect", help="first transvectant of two binary forms")
    p_tv.add_argument("--f", required=True, help="comma-separated rational coefficients, x-descending")
    p_tv.add_argument("--g", required=True, help="comma-separated rational coefficients, x-descending")
    p_tv.add_argument("--binomial", action="store_true", help="interpret inputs in the binomially weighted basis")
    p_tv.add_argument("--json", action="store_true", help="print a JSON envelope")
    p_tv.set_defaults(func=cmd_transvect)

    p_table = sub.add_parser(
        "table",
        help="degrees for every admissible (d, a, b) with d <= N",
        description="Rows cover a >= 2, b >= 2, a | d, b | d with gcd(d/a, d/b) in {1, 2}, "
        "deduplicated under (a, b) <-> (b, a) since the count is symmetric; "
        "TVCOUNT_THREADS caps parallel evaluation (0 or unset = automatic).",
    )
    p_table.add_argument("--max-d", type=int, required=True, dest="max_d")
    p_table.add_argument("--csv", action="store_true", help="emit CSV (d,a,b,m,n,gcd,degree)")
    p_table.set_defaults(func=cmd_table)

    p_self = sub.add_parser("selftest", help="recompute the known classical counts")
    p_self.set_defaults(func=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except Exception:
        traceback.print_exc()
        return EXIT_SELFTEST



def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
