"""Command line front end: ``landenkit verify | perimeter | compare``.

Each invocation writes one structured document to stdout (JSON, or CSV for
``compare --format csv``) and a one-line human summary to stderr.  The exit
status is 0 exactly when every contained check passed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from . import ellipse, identities, landen
from .ellipse import BoundedDecimal, EllipseError
from .identities import IdentityCheck
from .landen import VerificationReport

VERIFY_TARGETS = ("lemma1", "lemma2", "vandermonde", "knuth", "absorption", "step1", "step2", "theorem1", "collapse")
DEFAULT_ORDER = 50
TABLE_ROWS = 20


class UsageError(Exception):
    pass


def exact(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


@dataclass
class RunReport:
    command: str
    inputs: dict[str, Any]
    results: list[dict[str, Any]] = field(default_factory=list)
    passed: bool = True
    elapsed_ms: int = 0
    error: dict[str, str] | None = None

    def add(self, rendered: dict[str, Any], ok: bool) -> None:
        self.results.append(rendered)
        self.passed = self.passed and ok

    def to_dict(self) -> dict[str, Any]:
        d = {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "passed": self.passed,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.error is not None:
            d["error"] = self.error
        return d


# ---------------------------------------------------------------- rendering


def render_identity(c: IdentityCheck) -> dict[str, Any]:
    params = {k: (exact(v) if isinstance(v, Fraction) else v) for k, v in c.parameters}
    return {
        "type": "identity",
        "name": c.name,
        "parameters": params,
        "lhs": exact(c.lhs),
        "rhs": exact(c.rhs),
        "holds": c.holds,
    }


def render_verification(r: VerificationReport) -> dict[str, Any]:
    mismatch = None
    if r.first_mismatch is not None:
        i, lhs, rhs = r.first_mismatch
        mismatch = {"exponent": i, "lhs": exact(lhs), "rhs": exact(rhs)}
    return {
        "type": "series",
        "claim": r.claim,
        "order_checked": r.order_checked,
        "passed": r.passed,
        "first_mismatch": mismatch,
    }


def render_bounded(method: str, b: BoundedDecimal) -> dict[str, Any]:
    return {
        "type": "perimeter",
        "method": method,
        "decimal": b.decimal,
        "value": exact(b.value),
        "error_radius": exact(b.error_radius),
        "terms": b.terms,
    }


# ---------------------------------------------------------------- verify


def _lemma2_range(n: int) -> Iterable[IdentityCheck]:
    if n < 1:
        raise UsageError("lemma2 needs --range >= 1 (the sum is defined for n >= 1)")
    return identities.sweep_lemma2(n)


SWEEPS: dict[str, Callable[[int], Iterable]] = {
    "lemma1": lambda n: identities.sweep_lemma1(n),
    "lemma2": _lemma2_range,
    "vandermonde": identities.sweep_vandermonde,
    "knuth": identities.sweep_knuth,
    "absorption": identities.sweep_absorption,
    "step1": lambda n: [landen.verify_step1(n)],
    "step2": lambda n: [landen.verify_step2(n)],
    "theorem1": lambda n: [landen.verify_theorem1(n)],
    "collapse": lambda n: (landen.step2_coefficient_collapse(k) for k in range(n + 1)),
}


def cmd_verify(target: str, order_or_range: int) -> RunReport:
    if order_or_range < 0:
        raise UsageError("--order/--range must be >= 0")
    if target != "all" and target not in SWEEPS:
        raise UsageError(f"unknown target {target!r}")
    targets = VERIFY_TARGETS if target == "all" else (target,)
    # validate every target before running any of them
    sweeps = [SWEEPS[t](order_or_range) for t in targets]
    report = RunReport("verify", {"target": target, "order_or_range": order_or_range})
    for sweep in sweeps:
        for item in sweep:
            if isinstance(item, VerificationReport):
                report.add(render_verification(item), item.passed)
            else:
                report.add(render_identity(item), item.holds)
    return report


# ---------------------------------------------------------------- perimeter / compare


def parse_rational(text: str, name: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{name}: {text!r} is not an exact rational (use p/q or a decimal literal)") from None


def cmd_perimeter(a: str, b: str, digits: int, method: str) -> RunReport:
    if digits < 1:
        raise UsageError("--digits must be >= 1")
    report = RunReport("perimeter", {"a": a, "b": b, "digits": digits, "method": method})
    params = ellipse.params_from_axes(parse_rational(a, "a"), parse_rational(b, "b"))
    values = {}
    for name, fn in (("maclaurin", ellipse.perimeter_maclaurin), ("ivory", ellipse.perimeter_ivory)):
        if method in (name, "both"):
            values[name] = fn(params, digits)
            report.add(render_bounded(name, values[name]), True)
    if method == "both":
        m, i = values["maclaurin"], values["ivory"]
        diff = abs(m.value - i.value)
        allowed = m.error_radius + i.error_radius
        report.add(
            {"type": "agreement", "difference": exact(diff), "allowed": exact(allowed), "holds": diff <= allowed},
            diff <= allowed,
        )
    return report


def _places_for(eps: Fraction) -> int:
    places = 0
    while Fraction(1, 10**places) > eps:
        places += 1
    return places + 6


def comparison_rows(a: str, b: str, eps: str) -> tuple[RunReport, list[dict[str, Any]], list[dict[str, Any]]]:
    """Run the comparison; returns the report plus the summary and coefficient tables."""
    e = parse_rational(eps, "eps")
    if e <= 0:
        raise UsageError("--eps must be > 0")
    params = ellipse.params_from_axes(parse_rational(a, "a"), parse_rational(b, "b"))
    conv = ellipse.compare_convergence(params, e)
    places = _places_for(e)
    # tail bounds are rounded outward so the printed value is still an upper bound
    summary = []
    for method, terms, tail in (
        ("maclaurin", conv.maclaurin_terms, conv.maclaurin_tail),
        ("ivory", conv.ivory_terms, conv.ivory_tail),
    ):
        summary.append(
            {
                "method": method,
                "terms": terms if terms is not None else "unreachable",
                "tail_bound": exact(ellipse.round_up(tail, places)) if tail is not None else None,
            }
        )
    reached = [t for t in (conv.maclaurin_terms, conv.ivory_terms) if t is not None]
    rows = min(max(reached, default=TABLE_ROWS), TABLE_ROWS)
    table = [
        {"n": n, "maclaurin_coeff": exact(landen.maclaurin_coeff(n)), "ivory_coeff": exact(landen.ivory_coeff(n))}
        for n in range(rows)
    ]
    report = RunReport("compare", {"a": a, "b": b, "eps": eps})
    report.add({"type": "convergence", "summary": summary, "coefficients": table}, conv.ivory_terms is not None)
    return report, summary, table


def render_csv(summary: Sequence[dict[str, Any]], table: Sequence[dict[str, Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["method", "terms", "tail_bound"])
    for row in summary:
        w.writerow([row["method"], row["terms"], row["tail_bound"] or ""])
    w.writerow([])
    w.writerow(["n", "maclaurin_coeff", "ivory_coeff"])
    for row in table:
        w.writerow([row["n"], row["maclaurin_coeff"], row["ivory_coeff"]])
    return buf.getvalue()


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="landenkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run an exact identity or series verification")
    v.add_argument("target", choices=VERIFY_TARGETS + ("all",))
    v.add_argument("--order", type=int, help="truncation order for step1/step2/theorem1")
    v.add_argument("--range", type=int, dest="range_", metavar="RANGE", help="sweep limit for the lemma targets")

    p = sub.add_parser("perimeter", help="ellipse perimeter with a proven error radius")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--digits", type=int, default=12)
    p.add_argument("--method", choices=("maclaurin", "ivory", "both"), default="both")

    c = sub.add_parser("compare", help="terms each series needs to reach a tail bound")
    c.add_argument("a")
    c.add_argument("b")
    c.add_argument("--eps", default="1e-10")
    c.add_argument("--format", choices=("json", "csv"), default="json")
    return parser


def _dump(report: RunReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    out = None
    try:
        if args.command == "verify":
            if args.order is not None and args.range_ is not None and args.order != args.range_:
                raise UsageError("--order and --range are the same parameter; give one")
            n = next((x for x in (args.order, args.range_) if x is not None), DEFAULT_ORDER)
            report = cmd_verify(args.target, n)
        elif args.command == "perimeter":
            try:
                report = cmd_perimeter(args.a, args.b, args.digits, args.method)
            except EllipseError as exc:
                report = RunReport(
                    "perimeter", {"a": args.a, "b": args.b, "digits": args.digits, "method": args.method}
                )
                report.passed = False
                report.error = {"code": exc.code, "message": str(exc)}
        else:
            try:
                report, summary, table = comparison_rows(args.a, args.b, args.eps)
                if args.format == "csv":
                    out = render_csv(summary, table)
            except EllipseError as exc:
                report = RunReport("compare", {"a": args.a, "b": args.b, "eps": args.eps})
                report.passed = False
                report.error = {"code": exc.code, "message": str(exc)}
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2

    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    sys.stdout.write(out if out is not None else _dump(report))
    status = "passed" if report.passed else "FAILED"
    detail = f" [{report.error['code']}: {report.error['message']}]" if report.error else ""
    print(
        f"{report.command}: {len(report.results)} result(s), {status}{detail} ({report.elapsed_ms} ms)",
        file=sys.stderr,
    )
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
