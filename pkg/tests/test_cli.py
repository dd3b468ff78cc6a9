import json
import re
from pathlib import Path

import pytest

from landenkit.cli import main

GOLDEN = Path(__file__).parent / "golden"
RATIONAL = re.compile(r"^-?\d+/\d+$")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def normalized(text):
    return re.sub(r'"elapsed_ms": \d+', '"elapsed_ms": 0', text)


def walk_strings(node, key=None):
    if isinstance(node, dict):
        for k, v in node.items():
            yield from walk_strings(v, k)
    elif isinstance(node, list):
        for v in node:
            yield from walk_strings(v, key)
    else:
        yield key, node


# ---------------------------------------------------------------- verify


def test_verify_theorem1(capsys):
    code, report, err = run_json(capsys, "verify", "theorem1", "--order", "100")
    assert code == 0 and report["passed"]
    assert report["results"][0]["order_checked"] == 100
    assert "passed" in err


def test_verify_lemma2_lists_every_check(capsys):
    code, report, _ = run_json(capsys, "verify", "lemma2", "--range", "50")
    assert code == 0 and report["passed"]
    assert len(report["results"]) == 50
    assert [r["parameters"]["n"] for r in report["results"]] == list(range(1, 51))


def test_verify_lemma2_range_zero_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "lemma2", "--range", "0"])
    assert exc.value.code == 2


def test_unknown_target_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "lemma9"])
    assert exc.value.code != 0


def test_conflicting_order_and_range(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "step1", "--order", "4", "--range", "5"])
    assert exc.value.code == 2


def test_verify_all_small(capsys):
    code, report, _ = run_json(capsys, "verify", "all", "--range", "8")
    assert code == 0 and report["passed"]
    kinds = {r.get("name") or r.get("claim") for r in report["results"]}
    assert {"lemma1", "lemma2", "vandermonde", "knuth_a", "knuth_b", "absorption", "step1", "step2", "theorem1", "collapse"} <= kinds


@pytest.mark.parametrize("target", ["step1", "step2", "theorem1", "collapse", "knuth", "absorption", "vandermonde"])
def test_verify_targets_pass(capsys, target):
    code, report, _ = run_json(capsys, "verify", target, "--order", "12")
    assert code == 0 and report["passed"] and report["results"]


# ---------------------------------------------------------------- perimeter


def test_perimeter_circle_both(capsys):
    code, report, _ = run_json(capsys, "perimeter", "1", "1", "--digits", "10", "--method", "both")
    assert code == 0
    mac, ivo, agree = report["results"]
    assert mac["decimal"] == ivo["decimal"] == "6.2831853072"
    assert agree["holds"]


def test_perimeter_segment_ivory(capsys):
    code, report, _ = run_json(capsys, "perimeter", "1", "0", "--digits", "6", "--method", "ivory")
    assert code == 0
    assert report["results"][0]["decimal"] == "4.000000"


def test_perimeter_segment_maclaurin_refused(capsys):
    code, report, err = run_json(capsys, "perimeter", "1", "0", "--method", "maclaurin")
    assert code == 1 and not report["passed"]
    assert report["error"]["code"] == "degenerate-input"
    assert "degenerate-input" in err


@pytest.mark.parametrize("a, b", [("1", "2"), ("0", "0"), ("-1", "0")])
def test_perimeter_domain_error(capsys, a, b):
    code, report, _ = run_json(capsys, "perimeter", a, b)
    assert code == 1 and report["error"]["code"] == "domain-error"


def test_perimeter_precision_unreachable(capsys):
    code, report, _ = run_json(capsys, "perimeter", "1", "0", "--digits", "14", "--method", "ivory")
    assert code == 1 and report["error"]["code"] == "precision-unreachable"


def test_perimeter_parses_decimal_literals_exactly(capsys):
    _, by_decimal, _ = run_json(capsys, "perimeter", "0.5", "0.25", "--digits", "8")
    _, by_fraction, _ = run_json(capsys, "perimeter", "1/2", "1/4", "--digits", "8")
    assert by_decimal["results"] == by_fraction["results"]


def test_perimeter_rejects_unparseable(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["perimeter", "one", "1"])
    assert exc.value.code == 2


# ---------------------------------------------------------------- compare


def test_compare_json(capsys):
    code, report, _ = run_json(capsys, "compare", "2", "1", "--eps", "1e-10")
    assert code == 0
    summary = {row["method"]: row for row in report["results"][0]["summary"]}
    assert summary["ivory"]["terms"] < summary["maclaurin"]["terms"]


def test_compare_csv_header(capsys):
    code, out, _ = run(capsys, "compare", "2", "1", "--eps", "1e-10", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "method,terms,tail_bound"
    assert lines[1].startswith("maclaurin,52,") and lines[2].startswith("ivory,7,")


def test_compare_degenerate_reports_unreachable(capsys):
    code, report, _ = run_json(capsys, "compare", "1", "0", "--eps", "1/1000")
    summary = {row["method"]: row for row in report["results"][0]["summary"]}
    assert code == 0
    assert summary["maclaurin"]["terms"] == "unreachable" and summary["maclaurin"]["tail_bound"] is None


def test_compare_eps_zero_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compare", "2", "1", "--eps", "0"])
    assert exc.value.code == 2


# ---------------------------------------------------------------- output contracts


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "step1", "--order", "10"],
        ["perimeter", "3", "1/2", "--digits", "9"],
        ["compare", "5", "4", "--eps", "1e-8"],
    ],
)
def test_output_is_deterministic(capsys, argv):
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert normalized(first) == normalized(second)


def test_every_rational_field_is_exact(capsys):
    _, report, _ = run_json(capsys, "perimeter", "2", "1", "--digits", "12")
    for key, value in walk_strings(report):
        if key in ("value", "error_radius", "difference", "allowed"):
            assert RATIONAL.match(value)
    _, report, _ = run_json(capsys, "verify", "collapse", "--range", "6")
    for key, value in walk_strings(report):
        if key in ("lhs", "rhs"):
            assert RATIONAL.match(value)


@pytest.mark.parametrize(
    "name, argv",
    [
        ("verify_theorem1_order20.json", ["verify", "theorem1", "--order", "20"]),
        ("verify_lemma2_range6.json", ["verify", "lemma2", "--range", "6"]),
        ("perimeter_2_1_digits12.json", ["perimeter", "2", "1", "--digits", "12"]),
        ("compare_2_1.csv", ["compare", "2", "1", "--eps", "1e-10", "--format", "csv"]),
    ],
)
def test_golden_files(capsys, name, argv):
    _, out, _ = run(capsys, *argv)
    assert normalized(out) == (GOLDEN / name).read_text()
