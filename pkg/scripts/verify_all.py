"""Run every exact verification at the default sweep bounds and time each one."""

import time

from landenkit.identities import (
    SweepBounds,
    sweep_absorption,
    sweep_knuth,
    sweep_lemma1,
    sweep_lemma2,
    sweep_vandermonde,
)
from landenkit.landen import (
    intermediate_coeff_display_variant,
    maclaurin_coeff,
    step2_coefficient_collapse,
    verify_step1,
    verify_step2,
    verify_theorem1,
)

ORDER = 200


def timed(label, fn):
    start = time.perf_counter()
    ok, count = fn()
    print(f"{label:<34} {'ok' if ok else 'FAILED':<7} {count:>7} checks  {time.perf_counter() - start:7.2f} s")
    return ok


def sweep(gen):
    checks = list(gen)
    return all(c.holds for c in checks), len(checks)


def series(report, expect=True):
    return report.passed == expect, 1


def main():
    b = SweepBounds()
    results = [
        timed("lemma1", lambda: sweep(sweep_lemma1(b.lemma1, b.lemma1_negative_k))),
        timed("lemma2 (brute, closed, two-form)", lambda: sweep(sweep_lemma2(b.lemma2))),
        timed("vandermonde", lambda: sweep(sweep_vandermonde(b.vandermonde))),
        timed("knuth a/b", lambda: sweep(sweep_knuth(b.knuth))),
        timed("absorption", lambda: sweep(sweep_absorption(b.absorption))),
        timed("step2 collapse", lambda: sweep(step2_coefficient_collapse(n) for n in range(b.collapse + 1))),
        timed(f"step1 order {ORDER}", lambda: series(verify_step1(ORDER))),
        timed(f"step2 order {ORDER}", lambda: series(verify_step2(ORDER))),
        timed(f"theorem1 order {ORDER}", lambda: series(verify_theorem1(ORDER))),
        timed("control: display variant (fails)", lambda: series(verify_step1(40, intermediate_coeff_display_variant), False)),
        timed("control: maclaurin target (fails)", lambda: series(verify_step2(30, maclaurin_coeff), False)),
    ]
    raise SystemExit(0 if all(results) else 1)


if __name__ == "__main__":
    main()
