"""Terms needed by the Maclaurin and Ivory series over a range of axis ratios.

    python scripts/convergence_table.py --eps 1e-10 --steps 10 > table.csv
"""

import argparse
import csv
import sys
from fractions import Fraction

from landenkit.ellipse import compare_convergence, params_from_axes


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--eps", default="1e-10")
    ap.add_argument("--steps", type=int, default=10, help="ratios b/a = k/steps for k = 0..steps")
    args = ap.parse_args()

    eps = Fraction(args.eps)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["b_over_a", "e2", "h", "maclaurin_terms", "ivory_terms"])
    for k in range(args.steps + 1):
        ratio = Fraction(k, args.steps)
        p = params_from_axes(1, ratio)
        c = compare_convergence(p, eps)
        w.writerow(
            [
                str(ratio),
                f"{float(p.e2):.6f}",
                f"{float(p.h):.6f}",
                c.maclaurin_terms if c.maclaurin_terms is not None else "unreachable",
                c.ivory_terms if c.ivory_terms is not None else "unreachable",
            ]
        )


if __name__ == "__main__":
    main()
