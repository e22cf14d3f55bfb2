#!/usr/bin/env python3
"""List every quartic circulant Ci[2n,{a,b}] that is an accordion graph.

For each normalized length pair the scan reports the matching k (if any),
the regime, and the congruence data behind the match.  Usage:

    python3 scripts/circulant_accordion_scan.py --max-n 12
"""

import argparse

from accordions import circulant_iso_accordion, find_accordion_param


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=10)
    args = ap.parse_args()

    print(f"{'2n':>4} {'a':>3} {'b':>3} {'k':>3} {'regime':<14} {'q':>3} {'steps':>5} {'sign':>5}")
    matched = 0
    examined = 0
    for n in range(3, args.max_n + 1):
        for a in range(1, n):
            for b in range(a + 1, n):
                examined += 1
                k = find_accordion_param(n, a, b)
                if k is None:
                    continue
                v = circulant_iso_accordion(n, a, b, k)
                sign = {1: "+2", -1: "-2", None: "-"}[v.sign]
                q = "-" if v.q is None else v.q
                steps = "-" if v.steps is None else v.steps
                print(f"{2 * n:>4} {a:>3} {b:>3} {k:>3} {v.regime:<14} {q:>3} {steps:>5} {sign:>5}")
                matched += 1
    print(f"{matched} of {examined} circulants are accordion graphs (n <= {args.max_n})")


if __name__ == "__main__":
    main()
