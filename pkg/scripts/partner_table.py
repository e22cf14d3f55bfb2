#!/usr/bin/env python3
"""Tabulate all non-trivially isomorphic accordion pairs A[n,k1] ~ A[n,k2].

Partners are rare: both gcd(n,k) values must be 2 and k1*k2/2 must land on
+-2 mod n, and each k has at most one partner.  Usage:

    python3 scripts/partner_table.py --max-n 60
"""

import argparse

from accordions import accordions_isomorphic, unique_partner


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=60)
    args = ap.parse_args()

    print(f"{'n':>4} {'k1':>4} {'k2':>4} {'branch':<12}")
    total = 0
    for n in range(3, args.max_n + 1):
        for k1 in range(1, n // 2 + 1):
            k2 = unique_partner(n, k1)
            if k2 is None or k2 < k1:
                continue
            branch = accordions_isomorphic(n, k1, k2).branch
            print(f"{n:>4} {k1:>4} {k2:>4} {branch:<12}")
            total += 1
    print(f"{total} partner pairs with n <= {args.max_n}")


if __name__ == "__main__":
    main()
