#!/usr/bin/env python3
"""Print the formula audit table: printed theorem values vs brute-force
oracles for every valid eccentric sequence up to --max-n."""

import argparse

from ecctrees.enumeration import audit_formulas


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=12)
    args = ap.parse_args()

    report = audit_formulas(args.max_n)
    header = f"{'sequence':24} {'W':>5} {'W_print':>7} {'dW':>4} {'N':>8} {'N_print':>10} {'dN':>8}"
    print(header)
    print("-" * len(header))
    for r in report.rows:
        print(
            f"{r.sequence.compact_str():24} {r.oracle_w:>5} {r.printed_w:>7} "
            f"{r.delta_w:>4} {r.oracle_n:>8} {str(r.printed_n):>10} {str(r.delta_n):>8}"
        )
    print(f"\n{len(report.rows)} sequences, {len(report.mismatching_rows)} with printed-formula mismatches")


if __name__ == "__main__":
    main()
