#!/usr/bin/env python3
"""Gather evidence on whether the extremal caterpillar also minimises the
hyper-Wiener index and the lambda-Wiener index for lambda >= 1."""

import argparse

from ecctrees.enumeration import explore_conjecture


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--lambda", dest="lambdas", default="1,1.5,2,3")
    args = ap.parse_args()

    lambdas = tuple(float(x) for x in args.lambdas.split(","))
    report = explore_conjecture(args.max_n, lambdas)
    losses = [r for r in report.rows if not r.construction_is_min]
    ties = [r for r in report.rows if r.construction_is_min and not r.unique_min]
    print(f"rows: {len(report.rows)}, construction not minimal: {len(losses)}, ties: {len(ties)}")
    for r in losses:
        print(f"counterexample candidate: {r.sequence.compact_str()} at {r.index}")
        for tree_text in r.counterexamples:
            print(tree_text)
    for r in ties:
        print(f"tie: {r.sequence.compact_str()} at {r.index}")


if __name__ == "__main__":
    main()
