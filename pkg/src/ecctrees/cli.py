"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain-negative result (invalid
sequence, failed verification), 3 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .enumeration import (
    BudgetExceededError,
    audit_formulas,
    explore_conjecture,
    verify_extremal,
)
from .extremal import extremal_tree, max_subtrees_value, min_wiener_derivation
from .invariants import invariant_report, subtree_count, wiener_pairwise
from .sequence import SequenceError, parse_sequence, validate_tree_sequence
from .tree import TreeError, parse_tree, tree_to_text

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _parse_lambdas(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise UsageError(f"bad --lambda list {text!r}")
    if not values or any(v == 0 for v in values):
        raise UsageError("--lambda needs a nonempty list of nonzero values")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ecctrees", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-n", type=int, default=12, metavar="K")
    common.add_argument("--lambda", dest="lambdas", default="1", metavar="a,b,c")
    common.add_argument("--jobs", type=int, default=1, metavar="J")
    common.add_argument("--seed", type=int, default=0, metavar="N")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="validate an eccentric sequence")
    p.add_argument("sequence")
    p = sub.add_parser("extremal", parents=[common], help="build the extremal caterpillar")
    p.add_argument("sequence")
    p = sub.add_parser("invariants", parents=[common], help="invariant report for a tree file")
    p.add_argument("treefile")
    p = sub.add_parser("verify", parents=[common], help="exhaustively verify extremality")
    p.add_argument("sequence")
    sub.add_parser("audit", parents=[common], help="audit printed formulas vs oracles")
    sub.add_parser("explore", parents=[common], help="explore the HW / lambda-Wiener conjecture")
    return parser


def cmd_validate(args) -> int:
    s = parse_sequence(args.sequence)
    result = validate_tree_sequence(s)
    if args.format == "json":
        payload = {
            "sequence": s.compact_str(),
            "valid": result.valid,
            "reason": result.reason,
            "b1": s.b1,
            "mult": list(s.mult),
        }
        sys.stdout.write(_dump_json(payload))
    elif result.valid:
        print(f"{s.compact_str()}: valid tree eccentric sequence")
    else:
        print(f"{s.compact_str()}: invalid ({result.reason})")
    return EXIT_OK if result.valid else EXIT_DOMAIN


def cmd_extremal(args) -> int:
    s = parse_sequence(args.sequence)
    if not validate_tree_sequence(s):
        return cmd_validate(args)
    t = extremal_tree(s)
    w = min_wiener_derivation(s)
    nsub = max_subtrees_value(s)
    if w != wiener_pairwise(t) or nsub != subtree_count(t):
        print("internal error: closed form disagrees with oracle", file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "json":
        payload = {
            "sequence": s.compact_str(),
            "tree": tree_to_text(t),
            "wiener": w,
            "subtrees": str(nsub),
        }
        sys.stdout.write(_dump_json(payload))
    else:
        sys.stdout.write(tree_to_text(t))
        print(f"W={w}")
        print(f"N={nsub}")
    return EXIT_OK


def cmd_invariants(args) -> int:
    text = Path(args.treefile).read_text()
    t = parse_tree(text)
    lambdas = _parse_lambdas(args.lambdas)
    report = invariant_report(t, lambdas)
    payload = report.to_dict()
    if args.format == "json":
        sys.stdout.write(_dump_json(payload))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")
    if any(payload["relation_residuals"].values()):
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_verify(args) -> int:
    s = parse_sequence(args.sequence)
    if not validate_tree_sequence(s):
        return cmd_validate(args)
    report = verify_extremal(s, max_n=args.max_n, jobs=args.jobs)
    payload = report.to_dict()
    if args.format == "json":
        sys.stdout.write(_dump_json(payload))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")
    ok = (
        report.construction_is_min_w
        and report.construction_is_max_n
        and report.unique_min_w
        and report.unique_max_n
    )
    return EXIT_OK if ok else EXIT_DOMAIN


def cmd_audit(args) -> int:
    report = audit_formulas(args.max_n)
    payload = report.to_dict()
    if args.format == "json":
        sys.stdout.write(_dump_json(payload))
    else:
        header = (
            "sequence n oracle_W printed_W delta_W oracle_N printed_N delta_N"
        )
        print(header)
        for row in payload["rows"]:
            print(
                f"{row['sequence']} {row['n']} {row['oracle_W']} "
                f"{row['printed_W']} {row['delta_W']} {row['oracle_N']} "
                f"{row['printed_N']} {row['delta_N']}"
            )
        print(f"mismatching rows: {len(payload['mismatching_sequences'])}")
    return EXIT_OK


def cmd_explore(args) -> int:
    lambdas = _parse_lambdas(args.lambdas)
    report = explore_conjecture(args.max_n, lambdas)
    payload = report.to_dict()
    if args.format == "json":
        sys.stdout.write(_dump_json(payload))
    else:
        for row in payload["rows"]:
            status = "min" if row["construction_is_min"] else "NOT-min"
            unique = "unique" if row["unique_min"] else "tied"
            print(f"{row['sequence']} {row['index']}: construction {status} ({unique})")
    return EXIT_OK


_COMMANDS = {
    "validate": cmd_validate,
    "extremal": cmd_extremal,
    "invariants": cmd_invariants,
    "verify": cmd_verify,
    "audit": cmd_audit,
    "explore": cmd_explore,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "max_n", 3) < 3:
            raise UsageError("--max-n must be >= 3")
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be >= 1")
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SequenceError, TreeError, FileNotFoundError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
