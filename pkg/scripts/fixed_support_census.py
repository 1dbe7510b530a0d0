#!/usr/bin/env python3
"""Census of q-vectors with a fixed support: enumerate every multiplicity
solution for the given distinct parts (cut unbounded families at --bound),
classify each resulting simplex, and print one JSON record per line."""

import argparse
import json
import sys

from reflexive_lab import (
    build_system,
    evaluate_candidate,
    expand_solution,
    solve_positive,
)


def parse_args(argv):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("r", help="comma-separated distinct parts, e.g. 2,5")
    parser.add_argument(
        "--bound",
        type=int,
        default=None,
        help="multiplicity cut when the solution family is unbounded (default 50)",
    )
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    parts = tuple(int(tok) for tok in args.r.split(","))
    system = build_system(parts)
    solved = solve_positive(system, bound=args.bound)
    print(
        f"support={args.r} kind={solved.kind} solutions={len(solved.solutions)}",
        file=sys.stderr,
    )
    for x in solved.solutions:
        q = expand_solution(system, x)
        report = evaluate_candidate(q)
        record = report.to_json_dict()
        record["multiplicities"] = list(x)
        print(json.dumps(record, separators=(",", ":")))
    return 0


if __name__ == "__main__":
    sys.exit(main())
