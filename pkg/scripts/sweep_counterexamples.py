#!/usr/bin/env python3
"""Run a classification sweep over q-vectors and flag any candidate that is
reflexive, IDP, and non-unimodal.  Thin wrapper over the library search
harness; exits 2 when a counterexample record was emitted."""

import argparse
import sys

from reflexive_lab import FILTER_NAMES, SearchSpec, run_search


def parse_args(argv):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-min", type=int, default=1)
    parser.add_argument("--n-max", type=int, default=5)
    parser.add_argument("--max-entry", type=int, default=12)
    parser.add_argument("--filter", action="append", choices=FILTER_NAMES, default=None)
    parser.add_argument("--output", default=None, help="JSONL path (default: stdout)")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--resume", action="store_true")
    parser.add_argument(
        "--cross-check",
        action="store_true",
        help="re-verify a deterministic ~1%% sample with the brute-force oracles",
    )
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    spec = SearchSpec(
        n_min=args.n_min,
        n_max=args.n_max,
        max_entry=args.max_entry,
        filters=tuple(args.filter or ()),
        output=args.output,
        threads=args.threads,
        resume=args.resume,
        cross_check=args.cross_check,
    )
    summary = run_search(spec)
    print(summary.to_json_line(), file=sys.stderr)
    if summary.counterexamples:
        for q in summary.counterexamples:
            print(f"COUNTEREXAMPLE: {','.join(map(str, q))}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
