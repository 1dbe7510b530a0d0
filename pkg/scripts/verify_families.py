#!/usr/bin/env python3
"""Run both family-level verification sweeps at acceptance scale:

1. the two-support IDP classification (facet scan vs. closed-form rule), and
2. symmetry/unimodality/expansion agreement for the peaked two-support family.

Exits 1 if either sweep reports a discrepancy."""

import argparse
import json
import sys

from reflexive_lab import (
    verify_two_support_classification,
    verify_two_support_unimodality,
)


def parse_args(argv):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-part", type=int, default=15)
    parser.add_argument("--m-max-classification", type=int, default=10)
    parser.add_argument("--x-max", type=int, default=10)
    parser.add_argument("--r-max", type=int, default=8)
    parser.add_argument("--m-max-family", type=int, default=8)
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    reports = [
        verify_two_support_classification(
            args.max_part, args.m_max_classification, args.x_max
        ),
        verify_two_support_unimodality(args.r_max, args.m_max_family),
    ]
    ok = True
    for report in reports:
        print(json.dumps(report.to_json_dict()))
        ok = ok and report.ok
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
