"""Command-line front end.  Every subcommand is a thin adapter over the
library API; no domain logic lives here.

Exit codes: 0 success, 1 usage or domain error, 2 counterexample found
(reflexive + IDP + non-unimodal h*), 3 internal inconsistency (independent
computation routes disagree — should never happen).
"""

import argparse
import json
import os
import sys

from .core import (
    InternalInconsistency,
    OracleTooLarge,
    ReflexiveLabError,
    format_hstar,
    format_qvector,
    normalized_volume,
    parse_qvector,
)
from .ehrhart import (
    hstar_closed_form,
    hstar_oracle_interpolation,
    hstar_oracle_parallelepiped,
    is_symmetric,
    is_unimodal,
    payne_hstar_product,
    payne_qvector,
)
from .freesum import compose, decompose
from .idp import idp_check, idp_oracle_bruteforce
from .search import (
    FILTER_NAMES,
    OracleCaps,
    SearchSpec,
    evaluate_candidate,
    run_search,
    verify_two_support_classification,
    verify_two_support_unimodality,
)
from .support import build_system, expand_solution, reflexive_family, solve_positive

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_COUNTEREXAMPLE = 2
EXIT_INCONSISTENT = 3


class _CliParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems via our exit-code contract
    (argparse's native exit status 2 would collide with the counterexample
    code)."""

    def error(self, message):
        raise _CliParseError(message)


def _bool_text(value) -> str:
    if value is None:
        return "null"
    return "true" if value else "false"


def _parse_caps(text: str) -> OracleCaps:
    try:
        n_part, v_part = text.split(":", 1)
        return OracleCaps(int(n_part), int(v_part))
    except (ValueError, TypeError):
        raise _CliParseError(
            f"--oracle-caps expects 'n:volume' (two integers), got {text!r}"
        )


def _parse_r(text: str) -> tuple:
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise _CliParseError(f"--r expects comma-separated integers, got {text!r}")
    return parts


def _default_threads() -> int:
    env = os.environ.get("REFLEXIVE_LAB_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _emit(payload: dict, json_mode: bool, text_lines) -> None:
    if json_mode:
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def build_parser() -> _Parser:
    parser = _Parser(prog="reflexive-lab", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument(
        "--threads",
        type=int,
        default=_default_threads(),
        help="worker count (default: $REFLEXIVE_LAB_THREADS or 1)",
    )
    common.add_argument(
        "--oracle-caps",
        metavar="N:VOLUME",
        default=None,
        help="override oracle feasibility caps, e.g. 7:200",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hstar", parents=[common], help="h*-polynomial of one q-vector")
    p.add_argument("--q", required=True, help="comma-separated entries, e.g. 2,3,5")
    p.add_argument(
        "--oracle",
        choices=("closed", "interpolation", "parallelepiped"),
        default="closed",
        help="computation route (default: closed form; oracles allow non-reflexive q)",
    )

    p = sub.add_parser("check", parents=[common], help="full classification of one q")
    p.add_argument("--q", required=True)
    p.add_argument(
        "--oracle",
        action="store_true",
        help="confirm with brute-force oracles (exit 3 on any disagreement)",
    )

    p = sub.add_parser(
        "enumerate", parents=[common], help="q-vectors with a fixed support"
    )
    p.add_argument("--r", required=True, help="distinct parts, e.g. 2,5")
    p.add_argument(
        "--bound",
        type=int,
        default=None,
        help="per-coordinate cut for unbounded solution families (default 50)",
    )
    p.add_argument(
        "--count",
        type=int,
        default=None,
        help="emit the first COUNT reflexive q-vectors supported by r instead",
    )

    p = sub.add_parser("freesum", help="affine free sums")
    fs = p.add_subparsers(dest="freesum_command", required=True)
    c = fs.add_parser("compose", parents=[common], help="compose two reflexive q")
    c.add_argument("--p", required=True)
    c.add_argument("--q", required=True)
    d = fs.add_parser("decompose", parents=[common], help="find all free-sum splits")
    d.add_argument("--q", required=True)

    p = sub.add_parser(
        "payne", parents=[common], help="Payne family member (1^(sk-1), s^(r+1))"
    )
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("search", parents=[common], help="classification sweep (JSONL)")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--max-entry", type=int, default=12)
    p.add_argument("--r", default=None, help="fixed support; overrides the n/entry box")
    p.add_argument(
        "--bound", type=int, default=None, help="multiplicity cut for --r families"
    )
    p.add_argument(
        "--filter",
        action="append",
        choices=FILTER_NAMES,
        default=None,
        help="emit only candidates passing this predicate (repeatable)",
    )
    p.add_argument("--output", default=None, help="JSONL path (default: stdout)")
    p.add_argument(
        "--resume",
        action="store_true",
        help="continue an interrupted run from the last complete record",
    )
    p.add_argument(
        "--cross-check",
        action="store_true",
        help="re-verify ~1%% of records with the brute-force oracles",
    )

    p = sub.add_parser("verify", parents=[common], help="family-level verifications")
    p.add_argument("what", choices=("two-support", "theorem12"))
    p.add_argument("--max-part", type=int, default=15, help="two-support: s bound")
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--x-max", type=int, default=10, help="two-support: x bound")
    p.add_argument("--r-max", type=int, default=8, help="theorem12: r bound")

    return parser


def cmd_hstar(args, caps) -> int:
    q = parse_qvector(args.q)
    if args.oracle == "closed":
        h = hstar_closed_form(q)
    elif args.oracle == "interpolation":
        h = hstar_oracle_interpolation(q, caps)
    else:
        h = hstar_oracle_parallelepiped(q, caps)
    if h.volume() != normalized_volume(q):
        raise InternalInconsistency(
            f"h* coefficient sum {h.volume()} != normalized volume "
            f"{normalized_volume(q)} for q = {q}"
        )
    sym, uni = is_symmetric(h), is_unimodal(h)
    _emit(
        {
            "q": list(q.entries),
            "oracle": args.oracle,
            "hstar": list(h.coefficients),
            "symmetric": sym,
            "unimodal": uni,
            "volume": h.volume(),
        },
        args.json,
        [
            format_hstar(h),
            f"symmetric={_bool_text(sym)}",
            f"unimodal={_bool_text(uni)}",
            f"volume={h.volume()}",
        ],
    )
    return EXIT_OK


def _oracle_confirmations(q, report, caps):
    """Brute-force confirmation for `check --oracle`; raises on disagreement."""
    out = {"hstar": "skipped", "idp": "skipped", "witness_dilate": None, "witness_point": None}
    if report.hstar is not None:
        try:
            interp = hstar_oracle_interpolation(q, caps)
            para = hstar_oracle_parallelepiped(q, caps)
        except OracleTooLarge:
            interp = para = None
        if interp is not None:
            if interp != report.hstar or para != report.hstar:
                raise InternalInconsistency(
                    f"h* routes disagree for q = {q}: reported {report.hstar}, "
                    f"interpolation {interp}, parallelepiped {para}"
                )
            out["hstar"] = "confirmed"
    if report.idp is not None:
        try:
            oracle = idp_oracle_bruteforce(q)
        except OracleTooLarge:
            oracle = None
        if oracle is not None:
            if oracle.is_idp != report.idp:
                raise InternalInconsistency(
                    f"IDP routes disagree for q = {q}: facet scan says "
                    f"{report.idp}, sumset oracle says {oracle.is_idp}"
                )
            out["idp"] = "confirmed"
            if not oracle.is_idp:
                out["witness_dilate"] = oracle.witness_dilate
                out["witness_point"] = list(oracle.witness_point)
    return out


def cmd_check(args, caps) -> int:
    q = parse_qvector(args.q)
    report = evaluate_candidate(q, caps)
    payload = report.to_json_dict()
    lines = [
        f"q={format_qvector(q)}",
        f"reflexive={_bool_text(report.reflexive)}",
        f"necessary={_bool_text(report.necessary)}",
        f"idp={_bool_text(report.idp)}",
        f"hstar={format_hstar(report.hstar) if report.hstar else 'null'}",
        f"symmetric={_bool_text(report.symmetric)}",
        f"unimodal={_bool_text(report.unimodal)}",
        f"free_sum_splits={report.free_sum_splits}",
        f"counterexample={_bool_text(report.counterexample)}",
    ]
    if report.witness is not None:
        lines.append(
            f"witness facet_j={report.witness.facet_j} "
            f"b={report.witness.b} height={report.witness.height}"
        )
    if args.oracle:
        confirmations = _oracle_confirmations(q, report, caps)
        payload["oracle"] = confirmations
        lines.append(f"oracle_hstar={confirmations['hstar']}")
        lines.append(f"oracle_idp={confirmations['idp']}")
        if confirmations["witness_point"] is not None:
            point = ",".join(str(c) for c in confirmations["witness_point"])
            lines.append(
                f"oracle_witness dilate={confirmations['witness_dilate']} "
                f"point={point}"
            )
    _emit(payload, args.json, lines)
    return EXIT_COUNTEREXAMPLE if report.counterexample else EXIT_OK


def cmd_enumerate(args, caps) -> int:
    r = _parse_r(args.r)
    if args.count is not None:
        family = reflexive_family(r, args.count)
        _emit(
            {"r": list(r), "count": args.count, "family": [list(q.entries) for q in family]},
            args.json,
            [format_qvector(q) for q in family],
        )
        return EXIT_OK
    system = build_system(r)
    solved = solve_positive(system, bound=args.bound)
    qs = [expand_solution(system, x) for x in solved.solutions]
    if not args.json and solved.kind == "unbounded_family":
        print(
            f"note: unbounded solution family; showing multiplicities <= "
            f"{solved.bound}",
            file=sys.stderr,
        )
    _emit(
        {
            "r": list(r),
            "kind": solved.kind,
            "bound": solved.bound,
            "solutions": [
                {"x": list(x), "q": list(q.entries)}
                for x, q in zip(solved.solutions, qs)
            ],
        },
        args.json,
        [format_qvector(q) for q in qs],
    )
    return EXIT_OK


def cmd_freesum(args, caps) -> int:
    if args.freesum_command == "compose":
        split = compose(parse_qvector(args.p), parse_qvector(args.q))
        _emit(
            {
                "p": list(split.p.entries),
                "q": list(split.q.entries),
                "s": split.s,
                "y": list(split.y.entries),
            },
            args.json,
            [f"y={format_qvector(split.y)}", f"s={split.s}"],
        )
        return EXIT_OK
    y = parse_qvector(args.q)
    splits = decompose(y)
    _emit(
        {
            "y": list(y.entries),
            "splits": [
                {"p": list(s.p.entries), "q": list(s.q.entries), "s": s.s}
                for s in splits
            ],
        },
        args.json,
        [
            f"p={format_qvector(s.p)} q={format_qvector(s.q)} s={s.s}"
            for s in splits
        ]
        + [f"splits={len(splits)}"],
    )
    return EXIT_OK


def cmd_payne(args, caps) -> int:
    q = payne_qvector(args.s, args.k, args.r)
    product = payne_hstar_product(args.s, args.k, args.r)
    closed = hstar_closed_form(q)
    if product != closed:
        raise InternalInconsistency(
            f"Payne product formula {product} != closed form {closed} for q = {q}"
        )
    res = idp_check(q)
    sym, uni = is_symmetric(product), is_unimodal(product)
    _emit(
        {
            "s": args.s,
            "k": args.k,
            "r": args.r,
            "q": list(q.entries),
            "hstar": list(product.coefficients),
            "symmetric": sym,
            "unimodal": uni,
            "idp": res.is_idp,
        },
        args.json,
        [
            f"q={format_qvector(q)}",
            f"hstar={format_hstar(product)}",
            f"symmetric={_bool_text(sym)}",
            f"unimodal={_bool_text(uni)}",
            f"idp={_bool_text(res.is_idp)}",
        ],
    )
    return EXIT_OK


def cmd_search(args, caps) -> int:
    spec = SearchSpec(
        n_min=args.n_min,
        n_max=args.n_max,
        max_entry=args.max_entry,
        support_r=_parse_r(args.r) if args.r else None,
        filters=tuple(args.filter or ()),
        output=args.output,
        threads=args.threads,
        cross_check=args.cross_check,
        multiplicity_bound=args.bound,
        resume=args.resume,
        oracle_caps=caps,
    )
    summary = run_search(spec)
    if args.output:
        print(summary.to_json_line())
    return EXIT_COUNTEREXAMPLE if summary.counterexamples else EXIT_OK


def cmd_verify(args, caps) -> int:
    if args.what == "two-support":
        m_max = args.m_max if args.m_max is not None else 10
        report = verify_two_support_classification(args.max_part, m_max, args.x_max)
    else:
        m_max = args.m_max if args.m_max is not None else 8
        report = verify_two_support_unimodality(args.r_max, m_max)
    _emit(
        report.to_json_dict(),
        args.json,
        [
            f"name={report.name}",
            f"checked={report.checked}",
            f"discrepancies={len(report.discrepancies)}",
            f"ok={_bool_text(report.ok)}",
        ],
    )
    return EXIT_OK if report.ok else EXIT_INCONSISTENT


_HANDLERS = {
    "hstar": cmd_hstar,
    "check": cmd_check,
    "enumerate": cmd_enumerate,
    "freesum": cmd_freesum,
    "payne": cmd_payne,
    "search": cmd_search,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        caps = _parse_caps(args.oracle_caps) if args.oracle_caps else None
        return _HANDLERS[args.command](args, caps)
    except _CliParseError as exc:
        _report_error("usage_error", str(exc), argv)
        return EXIT_ERROR
    except ReflexiveLabError as exc:
        _report_error(exc.code, str(exc), argv)
        return EXIT_INCONSISTENT if exc.code == "internal_inconsistency" else EXIT_ERROR
    except ValueError as exc:
        _report_error("invalid_argument", str(exc), argv)
        return EXIT_ERROR


def _report_error(code: str, message: str, argv) -> None:
    json_mode = "--json" in (argv if argv is not None else sys.argv[1:])
    if json_mode:
        print(json.dumps({"code": code, "message": message}))
    else:
        print(f"error: {message}", file=sys.stderr)


def main_entry() -> None:
    sys.exit(main(sys.argv[1:]))
