"""Sweeps over q-vectors: classification records, JSONL output, and the
counterexample hunt (reflexive + IDP + non-unimodal h*).

Records are emitted in canonical order (dimension, then lexicographic
entries) regardless of worker count, so output files are byte-identical
across --threads settings.  Wall-clock timings never enter the wire format.
"""

import json
import time
from dataclasses import dataclass, field
from functools import partial
from multiprocessing import get_context

from .core import (
    InternalInconsistency,
    OracleTooLarge,
    QVector,
    is_reflexive,
    normalized_volume,
    support_of,
)
from .ehrhart import (
    EHRHART_ORACLE_CAPS,
    HStarPolynomial,
    OracleCaps,
    hstar_closed_form,
    hstar_oracle_interpolation,
    hstar_oracle_parallelepiped,
    is_symmetric,
    is_unimodal,
)
from .freesum import decompose
from .idp import IDP_ORACLE_CAPS, idp_check, idp_oracle_bruteforce, necessary_condition
from .support import build_system, expand_solution, solve_positive

FILTER_NAMES = ("reflexive", "necessary", "idp", "non_unimodal", "indecomposable")


@dataclass(frozen=True)
class SearchSpec:
    n_min: int = 1
    n_max: int = 5
    max_entry: int = 12
    support_r: tuple = None  # fixed support: enumerate its multiplicity solutions
    filters: tuple = ()
    output: str = None  # JSONL path; None writes to stdout
    threads: int = 1
    cross_check: bool = False
    multiplicity_bound: int = None  # fixed-support enumeration cut, default 50
    resume: bool = False
    oracle_caps: OracleCaps = None

    def __post_init__(self):
        for f in self.filters:
            if f not in FILTER_NAMES:
                raise ValueError(f"unknown filter {f!r}; choose from {FILTER_NAMES}")
        if self.n_min < 1 or self.n_max < self.n_min:
            raise ValueError("need 1 <= n_min <= n_max")
        if self.max_entry < 1:
            raise ValueError("max_entry must be positive")
        if self.threads < 1:
            raise ValueError("threads must be positive")


@dataclass
class CandidateReport:
    q: QVector
    reflexive: bool
    necessary: bool
    idp: bool = None  # None when undecided (non-reflexive input)
    hstar: HStarPolynomial = None
    symmetric: bool = None
    unimodal: bool = None
    free_sum_splits: int = 0
    witness: object = None  # FacetWitness when idp is False
    counterexample: bool = False
    elapsed: float = 0.0  # in-memory only, never serialized

    def to_json_dict(self):
        sup = support_of(self.q)
        return {
            "q": list(self.q.entries),
            "support_parts": list(sup.parts),
            "support_mults": list(sup.multiplicities),
            "reflexive": self.reflexive,
            "necessary": self.necessary,
            "idp": self.idp,
            "hstar": list(self.hstar.coefficients) if self.hstar else None,
            "symmetric": self.symmetric,
            "unimodal": self.unimodal,
            "free_sum_splits": self.free_sum_splits,
            "witness": self.witness.to_json_dict() if self.witness else None,
            "counterexample": self.counterexample,
        }


def iter_qvectors(n_min: int, n_max: int, max_entry: int):
    """Weakly increasing vectors ordered by dimension, then lexicographically."""

    def rec(prefix, low, remaining):
        if remaining == 0:
            yield QVector(tuple(prefix))
            return
        for v in range(low, max_entry + 1):
            prefix.append(v)
            yield from rec(prefix, v, remaining - 1)
            prefix.pop()

    for n in range(n_min, n_max + 1):
        yield from rec([], 1, n)


def iter_reflexive_qvectors(n_max: int, sum_max: int):
    """All reflexive q with dimension <= n_max and sum(q) <= sum_max.

    Grouped by volume s = 1 + sum(q); entries must divide s, so candidates
    are multisets of proper divisors of s summing to s - 1.
    """
    for s in range(2, sum_max + 2):
        divisors = [d for d in range(1, s) if s % d == 0]

        def rec(prefix, min_idx, remaining):
            if remaining == 0:
                yield QVector(tuple(prefix))
                return
            if len(prefix) == n_max:
                return
            for idx in range(min_idx, len(divisors)):
                d = divisors[idx]
                if d > remaining:
                    break
                prefix.append(d)
                yield from rec(prefix, idx, remaining - d)
                prefix.pop()

        yield from rec([], 0, s - 1)


def evaluate_candidate(
    q: QVector, oracle_caps: OracleCaps = None, filters: tuple = ()
) -> CandidateReport:
    """Classify one q-vector; returns None if a filter rejects it.

    Predicates run cheap-to-expensive (reflexive, necessary, h*, unimodal,
    IDP, free-sum) and stop at the first failing filter.
    """
    caps = oracle_caps or EHRHART_ORACLE_CAPS
    t0 = time.perf_counter()

    reflexive = is_reflexive(q)
    if "reflexive" in filters and not reflexive:
        return None
    necessary = necessary_condition(q)
    if "necessary" in filters and not necessary:
        return None

    hstar = symmetric = unimodal = None
    if reflexive:
        hstar = hstar_closed_form(q)
    else:
        try:
            hstar = hstar_oracle_parallelepiped(q, caps)
        except OracleTooLarge:
            hstar = None
    if hstar is not None:
        symmetric = is_symmetric(hstar)
        unimodal = is_unimodal(hstar)
        if reflexive and not symmetric:
            raise InternalInconsistency(f"reflexive q = {q} with asymmetric h*")
        if not reflexive and symmetric:
            raise InternalInconsistency(f"non-reflexive q = {q} with symmetric h*")
    if "non_unimodal" in filters and unimodal is not False:
        return None

    idp = witness = None
    if reflexive:
        res = idp_check(q)
        idp = res.is_idp
        witness = res.witness
        if idp and not necessary:
            raise InternalInconsistency(f"IDP q = {q} failing the necessary condition")
    if "idp" in filters and idp is not True:
        return None

    free_sum_splits = len(decompose(q)) if reflexive else 0
    if "indecomposable" in filters and free_sum_splits != 0:
        return None

    counterexample = bool(reflexive and idp is True and unimodal is False)
    return CandidateReport(
        q=q,
        reflexive=reflexive,
        necessary=necessary,
        idp=idp,
        hstar=hstar,
        symmetric=symmetric,
        unimodal=unimodal,
        free_sum_splits=free_sum_splits,
        witness=witness,
        counterexample=counterexample,
        elapsed=time.perf_counter() - t0,
    )


def _cross_check_selected(entries) -> bool:
    """Deterministic ~1% sample; stable across runs and worker counts."""
    key = sum(entries) * 1000003 + len(entries) * 101 + entries[0]
    return key % 97 == 0


def _cross_check(q: QVector, report, caps: OracleCaps) -> None:
    if report is None or not report.reflexive or report.hstar is None:
        return
    try:
        interp = hstar_oracle_interpolation(q, caps)
        para = hstar_oracle_parallelepiped(q, caps)
    except OracleTooLarge:
        return
    if interp != report.hstar or para != report.hstar:
        raise InternalInconsistency(
            f"h* routes disagree for q = {q}: closed {report.hstar}, "
            f"interpolation {interp}, parallelepiped {para}"
        )
    try:
        oracle = idp_oracle_bruteforce(q)
    except OracleTooLarge:
        return
    if oracle.is_idp != report.idp:
        raise InternalInconsistency(
            f"IDP routes disagree for q = {q}: scan {report.idp}, "
            f"oracle {oracle.is_idp}"
        )


def _search_worker(entries, caps, filters, cross_check):
    q = QVector(entries)
    report = evaluate_candidate(q, caps, filters)
    if cross_check and _cross_check_selected(entries):
        _cross_check(q, report, caps or EHRHART_ORACLE_CAPS)
    if report is None:
        return None
    return report.to_json_dict()


@dataclass
class SearchSummary:
    counts: dict
    counterexamples: tuple
    records_written: int
    metadata: dict = field(default_factory=dict)

    def to_json_line(self) -> str:
        payload = dict(self.counts)
        if self.metadata:
            payload.update(self.metadata)
        return json.dumps({"summary": payload}, separators=(",", ":"))


_SUMMARY_KEYS = (
    "candidates",
    "emitted",
    "reflexive",
    "necessary",
    "idp_true",
    "idp_false",
    "idp_skipped",
    "symmetric",
    "unimodal",
    "free_sum_decomposable",
    "counterexamples",
)


def _tally(counts, record):
    counts["emitted"] += 1
    counts["reflexive"] += 1 if record["reflexive"] else 0
    counts["necessary"] += 1 if record["necessary"] else 0
    if record["idp"] is True:
        counts["idp_true"] += 1
    elif record["idp"] is False:
        counts["idp_false"] += 1
    else:
        counts["idp_skipped"] += 1
    counts["symmetric"] += 1 if record["symmetric"] else 0
    counts["unimodal"] += 1 if record["unimodal"] else 0
    counts["free_sum_decomposable"] += 1 if record["free_sum_splits"] else 0
    counts["counterexamples"] += 1 if record["counterexample"] else 0


def _candidates_for(spec: SearchSpec):
    metadata = {}
    if spec.support_r is not None:
        system = build_system(spec.support_r)
        solved = solve_positive(system, bound=spec.multiplicity_bound)
        qs = [expand_solution(system, x) for x in solved.solutions]
        if solved.kind == "unbounded_family":
            metadata["support_enumeration"] = {
                "kind": solved.kind,
                "bound": solved.bound,
            }
        else:
            metadata["support_enumeration"] = {"kind": solved.kind}
        qs.sort(key=lambda q: (q.n, q.entries))
        return qs, metadata
    return list(iter_qvectors(spec.n_min, spec.n_max, spec.max_entry)), metadata


def _load_resume_state(path, candidates):
    """Completed records from an interrupted run; returns (lines, skip_count)."""
    import os

    if not os.path.exists(path):
        return [], 0
    kept = []
    last_q = None
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError:
                break  # torn tail from the interruption
            if "summary" in obj:
                continue  # drop; it is rewritten after the run completes
            kept.append(line)
            last_q = tuple(obj["q"])
    if last_q is None:
        return [], 0
    skip = 0
    for i, q in enumerate(candidates):
        if q.entries == last_q:
            skip = i + 1
            break
    return kept, skip


def run_search(spec: SearchSpec) -> SearchSummary:
    """Evaluate all candidates, stream JSONL records, append a summary line."""
    candidates = _candidates_for(spec)
    candidates, metadata = candidates
    counts = {k: 0 for k in _SUMMARY_KEYS}
    counts["candidates"] = len(candidates)
    counterexamples = []

    kept_lines = []
    skip = 0
    if spec.resume and spec.output:
        kept_lines, skip = _load_resume_state(spec.output, candidates)
        for line in kept_lines:
            record = json.loads(line)
            _tally(counts, record)
            if record["counterexample"]:
                counterexamples.append(tuple(record["q"]))

    todo = [q.entries for q in candidates[skip:]]
    worker = partial(
        _search_worker,
        caps=spec.oracle_caps,
        filters=tuple(spec.filters),
        cross_check=spec.cross_check,
    )
    if spec.threads > 1 and len(todo) > 1:
        ctx = get_context("fork")
        pool = ctx.Pool(spec.threads)
        try:
            results = pool.imap(worker, todo, chunksize=max(1, len(todo) // (spec.threads * 8)))
            records = _drain(results)
        finally:
            pool.close()
            pool.join()
    else:
        records = _drain(map(worker, todo))

    lines = list(kept_lines)
    for record in records:
        _tally(counts, record)
        if record["counterexample"]:
            counterexamples.append(tuple(record["q"]))
        lines.append(json.dumps(record, separators=(",", ":")))

    summary = SearchSummary(
        counts=counts,
        counterexamples=tuple(counterexamples),
        records_written=counts["emitted"],
        metadata=metadata,
    )
    text = "\n".join(lines + [summary.to_json_line()]) + "\n"
    if spec.output:
        with open(spec.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        import sys

        sys.stdout.write(text)
    return summary


def _drain(results):
    out = []
    for record in results:
        if record is not None:
            out.append(record)
    return out


# -- family verifiers --------------------------------------------------------


def two_support_rule(r: int, s: int, m: int, x: int) -> bool:
    """Closed-form rule: (r^m, s^x) is reflexive and IDP iff
    r != 1, s == 1 + r m, x == r - 1, or r == 1, s == 1 + m (x arbitrary)."""
    if r != 1:
        return s == 1 + r * m and x == r - 1
    return s == 1 + m


@dataclass(frozen=True)
class VerificationReport:
    name: str
    checked: int
    discrepancies: tuple

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_json_dict(self):
        return {
            "name": self.name,
            "checked": self.checked,
            "discrepancies": [list(d) for d in self.discrepancies],
            "ok": self.ok,
        }


def verify_two_support_classification(
    max_part: int, m_max: int, x_max: int
) -> VerificationReport:
    """Compare the facet scan against the closed-form two-support rule."""
    checked = 0
    bad = []
    for s in range(2, max_part + 1):
        for r in range(1, s):
            for m in range(1, m_max + 1):
                for x in range(1, x_max + 1):
                    q = QVector(tuple([r] * m + [s] * x))
                    checked += 1
                    got = is_reflexive(q) and idp_check(q).is_idp
                    expected = two_support_rule(r, s, m, x)
                    if got != expected:
                        bad.append((r, s, m, x, got, expected))
    return VerificationReport("two-support classification", checked, tuple(bad))


def _peaked_family_hstar(r: int, m: int) -> HStarPolynomial:
    """Independent expansion for q = (r^m, (1+rm)^(r-1)):

    r * (z + ... + z^(m-1)) * (1 + ... + z^(r-1))
      + sum_j (r - j) z^(m+j) + sum_j (j + 1) z^j,   j = 0..r-1.
    """
    n = m + r - 1
    coeffs = [0] * (n + 1)
    for i in range(1, m):
        for j in range(r):
            coeffs[i + j] += r
    for j in range(r):
        coeffs[m + j] += r - j
        coeffs[j] += j + 1
    return HStarPolynomial(tuple(coeffs))


def verify_two_support_unimodality(r_max: int, m_max: int) -> VerificationReport:
    """The IDP two-support family has symmetric, unimodal h* matching the
    explicit two-term expansion."""
    checked = 0
    bad = []
    for r in range(2, r_max + 1):
        for m in range(1, m_max + 1):
            q = QVector(tuple([r] * m + [1 + r * m] * (r - 1)))
            checked += 1
            h = hstar_closed_form(q)
            expansion = _peaked_family_hstar(r, m)
            if h != expansion or not is_symmetric(h) or not is_unimodal(h):
                bad.append((r, m, tuple(h.coefficients), tuple(expansion.coefficients)))
    return VerificationReport("two-support unimodality", checked, tuple(bad))
