"""Affine free sums within the q-vector family.

For reflexive p (length n) and q (length m), setting s = 1 + sum(p) and

    y = sort(p_1, ..., p_n, s*q_1, ..., s*q_m)

gives the q-vector of the free sum of the two simplices glued at the apex
vertex.  Reflexivity, IDP, and h*-unimodality all transfer; the h*-vector of
y is the product of the two h*-vectors.
"""

from dataclasses import dataclass
from itertools import product

from .core import (
    NotReflexive,
    OracleTooLarge,
    QVector,
    is_reflexive,
    make_qvector,
    support_of,
)

DECOMPOSE_DIMENSION_CAP = 20


@dataclass(frozen=True)
class FreeSumSplit:
    p: QVector
    q: QVector
    s: int  # 1 + sum(p); the scale applied to q's entries
    y: QVector


def compose(p: QVector, q: QVector) -> FreeSumSplit:
    """Free sum of the simplices of two reflexive q-vectors."""
    if not is_reflexive(p):
        raise NotReflexive(f"p = {p} is not reflexive")
    if not is_reflexive(q):
        raise NotReflexive(f"q = {q} is not reflexive")
    s = 1 + sum(p.entries)
    y = make_qvector(list(p.entries) + [s * v for v in q.entries])
    return FreeSumSplit(p=p, q=q, s=s, y=y)


def decompose(y: QVector) -> list:
    """All splits compose(p, q).y == y, ordered by ascending s then p.

    Scans sub-multisets A of y's entries: with s = 1 + sum(A), the
    complement must consist of multiples of s, and both A and the
    complement divided by s must be reflexive.
    """
    if not is_reflexive(y):
        raise NotReflexive(f"y = {y} is not reflexive")
    if y.n > DECOMPOSE_DIMENSION_CAP:
        raise OracleTooLarge(
            f"decompose scans sub-multisets; dimension {y.n} exceeds "
            f"{DECOMPOSE_DIMENSION_CAP}"
        )
    sup = support_of(y)
    splits = []
    # Choose how many copies of each distinct part go into A.
    for counts in product(*[range(m + 1) for m in sup.multiplicities]):
        if all(c == 0 for c in counts):
            continue
        if all(c == m for c, m in zip(counts, sup.multiplicities)):
            continue
        a_entries = []
        b_entries = []
        for part, mult, c in zip(sup.parts, sup.multiplicities, counts):
            a_entries.extend([part] * c)
            b_entries.extend([part] * (mult - c))
        s = 1 + sum(a_entries)
        if any(v % s != 0 for v in b_entries):
            continue
        p = make_qvector(a_entries)
        q = make_qvector([v // s for v in b_entries])
        if not is_reflexive(p) or not is_reflexive(q):
            continue
        splits.append(FreeSumSplit(p=p, q=q, s=s, y=y))
    splits.sort(key=lambda sp: (sp.s, sp.p.entries, sp.q.entries))
    return splits


def decomposes_by_divisible_support(q: QVector):
    """Split off the all-ones tail when the support is a divisor chain.

    Applies when every part divides the largest part r_k and
    r_k == 1 + sum_{i < k} x_i r_i; then q is the free sum of
    (r_1^(x_1), ..., r_(k-1)^(x_(k-1))) with (1^(x_k)).  Returns the split,
    or None when the hypotheses fail.
    """
    sup = support_of(q)
    k = sup.k
    if k < 2:
        return None
    r_k = sup.parts[-1]
    if any(r_k % r != 0 for r in sup.parts[:-1]):
        return None
    head_sum = sum(r * x for r, x in zip(sup.parts[:-1], sup.multiplicities[:-1]))
    if r_k != 1 + head_sum:
        return None
    p_entries = []
    for r, x in zip(sup.parts[:-1], sup.multiplicities[:-1]):
        p_entries.extend([r] * x)
    p = make_qvector(p_entries)
    ones = make_qvector([1] * sup.multiplicities[-1])
    return FreeSumSplit(p=p, q=ones, s=r_k, y=q)
