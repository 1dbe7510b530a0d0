"""Integer decomposition property (IDP) decisions for reflexive q-vectors.

The fast check scans each facet j with q_j >= 2.  For scan indices
b = 1..q_j - 1 define

    height_j(b) = b * (1 + sum_{i != j} q_i) / q_j - sum_{i != j} floor(b q_i / q_j),

an exact integer for reflexive q.  The simplex is IDP iff every b with
height_j(b) >= 2 splits as b = c + (b - c) with

    floor(b q_i / q_j) - floor(c q_i / q_j) == floor((b - c) q_i / q_j)   (all i != j)
    height_j(c) == 1.

The brute-force oracle instead enumerates the lattice points of the m-th
dilates directly and compares them with iterated sumsets of the points of
the first dilate.
"""

from dataclasses import dataclass

from .core import InternalInconsistency, NotReflexive, QVector, is_reflexive, normalized_volume
from .ehrhart import OracleCaps
from .lattice import enumerate_dilate_points

IDP_ORACLE_CAPS = OracleCaps(max_dimension=6, max_entry_sum=60)


@dataclass(frozen=True)
class FacetWitness:
    """A scan index b on facet j whose height >= 2 admits no splitting c."""

    facet_j: int  # 1-based position in the sorted q-vector
    b: int
    height: int
    found_c: int = None  # populated only in certificate listings

    def to_json_dict(self):
        return {"facet_j": self.facet_j, "b": self.b, "height": self.height}


@dataclass(frozen=True)
class IdpResult:
    is_idp: bool
    witness: FacetWitness = None

    def __bool__(self) -> bool:
        return self.is_idp


def _facet_heights(q: QVector, j0: int):
    """height_j(b) for b = 0..q_j - 1 (index 0 unused), exact integers."""
    entries = q.entries
    qj = entries[j0]
    s = normalized_volume(q)
    if (s - qj) % qj != 0:
        raise InternalInconsistency(
            f"facet height for q={q}, j={j0 + 1}: {s - qj} not divisible by {qj}"
        )
    t_factor = (s - qj) // qj
    heights = [0] * qj
    for b in range(1, qj):
        # sum over i != j of floor(b q_i / q_j); the j-th term would be b itself.
        floor_sum = sum((qi * b) // qj for qi in entries) - b
        heights[b] = b * t_factor - floor_sum
    return heights


def idp_check(q: QVector) -> IdpResult:
    """Deterministic facet scan; witness has smallest j, then smallest b."""
    if not is_reflexive(q):
        raise NotReflexive(f"q = {q} is not reflexive")
    entries = q.entries
    seen = set()
    for j0, qj in enumerate(entries):
        if qj in seen:
            continue  # same value, same conditions as the first occurrence
        seen.add(qj)
        if qj == 1:
            continue
        heights = _facet_heights(q, j0)
        # Splitting condition is vacuous for q_i == q_j, so test distinct others.
        others = sorted(set(entries) - {qj})
        for b in range(1, qj):
            if heights[b] < 2:
                continue
            found = False
            for c in range(1, b):
                if heights[c] != 1:
                    continue
                if all(
                    (qi * b) // qj - (qi * c) // qj == (qi * (b - c)) // qj
                    for qi in others
                ):
                    found = True
                    break
            if not found:
                return IdpResult(False, FacetWitness(j0 + 1, b, heights[b]))
    return IdpResult(True, None)


def idp_certificates(q: QVector):
    """All (j, b, height, c) records the facet scan accepts, for inspection."""
    if not is_reflexive(q):
        raise NotReflexive(f"q = {q} is not reflexive")
    entries = q.entries
    records = []
    seen = set()
    for j0, qj in enumerate(entries):
        if qj in seen:
            continue
        seen.add(qj)
        if qj == 1:
            continue
        heights = _facet_heights(q, j0)
        others = sorted(set(entries) - {qj})
        for b in range(1, qj):
            if heights[b] < 2:
                continue
            for c in range(1, b):
                if heights[c] != 1:
                    continue
                if all(
                    (qi * b) // qj - (qi * c) // qj == (qi * (b - c)) // qj
                    for qi in others
                ):
                    records.append(FacetWitness(j0 + 1, b, heights[b], found_c=c))
                    break
    return records


def necessary_condition(q: QVector) -> bool:
    """1 + sum_i (q_i mod q_j) == q_j for every j.

    Necessary for IDP together with reflexivity; implies reflexivity but is
    not sufficient for IDP.  (The j-th term of the sum is zero, so summing
    over all i equals summing over i != j.)
    """
    entries = q.entries
    return all(1 + sum(qi % v for qi in entries) == v for v in set(entries))


@dataclass(frozen=True)
class IdpOracleResult:
    is_idp: bool
    witness_dilate: int = None
    witness_point: tuple = None

    def __bool__(self) -> bool:
        return self.is_idp


def idp_oracle_bruteforce(q: QVector, caps: OracleCaps = None) -> IdpOracleResult:
    """Compare m-th dilate points with m-fold sumsets of first-dilate points.

    Heights of parallelepiped points are at most n, so decomposability of the
    dilates up to m = n settles the property at the tested sizes.  The witness
    is the lexicographically first undecomposable point at the smallest m.
    """
    caps = caps or IDP_ORACLE_CAPS
    caps.check(q, "IDP oracle")
    base = enumerate_dilate_points(q, 1)
    base_set = set(base)
    sums = base_set
    for m in range(2, q.n + 1):
        sums = {tuple(a + b for a, b in zip(p, v)) for p in sums for v in base}
        for point in enumerate_dilate_points(q, m):
            if point not in sums:
                return IdpOracleResult(False, witness_dilate=m, witness_point=point)
    return IdpOracleResult(True)


def is_dilate_point_sum(q: QVector, point, m: int, caps: OracleCaps = None) -> bool:
    """Is `point` a sum of m lattice points of the first dilate?"""
    caps = caps or IDP_ORACLE_CAPS
    caps.check(q, "IDP oracle")
    base = enumerate_dilate_points(q, 1)
    sums = set(base)
    for _ in range(m - 1):
        sums = {tuple(a + b for a, b in zip(p, v)) for p in sums for v in base}
    return tuple(point) in sums
