"""Shared strategies and fixtures."""

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from reflexive_lab import iter_reflexive_qvectors, make_qvector

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def qvectors(max_n=5, max_entry=10):
    """Arbitrary valid q-vectors (weakly increasing after canonicalization)."""
    return st.lists(
        st.integers(min_value=1, max_value=max_entry), min_size=1, max_size=max_n
    ).map(make_qvector)


_REFLEXIVE_POOL = list(iter_reflexive_qvectors(4, 24))


def reflexive_qvectors():
    """Reflexive q-vectors with n <= 4 and sum(q) <= 24."""
    return st.sampled_from(_REFLEXIVE_POOL)
