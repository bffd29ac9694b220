"""Shared test configuration: a deterministic hypothesis profile."""

from hypothesis import settings

settings.register_profile(
    "exact",
    deadline=None,
    derandomize=True,
    max_examples=50,
    database=None,
)
settings.load_profile("exact")
