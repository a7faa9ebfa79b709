"""Shared test knobs: a deterministic seed and the working precision."""

import pytest

BASE_SEED = 20260819
BITS = 256


@pytest.fixture
def bits() -> int:
    return BITS


def subseed(offset: int) -> int:
    """Deterministic per-test RNG seed; keep offsets distinct across tests."""
    return BASE_SEED * 1009 + offset
