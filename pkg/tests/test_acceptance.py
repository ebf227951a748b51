"""Acceptance gate: one test per numbered criterion, full (non-quick) mode."""

import pytest

from mirrorew import acceptance

CFG = acceptance.RunConfig(seed=42, restarts=64, quick=False)


@pytest.mark.parametrize("number", range(1, 13))
def test_criterion(number):
    result = getattr(acceptance, f"criterion_{number}")(CFG)
    assert not result.skipped
    assert result.passed, result.details
