"""Runtime configuration knobs."""

from __future__ import annotations

import os

from .errors import UsageError

BUDGET_ENV_VAR = "ZF_BUDGET"
DEFAULT_BUDGET = 1_000_000


def default_budget() -> int:
    """Enumeration budget: ZF_BUDGET when set, else one million nodes."""
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{BUDGET_ENV_VAR} must be a positive integer, got {raw!r}")
    if value <= 0:
        raise UsageError(f"{BUDGET_ENV_VAR} must be a positive integer, got {raw!r}")
    return value
