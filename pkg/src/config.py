# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Runtime settings read from the environment."""

import os
from dataclasses import dataclass, replace

from literals import (
    DEFAULT_JOBS,
    DEFAULT_LOG_LEVEL,
    DEFAULT_NODE_BUDGET,
    JOBS_ENV,
    LOG_LEVEL_ENV,
    LOG_LEVELS,
    NODE_BUDGET_ENV,
)


@dataclass(frozen=True)
class Settings:
    """Toolkit settings.

    Attrs:
        node_budget: branch-and-bound node budget.
        log_level: logging level name.
        jobs: default worker count for batch commands.
    """

    node_budget: int = DEFAULT_NODE_BUDGET
    log_level: str = DEFAULT_LOG_LEVEL
    jobs: int = DEFAULT_JOBS

    @classmethod
    def from_env(cls, environ=None):
        """Build settings from environment variables.

        Args:
            environ: mapping to read; defaults to os.environ.

        Returns:
            Settings with overrides applied.

        Raises:
            ValueError: in case of an invalid value.
        """
        environ = os.environ if environ is None else environ
        settings = cls()
        if environ.get(NODE_BUDGET_ENV):
            settings = replace(settings, node_budget=_positive_int(environ[NODE_BUDGET_ENV], NODE_BUDGET_ENV))
        if environ.get(JOBS_ENV):
            settings = replace(settings, jobs=_positive_int(environ[JOBS_ENV], JOBS_ENV))
        if environ.get(LOG_LEVEL_ENV):
            level = environ[LOG_LEVEL_ENV].strip().lower()
            if level not in LOG_LEVELS:
                raise ValueError(f"{LOG_LEVEL_ENV}: expected one of {', '.join(LOG_LEVELS)}, got {level!r}")
            settings = replace(settings, log_level=level)
        return settings


def _positive_int(raw, name):
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name}: expected a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{name}: expected a positive integer, got {raw!r}")
    return value
