# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Integration test config."""

import logging

import pytest
from pytest import FixtureRequest

logger = logging.getLogger(__name__)


@pytest.fixture(scope="class", name="scale")
def scale_fixture(request: FixtureRequest):
    """Mark the test class as running at full or reduced size."""
    request.cls.full = request.config.getoption("--acceptance")
    logger.info(f"acceptance suites at {'full' if request.cls.full else 'reduced'} size")


@pytest.fixture(autouse=True)
def cli_logging():
    """Drop the command line stderr handler after each test."""
    yield
    root = logging.getLogger()
    for handler in [h for h in root.handlers if getattr(h, "_transversal_lab", False)]:
        root.removeHandler(handler)
