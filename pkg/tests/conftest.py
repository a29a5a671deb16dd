"""Shared test configuration: compile the accelerated kernels once up front."""

import pytest

import ublab


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Trigger kernel compilation before any timed test runs."""
    ublab.warmup()
