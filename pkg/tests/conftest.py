"""
Pytest Fixtures for Cube Genus Tests

Provides run contexts, a mock logger and prebuilt surfaces.
"""

import os
import sys
from unittest.mock import Mock

import pytest

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.config import Settings
from core.context import RunContext
from core.surface import ColorCycle, build_surface


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long exhaustive or randomized sweeps (deselect with -m 'not slow')")


@pytest.fixture
def mock_logger():
    """Create a mock CubeLogger."""
    logger = Mock()

    logger.info.return_value = None
    logger.debug.return_value = None
    logger.warning.return_value = None
    logger.error.return_value = None
    logger.certificate.return_value = None
    logger.command_started.return_value = None
    logger.command_completed.return_value = None
    logger.command_failed.return_value = None

    return logger


@pytest.fixture
def test_context():
    """Create a test RunContext."""
    return RunContext(
        request_id="test-request-123",
        command="test_command",
        triggered_by="test",
    )


@pytest.fixture
def settings():
    """Default settings."""
    return Settings()


@pytest.fixture(scope="session")
def t3():
    """T(123): the boundary of the 3-cube."""
    return build_surface(3, ColorCycle.identity(3))


@pytest.fixture(scope="session")
def t4():
    """T(1234): a torus in H_4."""
    return build_surface(4, ColorCycle.identity(4))


@pytest.fixture(scope="session")
def t5():
    """T(12345)."""
    return build_surface(5, ColorCycle.identity(5))
