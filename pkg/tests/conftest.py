import os
import shutil
import tempfile

import pytest

from weightedhodge.config import reset_config

LOGS = tempfile.mkdtemp(prefix="weightedhodge-logs-")


def pytest_configure(config):
    # Keep log files out of the source tree
    os.environ["WEIGHTEDHODGE_LOGS"] = LOGS


def pytest_unconfigure(config):
    shutil.rmtree(LOGS, ignore_errors=True)


@pytest.fixture(autouse=True)
def default_config():
    """Every test starts from the default config."""
    reset_config()
    yield
    reset_config()
