import shutil
from pathlib import Path

import pytest


def pytest_sessionstart(session):
    # Clean the sandbox
    for path in (Path(__file__).parents[0] / "sandbox").glob("*"):
        if path.is_dir():
            shutil.rmtree(path)
        else:
            path.unlink()


def pytest_addoption(parser):
    parser.addoption(
        "--slow",
        action="store_true",
        dest="slow",
        default=False,
        help="run the full-size verification suites",
    )


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: a full-size verification run"
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skipper = pytest.mark.skip(reason="need --slow option to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skipper)
