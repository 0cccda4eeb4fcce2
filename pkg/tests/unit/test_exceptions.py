import logging

import pytest

from weightedhodge import exceptions
from weightedhodge.logging import get_logger


class Recorder(logging.Handler):
    def __init__(self):
        super().__init__(logging.DEBUG)
        self.records = []

    def emit(self, record):
        self.records.append(record)


@pytest.fixture
def records():
    logger = get_logger()
    handler = Recorder()
    logger.addHandler(handler)
    yield handler.records
    logger.removeHandler(handler)


@pytest.mark.parametrize(
    "level, levelno",
    [("error", logging.ERROR), ("warning", logging.WARNING), ("DEBUG", 10)],
)
def test_message_is_logged_at_level(records, level, levelno):
    error = exceptions.WeightedHodgeException("boom", level=level)
    assert error.message == str(error) == "boom"
    assert [(r.levelno, r.getMessage()) for r in records] == [(levelno, "boom")]


@pytest.mark.parametrize("level", ["verbose", "basic_format", ""])
def test_unknown_level_still_raises(records, level):
    with pytest.raises(exceptions.WeightedHodgeException, match="boom"):
        raise exceptions.WeightedHodgeException("boom", level=level)
    assert records == []
