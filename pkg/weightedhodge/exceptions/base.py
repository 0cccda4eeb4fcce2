import logging

from ..logging import get_logger

__all__ = ["WeightedHodgeException"]


class WeightedHodgeException(Exception):
    """
    Base class for all errors raised by ``weightedhodge``.

    The message is logged when the exception is created, so a CLI run
    records it even when the exception becomes an exit code.

    Args:
        message (str): What went wrong.
        level (str): ``error``, ``warning``, ``info`` or ``debug``. Any
            other value raises without logging.

    """

    def __init__(self, message="weightedhodge failed.", level="error"):
        levelno = getattr(logging, str(level).upper(), None)
        if isinstance(levelno, int):
            get_logger().log(levelno, message)
        self.message = message
        super().__init__(message)
