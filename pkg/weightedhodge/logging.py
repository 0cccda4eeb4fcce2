"""
The ``weightedhodge`` logger.

Info and above go to the terminal; everything, debug included, goes to
``weightedhodge.log`` in the log directory (``.weightedhodge/logs`` unless
``WEIGHTEDHODGE_LOGS`` or the ``logs`` config key say otherwise).

"""
import logging
import os
import sys

import click

from . import paths

__all__ = ["get_logger", "set_verbose", "use_log_dir"]

LOG_FILE = "weightedhodge.log"


class TerminalHandler(logging.StreamHandler):
    """
    Writes records to standard error, colored by level on a terminal.

    The stream is looked up on every write unless one was given, so the
    handler follows ``sys.stderr`` when a caller swaps it.

    """

    colors = {
        "DEBUG": "blue",
        "INFO": "green",
        "WARNING": "yellow",
        "ERROR": "red",
        "CRITICAL": "red",
    }

    def __init__(self, stream=None):
        logging.Handler.__init__(self)
        self._stream = stream

    @property
    def stream(self):
        return self._stream if self._stream is not None else sys.stderr

    @stream.setter
    def stream(self, value):
        self._stream = value

    @property
    def color(self):
        if os.environ.get("NO_COLOR") or os.environ.get("TERM") == "dumb":
            return False
        isatty = getattr(self.stream, "isatty", None)
        return bool(isatty and isatty())

    def format(self, record):
        message = super().format(record)
        if not self.color:
            return message
        return click.style(
            message,
            fg=self.colors.get(record.levelname),
            bold=record.levelno >= logging.ERROR,
        )


def _file_handler(logs):
    handler = logging.FileHandler(paths.log_dir(logs) / LOG_FILE)
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(
        logging.Formatter("%(asctime)s %(levelname)s %(message)s")
    )
    return handler


def get_logger():
    """
    Return the ``weightedhodge`` logger, setting up its handlers on the
    first call.

    """
    logger = logging.getLogger("weightedhodge")
    if logger.handlers:
        return logger

    logger.setLevel(logging.DEBUG)
    logger.propagate = False

    terminal = TerminalHandler()
    terminal.setLevel(logging.INFO)
    logger.addHandler(terminal)

    try:
        logger.addHandler(_file_handler(os.getenv("WEIGHTEDHODGE_LOGS")))
    except OSError:
        # Read-only working directory: terminal only
        pass

    return logger


def set_verbose(verbose=True):
    """Show (or hide) debug messages on the terminal.

    Args:
        verbose (bool): If True, the terminal handler drops to DEBUG.
    """
    level = logging.DEBUG if verbose else logging.INFO
    for handler in get_logger().handlers:
        if isinstance(handler, TerminalHandler):
            handler.setLevel(level)


def use_log_dir(path):
    """Move the log file to another directory.

    Args:
        path (str): Directory that will hold ``weightedhodge.log``.
    """
    logger = get_logger()
    for handler in list(logger.handlers):
        if isinstance(handler, logging.FileHandler):
            logger.removeHandler(handler)
            handler.close()
    try:
        logger.addHandler(_file_handler(path))
    except OSError:
        logger.warning(f"Cannot write logs to `{path}`; terminal only.")
