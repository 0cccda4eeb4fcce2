"""
Locations inside the package and in the working directory.

"""
from pathlib import Path

__all__ = ["PACKAGE", "TEMPLATES", "CONFIG_FILE", "LOGS", "log_dir"]

#: The installed ``weightedhodge`` package
PACKAGE = Path(__file__).resolve().parent

#: Jinja templates for the verification summary
TEMPLATES = PACKAGE / "verify" / "templates"

#: Config file read from the working directory when ``--config`` is absent
CONFIG_FILE = "weightedhodge.yml"

#: Default log directory, relative to the working directory
LOGS = ".weightedhodge/logs"


def log_dir(logs=None, cwd=None):
    """
    Create (if needed) and return the log directory.

    Args:
        logs (str, optional): Log directory; relative paths are taken from
            ``cwd``. Defaults to :data:`LOGS`.
        cwd (str, optional): Working directory. Defaults to the current
            directory.

    Returns:
        pathlib.Path: The absolute log directory.

    """
    cwd = Path.cwd() if cwd is None else Path(cwd)
    path = cwd / (logs or LOGS)
    path.mkdir(parents=True, exist_ok=True)
    return path.absolute()
