from contextlib import contextmanager
from pathlib import Path

import jinja2
import yaml

from . import exceptions, logging, paths

try:
    from yaml import CDumper as Dumper
    from yaml import CLoader as Loader
except ImportError:
    # If LibYAML not installed
    from yaml import Dumper, Loader


CONFIG_FILE = paths.CONFIG_FILE

_config = None


@contextmanager
def edit_yaml(file):
    """A context used to edit a YAML file in place.

    Args:
        file (str): The full path to the YAML file.
    """
    if Path(file).exists():
        with open(file, "r") as f:
            contents = yaml.load(f, Loader=Loader) or {}
    else:
        contents = {}
    try:
        yield contents
    finally:
        with open(file, "w") as f:
            print(yaml.dump(contents, Dumper=Dumper), file=f)


def render_config(file):
    """
    Render any jinja templates in the config file and parse the YAML.

    Args:
        file (str): Path to the YAML config file.

    Returns:
        dict:
            The raw (unvalidated) user config.

    """
    file = Path(file)
    env = jinja2.Environment(
        loader=jinja2.FileSystemLoader(str(file.parent.absolute()))
    )
    try:
        config = env.get_template(file.name).render()
        config = yaml.safe_load(config)
    except (jinja2.TemplateError, yaml.YAMLError) as e:
        raise exceptions.ConfigError(
            f"Error parsing the config file `{file}`: {e}"
        )
    if config is None:
        config = {}
    elif type(config) is not dict:
        raise exceptions.ConfigError(
            f"Error parsing the config file `{file}`. "
            "The top level must be a mapping."
        )
    return config


def _section(config, name):
    config[name] = config.get(name, {})
    if config[name] is None:
        config[name] = {}
    elif type(config[name]) is not dict:
        raise exceptions.ConfigError(
            "Error parsing the config. "
            f"The `{name}` field must be a mapping."
        )
    return config[name]


def _positive(section, key, default, kind, name):
    section[key] = section.get(key, default)
    value = section[key]
    if type(value) is bool or not isinstance(value, (int, float)):
        raise exceptions.ConfigError(
            "Error parsing the config. "
            f"The `{name}.{key}` field must be a number."
        )
    if kind is int and int(value) != value:
        raise exceptions.ConfigError(
            "Error parsing the config. "
            f"The `{name}.{key}` field must be an integer."
        )
    if value <= 0:
        raise exceptions.ConfigError(
            "Error parsing the config. "
            f"The `{name}.{key}` field must be positive."
        )
    section[key] = kind(value)


def parse_config(config=None):
    """
    Parse a raw config dict and fill in defaults.

    Args:
        config (dict, optional): The raw config, as returned by
            :func:`render_config`. Defaults to an empty config.

    Returns:
        dict:
            The validated config with every default filled in.

    """
    config = dict(config or {})

    #: Tolerances
    tolerance = _section(config, "tolerance")
    _positive(tolerance, "relative", 1e-8, float, "tolerance")
    _positive(tolerance, "kernel", 1e-9, float, "tolerance")
    _positive(tolerance, "symmetry", 1e-12, float, "tolerance")

    #: Jacobi eigensolver
    jacobi = _section(config, "jacobi")
    _positive(jacobi, "offdiag", 1e-14, float, "jacobi")
    _positive(jacobi, "max_sweeps", 100, int, "jacobi")

    #: Subset-sum enumeration guard
    sumset = _section(config, "sumset")
    _positive(sumset, "max_size", 2_000_000, int, "sumset")

    #: Verification suites
    verify = _section(config, "verify")
    _positive(verify, "seeds", 50, int, "verify")
    _positive(verify, "max_n", 7, int, "verify")
    _positive(verify, "workers", 1, int, "verify")
    weights = _section(verify, "weights")
    _positive(weights, "max", 16, int, "verify.weights")

    #: Log directory, relative to the working directory
    config["logs"] = config.get("logs", paths.LOGS)
    if type(config["logs"]) is not str:
        raise exceptions.ConfigError(
            "Error parsing the config. The `logs` field must be a string."
        )

    return config


def load_config(file=None):
    """
    Load, validate and cache the process-wide config.

    Args:
        file (str, optional): Path to a YAML config. If omitted, uses
            ``weightedhodge.yml`` in the working directory when present and
            the defaults otherwise.

    Returns:
        dict:
            The parsed config.

    """
    global _config
    if file is None:
        file = Path(CONFIG_FILE)
        raw = render_config(file) if file.exists() else {}
    else:
        if not Path(file).exists():
            raise exceptions.ConfigError(
                f"Config file `{file}` does not exist."
            )
        raw = render_config(file)
    _config = parse_config(raw)
    if _config["logs"] != paths.LOGS:
        logging.use_log_dir(_config["logs"])
    logging.get_logger().debug(f"Loaded config: {_config}")
    return _config


def get_config():
    """Return the process-wide config, loading the defaults if needed."""
    if _config is None:
        return load_config()
    return _config


def reset_config():
    """Forget the cached config (the next access reloads it)."""
    global _config
    _config = None


def set_config(config):
    """Install an already parsed config (used by suite worker processes)."""
    global _config
    _config = config
