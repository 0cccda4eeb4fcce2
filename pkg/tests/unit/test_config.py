import pytest

from weightedhodge import exceptions
from weightedhodge.config import (
    edit_yaml,
    get_config,
    load_config,
    parse_config,
    set_config,
)


def test_defaults():
    config = parse_config()
    assert config["tolerance"]["relative"] == 1e-8
    assert config["tolerance"]["kernel"] == 1e-9
    assert config["jacobi"]["max_sweeps"] == 100
    assert config["verify"]["seeds"] == 50
    assert config["verify"]["max_n"] == 7
    assert config["verify"]["workers"] == 1
    assert config["verify"]["weights"]["max"] == 16
    assert config["logs"] == ".weightedhodge/logs"


def test_load(tmp_path):
    file = tmp_path / "weightedhodge.yml"
    with edit_yaml(file) as config:
        config["verify"] = {"max_n": 5}
    config = load_config(file)
    assert config["verify"]["max_n"] == 5
    assert config["verify"]["seeds"] == 50
    assert get_config() is config


def test_render(tmp_path):
    file = tmp_path / "weightedhodge.yml"
    file.write_text("verify:\n  seeds: {{ 2 * 3 }}\n")
    assert load_config(file)["verify"]["seeds"] == 6


def test_set_config():
    config = parse_config({"verify": {"max_n": 5}})
    set_config(config)
    assert get_config()["verify"]["max_n"] == 5


@pytest.mark.parametrize(
    "raw",
    [
        {"tolerance": []},
        {"tolerance": {"relative": -1}},
        {"tolerance": {"relative": "small"}},
        {"verify": {"seeds": 2.5}},
        {"verify": {"workers": True}},
        {"logs": 3},
    ],
)
def test_invalid(raw):
    with pytest.raises(exceptions.ConfigError):
        parse_config(raw)


def test_missing_and_malformed_files(tmp_path):
    with pytest.raises(exceptions.ConfigError):
        load_config(tmp_path / "nope.yml")
    file = tmp_path / "bad.yml"
    file.write_text("- just\n- a list\n")
    with pytest.raises(exceptions.ConfigError):
        load_config(file)
