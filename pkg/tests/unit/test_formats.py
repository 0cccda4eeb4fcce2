import json
from fractions import Fraction

import pytest

from weightedhodge import exceptions, formats
from weightedhodge.complex import f_vector, from_facets, void_complex
from weightedhodge.operators import WeightedComplex
from weightedhodge.rational import (
    format_float,
    format_rational,
    parse_rational,
)

TRIANGLE = {
    "vertices": ["a", "b", "c"],
    "weights": {"a": "1", "b": "3/2", "c": 2},
    "facets": [["a", "b"], ["b", "c"], ["a", "c"]],
}


@pytest.mark.parametrize(
    "value, expected",
    [
        (3, Fraction(3)),
        ("3/2", Fraction(3, 2)),
        ("0.1", Fraction(1, 10)),
        (" 7 ", Fraction(7)),
        (0.5, Fraction(1, 2)),
        (0.1, Fraction(1, 10)),
        (1e-20, Fraction(1, 10**20)),
    ],
)
def test_parse_rational(value, expected):
    assert parse_rational(value) == expected


@pytest.mark.parametrize(
    "value", [True, "1/0", "abc", None, [1], float("nan"), float("inf")]
)
def test_parse_rational_rejects(value):
    with pytest.raises(exceptions.InputError):
        parse_rational(value)


def test_format_rational_and_float():
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_float(Fraction(1, 3)) == "0.33333333333333331"
    assert format_float(2) == "2"


def test_from_dict():
    W = formats.from_dict(TRIANGLE)
    assert f_vector(W.complex) == [1, 3, 3]
    assert W.weights == (1, Fraction(3, 2), 2)


def test_decimal_weights_are_exact():
    W = formats.loads(
        '{"vertices": ["a", "b"], "weights": {"a": 0.1, "b": 2.5e-1},'
        ' "facets": [["a", "b"]]}'
    )
    assert W.weights == (Fraction(1, 10), Fraction(1, 4))
    assert formats.to_dict(W)["weights"] == {"a": "1/10", "b": "1/4"}


def test_canonical_form():
    W = formats.from_dict(TRIANGLE)
    assert formats.to_dict(W) == {
        "vertices": ["a", "b", "c"],
        "weights": {"a": "1", "b": "3/2", "c": "2"},
        "facets": [["a", "b"], ["a", "c"], ["b", "c"]],
    }
    assert formats.loads(formats.dumps(W)) == W


def test_ghosts_and_void():
    X = from_facets("abc", [["a", "b"]], ghosts=["c"])
    data = formats.to_dict(WeightedComplex(X))
    assert data["ghosts"] == ["c"]
    assert formats.from_dict(data).complex == X
    data = formats.to_dict(WeightedComplex(void_complex("ab")))
    assert data["void"] is True and data["facets"] == []
    assert formats.from_dict(data).complex.void


def test_isolated_vertices_survive():
    W = formats.from_dict({"vertices": ["a", "b"], "facets": []})
    assert formats.to_dict(W)["facets"] == [["a"], ["b"]]


@pytest.mark.parametrize(
    "data",
    [
        [],
        {"facets": []},
        {"vertices": "abc"},
        {"vertices": ["a"], "facets": ["a"]},
        {"vertices": ["a"], "weights": [1]},
        {"vertices": ["a"], "void": "yes"},
        {"vertices": ["a"], "void": True, "facets": [["a"]]},
    ],
)
def test_malformed(data):
    with pytest.raises(exceptions.MalformedComplexFile):
        formats.from_dict(data)


def test_bad_weight():
    data = dict(TRIANGLE, weights={"a": "-1"})
    with pytest.raises(exceptions.NonPositiveWeight):
        formats.from_dict(data)


def test_files(tmp_path):
    W = formats.from_dict(TRIANGLE)
    file = tmp_path / "triangle.json"
    formats.dump(W, file)
    assert formats.load(file) == W
    (tmp_path / "broken.json").write_text("{not json")
    with pytest.raises(exceptions.MalformedComplexFile):
        formats.load(tmp_path / "broken.json")
    with pytest.raises(exceptions.MalformedComplexFile):
        formats.load(tmp_path / "missing.json")


def test_load_graph(tmp_path):
    file = tmp_path / "graph.json"
    file.write_text(
        json.dumps(
            {
                "vertices": ["a", "b", "c"],
                "edges": [["a", "b"]],
                "weights": {"c": "1/2", "a": 0.3},
            }
        )
    )
    vertices, edges, weights = formats.load_graph(file)
    assert vertices == ["a", "b", "c"]
    assert edges == [("a", "b")]
    assert weights == {"c": Fraction(1, 2), "a": Fraction(3, 10)}
    file.write_text(json.dumps({"vertices": ["a"], "edges": [["a"]]}))
    with pytest.raises(exceptions.MalformedComplexFile):
        formats.load_graph(file)
