"""
The canonical JSON complex format.

.. code-block:: json

    {
        "vertices": ["a", "b", "c"],
        "weights": {"a": "1", "b": "3/2", "c": "2"},
        "facets": [["a", "b"], ["b", "c"], ["a", "c"]]
    }

Optional keys: ``"ghosts"`` lists ground-set vertices that are not faces,
and ``"void": true`` marks the void complex. Weights may be numbers or
strings (``"p/q"`` or decimals); both are parsed exactly, so ``0.1`` is
``1/10``. Omitted weights are 1.

"""
import json
from fractions import Fraction
from pathlib import Path

from . import exceptions
from .complex import from_facets, void_complex
from .operators import WeightedComplex
from .rational import format_rational, parse_rational

__all__ = [
    "load",
    "loads",
    "dump",
    "dumps",
    "to_dict",
    "from_dict",
    "load_graph",
]


def _require(condition, source, reason):
    if not condition:
        raise exceptions.MalformedComplexFile(source, reason)


def from_dict(data, source="<dict>"):
    """
    Build a :class:`WeightedComplex` from the parsed JSON object.

    Raises:
        MalformedComplexFile: If a key is missing or has the wrong type.
        NonPositiveWeight: If a weight is not positive.

    """
    _require(isinstance(data, dict), source, "top level must be an object")
    _require("vertices" in data, source, "missing `vertices`")
    vertices = data["vertices"]
    _require(
        isinstance(vertices, list)
        and all(isinstance(v, str) for v in vertices),
        source,
        "`vertices` must be a list of strings",
    )
    facets = data.get("facets", [])
    _require(
        isinstance(facets, list)
        and all(isinstance(f, list) for f in facets),
        source,
        "`facets` must be a list of lists",
    )
    ghosts = data.get("ghosts", [])
    _require(isinstance(ghosts, list), source, "`ghosts` must be a list")
    weights = data.get("weights", {})
    _require(isinstance(weights, dict), source, "`weights` must be an object")
    void = data.get("void", False)
    _require(isinstance(void, bool), source, "`void` must be a boolean")

    if void:
        _require(not facets, source, "a void complex has no facets")
        X = void_complex(vertices)
    else:
        X = from_facets(vertices, facets, ghosts=ghosts)
    parsed = {
        label: parse_rational(value, f"weight of `{label}`")
        for label, value in weights.items()
    }
    return WeightedComplex(X, parsed)


def to_dict(W):
    """Canonical JSON object: facets shortest first, lexicographic."""
    X = W.complex
    data = {
        "vertices": list(X.vertices),
        "weights": {
            label: format_rational(w)
            for label, w in zip(X.vertices, W.weights)
        },
    }
    if X.void:
        data["facets"] = []
        data["void"] = True
        return data
    data["facets"] = [list(X.labels(face)) for face in X.facets()]
    if X.ghosts:
        data["ghosts"] = list(X.ghosts)
    return data


def loads(text, source="<string>"):
    try:
        data = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as e:
        raise exceptions.MalformedComplexFile(source, str(e))
    return from_dict(data, source)


def load(file):
    """Read a weighted complex from a JSON file."""
    file = Path(file)
    try:
        text = file.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise exceptions.MalformedComplexFile(file, str(e))
    return loads(text, source=file)


def dumps(W, **kwargs):
    kwargs.setdefault("indent", 2)
    return json.dumps(to_dict(W), **kwargs)


def dump(W, file):
    """Write a weighted complex to ``file`` in the canonical format."""
    Path(file).write_text(dumps(W) + "\n", encoding="utf-8")


def load_graph(file):
    """
    Read a graph file for the clique and independence constructions.

    .. code-block:: json

        {"vertices": ["a", "b", "c"], "edges": [["a", "b"]]}

    An optional ``"weights"`` object is read as in the complex format.

    Returns:
        tuple: ``(vertices, edges, weights)`` with edges as label pairs and
        weights as a label to ``Fraction`` dict.

    """
    file = Path(file)
    try:
        data = json.loads(
            file.read_text(encoding="utf-8"), parse_float=Fraction
        )
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
        raise exceptions.MalformedComplexFile(file, str(e))
    _require(isinstance(data, dict), file, "top level must be an object")
    vertices = data.get("vertices")
    _require(
        isinstance(vertices, list)
        and all(isinstance(v, str) for v in vertices),
        file,
        "`vertices` must be a list of strings",
    )
    edges = data.get("edges", [])
    _require(
        isinstance(edges, list)
        and all(isinstance(e, list) and len(e) == 2 for e in edges),
        file,
        "`edges` must be a list of label pairs",
    )
    weights = data.get("weights", {})
    _require(isinstance(weights, dict), file, "`weights` must be an object")
    weights = {
        label: parse_rational(value, f"weight of `{label}`")
        for label, value in weights.items()
    }
    return vertices, [tuple(e) for e in edges], weights
