"""
Bodies of the ``construct`` subcommands.

Every construction returns the canonical JSON text of the result; the
command group decides whether it goes to a file or to standard output.

"""
from pathlib import Path

from ... import exceptions, formats
from ...complex import (
    clique_complex,
    independence_complex,
    random_complex,
    skeleton,
)
from ...constructions import (
    FIXTURES,
    alexander_dual,
    complement_complex,
    extremal_family,
    join,
    star_complex,
)
from ...logging import get_logger
from ...operators import WeightedComplex
from ...rational import parse_rational


def write_text(text, output):
    """Write ``text`` (plus a newline) to ``output``."""
    Path(output).write_text(text + "\n", encoding="utf-8")
    get_logger().debug(f"construct: wrote {output}")


def _same_weights(W, X):
    return formats.dumps(W.with_complex(X))


def construct_join(first, second, namespace=True):
    W = join(formats.load(first), formats.load(second), namespace=namespace)
    return formats.dumps(W)


def construct_dual(file):
    W = formats.load(file)
    return _same_weights(W, alexander_dual(W.complex))


def construct_complement(file, k):
    W = formats.load(file)
    return _same_weights(W, complement_complex(W.complex, k))


def construct_star(file, k):
    W = formats.load(file)
    return _same_weights(W, star_complex(W.complex, k))


def construct_skeleton(file, p):
    W = formats.load(file)
    return _same_weights(W, skeleton(W.complex, p))


def construct_extremal(d, t, r, weights=None):
    """
    The extremal family as canonical JSON.

    Args:
        weights (str, optional): ``t + r`` comma separated rationals: one
            constant per sphere block, then the simplex vertex weights.

    """
    block_weights = None
    if weights is not None:
        values = [
            parse_rational(w, "extremal weight") for w in weights.split(",")
        ]
        if len(values) != t + r:
            raise exceptions.InvalidParameters(
                f"Expected {t + r} weights (t sphere constants and r simplex "
                f"weights), got {len(values)}."
            )
        block_weights = values[:t] + [values[t:]]
    family = extremal_family(d, t, r, block_weights)
    return formats.dumps(family.weighted)


def construct_fixture(name, **params):
    """A named fixture; ``params`` holds ``n``, ``p`` and ``k`` (unused
    ones may be None)."""
    build, names = FIXTURES[name]
    missing = [p for p in names if params.get(p) is None]
    if missing:
        raise exceptions.InvalidParameters(
            f"Fixture `{name}` needs " + ", ".join(f"--{p}" for p in missing)
        )
    X = build(*(params[p] for p in names))
    return formats.dumps(WeightedComplex(X))


def construct_random(n, k, density, seed):
    return formats.dumps(
        WeightedComplex(random_complex(n, k, density, seed=seed))
    )


def construct_clique(graph, max_dim=None):
    vertices, edges, weights = formats.load_graph(graph)
    X = clique_complex(vertices, edges, max_dim=max_dim)
    return formats.dumps(WeightedComplex(X, weights))


def construct_independence(graph):
    vertices, edges, weights = formats.load_graph(graph)
    X = independence_complex(vertices, edges)
    return formats.dumps(WeightedComplex(X, weights))
