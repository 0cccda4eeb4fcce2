"""
Seeded random instances for the verification suites.

Every draw comes from ``numpy.random.Generator(PCG64)`` seeded with
``SeedSequence([crc32(suite), seed])``, so a (suite, seed) pair replays the
same instances on any machine.

"""
import hashlib
import zlib
from fractions import Fraction

import numpy as np

from ..complex import random_complex
from ..config import get_config
from ..operators import WeightedComplex
from ..rational import format_rational


def suite_rng(suite, seed):
    """The generator for one (suite, seed) pair."""
    entropy = [zlib.crc32(suite.encode("utf-8")), int(seed)]
    sequence = np.random.SeedSequence(entropy)
    return np.random.Generator(np.random.PCG64(sequence))


def random_weights(rng, n):
    """``n`` rationals ``p/q`` with ``p, q`` in ``[1, verify.weights.max]``."""
    top = get_config()["verify"]["weights"]["max"]
    p = rng.integers(1, top + 1, size=n)
    q = rng.integers(1, top + 1, size=n)
    return [Fraction(int(a), int(b)) for a, b in zip(p, q)]


def random_weighted(rng, max_n, min_n=2, n=None):
    """
    A random complex with random weights.

    The facet dimension is uniform in ``0 .. n-1`` and the facet density
    uniform in ``[0.3, 0.9]``.

    """
    if n is None:
        n = int(rng.integers(min_n, max_n + 1))
    k = int(rng.integers(0, n))
    density = float(rng.uniform(0.3, 0.9))
    X = random_complex(n, k, density, rng=rng)
    return WeightedComplex(X, random_weights(rng, n))


def random_symmetric(rng, max_n):
    """A random symmetric matrix of order ``1 .. max_n``."""
    n = int(rng.integers(1, max_n + 1))
    A = rng.normal(size=(n, n))
    return (A + A.T) / 2.0


def digest(W):
    """Short fingerprint of a weighted complex."""
    text = "|".join(
        [",".join(map(str, W.vertices))]
        + [format_rational(w) for w in W.weights]
        + [" ".join(map(str, face)) for face in W.complex]
    )
    return hashlib.sha1(text.encode("utf-8")).hexdigest()[:10]
