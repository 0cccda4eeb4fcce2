"""
Complex-level constructions: joins, the star and complement complexes,
the Alexander dual, the extremal gap family, and named fixtures.

Every construction keeps the ground vertex list (and hence the
orientation) of its input, so weights carry over by label.

"""
from itertools import combinations, product
from math import comb

from . import exceptions
from .complex import (
    Complex,
    clique_complex,
    h,
    missing_faces,
    void_complex,
)
from .operators import WeightedComplex
from .spectra import Spectrum

__all__ = [
    "JoinedComplex",
    "join",
    "join_many",
    "star_complex",
    "complement_complex",
    "alexander_dual",
    "ExtremalFamily",
    "extremal_family",
    "extremal_gap_unit",
    "extremal_min_gap_degree",
    "extremal_blocks",
    "is_extremal_family",
    "complete_skeleton_spectrum",
    "join_spectrum",
    "simplex",
    "skeleton_simplex",
    "sphere_boundary",
    "cycle",
    "cocktail_party",
    "friendship",
    "FIXTURES",
]


class JoinedComplex(WeightedComplex):
    """
    A join ``X_1 * ... * X_m`` with the block each vertex came from.

    Attributes:
        block_map (dict): Vertex label to block index.

    """

    def __init__(self, complex, weights, block_map):
        super().__init__(complex, weights)
        self.block_map = dict(block_map)

    def block(self, b):
        """Vertex indices of block ``b`` in orientation order."""
        return [
            i
            for i, label in enumerate(self.vertices)
            if self.block_map[label] == b
        ]


def join_many(*weighted, namespace=True):
    """
    Join of several weighted complexes.

    Vertices of block ``b`` are placed after those of blocks ``< b``; the
    faces are all unions ``F_1 ∪ ... ∪ F_m``.

    Args:
        weighted (WeightedComplex): Two or more blocks.
        namespace (bool, optional): Prefix labels with ``"<block>."``. If
            False, the blocks must have disjoint labels.

    Returns:
        JoinedComplex: The join with merged weights.

    """
    if len(weighted) < 2:
        raise exceptions.InvalidParameters("A join needs at least two blocks.")
    vertices, weights, block_map = [], [], {}
    faces = {()}
    offset = 0
    for b, W in enumerate(weighted):
        labels = [
            f"{b}.{label}" if namespace else label for label in W.vertices
        ]
        clash = set(labels) & set(block_map)
        if clash:
            raise exceptions.LabelCollision(clash)
        for label in labels:
            block_map[label] = b
        vertices.extend(labels)
        weights.extend(W.weights)
        shifted = [tuple(v + offset for v in face) for face in W.complex]
        faces = {F + G for F, G in product(faces, shifted)}
        offset += W.n
    if not faces:
        complex = void_complex(vertices)
    else:
        complex = Complex(vertices, faces)
    return JoinedComplex(complex, weights, block_map)


def join(W1, W2, namespace=True):
    """The join ``X_1 * X_2``; see :func:`join_many`."""
    return join_many(W1, W2, namespace=namespace)


def star_complex(X, k):
    """
    ``X*_k``: all subsets of some complement ``V∖σ`` with ``σ ∈ X(k)``.

    Raises:
        EmptyGenerators: If ``X(k)`` is empty.

    """
    sigmas = X.faces(k)
    if not sigmas:
        raise exceptions.EmptyGenerators("star", k)
    everything = set(range(X.n))
    generators = [tuple(sorted(everything - set(s))) for s in sigmas]
    return Complex(X.vertices, generators)


def complement_complex(X, k):
    """
    ``X^c_k``: the downward closure of the ``(k+1)``-subsets of ``V`` that
    are not faces of ``X``.

    Raises:
        EmptyGenerators: If ``X`` contains every ``(k+1)``-subset.

    """
    if not -1 <= k <= X.n - 1:
        raise exceptions.DimensionOutOfRange(k, -1, X.n - 1)
    generators = [c for c in combinations(range(X.n), k + 1) if c not in X]
    if not generators:
        raise exceptions.EmptyGenerators("complement", k)
    return Complex(X.vertices, generators)


def alexander_dual(X):
    """
    ``X^∨ = {V∖σ : σ ∉ X}``.

    The dual of the full simplex is the void complex.

    """
    everything = set(range(X.n))
    faces = [
        tuple(sorted(everything - set(c)))
        for size in range(X.n + 1)
        for c in combinations(range(X.n), size)
        if c not in X
    ]
    if not faces:
        return void_complex(X.vertices)
    return Complex(X.vertices, faces)


def _binom(n, k):
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


class ExtremalFamily:
    """
    ``(Δ_d^{(d-1)})^{*t} * Δ_{r-1}`` with its closed-form spectral gaps.

    Attributes:
        weighted (JoinedComplex): The complex; blocks ``0..t-1`` are the
            sphere boundaries, block ``t`` is the simplex.
        d, t, r (int): Family parameters.

    """

    def __init__(self, d, t, r, weighted):
        self.d, self.t, self.r = d, t, r
        self.weighted = weighted

    @property
    def n(self):
        return (self.d + 1) * self.t + self.r

    @property
    def dim(self):
        return self.d * self.t + self.r - 1

    def theta(self, k):
        """``ϑ_k``: ``⌊(k+1)/d⌋`` up to ``k = dt-2``, then ``t``."""
        if not -1 <= k <= self.dim:
            raise exceptions.DimensionOutOfRange(k, -1, self.dim)
        if k <= self.d * self.t - 2:
            return (k + 1) // self.d
        return self.t

    def block_sum(self, b):
        W = self.weighted
        return W.weight_of(W.block(b))

    def gap(self, k):
        """
        Closed-form ``λ_1^↑(L_k^ω)``: the smallest sum of ``t - ϑ_k``
        sphere-block weight sums, plus the weight of the simplex block.

        """
        free = self.t - self.theta(k)
        sums = [self.block_sum(b) for b in range(self.t)]
        return min(sum(c) for c in combinations(sums, free)) + self.block_sum(
            self.t
        )


def extremal_family(d, t, r, block_weights=None):
    """
    Build the extremal gap family.

    Args:
        d (int): Sphere-block dimension, ``d >= 1``.
        t (int): Number of sphere blocks, ``t >= 1``.
        r (int): Size of the simplex block, ``r >= 1``.
        block_weights (list, optional): ``t + 1`` entries. Entry ``i < t``
            is a constant for sphere block ``i`` or a list of ``d + 1``
            weights; entry ``t`` is a constant or a list of ``r`` weights.
            Defaults to ``ω ≡ 1``.

    Returns:
        ExtremalFamily: The complex and its closed forms.

    """
    if d < 1 or t < 1 or r < 1:
        raise exceptions.InvalidParameters(
            f"The extremal family needs d, t, r >= 1; got d={d}, t={t}, "
            f"r={r}."
        )
    if block_weights is None:
        block_weights = [1] * (t + 1)
    if len(block_weights) != t + 1:
        raise exceptions.InvalidParameters(
            f"Expected {t + 1} block weights, got {len(block_weights)}."
        )
    blocks = []
    for b, weights in enumerate(block_weights):
        X = sphere_boundary(d) if b < t else simplex(r)
        if not isinstance(weights, (list, tuple)):
            weights = [weights] * X.n
        blocks.append(WeightedComplex(X, list(weights)))
    return ExtremalFamily(d, t, r, join_many(*blocks))


def extremal_gap_unit(d, t, r, k):
    """Gap of the extremal family at ``ω ≡ 1``."""
    theta = (k + 1) // d if k <= d * t - 2 else t
    return (d + 1) * (t - theta) + r


def extremal_min_gap_degree(d, t, r, k):
    """``δ_k`` (minimum upper degree over ``X(k)``) of the extremal
    family."""
    n = (d + 1) * t + r
    if k <= d * t - 1:
        return n - (k + 1) - (k + 1) // d
    return n - (k + 1) - t


def extremal_blocks(X, k):
    """
    Read the sphere blocks of ``X`` off its missing faces.

    ``X`` is ``(Δ_d^{(d-1)})^{*(n-k-1)} * Δ_{(d+1)(k+1)-dn-1}`` exactly when
    every vertex is a face and the missing faces are ``n - k - 1`` pairwise
    disjoint ``(d+1)``-sets, ``d = h(X)``: a complex is the set of vertex
    subsets containing none of its missing faces.

    Returns:
        list: The blocks (index tuples), or ``None`` if ``X`` is not of
        that shape.

    """
    if X.void or X.ghosts:
        return None
    d = h(X)
    if d is None:
        return None
    t = X.n - k - 1
    r = (d + 1) * (k + 1) - d * X.n
    if t < 1 or r < 0:
        return None
    blocks = missing_faces(X)
    if len(blocks) != t or any(len(b) != d + 1 for b in blocks):
        return None
    seen = set()
    for b in blocks:
        if seen & set(b):
            return None
        seen.update(b)
    return blocks


def is_extremal_family(W, k):
    """Whether ``W`` is the extremal family at ``k`` with weights constant
    on every sphere block."""
    blocks = extremal_blocks(W.complex, k)
    if blocks is None:
        return False
    return all(len({W.weights[v] for v in b}) == 1 for b in blocks)


def complete_skeleton_spectrum(n, p, k, total):
    """
    Closed-form spectrum of ``L_k^ω`` on the complete ``p``-skeleton of the
    simplex on ``n`` vertices.

    Returns:
        list: ``(value, multiplicity)`` pairs, largest value first.

    """
    if not -1 <= k <= p:
        raise exceptions.DimensionOutOfRange(k, -1, p)
    if k < p:
        pairs = [(total, _binom(n, k + 1))]
    else:
        pairs = [(total, _binom(n - 1, k)), (0, _binom(n - 1, k + 1))]
    return [(value, m) for value, m in pairs if m > 0]


def join_spectrum(spectra1, spectra2, k):
    """
    Spectrum of ``L_k^ω(X_1 * X_2)`` composed from the blocks.

    Args:
        spectra1 (dict): ``i -> Spectrum`` of ``L_i^ω(X_1)`` for
            ``i = -1 .. dim X_1``.
        spectra2 (dict): The same for ``X_2``.
        k (int): Target dimension.

    Returns:
        Spectrum: ``⋃_{i_1+i_2=k-1} {λ_1 + λ_2}``.

    """
    values = []
    scale = 1.0
    for i1, s1 in spectra1.items():
        s2 = spectra2.get(k - 1 - i1)
        if s2 is None:
            continue
        scale = max(scale, s1.scale + s2.scale)
        values.extend(a + b for a in s1 for b in s2)
    return Spectrum(values, scale=scale)


def _labels(n):
    return [str(v) for v in range(n)]


def simplex(n):
    """The full simplex ``Δ_{n-1}`` on ``n`` vertices."""
    if n < 1:
        raise exceptions.InvalidParameters("simplex(n) needs n >= 1.")
    return Complex(_labels(n), [tuple(range(n))])


def skeleton_simplex(n, p):
    """``Δ_{n-1}^{(p)}``: every subset of at most ``p + 1`` vertices.

    Vertices are ghosts when ``p = -1``."""
    if n < 1 or not -1 <= p <= n - 1:
        raise exceptions.InvalidParameters(
            f"skeleton_simplex needs n >= 1 and -1 <= p < n; got n={n}, "
            f"p={p}."
        )
    return Complex(_labels(n), combinations(range(n), p + 1))


def sphere_boundary(k):
    """``Δ_k^{(k-1)}``, the boundary of the ``k``-simplex."""
    if k < 0:
        raise exceptions.InvalidParameters("sphere_boundary needs k >= 0.")
    return skeleton_simplex(k + 1, k - 1)


def cycle(n):
    """The cycle graph ``C_n`` as a 1-dimensional complex."""
    if n < 3:
        raise exceptions.InvalidParameters("cycle(n) needs n >= 3.")
    edges = [tuple(sorted((v, (v + 1) % n))) for v in range(n)]
    return Complex(_labels(n), edges)


def cocktail_party(n):
    """Clique complex of ``K_{2n}`` minus the perfect matching
    ``{2i, 2i+1}``."""
    if n < 1:
        raise exceptions.InvalidParameters("cocktail_party(n) needs n >= 1.")
    labels = _labels(2 * n)
    edges = [
        (labels[u], labels[v])
        for u, v in combinations(range(2 * n), 2)
        if not (u // 2 == v // 2)
    ]
    return clique_complex(labels, edges)


def friendship(n):
    """Clique complex of ``n`` triangles sharing the vertex ``"0"``."""
    if n < 1:
        raise exceptions.InvalidParameters("friendship(n) needs n >= 1.")
    labels = _labels(2 * n + 1)
    edges = []
    for i in range(n):
        a, b = labels[2 * i + 1], labels[2 * i + 2]
        edges.extend([(labels[0], a), (labels[0], b), (a, b)])
    return clique_complex(labels, edges)


#: Fixture generators by name, with the parameters they take
FIXTURES = {
    "simplex": (simplex, ("n",)),
    "skeleton": (skeleton_simplex, ("n", "p")),
    "sphere": (sphere_boundary, ("k",)),
    "cycle": (cycle, ("n",)),
    "cocktail-party": (cocktail_party, ("n",)),
    "friendship": (friendship, ("n",)),
}
