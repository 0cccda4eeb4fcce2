"""
Abstract simplicial complexes over an ordered vertex list.

Faces are stored as strictly increasing tuples of vertex *indices*; the
position of a vertex in ``Complex.vertices`` fixes the orientation used by
every sign in the package. Labels only appear at the edges (construction,
file formats, pretty printing).

"""
from itertools import combinations
from math import comb

import networkx as nx
import numpy as np

from . import exceptions
from .logging import get_logger

__all__ = [
    "Complex",
    "from_facets",
    "from_faces",
    "void_complex",
    "link",
    "missing_faces",
    "h",
    "sign_eps",
    "boundary_sign",
    "n_sets",
    "sigma_classes",
    "skeleton",
    "induced",
    "delete_face",
    "underlying_graph",
    "random_complex",
    "clique_complex",
    "independence_complex",
    "is_clique_complex",
    "upper_degree",
    "is_subcomplex",
    "f_vector",
    "euler_characteristic",
    "has_complete_skeleton",
]


def _close(faces):
    """Downward closure of an iterable of sorted index tuples."""
    closed = set()
    for face in faces:
        if face in closed:
            continue
        for size in range(len(face) + 1):
            closed.update(combinations(face, size))
    return closed


class Complex:
    """
    An immutable, downward closed family of vertex subsets.

    The vertex list is the ground set ``V``. A vertex of ``V`` need not be a
    face (Alexander duals routinely have such "ghost" vertices). The void
    complex has no faces at all, not even the empty one; it reports
    ``dim == -2`` so that dimension ranges over it come out empty.

    """

    def __init__(self, vertices, faces=(), void=False):
        """

        Args:
            vertices (iterable): Vertex labels in orientation order.
            faces (iterable): Index tuples; closed downward on construction.
            void (bool): Build the void complex on ``vertices``.
        """
        self._vertices = tuple(vertices)
        self._index = {}
        for i, label in enumerate(self._vertices):
            if label in self._index:
                raise exceptions.DuplicateVertex(label)
            self._index[label] = i

        if void:
            closed = set()
        else:
            closed = _close(tuple(sorted(set(f))) for f in faces)
            closed.add(())
            n = len(self._vertices)
            for face in closed:
                if face and (face[0] < 0 or face[-1] >= n):
                    raise exceptions.UnknownVertex(face)

        by_dim = {}
        for face in closed:
            by_dim.setdefault(len(face) - 1, []).append(face)
        self._order = {k: tuple(sorted(v)) for k, v in by_dim.items()}
        self._faces = {k: frozenset(v) for k, v in self._order.items()}
        self._position = {
            k: {face: i for i, face in enumerate(v)}
            for k, v in self._order.items()
        }
        self._dim = max(self._order) if self._order else -2

        links = {face: set() for face in closed}
        for face in closed:
            for i, v in enumerate(face):
                links[face[:i] + face[i + 1 :]].add(v)
        self._links = {face: frozenset(v) for face, v in links.items()}

    # -- basic queries --

    @property
    def vertices(self):
        """Ordered vertex labels."""
        return self._vertices

    @property
    def n(self):
        """Size of the ground vertex set."""
        return len(self._vertices)

    @property
    def dim(self):
        return self._dim

    @property
    def void(self):
        return self._dim == -2

    def faces(self, k):
        """Faces of dimension ``k`` in lexicographic (canonical) order."""
        return self._order.get(k, ())

    def f(self, k):
        """Number of ``k``-dimensional faces."""
        return len(self._order.get(k, ()))

    def position(self, face):
        """Row of ``face`` in the canonical order of its dimension."""
        face = tuple(face)
        try:
            return self._position[len(face) - 1][face]
        except KeyError:
            raise exceptions.FaceNotInComplex(self.labels(face))

    def __contains__(self, face):
        face = tuple(face)
        return face in self._faces.get(len(face) - 1, ())

    def __iter__(self):
        for k in range(-1, self._dim + 1):
            yield from self._order.get(k, ())

    def __len__(self):
        return sum(len(v) for v in self._order.values())

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        return (
            self._vertices == other._vertices
            and self._faces == other._faces
        )

    def __hash__(self):
        return hash((self._vertices, frozenset(self._faces.items())))

    def __repr__(self):
        if self.void:
            return f"Complex(n={self.n}, void)"
        return (
            f"Complex(n={self.n}, dim={self.dim}, "
            f"f={f_vector(self)})"
        )

    @property
    def vertex_set(self):
        """Indices of the vertices that are faces."""
        return frozenset(v for (v,) in self.faces(0))

    @property
    def ghosts(self):
        """Labels of ground-set vertices that are not faces."""
        present = self.vertex_set
        return tuple(
            label
            for i, label in enumerate(self._vertices)
            if i not in present
        )

    def face(self, labels):
        """Convert vertex labels to a sorted index tuple.

        Args:
            labels (iterable): Vertex labels.

        Returns:
            tuple: The face as sorted indices.
        """
        try:
            return tuple(sorted(self._index[label] for label in labels))
        except KeyError as e:
            raise exceptions.UnknownVertex(e.args[0])

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise exceptions.UnknownVertex(label)

    def labels(self, face):
        """Convert an index tuple to a tuple of vertex labels."""
        return tuple(self._vertices[i] for i in face)

    def facets(self):
        """Maximal faces, shortest first, lexicographic within a size."""
        result = []
        for k in range(-1, self._dim + 1):
            for face in self._order[k]:
                if not self.cofaces(face):
                    result.append(face)
        return result

    def cofaces(self, face):
        """Vertices ``v`` with ``face + {v}`` a face (the link, unchecked)."""
        return self._links.get(tuple(sorted(face)), frozenset())


def _as_face(face):
    face = tuple(sorted(face))
    if len(set(face)) != len(face):
        raise exceptions.InvalidParameters(
            f"Face {face} repeats a vertex."
        )
    return face


def from_facets(vertices, facets, ghosts=()):
    """
    Build a complex from its facets given as label sets.

    Every listed vertex becomes a 0-face unless it appears in ``ghosts``.

    Args:
        vertices (list): Vertex labels in orientation order.
        facets (list): Iterables of labels.
        ghosts (iterable, optional): Labels that are in the ground set but
            are not faces.

    Returns:
        Complex: The downward closure of the facets, plus ``{∅}``.

    """
    vertices = list(vertices)
    index = {}
    for i, label in enumerate(vertices):
        if label in index:
            raise exceptions.DuplicateVertex(label)
        index[label] = i
    ghosts = set(ghosts)
    for label in ghosts:
        if label not in index:
            raise exceptions.UnknownVertex(label)
    faces = [(index[label],) for label in vertices if label not in ghosts]
    for facet in facets:
        face = []
        for label in facet:
            if label not in index:
                raise exceptions.UnknownVertex(label)
            face.append(index[label])
        faces.append(_as_face(face))
    X = Complex(vertices, faces)
    stray = ghosts & set(X.labels(v for (v,) in X.faces(0)))
    if stray:
        raise exceptions.InvalidParameters(
            f"Ghost vertices {sorted(map(str, stray))} appear in a facet."
        )
    return X


def from_faces(vertices, faces):
    """Build a complex on ``vertices`` from index tuples, closing downward.

    Unlike :func:`from_facets`, vertices that appear in no face stay ghosts.
    """
    return Complex(vertices, [_as_face(face) for face in faces])


def void_complex(vertices):
    """The complex with no faces on the given ground set."""
    return Complex(vertices, void=True)


def _require_face(X, sigma):
    sigma = _as_face(sigma)
    if sigma not in X:
        raise exceptions.FaceNotInComplex(X.labels(sigma))
    return sigma


def link(X, sigma):
    """
    The link of a face: vertices ``v`` outside ``sigma`` with
    ``sigma + {v}`` in ``X``.

    Args:
        X (Complex): The complex.
        sigma (tuple): A face of ``X`` (vertex indices).

    Returns:
        frozenset: Vertex indices.

    """
    return X.cofaces(_require_face(X, sigma))


def upper_degree(X, sigma):
    """deg⁺(σ), the number of codimension-one cofaces."""
    return len(link(X, sigma))


def missing_faces(X):
    """
    Minimal non-faces of ``X``: subsets not in ``X`` whose proper subsets
    all are.

    Returns:
        list: Index tuples, ordered by size then lexicographically.

    """
    if X.void:
        raise exceptions.VoidComplexError("Missing-face enumeration")
    missing = []
    # A missing face of size s has all its (s-1)-subsets in X
    for size in range(1, X.dim + 3):
        below = X._faces.get(size - 2, ())
        seen = set()
        for tau in X.faces(size - 2):
            start = tau[-1] + 1 if tau else 0
            for v in range(start, X.n):
                candidate = tau + (v,)
                if candidate in X or candidate in seen:
                    continue
                seen.add(candidate)
                if all(
                    candidate[:j] + candidate[j + 1 :] in below
                    for j in range(size)
                ):
                    missing.append(candidate)
    return missing


def h(X):
    """Largest dimension of a missing face, or ``None`` for a full simplex."""
    missing = missing_faces(X)
    if not missing:
        return None
    return max(len(face) for face in missing) - 1


def sign_eps(sigma, tau):
    """
    ``(-1)**eps`` where ``eps`` counts the shared vertices strictly between
    the two vertices in which ``sigma`` and ``tau`` differ.

    Args:
        sigma (tuple): Sorted face.
        tau (tuple): Sorted face of the same size sharing all but one
            vertex with ``sigma``.

    Returns:
        int: +1 or -1.

    """
    s, t = set(sigma), set(tau)
    if len(s) != len(t) or len(s & t) != len(s) - 1:
        raise exceptions.InvalidOverlap(tuple(sigma), tuple(tau))
    (i,) = s - t
    (j,) = t - s
    lo, hi = min(i, j), max(i, j)
    eps = sum(1 for v in s & t if lo < v < hi)
    return -1 if eps % 2 else 1


def boundary_sign(sigma, j):
    """Sign ``(-1)**(j-1)`` for removing the ``j``-th (1-based) vertex."""
    if not 1 <= j <= len(sigma):
        raise exceptions.PositionOutOfRange(j, len(sigma))
    return -1 if (j - 1) % 2 else 1


def n_sets(X, sigma, v):
    """
    The sets ``N_σ(v)`` and ``M_σ(v)``.

    ``N`` holds the codimension-one faces ``η`` of ``σ`` whose link contains
    ``v``; ``M`` holds the complementary vertices ``σ∖η``.

    Args:
        X (Complex): The complex.
        sigma (tuple): A face of dimension ``k >= 0``.
        v (int): A vertex index not in ``sigma``.

    Returns:
        tuple: ``(N, M)``, two lists of index tuples of equal length.

    """
    sigma = _require_face(X, sigma)
    if not sigma:
        raise exceptions.InvalidParameters(
            "N-sets are defined for faces of dimension k >= 0."
        )
    if v in sigma:
        raise exceptions.VertexInFace(X.labels((v,)), X.labels(sigma))
    N, M = [], []
    for eta in combinations(sigma, len(sigma) - 1):
        if tuple(sorted(eta + (v,))) in X:
            N.append(eta)
            M.append(tuple(u for u in sigma if u not in eta))
    return N, M


def sigma_classes(X, sigma):
    """
    Partition the common neighbours of ``sigma`` outside its link by how
    many facets of ``sigma`` they see.

    Class ``j`` holds the vertices ``u`` adjacent to every vertex of
    ``sigma``, not in ``lk(σ)``, with ``|N_σ(u)| = j``. All classes are
    empty on a clique complex.

    Returns:
        list: ``k + 2`` frozensets of vertex indices.

    """
    sigma = _require_face(X, sigma)
    if not sigma:
        raise exceptions.InvalidParameters(
            "σ-classes are defined for faces of dimension k >= 0."
        )
    common = frozenset.intersection(*(X.cofaces((v,)) for v in sigma))
    common -= X.cofaces(sigma)
    classes = [set() for _ in range(len(sigma) + 1)]
    for u in common:
        classes[len(n_sets(X, sigma, u)[0])].add(u)
    return [frozenset(c) for c in classes]


def skeleton(X, p):
    """All faces of dimension at most ``p``."""
    if p < -1:
        raise exceptions.InvalidParameters(
            f"Skeleton dimension must be >= -1, got {p}."
        )
    if X.void:
        return X
    return Complex(
        X.vertices, (face for face in X if len(face) <= p + 1)
    )


def underlying_graph(X):
    """The 1-skeleton ``G_X`` as a complex."""
    return skeleton(X, 1)


def induced(X, labels):
    """
    The induced subcomplex on a vertex subset.

    Args:
        X (Complex): The complex.
        labels (iterable): Vertex labels to keep; the orientation order of
            ``X`` is preserved.

    Returns:
        Complex: Faces of ``X`` contained in the subset, on the subset.

    """
    keep = set(X.face(labels))
    kept = [i for i in range(X.n) if i in keep]
    remap = {old: new for new, old in enumerate(kept)}
    faces = (
        tuple(remap[v] for v in face)
        for face in X
        if keep.issuperset(face)
    )
    return Complex([X.vertices[i] for i in kept], faces)


def delete_face(X, sigma):
    """Remove a maximal face; the result stays downward closed."""
    sigma = _require_face(X, sigma)
    if X.cofaces(sigma):
        raise exceptions.NotMaximalFace(X.labels(sigma))
    if not sigma:
        return void_complex(X.vertices)
    return Complex(X.vertices, (face for face in X if face != sigma))


def random_complex(n, k, density, seed=None, rng=None):
    """
    Random complex on ``n`` vertices labelled ``"0" .. "n-1"``.

    Each ``(k+1)``-subset becomes a facet with probability ``density``; all
    vertices are faces. Draws come from numpy's PCG64 generator, so a given
    seed replays bit-exactly.

    Args:
        n (int): Number of vertices.
        k (int): Facet dimension.
        density (float): Inclusion probability in ``[0, 1]``.
        seed (int, optional): Seed for ``numpy.random.default_rng``.
        rng (numpy.random.Generator, optional): Generator to draw from
            instead of seeding a new one.

    Returns:
        Complex: The closed random complex.

    """
    if n < 1 or not -1 <= k <= n - 1 or not 0 <= density <= 1:
        raise exceptions.InvalidParameters(
            f"random_complex needs n >= 1, -1 <= k < n and density in "
            f"[0, 1]; got n={n}, k={k}, density={density}."
        )
    if rng is None:
        rng = np.random.default_rng(seed)
    candidates = list(combinations(range(n), k + 1))
    draws = rng.random(len(candidates))
    faces = [c for c, u in zip(candidates, draws) if u < density]
    faces.extend((v,) for v in range(n))
    get_logger().debug(
        f"random_complex: n={n}, k={k}, kept {len(faces) - n} of "
        f"{len(candidates)} candidate facets"
    )
    return Complex([str(v) for v in range(n)], faces)


def _graph(vertices, edges):
    G = nx.Graph()
    G.add_nodes_from(vertices)
    for u, v in edges:
        if u not in G or v not in G:
            raise exceptions.UnknownVertex(u if u not in G else v)
        G.add_edge(u, v)
    return G


def _clique_faces(G, order, max_dim=None):
    index = {label: i for i, label in enumerate(order)}
    faces = []
    for clique in nx.find_cliques(G):
        face = tuple(sorted(index[v] for v in clique))
        if max_dim is None or len(face) <= max_dim + 1:
            faces.append(face)
        else:
            faces.extend(combinations(face, max_dim + 1))
    return faces


def clique_complex(vertices, edges, max_dim=None):
    """
    The clique (flag) complex of a graph.

    Args:
        vertices (list): Vertex labels in orientation order.
        edges (iterable): Pairs of labels.
        max_dim (int, optional): Truncate at this dimension.

    Returns:
        Complex: All cliques of the graph as faces.

    """
    vertices = list(vertices)
    if len(set(vertices)) != len(vertices):
        raise exceptions.DuplicateVertex(
            next(v for v in vertices if vertices.count(v) > 1)
        )
    G = _graph(vertices, edges)
    return Complex(vertices, _clique_faces(G, vertices, max_dim))


def independence_complex(vertices, edges):
    """All independent sets of a graph (the clique complex of its
    complement)."""
    vertices = list(vertices)
    G = nx.complement(_graph(vertices, edges))
    return Complex(vertices, _clique_faces(G, vertices))


def is_clique_complex(X):
    """True when every clique of ``G_X`` is a face of ``X``."""
    if X.void:
        return False
    G = nx.Graph()
    G.add_nodes_from(v for (v,) in X.faces(0))
    G.add_edges_from(X.faces(1))
    return all(
        tuple(sorted(clique)) in X for clique in nx.enumerate_all_cliques(G)
    )


def is_subcomplex(Xp, X):
    """
    Whether ``Xp`` is a subcomplex of ``X``, matching vertices by label.

    Returns:
        bool: True when every face of ``Xp`` is a face of ``X``.

    """
    if not set(Xp.vertices) <= set(X.vertices):
        return False
    return all(X.face(Xp.labels(face)) in X for face in Xp)


def f_vector(X):
    """``[f_{-1}, f_0, ..., f_dim]``; empty for the void complex."""
    return [X.f(k) for k in range(-1, X.dim + 1)]


def euler_characteristic(X):
    """Reduced Euler characteristic ``Σ_{k>=-1} (-1)^k f_k``."""
    return sum((-1) ** (k % 2) * X.f(k) for k in range(-1, X.dim + 1))


def has_complete_skeleton(X, p):
    """Whether every ``(k+1)``-subset of ``V`` is a face for ``k <= p``."""
    return all(X.f(k) == comb(X.n, k + 1) for k in range(-1, p + 1))
