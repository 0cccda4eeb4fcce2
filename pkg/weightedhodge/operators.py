"""
Exact assembly of the vertex-weighted operators of a simplicial complex.

Every matrix here is a dense numpy array of ``fractions.Fraction`` objects
with labelled bases. Floating point only enters in :func:`symmetrize`, which
conjugates a symmetrizable matrix by ``W^{1/2}`` for the eigensolver.

The weighted inner product on ``k``-cochains gives the elementary cochain of
``σ`` the weight ``ω(σ) = ∏_{v∈σ} ω(v)``. With ``W_k = diag(ω(σ))`` every
Laplacian ``M`` built here satisfies ``W M = M^T W``.

"""
import csv
import io
import json
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import exceptions
from .complex import Complex, sign_eps
from .logging import get_logger
from .rational import format_float, format_rational, parse_rational

__all__ = [
    "WeightedComplex",
    "OperatorMatrix",
    "simplex_weight",
    "coboundary",
    "adjoint_coboundary",
    "down_laplacian",
    "down_laplacian_product",
    "up_laplacian_restricted",
    "up_laplacian_product",
    "up_laplacian_extended",
    "full_laplacian",
    "laplacian",
    "graph_laplacian",
    "j_matrix",
    "symmetrize",
    "pq_split",
    "gershgorin_radius",
    "principal_submatrix",
    "direct_sum",
    "OPERATORS",
]

ZERO = Fraction(0)
ONE = Fraction(1)


class WeightedComplex:
    """
    A complex together with a positive rational weight on each vertex of its
    ground set.

    """

    def __init__(self, complex, weights=None):
        """

        Args:
            complex (Complex): The underlying complex.
            weights (dict or sequence, optional): Either a mapping from label
                to weight (missing labels get weight 1) or a sequence aligned
                with ``complex.vertices``. Defaults to ``ω ≡ 1``.
        """
        if not isinstance(complex, Complex):
            raise exceptions.InvalidParameters(
                "WeightedComplex needs a Complex instance."
            )
        self.complex = complex
        if weights is None:
            values = [ONE] * complex.n
        elif isinstance(weights, dict):
            for label in weights:
                if label not in complex._index:
                    raise exceptions.UnknownVertex(label)
            values = [
                parse_rational(weights.get(label, 1), f"weight of {label}")
                for label in complex.vertices
            ]
        else:
            values = [parse_rational(w, "weight") for w in weights]
            if len(values) != complex.n:
                raise exceptions.InvalidParameters(
                    f"Expected {complex.n} weights, got {len(values)}."
                )
        for label, value in zip(complex.vertices, values):
            if value <= 0:
                raise exceptions.NonPositiveWeight(label, value)
        self.weights = tuple(values)

    @property
    def n(self):
        return self.complex.n

    @property
    def dim(self):
        return self.complex.dim

    @property
    def vertices(self):
        return self.complex.vertices

    @property
    def total(self):
        """``Σ_{v∈V} ω(v)`` over the whole ground set."""
        return sum(self.weights, ZERO)

    def weight(self, label):
        return self.weights[self.complex.index(label)]

    def weight_of(self, vertices):
        """Sum of the weights of an iterable of vertex indices."""
        return sum((self.weights[v] for v in vertices), ZERO)

    def with_complex(self, complex):
        """Same weights (matched by label) on another complex."""
        return WeightedComplex(
            complex,
            {label: self.weight(label) for label in complex.vertices},
        )

    def with_weights(self, weights):
        return WeightedComplex(self.complex, weights)

    def weight_map(self):
        return dict(zip(self.complex.vertices, self.weights))

    def __eq__(self, other):
        if not isinstance(other, WeightedComplex):
            return NotImplemented
        return self.complex == other.complex and self.weights == other.weights

    def __hash__(self):
        return hash((self.complex, self.weights))

    def __repr__(self):
        return f"WeightedComplex({self.complex!r}, Σω={self.total})"


class OperatorMatrix:
    """
    A dense rational matrix with ordered, weighted bases.

    Attributes:
        entries (numpy.ndarray): ``object`` array of ``Fraction``.
        row_basis (tuple): Faces indexing the rows.
        col_basis (tuple): Faces indexing the columns.
        row_weights (tuple): ``ω(σ)`` for each row face.
        col_weights (tuple): ``ω(σ)`` for each column face.
        name (str): Operator name, used in exports and messages.
        scale (Fraction): ``Σω`` of the source complex; sets the
            tolerances used on its spectrum.

    """

    def __init__(
        self,
        entries,
        row_basis,
        row_weights,
        col_basis=None,
        col_weights=None,
        name="matrix",
        scale=ONE,
        labels=None,
    ):
        self.row_basis = tuple(row_basis)
        self.col_basis = (
            self.row_basis if col_basis is None else tuple(col_basis)
        )
        self.row_weights = tuple(row_weights)
        self.col_weights = (
            self.row_weights if col_weights is None else tuple(col_weights)
        )
        entries = np.asarray(entries, dtype=object)
        shape = (len(self.row_basis), len(self.col_basis))
        self.entries = entries.reshape(shape)
        self.name = name
        self.scale = Fraction(scale)
        self.labels = labels

    @property
    def shape(self):
        return self.entries.shape

    @property
    def is_square(self):
        return self.row_basis == self.col_basis

    @property
    def basis_weights(self):
        return self.row_weights

    def __getitem__(self, key):
        return self.entries[key]

    def __eq__(self, other):
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.row_basis == other.row_basis
            and self.col_basis == other.col_basis
            and bool(np.all(self.entries == other.entries))
        )

    __hash__ = None

    def _check_bases(self, other, rows, cols):
        if rows != cols:
            raise exceptions.LinalgError(
                f"Cannot combine {self.name} and {other.name}: "
                "bases do not match."
            )

    def __add__(self, other):
        self._check_bases(other, self.row_basis, other.row_basis)
        self._check_bases(other, self.col_basis, other.col_basis)
        return OperatorMatrix(
            self.entries + other.entries,
            self.row_basis,
            self.row_weights,
            self.col_basis,
            self.col_weights,
            name=f"({self.name} + {other.name})",
            scale=self.scale,
            labels=self.labels,
        )

    def __sub__(self, other):
        self._check_bases(other, self.row_basis, other.row_basis)
        self._check_bases(other, self.col_basis, other.col_basis)
        return OperatorMatrix(
            self.entries - other.entries,
            self.row_basis,
            self.row_weights,
            self.col_basis,
            self.col_weights,
            name=f"({self.name} - {other.name})",
            scale=self.scale,
            labels=self.labels,
        )

    def __matmul__(self, other):
        self._check_bases(other, self.col_basis, other.row_basis)
        if self.shape[1] == 0:
            entries = _zeros(self.shape[0], other.shape[1])
        else:
            entries = self.entries.dot(other.entries)
        return OperatorMatrix(
            entries,
            self.row_basis,
            self.row_weights,
            other.col_basis,
            other.col_weights,
            name=f"{self.name} {other.name}",
            scale=self.scale,
            labels=self.labels,
        )

    def is_zero(self):
        return bool(np.all(self.entries == 0))

    def to_float(self):
        """The entries as a ``float64`` array."""
        return self.entries.astype(float).reshape(self.shape)

    def _basis_labels(self, basis):
        if self.labels is None:
            return [list(face) for face in basis]
        return [[self.labels[v] for v in face] for face in basis]

    def to_dict(self):
        return {
            "name": self.name,
            "basis": self._basis_labels(self.row_basis),
            "col_basis": self._basis_labels(self.col_basis),
            "weights": [format_rational(w) for w in self.row_weights],
            "entries": [
                [format_rational(x) for x in row] for row in self.entries
            ],
        }

    def to_json(self, **kwargs):
        """Exact JSON export: rational strings, labelled bases."""
        return json.dumps(self.to_dict(), **kwargs)

    def to_csv(self):
        """Decimal CSV export with 17 significant digits."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        header = self._basis_labels(self.col_basis)
        writer.writerow([""] + [" ".join(map(str, f)) for f in header])
        for face, row in zip(
            self._basis_labels(self.row_basis), self.entries
        ):
            writer.writerow(
                [" ".join(map(str, face))] + [format_float(x) for x in row]
            )
        return buffer.getvalue()

    def __repr__(self):
        return f"OperatorMatrix({self.name}, shape={self.shape})"


def _zeros(rows, cols):
    entries = np.empty((rows, cols), dtype=object)
    entries.fill(ZERO)
    return entries


def simplex_weight(W, sigma):
    """``ω(σ) = ∏_{v∈σ} ω(v)``, with ``ω(∅) = 1``."""
    result = ONE
    for v in sigma:
        result *= W.weights[v]
    return result


def _check_k(k, low, high):
    if not low <= k <= high:
        raise exceptions.DimensionOutOfRange(k, low, high)


def _new(W, entries, basis, name, col_basis=None):
    weights = [simplex_weight(W, face) for face in basis]
    col_weights = (
        None
        if col_basis is None
        else [simplex_weight(W, face) for face in col_basis]
    )
    return OperatorMatrix(
        entries,
        basis,
        weights,
        col_basis,
        col_weights,
        name=name,
        scale=W.total,
        labels=W.vertices,
    )


def _coboundary(W, k):
    X = W.complex
    rows, cols = X.faces(k + 1), X.faces(k)
    entries = _zeros(len(rows), len(cols))
    for r, sigma in enumerate(rows):
        for j in range(len(sigma)):
            tau = sigma[:j] + sigma[j + 1 :]
            entries[r, X.position(tau)] = ONE if j % 2 == 0 else -ONE
    return _new(W, entries, rows, f"d_{k}", col_basis=cols)


def coboundary(W, k):
    """
    The coboundary ``d_k : C^k -> C^{k+1}`` as an ``f_{k+1} × f_k`` matrix.

    Entry ``(σ, τ)`` is ``(-1)^j`` when ``τ`` is ``σ`` with its
    ``(j+1)``-st vertex removed.

    """
    _check_k(k, -1, W.dim - 1)
    return _coboundary(W, k)


def _adjoint(d):
    entries = _zeros(d.shape[1], d.shape[0])
    for (r, c), value in np.ndenumerate(d.entries):
        if value:
            entries[c, r] = value * d.row_weights[r] / d.col_weights[c]
    return OperatorMatrix(
        entries,
        d.col_basis,
        d.col_weights,
        d.row_basis,
        d.row_weights,
        name=d.name + "*",
        scale=d.scale,
        labels=d.labels,
    )


def adjoint_coboundary(W, k):
    """``d_k^{ω*} = W_k^{-1} d_k^T W_{k+1}``."""
    return _adjoint(coboundary(W, k))


def _diag_sum(W, vertices):
    return W.weight_of(vertices)


def _neighbours(X, sigma):
    """Faces ``τ`` of the same size sharing all but one vertex with
    ``σ``, together with the vertex ``j = τ∖σ``."""
    for i in range(len(sigma)):
        eta = sigma[:i] + sigma[i + 1 :]
        for j in X.cofaces(eta):
            if j in sigma:
                continue
            yield tuple(sorted(eta + (j,))), j


def down_laplacian(W, k):
    """
    ``L_k^{ω down} = d_{k-1} d_{k-1}^{ω*}`` from its closed form.

    Diagonal ``Σ_{v∈σ} ω(v)``; entry ``(σ, τ)`` is ``(-1)^{ε(σ,τ)} ω(τ∖σ)``
    when ``|σ∩τ| = k``. ``k = -1`` gives the ``1 × 1`` zero matrix.

    """
    X = W.complex
    _check_k(k, -1, X.dim)
    basis = X.faces(k)
    entries = _zeros(len(basis), len(basis))
    for r, sigma in enumerate(basis):
        entries[r, r] = _diag_sum(W, sigma)
        for tau, j in _neighbours(X, sigma):
            entries[r, X.position(tau)] = sign_eps(sigma, tau) * W.weights[j]
    return _new(W, entries, basis, f"L_{k}^down")


def down_laplacian_product(W, k):
    """``d_{k-1} d_{k-1}^{ω*}`` by matrix multiplication."""
    _check_k(k, -1, W.dim)
    if k == -1:
        return _new(W, _zeros(1, 1), W.complex.faces(-1), "L_-1^down")
    d = _coboundary(W, k - 1)
    result = d @ _adjoint(d)
    result.name = f"d_{k - 1} d_{k - 1}*"
    return result


def up_laplacian_restricted(W, k):
    """
    ``L_k^{ω up} = d_k^{ω*} d_k`` from its closed form on ``X(k)``.

    Diagonal ``Σ_{u∈lk(σ)} ω(u)``; entry ``(σ, τ)`` is
    ``-(-1)^{ε(σ,τ)} ω(τ∖σ)`` when ``|σ∩τ| = k`` and ``σ∪τ ∈ X``.

    """
    X = W.complex
    _check_k(k, -1, X.dim)
    basis = X.faces(k)
    return _new(
        W,
        _up_entries(W, basis, {face: i for i, face in enumerate(basis)}),
        basis,
        f"L_{k}^up",
    )


def _up_entries(W, basis, position):
    X = W.complex
    entries = _zeros(len(basis), len(basis))
    for sigma in basis:
        if sigma not in X:
            continue
        r = position[sigma]
        lk = X.cofaces(sigma)
        entries[r, r] = _diag_sum(W, lk)
        for u in lk:
            rho = tuple(sorted(sigma + (u,)))
            for i in sigma:
                tau = tuple(v for v in rho if v != i)
                entries[r, position[tau]] = (
                    -sign_eps(sigma, tau) * W.weights[u]
                )
    return entries


def up_laplacian_product(W, k):
    """``d_k^{ω*} d_k`` by matrix multiplication."""
    _check_k(k, -1, W.dim)
    d = _coboundary(W, k)
    result = _adjoint(d) @ d
    result.name = f"d_{k}* d_{k}"
    return result


def up_laplacian_extended(W, k):
    """
    The up-Laplacian on the full binomial basis ``binom(V, k+1)``.

    Rows and columns of ``(k+1)``-sets outside ``X`` are zero; the block on
    ``X(k)`` equals :func:`up_laplacian_restricted`.

    """
    n = W.n
    _check_k(k, -1, n - 1)
    basis = list(combinations(range(n), k + 1))
    if W.complex.void:
        entries = _zeros(len(basis), len(basis))
    else:
        entries = _up_entries(
            W, basis, {face: i for i, face in enumerate(basis)}
        )
    return _new(W, entries, basis, f"L_{k}^up[ext]")


def full_laplacian(W, k):
    """
    ``L_k^ω = L_k^{ω up} + L_k^{ω down}`` from its closed form.

    Diagonal ``Σ_{v∈lk(σ)} ω(v) + Σ_{v∈σ} ω(v)``; entry ``(σ, τ)`` is
    ``(-1)^{ε(σ,τ)} ω(τ∖σ)`` exactly when ``|σ∩τ| = k`` and ``σ∪τ ∉ X``.

    """
    X = W.complex
    _check_k(k, -1, X.dim)
    basis = X.faces(k)
    entries = _zeros(len(basis), len(basis))
    for r, sigma in enumerate(basis):
        entries[r, r] = _diag_sum(W, X.cofaces(sigma)) + _diag_sum(W, sigma)
        for tau, j in _neighbours(X, sigma):
            if tuple(sorted(sigma + (j,))) in X:
                continue
            entries[r, X.position(tau)] = sign_eps(sigma, tau) * W.weights[j]
    get_logger().debug(
        f"full_laplacian: k={k}, {len(basis)}x{len(basis)} rational matrix"
    )
    return _new(W, entries, basis, f"L_{k}")


#: Operator names accepted by :func:`laplacian` and the CLI
OPERATORS = {
    "full": full_laplacian,
    "up": up_laplacian_restricted,
    "down": down_laplacian,
    "up-extended": up_laplacian_extended,
}


def laplacian(W, k, operator="full"):
    """Dispatch on an operator name (``full``, ``up``, ``down``,
    ``up-extended``)."""
    try:
        build = OPERATORS[operator]
    except KeyError:
        raise exceptions.InvalidParameters(
            f"Unknown operator `{operator}`; expected one of "
            + ", ".join(OPERATORS)
        )
    if W.complex.void and operator != "up-extended":
        return _new(W, _zeros(0, 0), (), f"{operator} (void)")
    return build(W, k)


def graph_laplacian(W):
    """
    ``L^ω(G_X)``: diagonal ``Σ_{u'∈N(u)} ω(u')``, entry ``(u, v)`` equal to
    ``-ω(v)`` for every edge ``{u, v}``. Indexed by the whole ground set.

    """
    X = W.complex
    n = W.n
    entries = _zeros(n, n)
    for u in range(n):
        neighbours = X.cofaces((u,)) if (u,) in X else ()
        entries[u, u] = _diag_sum(W, neighbours)
        for v in neighbours:
            entries[u, v] = -W.weights[v]
    basis = [(v,) for v in range(n)]
    return _new(W, entries, basis, "L(G)")


def j_matrix(W):
    """``J^ω`` with ``J^ω_{u,v} = ω(v)``."""
    n = W.n
    entries = np.empty((n, n), dtype=object)
    for u in range(n):
        for v in range(n):
            entries[u, v] = W.weights[v]
    basis = [(v,) for v in range(n)]
    return _new(W, entries, basis, "J")


def symmetrize(M, check=True):
    """
    Conjugate a symmetrizable matrix to a symmetric float matrix.

    The exact condition ``W M = M^T W`` is checked first; the result
    ``W^{1/2} M W^{-1/2}`` is computed as ``(W M)_{ij} / sqrt(w_i w_j)``
    so it is exactly symmetric in floating point.

    Args:
        M (OperatorMatrix): A square matrix with positive basis weights.
        check (bool, optional): Skip the exact check when False.

    Returns:
        numpy.ndarray: The symmetric ``float64`` matrix.

    """
    if not M.is_square:
        raise exceptions.NotSymmetrizable(M.name)
    if M.shape[0] == 0:
        return np.zeros((0, 0))
    w = np.array(M.basis_weights, dtype=object)
    WM = w[:, None] * M.entries
    if check and not bool(np.all(WM == WM.T)):
        raise exceptions.NotSymmetrizable(M.name)
    wf = w.astype(float)
    return WM.astype(float) / np.sqrt(np.outer(wf, wf))


def pq_split(W, k):
    """
    Split ``L_k^ω = Q - P``.

    ``P`` keeps the off-diagonal pairs ``σ ~ τ`` whose symmetric difference
    is an edge of ``G_X`` (with the opposite sign); ``Q`` keeps the other
    ``σ ~ τ`` pairs. Diagonals:
    ``P_σσ = Σ_{v∈σ} Σ_{u∈lk(v)} ω(u) - Σ_{v∈lk(σ)} ω(v)`` and
    ``Q_σσ = Σ_{v∈σ} Σ_{u∈lk(v)} ω(u) + Σ_{v∈σ} ω(v)``.

    Returns:
        tuple: ``(P, Q)`` as :class:`OperatorMatrix`.

    """
    X = W.complex
    _check_k(k, 0, X.dim)
    basis = X.faces(k)
    P = _zeros(len(basis), len(basis))
    Q = _zeros(len(basis), len(basis))
    for r, sigma in enumerate(basis):
        spread = sum(
            (_diag_sum(W, X.cofaces((v,))) for v in sigma), ZERO
        )
        P[r, r] = spread - _diag_sum(W, X.cofaces(sigma))
        Q[r, r] = spread + _diag_sum(W, sigma)
        for tau, j in _neighbours(X, sigma):
            if tuple(sorted(sigma + (j,))) in X:
                continue
            (i,) = set(sigma) - set(tau)
            value = sign_eps(sigma, tau) * W.weights[j]
            c = X.position(tau)
            if tuple(sorted((i, j))) in X:
                P[r, c] = -value
            else:
                Q[r, c] = value
    return (
        _new(W, P, basis, f"P_{k}"),
        _new(W, Q, basis, f"Q_{k}"),
    )


def gershgorin_radius(M, raw=False):
    """
    ``max_i (|m_ii| + Σ_{j≠i} |m_ij|)``.

    Taken over the symmetrized matrix, or over the entries as stored when
    ``raw`` is True; both bound every eigenvalue.

    """
    if isinstance(M, OperatorMatrix):
        A = M.to_float() if raw else symmetrize(M)
    else:
        A = np.asarray(M, dtype=float)
    if A.shape[0] == 0:
        return 0.0
    return float(np.max(np.sum(np.abs(A), axis=1)))


def principal_submatrix(M, indices):
    """Rows and columns ``indices`` of a square matrix, bases included."""
    indices = list(indices)
    if not indices:
        raise exceptions.InvalidParameters(
            "A principal submatrix needs at least one index."
        )
    size = M.shape[0]
    for i in indices:
        if not 0 <= i < size:
            raise exceptions.IndexOutOfRange(i, 0, size - 1)
    return OperatorMatrix(
        M.entries[np.ix_(indices, indices)],
        [M.row_basis[i] for i in indices],
        [M.row_weights[i] for i in indices],
        name=f"{M.name}[sub]",
        scale=M.scale,
        labels=M.labels,
    )


def direct_sum(A, B):
    """Block-diagonal ``A ⊕ B``; bases are tagged with the block index."""
    rows = A.shape[0] + B.shape[0]
    entries = _zeros(rows, rows)
    entries[: A.shape[0], : A.shape[0]] = A.entries
    entries[A.shape[0] :, A.shape[0] :] = B.entries
    basis = [(0,) + f for f in A.row_basis] + [(1,) + f for f in B.row_basis]
    return OperatorMatrix(
        entries,
        basis,
        A.row_weights + B.row_weights,
        name=f"{A.name} ⊕ {B.name}",
        scale=max(A.scale, B.scale),
    )
