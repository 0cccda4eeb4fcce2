"""
Eigenvalues of symmetrizable operators and the multiset algebra on them.

The eigensolver is a cyclic Jacobi iteration on a private copy of the
matrix: desk-scale dense problems, where it is accurate to a few ulps and
has no dependence on a LAPACK build.

"""
from itertools import combinations
from math import comb, fsum

import numpy as np

from . import exceptions
from .complex import sign_eps
from .config import get_config
from .logging import get_logger
from .operators import OperatorMatrix, principal_submatrix, symmetrize

__all__ = [
    "Spectrum",
    "SumSet",
    "eigenvalues_symmetric",
    "eigh_symmetric",
    "spectrum_of",
    "multiset_equal_nonzero",
    "multiset_union",
    "multiplicity",
    "grouped",
    "additive_compound",
    "sum_set",
    "s_up",
    "s_down",
    "interlacing_check",
    "shares_kernel_support",
]


def _grouping_tol(scale):
    return get_config()["tolerance"]["relative"] * max(1.0, float(scale))


class Spectrum:
    """
    A weakly decreasing multiset of real eigenvalues.

    Attributes:
        values (tuple): Eigenvalues, largest first.
        tol (float): Absolute tolerance used to group equal values.
        scale (float): Scale (``Σω`` for Laplacians) the tolerance was
            derived from.

    """

    def __init__(self, values, tol=None, scale=1.0):
        self.values = tuple(
            sorted((float(v) for v in values), reverse=True)
        )
        self.scale = float(scale)
        self.tol = _grouping_tol(scale) if tol is None else float(tol)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __repr__(self):
        return f"Spectrum({list(self.values)})"

    @property
    def ascending(self):
        return self.values[::-1]

    def down(self, i):
        """``λ_i^↓``, 1-based."""
        if not 1 <= i <= len(self):
            raise exceptions.IndexOutOfRange(i, 1, len(self))
        return self.values[i - 1]

    def up(self, i):
        """``λ_i^↑``, 1-based."""
        if not 1 <= i <= len(self):
            raise exceptions.IndexOutOfRange(i, 1, len(self))
        return self.values[len(self) - i]

    def nonzero(self):
        return tuple(v for v in self.values if abs(v) > self.tol)

    def kernel_dimension(self, tol):
        return sum(1 for v in self.values if abs(v) <= tol)

    def to_dict(self):
        return {
            "values": list(self.values),
            "grouped": [
                {"value": v, "multiplicity": m}
                for v, m in grouped(self)
            ],
            "tol": self.tol,
        }


def _jacobi(A, want_vectors):
    config = get_config()
    A = np.array(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise exceptions.LinalgError(
            f"Expected a square matrix, got shape {A.shape}."
        )
    n = A.shape[0]
    if n == 0:
        return np.zeros(0), np.zeros((0, 0))
    norm = np.linalg.norm(A)
    asymmetry = float(np.max(np.abs(A - A.T))) / max(norm, 1.0)
    if asymmetry > config["tolerance"]["symmetry"]:
        raise exceptions.NotSymmetric(asymmetry)
    A = 0.5 * (A + A.T)
    V = np.eye(n) if want_vectors else None
    threshold = config["jacobi"]["offdiag"] * norm
    max_sweeps = config["jacobi"]["max_sweeps"]

    def offdiag():
        return np.sqrt(2.0 * np.sum(np.triu(A, 1) ** 2))

    sweeps = 0
    while offdiag() > threshold:
        if sweeps == max_sweeps:
            raise exceptions.ConvergenceError(sweeps, offdiag())
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                Ap, Aq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * Ap - s * Aq
                A[:, q] = s * Ap + c * Aq
                Ap, Aq = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * Ap - s * Aq
                A[q, :] = s * Ap + c * Aq
                A[p, q] = A[q, p] = 0.0
                if want_vectors:
                    Vp, Vq = V[:, p].copy(), V[:, q].copy()
                    V[:, p] = c * Vp - s * Vq
                    V[:, q] = s * Vp + c * Vq
    get_logger().debug(f"Jacobi: n={n}, converged in {sweeps} sweep(s)")
    return np.diag(A).copy(), V


def eigenvalues_symmetric(A, scale=1.0):
    """
    All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Args:
        A (array_like): Symmetric matrix (within ``tolerance.symmetry``).
        scale (float, optional): Scale for the grouping tolerance.

    Returns:
        Spectrum: Eigenvalues, largest first.

    """
    values, _ = _jacobi(A, want_vectors=False)
    return Spectrum(values, scale=scale)


def eigh_symmetric(A):
    """
    Eigenvalues and orthonormal eigenvectors from the same Jacobi sweep.

    Returns:
        tuple: ``(values, vectors)`` with values in decreasing order and
        eigenvectors as the matching columns of ``vectors``.

    """
    values, vectors = _jacobi(A, want_vectors=True)
    order = np.argsort(-values, kind="stable")
    return values[order], vectors[:, order]


def spectrum_of(M, clamp=True):
    """
    Spectrum of a symmetrizable :class:`OperatorMatrix`.

    Eigenvalues in ``(-tol, 0)`` are set to zero when ``clamp`` is True,
    with ``tol = tolerance.relative · max(1, Σω)``.

    """
    if M.shape[0] == 0:
        return Spectrum((), scale=M.scale)
    values = eigenvalues_symmetric(symmetrize(M), scale=M.scale).values
    tol = _grouping_tol(M.scale)
    if clamp:
        values = [0.0 if -tol < v < 0 else v for v in values]
    return Spectrum(values, scale=M.scale)


def _tol(a, b=None, tol=None):
    if tol is not None:
        return tol
    if b is None:
        return a.tol
    return max(a.tol, b.tol)


def multiset_equal_nonzero(a, b, tol=None):
    """Equality of two spectra up to zero eigenvalues."""
    tol = _tol(a, b, tol)
    x = sorted(v for v in a if abs(v) > tol)
    y = sorted(v for v in b if abs(v) > tol)
    if len(x) != len(y):
        return False
    return all(abs(u - v) <= tol for u, v in zip(x, y))


def multiset_union(a, b):
    return Spectrum(
        a.values + b.values,
        tol=max(a.tol, b.tol),
        scale=max(a.scale, b.scale),
    )


def multiplicity(a, value, tol=None):
    """Number of eigenvalues within ``tol`` of ``value``."""
    tol = _tol(a, tol=tol)
    return sum(1 for v in a if abs(v - value) <= tol)


def grouped(a):
    """``[(value, multiplicity), ...]`` with values grouped within
    ``a.tol``, largest first."""
    groups = []
    for v in a:
        if groups and abs(groups[-1][0] - v) <= a.tol:
            groups[-1][1].append(v)
        else:
            groups.append((v, [v]))
    return [
        (fsum(members) / len(members), len(members)) for _, members in groups
    ]


def additive_compound(M, k):
    """
    The ``k``-th additive compound ``M^{[k]}``.

    Rows and columns are the ``k``-subsets of ``range(n)`` in lexicographic
    order. The diagonal holds ``Σ_{i∈σ} M_ii``; when ``σ∖τ = {i}`` and
    ``τ∖σ = {j}`` the entry is ``(-1)^{ε(σ,τ)} M_ij``.

    Args:
        M (array_like or OperatorMatrix): Square matrix; ``object`` arrays
            of fractions stay exact.
        k (int): Subset size, ``1 <= k <= n``.

    Returns:
        numpy.ndarray: The ``C(n, k) × C(n, k)`` compound.

    """
    if isinstance(M, OperatorMatrix):
        M = M.entries
    M = np.asarray(M)
    n = M.shape[0]
    if not 1 <= k <= n:
        raise exceptions.DimensionOutOfRange(k, 1, n)
    basis = list(combinations(range(n), k))
    position = {face: i for i, face in enumerate(basis)}
    result = np.zeros((len(basis), len(basis)), dtype=M.dtype)
    for r, sigma in enumerate(basis):
        result[r, r] = sum((M[i, i] for i in sigma), M.dtype.type(0))
        members = set(sigma)
        for i in sigma:
            for j in range(n):
                if j in members:
                    continue
                tau = tuple(sorted(members - {i} | {j}))
                result[r, position[tau]] = sign_eps(sigma, tau) * M[i, j]
    return result


class SumSet:
    """
    All ``C(len(s), i)`` sums of ``i`` eigenvalues, ascending.

    """

    def __init__(self, i, sums):
        self.i = i
        self.sums = tuple(sorted(sums))

    def __len__(self):
        return len(self.sums)

    def __repr__(self):
        return f"SumSet(i={self.i}, size={len(self)})"


def sum_set(s, i, max_size=None):
    """
    Enumerate every sum of ``i`` eigenvalues of ``s``.

    Raises:
        SumSetTooLarge: If ``C(len(s), i)`` exceeds ``sumset.max_size``.

    """
    values = list(s)
    if not 1 <= i <= len(values):
        raise exceptions.IndexOutOfRange(i, 1, len(values))
    if max_size is None:
        max_size = get_config()["sumset"]["max_size"]
    size = comb(len(values), i)
    if size > max_size:
        raise exceptions.SumSetTooLarge(size, max_size)
    return SumSet(i, (fsum(c) for c in combinations(values, i)))


def s_up(sums, m):
    """``S_{i,m}^↑``, the ``m``-th smallest sum (1-based)."""
    if not 1 <= m <= len(sums):
        raise exceptions.IndexOutOfRange(m, 1, len(sums))
    return sums.sums[m - 1]


def s_down(sums, m):
    """``S_{i,m}^↓``, the ``m``-th largest sum (1-based)."""
    if not 1 <= m <= len(sums):
        raise exceptions.IndexOutOfRange(m, 1, len(sums))
    return sums.sums[len(sums) - m]


def interlacing_check(M, indices):
    """
    Check Cauchy interlacing for a principal submatrix.

    With ``A`` of order ``n`` and ``B`` its principal submatrix of order
    ``m``: ``λ_{n-m+i}^↓(A) <= λ_i^↓(B) <= λ_i^↓(A)`` for all ``i``.

    Returns:
        tuple: ``(passed, violations)``, where each violation is a dict
        naming the index and the offending values.

    """
    A = spectrum_of(M, clamp=False)
    B = spectrum_of(principal_submatrix(M, indices), clamp=False)
    n, m = len(A), len(B)
    tol = A.tol
    violations = []
    for i in range(1, m + 1):
        lower, value, upper = A.down(n - m + i), B.down(i), A.down(i)
        if not (lower - tol <= value <= upper + tol):
            violations.append(
                {"i": i, "lower": lower, "value": value, "upper": upper}
            )
    return not violations, violations


class SupportCheck:
    """Outcome of :func:`shares_kernel_support`."""

    def __init__(self, shares_minimum, supported, residual, vector=None):
        self.shares_minimum = shares_minimum
        self.supported = supported
        self.residual = residual
        self.vector = vector

    @property
    def consistent(self):
        """Both sides of the equivalence agree."""
        return self.shares_minimum == self.supported

    def __repr__(self):
        return (
            f"SupportCheck(shares_minimum={self.shares_minimum}, "
            f"supported={self.supported}, residual={self.residual:.3e})"
        )


def shares_kernel_support(M, indices):
    """
    Compare ``λ_min`` of ``M`` and of its principal submatrix on
    ``indices`` with the existence of a ``λ_min``-eigenvector of ``M``
    vanishing outside ``indices``.

    The eigenvector is searched in the computed ``λ_min``-eigenspace by a
    least-squares null-space solve on the rows outside ``indices``.

    Returns:
        SupportCheck: Both criteria and the residual of the best vector.

    """
    indices = sorted(set(indices))
    A = symmetrize(M)
    tol = _grouping_tol(M.scale)
    values, vectors = eigh_symmetric(A)
    sub = eigenvalues_symmetric(A[np.ix_(indices, indices)])
    lam = values[-1]
    shares = abs(sub.values[-1] - lam) <= tol

    basis = vectors[:, np.abs(values - lam) <= tol]
    outside = [i for i in range(A.shape[0]) if i not in set(indices)]
    if not outside:
        x = basis[:, 0]
    else:
        _, singular, vh = np.linalg.svd(basis[outside, :])
        # Right singular vectors beyond the rank span the null space
        rank = int(np.sum(singular > tol))
        if rank == basis.shape[1]:
            x = basis @ vh[-1]
        else:
            x = basis @ vh[rank]
    x = x / np.linalg.norm(x)
    residual = max(
        float(np.linalg.norm(A @ x - lam * x)),
        float(np.linalg.norm(x[outside])) if outside else 0.0,
    )
    return SupportCheck(shares, residual <= tol, residual, x)
