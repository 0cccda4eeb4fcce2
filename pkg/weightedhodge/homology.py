"""
Reduced Betti numbers over the rationals.

Ranks come from fraction-free (Bareiss) elimination on integer matrices, so
the Betti vector is exact and serves as the oracle for every kernel count
made from a floating-point spectrum.

"""
from fractions import Fraction
from math import lcm

from . import exceptions
from .complex import euler_characteristic
from .config import get_config
from .constructions import alexander_dual
from .logging import get_logger
from .operators import WeightedComplex, coboundary, full_laplacian
from .spectra import spectrum_of

__all__ = [
    "BettiVector",
    "rank_exact",
    "betti_exact",
    "betti_hodge",
    "alexander_check",
    "alexander_pairs",
    "euler_check",
]


class BettiVector:
    """
    Reduced Betti numbers ``b_k`` for ``k = -1 .. dim``.

    Indices outside that range read as zero.

    """

    def __init__(self, values):
        self.b = dict(values)

    def __getitem__(self, k):
        return self.b.get(k, 0)

    def __iter__(self):
        return iter(sorted(self.b))

    def __eq__(self, other):
        if isinstance(other, BettiVector):
            return self.b == other.b
        return NotImplemented

    def items(self):
        return sorted(self.b.items())

    def to_dict(self):
        return {str(k): v for k, v in self.items()}

    def __repr__(self):
        return f"BettiVector({self.to_dict()})"


def _integer_rows(entries):
    rows = []
    for row in entries:
        row = [Fraction(x) for x in row]
        scale = lcm(1, *(x.denominator for x in row))
        rows.append([int(x * scale) for x in row])
    return rows


def rank_exact(entries):
    """
    Rank of a rational matrix by Bareiss fraction-free elimination.

    Args:
        entries (array_like): Matrix of ints or ``Fraction``; each row is
            scaled to integers first, which leaves the rank unchanged.

    Returns:
        int: The rank.

    """
    M = _integer_rows(entries)
    if not M or not M[0]:
        return 0
    m, n = len(M), len(M[0])
    rank = 0
    previous = 1
    for col in range(n):
        pivot = next((r for r in range(rank, m) if M[r][col] != 0), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        p = M[rank][col]
        for r in range(rank + 1, m):
            a = M[r][col]
            row = M[r]
            top = M[rank]
            for c in range(col + 1, n):
                row[c] = (row[c] * p - a * top[c]) // previous
            row[col] = 0
        previous = p
        rank += 1
        if rank == m:
            break
    return rank


def betti_exact(X):
    """
    Reduced Betti numbers of ``X`` over the rationals.

    ``b_k = f_k - rank d_k - rank d_{k-1}``, with ``d_{-1}`` (into the
    empty-face cochains) included.

    Raises:
        VoidComplexError: For the void complex.

    """
    if X.void:
        raise exceptions.VoidComplexError("Reduced homology")
    W = WeightedComplex(X)
    ranks = {k: rank_exact(coboundary(W, k).entries) for k in range(-1, X.dim)}
    betti = {
        k: X.f(k) - ranks.get(k, 0) - ranks.get(k - 1, 0)
        for k in range(-1, X.dim + 1)
    }
    get_logger().debug(f"betti_exact: ranks={ranks}, betti={betti}")
    return BettiVector(betti)


def _betti_or_zero(X):
    return BettiVector({}) if X.void else betti_exact(X)


def betti_hodge(W, k, tol=None):
    """
    Kernel dimension of ``L_k^ω``, counting eigenvalues below ``tol``.

    The default ``tol`` is ``tolerance.kernel · max(1, Σω)``.

    """
    if tol is None:
        tol = get_config()["tolerance"]["kernel"] * max(1.0, float(W.total))
    return spectrum_of(full_laplacian(W, k)).kernel_dimension(tol)


def alexander_pairs(X):
    """
    Both sides of the homological Alexander duality.

    Returns:
        list: ``(k, b_{k-1}(X^∨), b_{n-2-k}(X))`` for ``0 <= k <= n-1``.

    """
    if X.n < 2:
        raise exceptions.InvalidParameters(
            "Alexander duality needs at least two vertices."
        )
    dual = alexander_dual(X)
    b_dual, b = _betti_or_zero(dual), _betti_or_zero(X)
    return [(k, b_dual[k - 1], b[X.n - 2 - k]) for k in range(X.n)]


def alexander_check(X):
    """``b_{k-1}(X^∨) = b_{n-2-k}(X)`` for every ``0 <= k <= n-1``."""
    return all(lhs == rhs for _, lhs, rhs in alexander_pairs(X))


def euler_check(X):
    """Reduced Euler characteristic from faces equals the one from Betti
    numbers."""
    b = betti_exact(X)
    return euler_characteristic(X) == sum(
        (-1) ** (k % 2) * v for k, v in b.items()
    )
