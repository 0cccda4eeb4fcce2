"""
Closed-form spectral bounds for vertex-weighted Laplacians.

Bounds whose hypotheses fail (an empty ``X(k)``, a full simplex where the
missing-face dimension is undefined) evaluate to an :class:`Inapplicable`
marker instead of a number.

All bounds are stated for a ground set whose vertices are all faces. Ghost
vertices do not change any Laplacian, so they are dropped before a bound is
evaluated and ``Σω`` runs over the vertices of the complex.

"""
from bisect import bisect_left, bisect_right
from fractions import Fraction
from math import comb

from . import exceptions
from .complex import (
    Complex,
    clique_complex,
    h,
    induced,
    is_subcomplex,
    sigma_classes,
    skeleton,
    upper_degree,
)
from .config import get_config
from .homology import betti_exact
from .logging import get_logger
from .operators import (
    WeightedComplex,
    full_laplacian,
    graph_laplacian,
    j_matrix,
)
from .rational import format_rational
from .spectra import multiplicity, spectrum_of, sum_set, s_up

__all__ = [
    "Inapplicable",
    "INAPPLICABLE",
    "applicable",
    "m_k",
    "min_degree",
    "unweighted_gap_bound",
    "gap_bound",
    "gap_bound_weak",
    "max_eigen_bounds",
    "penalty",
    "p_upper",
    "graph_spectrum",
    "eig_lower_bound",
    "eig_lower_all",
    "cohom_dim_upper",
    "subcomplex_shift",
    "subcomplex_bound",
    "vanishing_checks",
    "link_sum_sides",
    "clique_vanishing",
    "independence_cohom_upper",
    "BoundReport",
    "report",
]


class Inapplicable:
    """Marker for a bound whose hypotheses do not hold."""

    def __init__(self, reason="hypotheses not met"):
        self.reason = reason

    def __eq__(self, other):
        return isinstance(other, Inapplicable)

    def __hash__(self):
        return hash(Inapplicable)

    def __bool__(self):
        return False

    def __repr__(self):
        return f"Inapplicable({self.reason!r})"

    def to_dict(self):
        return {"inapplicable": self.reason}


INAPPLICABLE = Inapplicable()


def applicable(value):
    return not isinstance(value, Inapplicable)


def _tol(W):
    return get_config()["tolerance"]["relative"] * max(1.0, float(W.total))


def _solid(W):
    """Drop ghost vertices, keeping weights by label."""
    X = W.complex
    if not X.ghosts:
        return W
    keep = [X.vertices[v] for v in sorted(X.vertex_set)]
    get_logger().debug(f"bounds: dropping ghost vertices {X.ghosts}")
    return W.with_complex(induced(X, keep))


def _check_k(W, k, low):
    if not low <= k <= W.dim:
        raise exceptions.DimensionOutOfRange(k, low, W.dim)


def _m_k(W, k):
    X = W.complex
    best = None
    for sigma in X.faces(k):
        value = W.weight_of(set(sigma) | X.cofaces(sigma))
        if best is None or value < best[0]:
            best = (value, sigma)
    return best


def m_k(W, k):
    """
    ``m_k = min_{σ∈X(k)} Σ_{v∈σ∪lk(σ)} ω(v)``.

    Returns:
        tuple: ``(m_k, σ)`` with the minimizing face as labels, or
        :class:`Inapplicable` when ``X(k)`` is empty.

    """
    if W.complex.void:
        return Inapplicable("void complex")
    W = _solid(W)
    _check_k(W, k, -1)
    value, sigma = _m_k(W, k)
    return value, W.complex.labels(sigma)


def min_degree(X, k):
    """``δ_k``, the minimum upper degree over ``X(k)``."""
    if not -1 <= k <= X.dim:
        raise exceptions.DimensionOutOfRange(k, -1, X.dim)
    return min(upper_degree(X, sigma) for sigma in X.faces(k))


def _d(W):
    if W.complex.void:
        return Inapplicable("void complex")
    d = h(_solid(W).complex)
    if d is None:
        return Inapplicable("full simplex: h(X) is undefined")
    return d


def unweighted_gap_bound(X, k):
    """``(d+1)(δ_k+k+1) - dn``, the ``ω ≡ 1`` form of the gap bound."""
    W = _solid(WeightedComplex(X))
    d = _d(W)
    if not applicable(d):
        return d
    _check_k(W, k, -1)
    return (d + 1) * (min_degree(W.complex, k) + k + 1) - d * W.n


def gap_bound(W, k):
    """
    Lower bound ``(d+1) m_k - d Σω`` on ``λ_1^↑(L_k^ω)``, with
    ``d = h(X)``.

    Returns:
        fractions.Fraction: The exact bound, or :class:`Inapplicable`.

    """
    d = _d(W)
    if not applicable(d):
        return d
    W = _solid(W)
    _check_k(W, k, -1)
    value, _ = _m_k(W, k)
    return (d + 1) * value - d * W.total


def gap_bound_weak(W, k):
    """``(d+1) min_{σ∈X(k)} Σ_{v∈σ} ω(v) - d Σω``; never above
    :func:`gap_bound`."""
    d = _d(W)
    if not applicable(d):
        return d
    W = _solid(W)
    _check_k(W, k, -1)
    low = min(W.weight_of(sigma) for sigma in W.complex.faces(k))
    return (d + 1) * low - d * W.total


def max_eigen_bounds(W, k):
    """
    Upper bound on ``λ_1^↓(L_k^ω)`` and a lower bound on the multiplicity
    with which it is attained.

    Returns:
        tuple: ``(Σω, mult_lower)`` where ``mult_lower`` is the largest of
        ``f_k + f_{k+1} - C(n, k+2)``, ``f_k - C(n-1, k+1)``,
        ``f_{k+1} - C(n-1, k+2)`` and ``0``.

    """
    if W.complex.void:
        return Inapplicable("void complex")
    W = _solid(W)
    _check_k(W, k, 0)
    X, n = W.complex, W.n
    fk, fk1 = X.f(k), X.f(k + 1)
    mult = max(
        fk + fk1 - comb(n, k + 2),
        fk - comb(n - 1, k + 1),
        fk1 - comb(n - 1, k + 2),
        0,
    )
    return W.total, mult


def _penalty(W, k):
    X = W.complex
    best, witness = Fraction(0), None
    for sigma in X.faces(k):
        value = sum(
            (
                (j + 1) * W.weight_of(members)
                for j, members in enumerate(sigma_classes(X, sigma))
            ),
            Fraction(0),
        )
        if witness is None or value > best:
            best, witness = value, sigma
    return best, witness


def penalty(W, k):
    """
    ``max_{σ∈X(k)} Σ_j (j+1) Σ_{u∈σ[j]} ω(u)``; zero on clique
    complexes.

    """
    if W.complex.void:
        return Inapplicable("void complex")
    W = _solid(W)
    _check_k(W, k, 0)
    return _penalty(W, k)[0]


def p_upper(W, k):
    """``kΣω + penalty``, the row-sum bound on ``λ_max(P)`` of the
    ``L_k^ω = Q - P`` split."""
    value = penalty(W, k)
    if not applicable(value):
        return value
    return k * _solid(W).total + value


def graph_spectrum(W):
    """Spectrum of ``L^ω(G_X) + J^ω``."""
    return spectrum_of(graph_laplacian(W) + j_matrix(W), clamp=False)


def _graph_sums(W, k):
    return sum_set(graph_spectrum(W), k + 1)


def eig_lower_all(W, k):
    """
    Lower bounds on every ``λ_i^↑(L_k^ω)``, ``i = 1 .. f_k``.

    Returns:
        list: ``S_{k+1,i}^↑(L^ω(G_X)+J^ω) - kΣω - penalty`` for each ``i``.

    """
    if W.complex.void:
        return Inapplicable("void complex")
    W = _solid(W)
    _check_k(W, k, 0)
    shift = float(k * W.total + _penalty(W, k)[0])
    sums = _graph_sums(W, k)
    return [s_up(sums, i) - shift for i in range(1, W.complex.f(k) + 1)]


def eig_lower_bound(W, k, i):
    """Lower bound on ``λ_i^↑(L_k^ω)`` for ``1 <= i <= f_k``."""
    if W.complex.void:
        return Inapplicable("void complex")
    f = _solid(W).complex.f(k) if -1 <= k <= W.dim else 0
    if not 1 <= i <= f:
        raise exceptions.IndexOutOfRange(i, 1, f)
    return eig_lower_all(W, k)[i - 1]


def cohom_dim_upper(W, k):
    """
    Upper bound on ``dim H̃^k(X; R)``: the number of ``(k+1)``-subsets of
    eigenvalues of ``L^ω(G_X)+J^ω`` summing to at most ``kΣω + penalty``.

    """
    if W.complex.void:
        return Inapplicable("void complex")
    W = _solid(W)
    _check_k(W, k, 0)
    threshold = float(k * W.total + _penalty(W, k)[0]) + _tol(W)
    sums = _graph_sums(W, k)
    return bisect_right(sums.sums, threshold)


def _check_subcomplex(W, Wp):
    if not is_subcomplex(Wp.complex, W.complex):
        raise exceptions.NotASubcomplex(
            "some face of the second complex is not a face of the first"
        )
    for label in Wp.vertices:
        if Wp.weight(label) != W.weight(label):
            raise exceptions.NotASubcomplex(
                f"vertex `{label}` carries a different weight"
            )


def subcomplex_shift(W, Wp, k):
    """
    ``S_k^ω(X, X') = max_{σ∈X'(k)} Σ_{v∈lk_X(σ)∖lk_{X'}(σ)} ω(v)``.

    Raises:
        NotASubcomplex: If ``X'`` is not a subcomplex of ``X`` with the
            same weights.

    """
    _check_subcomplex(W, Wp)
    X, Xp = W.complex, Wp.complex
    if Xp.void or not Xp.faces(k):
        return Inapplicable("X'(k) is empty")
    best = Fraction(0)
    for face in Xp.faces(k):
        labels = Xp.labels(face)
        outer = set(X.labels(X.cofaces(X.face(labels))))
        inner = set(Xp.labels(Xp.cofaces(face)))
        value = sum((W.weight(v) for v in outer - inner), Fraction(0))
        best = max(best, value)
    return best


def subcomplex_bound(W, Wp, k, i):
    """``λ_i^↑(L_k^ω(X)) - (k+2) S_k^ω(X, X')``, a lower bound on
    ``λ_i^↑(L_k^ω(X'))``."""
    shift = subcomplex_shift(W, Wp, k)
    if not applicable(shift):
        return shift
    f = Wp.complex.f(k)
    if not 1 <= i <= f:
        raise exceptions.IndexOutOfRange(i, 1, f)
    measured = spectrum_of(full_laplacian(W, k))
    return measured.up(i) - (k + 2) * float(shift)


def _subcomplex_vanishing(W, Wp, k):
    shift = subcomplex_shift(W, Wp, k)
    if not applicable(shift) or k < 0 or k > W.dim:
        return {"applicable": False}
    Ws = _solid(W)
    lam = graph_spectrum(Ws).up(1)
    rhs = float(
        Fraction(k, k + 1) * Ws.total
        + _penalty(Ws, k)[0] / (k + 1)
        + Fraction(k + 2, k + 1) * shift
    )
    return {
        "applicable": True,
        "fired": lam > rhs + _tol(W),
        "lhs": lam,
        "rhs": rhs,
    }


def vanishing_checks(W, k, Wp=None):
    """
    Evaluate the cohomology-vanishing criteria at ``k`` and compare them
    with exact Betti numbers.

    The gap criterion fires when ``m_k > d/(d+1) Σω``; the subcomplex
    criterion (only with ``Wp``) fires when
    ``λ_1^↑(L^ω(G_X)+J^ω) > k/(k+1) Σω + penalty/(k+1)
    + (k+2)/(k+1) S_k^ω(X, X')``. A fired criterion must come with a
    vanishing Betti number.

    Returns:
        dict: Per-criterion results and an overall ``consistent`` flag.

    """
    result = {"k": k, "consistent": True}
    d = _d(W)
    if applicable(d) and W.complex.f(k):
        Ws = _solid(W)
        value, _ = _m_k(Ws, k)
        fired = (d + 1) * value > d * Ws.total
        betti = betti_exact(W.complex)[k]
        result["gap"] = {
            "applicable": True,
            "fired": fired,
            "m_k": format_rational(value),
            "threshold": format_rational(Fraction(d, d + 1) * Ws.total),
            "betti": betti,
        }
        if fired and betti != 0:
            result["consistent"] = False
    else:
        result["gap"] = {"applicable": False}
    if Wp is not None:
        check = _subcomplex_vanishing(W, Wp, k)
        if check["applicable"]:
            check["betti"] = betti_exact(Wp.complex)[k]
            if check["fired"] and check["betti"] != 0:
                result["consistent"] = False
        result["subcomplex"] = check
    return result


def link_sum_sides(W, sigma):
    """
    Both sides of the link-sum inequality at a face ``σ`` of dimension
    ``k >= 0``:
    ``Σ_{η∈σ(k-1)} Σ_{v∈lk(η)} ω(v)`` and
    ``dΣω - (d-1)Σ_{v∈σ}ω(v) + (k+1-d)Σ_{v∈lk(σ)}ω(v)``.

    Args:
        W (WeightedComplex): Without ghost vertices.
        sigma (tuple): A face (vertex indices).

    Returns:
        tuple: ``(lhs, rhs)`` as fractions, or :class:`Inapplicable`.

    """
    d = _d(W)
    if not applicable(d):
        return d
    X = W.complex
    if X.ghosts:
        raise exceptions.InvalidParameters(
            "link_sum_sides needs a complex without ghost vertices."
        )
    sigma = tuple(sorted(sigma))
    if not sigma or sigma not in X:
        raise exceptions.FaceNotInComplex(X.labels(sigma))
    k = len(sigma) - 1
    lhs = sum(
        (
            W.weight_of(X.cofaces(sigma[:j] + sigma[j + 1 :]))
            for j in range(len(sigma))
        ),
        Fraction(0),
    )
    rhs = (
        d * W.total
        - (d - 1) * W.weight_of(sigma)
        + (k + 1 - d) * W.weight_of(X.cofaces(sigma))
    )
    return lhs, rhs


def clique_vanishing(W, k):
    """
    The unweighted vanishing criterion for complexes whose ``k``-skeleton
    is that of the clique complex of ``G_X``:
    ``λ_2^↑(L(G_X)) > kn/(k+1) + (k+2)/(k+1) · max_σ |σ[k+1]|``.

    Returns:
        dict: ``applicable``, ``fired``, both sides, and the exact
        ``b_k`` to compare with.

    """
    if W.complex.void or any(w != 1 for w in W.weights):
        return {"applicable": False}
    W = _solid(W)
    X = W.complex
    if not 0 <= k <= X.dim:
        raise exceptions.DimensionOutOfRange(k, 0, X.dim)
    flag = clique_complex(
        X.vertices, [X.labels(e) for e in X.faces(1)], max_dim=k
    )
    if skeleton(X, k) != flag or X.n < 2:
        return {"applicable": False}
    spectrum = spectrum_of(graph_laplacian(W), clamp=False)
    lam2 = spectrum.up(2)
    top = max(len(sigma_classes(X, sigma)[k + 1]) for sigma in X.faces(k))
    rhs = k * X.n / (k + 1) + (k + 2) / (k + 1) * top
    return {
        "applicable": True,
        "fired": lam2 > rhs + _tol(W),
        "lhs": lam2,
        "rhs": rhs,
        "betti": betti_exact(X)[k],
    }


def independence_cohom_upper(vertices, edges, weights, k):
    """
    Upper bound on ``dim H̃^k(I(G))``: the number of ``(k+1)``-subsets
    ``I`` with ``Σ_{i∈I} λ_i^↓(L^ω(G)) >= Σω``.

    Args:
        vertices (list): Vertex labels of ``G``.
        edges (iterable): Label pairs.
        weights (dict or sequence): Vertex weights.
        k (int): Cohomological degree, ``0 <= k < n``.

    """
    vertices = list(vertices)
    G = Complex(vertices, [])
    G = Complex(
        vertices,
        [(v,) for v in range(len(vertices))]
        + [G.face(edge) for edge in edges],
    )
    W = WeightedComplex(G, weights)
    if not 0 <= k < W.n:
        raise exceptions.DimensionOutOfRange(k, 0, W.n - 1)
    sums = sum_set(spectrum_of(graph_laplacian(W), clamp=False), k + 1)
    threshold = float(W.total) - _tol(W)
    return len(sums) - bisect_left(sums.sums, threshold)


def _value(x):
    if isinstance(x, Inapplicable):
        return x.to_dict()
    if isinstance(x, Fraction):
        return float(x)
    return x


class BoundReport:
    """
    Every bound at one dimension next to the measured spectrum.

    Attributes:
        k (int): The dimension.
        entries (dict): Bound name to value (``Fraction``, float, int, list
            or :class:`Inapplicable`).
        witnesses (dict): The faces and intermediate quantities behind the
            values.
        measured (Spectrum): Spectrum of ``L_k^ω``.

    """

    def __init__(self, k, entries, witnesses, measured):
        self.k = k
        self.entries = entries
        self.witnesses = witnesses
        self.measured = measured

    def __getitem__(self, name):
        return self.entries[name]

    def violations(self):
        """Names of bounds contradicted by the measured spectrum."""
        s, tol = self.measured, self.measured.tol
        bad = []
        if not len(s):
            return bad
        for name in ("gap_bound", "gap_weak"):
            value = self.entries.get(name)
            if applicable(value) and float(value) > s.up(1) + tol:
                bad.append(name)
        upper = self.entries.get("max_upper")
        if applicable(upper) and s.down(1) > float(upper) + tol:
            bad.append("max_upper")
        mult = self.entries.get("max_mult_lower")
        if applicable(mult) and multiplicity(s, float(upper)) < mult:
            bad.append("max_mult_lower")
        lower = self.entries.get("eig_lower")
        if applicable(lower):
            for i, value in enumerate(lower, start=1):
                if value > s.up(i) + tol:
                    bad.append(f"eig_lower[{i}]")
        return bad

    def to_dict(self):
        exact = {
            name: format_rational(value)
            for name, value in self.entries.items()
            if isinstance(value, Fraction)
        }
        entries = {}
        for name, value in self.entries.items():
            if isinstance(value, list):
                entries[name] = [_value(x) for x in value]
            else:
                entries[name] = _value(value)
        return {
            "k": self.k,
            "bounds": entries,
            "exact": exact,
            "witnesses": self.witnesses,
            "measured": self.measured.to_dict(),
            "violations": self.violations(),
        }


def _guard(build, *args):
    try:
        return build(*args)
    except exceptions.DimensionOutOfRange:
        return Inapplicable("dimension out of range")


def report(W, k, subcomplex=None):
    """
    Assemble a :class:`BoundReport` for ``L_k^ω``.

    Args:
        W (WeightedComplex): The complex.
        k (int): Dimension, ``-1 <= k <= dim``.
        subcomplex (WeightedComplex, optional): A subcomplex for the shift
            bounds.

    """
    X = W.complex
    if X.void:
        raise exceptions.VoidComplexError("A bound report")
    if not -1 <= k <= X.dim:
        raise exceptions.DimensionOutOfRange(k, -1, X.dim)
    measured = spectrum_of(full_laplacian(W, k))
    entries, witnesses = {}, {}
    entries["gap_bound"] = gap_bound(W, k)
    entries["gap_weak"] = gap_bound_weak(W, k)
    d = _d(W)
    witnesses["d"] = d if applicable(d) else None
    mk = m_k(W, k)
    if applicable(mk):
        witnesses["m_k"] = format_rational(mk[0])
        witnesses["m_k_face"] = list(mk[1])
    witnesses["delta_k"] = min_degree(X, k)
    bounds = _guard(max_eigen_bounds, W, k)
    if applicable(bounds):
        entries["max_upper"], entries["max_mult_lower"] = bounds
    else:
        entries["max_upper"] = entries["max_mult_lower"] = bounds
    entries["penalty"] = _guard(penalty, W, k)
    entries["eig_lower"] = _guard(eig_lower_all, W, k)
    entries["cohom_dim_upper"] = _guard(cohom_dim_upper, W, k)
    if subcomplex is not None:
        entries["subcomplex_shift"] = subcomplex_shift(W, subcomplex, k)
    result = BoundReport(k, entries, witnesses, measured)
    get_logger().debug(
        f"bounds: k={k}, {len(entries)} entries, "
        f"violations={result.violations()}"
    )
    return result
