"""
The verification suites.

Each suite draws its instances from the generator of one (suite, seed) pair
and records one :class:`CheckResult` per checked property. Spectral checks
compare against ``τ = tolerance.relative · max(1, Σω)``; exact identities
are recorded with tolerance zero and a residual of ``inf`` on mismatch.

"""
import math
from itertools import combinations
from math import comb

import numpy as np

from .. import exceptions
from ..bounds import (
    applicable,
    clique_vanishing,
    cohom_dim_upper,
    eig_lower_all,
    gap_bound,
    gap_bound_weak,
    independence_cohom_upper,
    link_sum_sides,
    max_eigen_bounds,
    min_degree,
    p_upper,
    penalty,
    subcomplex_shift,
    unweighted_gap_bound,
    vanishing_checks,
)
from ..complex import (
    Complex,
    delete_face,
    h,
    independence_complex,
    is_clique_complex,
)
from ..config import get_config
from ..constructions import (
    alexander_dual,
    cocktail_party,
    complement_complex,
    complete_skeleton_spectrum,
    extremal_family,
    extremal_gap_unit,
    extremal_min_gap_degree,
    friendship,
    is_extremal_family,
    join,
    join_spectrum,
    simplex,
    skeleton_simplex,
    star_complex,
)
from ..homology import alexander_pairs, betti_exact, betti_hodge
from ..operators import (
    WeightedComplex,
    coboundary,
    direct_sum,
    down_laplacian,
    down_laplacian_product,
    full_laplacian,
    gershgorin_radius,
    graph_laplacian,
    j_matrix,
    pq_split,
    symmetrize,
    up_laplacian_extended,
    up_laplacian_product,
    up_laplacian_restricted,
)
from ..spectra import (
    Spectrum,
    additive_compound,
    eigenvalues_symmetric,
    grouped,
    interlacing_check,
    multiplicity,
    multiset_union,
    shares_kernel_support,
    spectrum_of,
    sum_set,
)
from .instances import random_symmetric, random_weighted, random_weights

__all__ = ["SUITES", "COVERAGE", "suite"]

#: Suite name to suite function
SUITES = {}

#: Checked property to the suite that checks it
COVERAGE = {
    "nonzero-union": "union",
    "down-up-nonzero": "down-up",
    "star-pairing": "duality",
    "complete-skeleton-spectrum": "complete-skeleton",
    "complete-skeleton-multiplicity": "complete-skeleton",
    "complement-pairing": "complement",
    "complement-commute": "commute",
    "max-eigenvalue": "max-eigen",
    "max-eigenvalue-multiplicity": "max-eigen",
    "alexander-multiplicity": "alexander",
    "alexander-top-multiplicity": "alexander",
    "alexander-homology": "alexander-homology",
    "join-spectrum": "join",
    "compound-spectrum": "compound",
    "interlacing": "interlacing",
    "eigenvector-support": "eigvec-support",
    "eigenvector-support-coupled": "eigvec-support",
    "gap-bound": "gap",
    "weak-gap-bound": "gap",
    "unweighted-gap-bound": "gap",
    "extremal-gap": "gap",
    "extremal-equality": "gap",
    "link-sum": "link-sum",
    "eigenvalue-lower": "eig-lower",
    "clique-penalty": "eig-lower",
    "simplex-tightness": "eig-lower",
    "cohomology-upper": "cohom-upper",
    "gap-vanishing": "cohom-upper",
    "clique-vanishing": "cohom-upper",
    "independence-upper": "cohom-upper",
    "subcomplex-shift": "subcomplex",
    "subcomplex-vanishing": "subcomplex",
    "hodge": "hodge",
    "operator-identities": "identities",
    "pq-split": "identities",
    "gershgorin": "gershgorin",
}

#: Extremal instances stay at or below this many vertices unless the run
#: asks for larger ones
EXTREMAL_MAX_N = 8


def suite(name):
    """Register a suite function under ``name``."""

    def register(func):
        SUITES[name] = func
        return func

    return register


def _tau(W):
    return get_config()["tolerance"]["relative"] * max(1.0, float(W.total))


def _spectrum(W, k):
    return spectrum_of(full_laplacian(W, k))


def _spectrum_or_empty(W, k):
    if W.complex.void or not -1 <= k <= W.dim:
        return Spectrum((), scale=W.total)
    return _spectrum(W, k)


def _nonzero(values, tol):
    return [v for v in values if abs(v) > tol]


def _sorted_residual(a, b):
    x, y = sorted(a), sorted(b)
    if len(x) != len(y):
        return math.inf
    return max((abs(u - v) for u, v in zip(x, y)), default=0.0)


def _excess(values):
    """Largest positive entry, zero if none."""
    return max([0.0] + [float(v) for v in values])


@suite("union")
def check_union(case):
    """Nonzero spectrum of ``L_k`` is the union of the up and down parts."""
    W = random_weighted(case.rng, case.max_n)
    tau = _tau(W)
    for k in range(-1, W.dim + 1):
        full = _spectrum(W, k)
        parts = multiset_union(
            spectrum_of(up_laplacian_restricted(W, k)),
            spectrum_of(down_laplacian(W, k)),
        )
        case.record(
            "nonzero-union",
            _sorted_residual(_nonzero(full, tau), _nonzero(parts, tau)),
            tau,
            W=W,
            k=k,
            witness={"full": list(full), "union": list(parts)},
        )


@suite("down-up")
def check_down_up(case):
    """``L_k^down`` and ``L_{k-1}^up`` share their nonzero spectrum."""
    W = random_weighted(case.rng, case.max_n)
    tau = _tau(W)
    for k in range(0, W.dim + 1):
        down = spectrum_of(down_laplacian(W, k))
        up = spectrum_of(up_laplacian_restricted(W, k - 1))
        case.record(
            "down-up-nonzero",
            _sorted_residual(_nonzero(down, tau), _nonzero(up, tau)),
            tau,
            W=W,
            k=k,
            witness={"down": list(down), "up": list(up)},
        )


@suite("duality")
def check_duality(case):
    """Down spectra of ``X`` and ``X*_k`` pair up to ``Σω``."""
    W = random_weighted(case.rng, case.max_n)
    X, tau, total = W.complex, _tau(W), float(W.total)
    for k in range(0, W.dim + 1):
        Ws = W.with_complex(star_complex(X, k))
        a = spectrum_of(down_laplacian(W, k))
        b = spectrum_of(down_laplacian(Ws, W.n - k - 2))
        f = X.f(k)
        if len(b) != f:
            residual = math.inf
        else:
            residual = max(
                abs(a.down(i) + b.down(f + 1 - i) - total)
                for i in range(1, f + 1)
            )
        case.record(
            "star-pairing",
            residual,
            tau,
            W=W,
            k=k,
            witness={"X": list(a), "star": list(b)},
        )


@suite("complete-skeleton")
def check_complete_skeleton(case):
    """Closed-form spectra of ``Δ_{n-1}^{(p)}`` for every ``p`` and ``k``."""
    top = max(3, min(5, case.max_n))
    n = int(case.rng.integers(3, top + 1))
    for p in range(n):
        W = WeightedComplex(
            skeleton_simplex(n, p), random_weights(case.rng, n)
        )
        tau = _tau(W)
        for k in range(-1, p + 1):
            s = _spectrum(W, k)
            pairs = complete_skeleton_spectrum(n, p, k, float(W.total))
            expected = [value for value, m in pairs for _ in range(m)]
            case.record(
                "complete-skeleton-spectrum",
                _sorted_residual(s, expected),
                tau,
                W=W,
                k=k,
                p=p,
                witness={"measured": list(s), "expected": expected},
            )
            case.require(
                "complete-skeleton-multiplicity",
                [m for _, m in grouped(s)] == [m for _, m in pairs],
                W=W,
                k=k,
                p=p,
                witness={"grouped": grouped(s), "expected": pairs},
            )


def _complement_triple(W, k):
    """``up_ext`` of ``X``, of ``X^c_{k+1}`` and of ``Δ^{(k+1)}``."""
    X, n = W.complex, W.n
    if X.f(k + 1) == comb(n, k + 2):
        return None
    A = up_laplacian_extended(W, k)
    B = up_laplacian_extended(
        W.with_complex(complement_complex(X, k + 1)), k
    )
    full = Complex(X.vertices, combinations(range(n), k + 2))
    C = up_laplacian_extended(W.with_complex(full), k)
    return A, B, C


@suite("complement")
def check_complement(case):
    """Extended up spectra of ``X`` and ``X^c_{k+1}`` pair up to ``Σω``."""
    W = random_weighted(case.rng, case.max_n)
    tau, total, n = _tau(W), float(W.total), W.n
    for k in range(-1, n - 1):
        triple = _complement_triple(W, k)
        if triple is None:
            continue
        a, b = spectrum_of(triple[0]), spectrum_of(triple[1])
        N = comb(n - 1, k + 1)
        pairing = max(
            abs(a.down(i) + b.down(N - i + 1) - total)
            for i in range(1, N + 1)
        )
        tail = max(
            (
                max(abs(a.down(i)), abs(b.down(i)))
                for i in range(N + 1, len(a) + 1)
            ),
            default=0.0,
        )
        case.record(
            "complement-pairing",
            max(pairing, tail),
            tau,
            W=W,
            k=k,
            witness={"X": list(a), "complement": list(b)},
        )


@suite("commute")
def check_commute(case):
    """``A + B = C`` exactly and the three extended up-Laplacians
    commute."""
    W = random_weighted(case.rng, case.max_n)
    for k in range(-1, W.n - 1):
        triple = _complement_triple(W, k)
        if triple is None:
            continue
        A, B, C = triple
        # C = A + B, so one commutator settles all three pairs
        case.require(
            "complement-commute",
            A + B == C and A @ B == B @ A,
            W=W,
            k=k,
        )


@suite("max-eigen")
def check_max_eigen(case):
    """``λ_1^↓ <= Σω`` and the lower bound on its multiplicity."""
    W = random_weighted(case.rng, case.max_n)
    tau = _tau(W)
    for k in range(0, W.dim + 1):
        s = _spectrum(W, k)
        upper, mult = max_eigen_bounds(W, k)
        case.record(
            "max-eigenvalue",
            max(0.0, s.down(1) - float(upper)),
            tau,
            W=W,
            k=k,
            witness={"top": s.down(1), "total": float(upper)},
        )
        measured = multiplicity(s, float(upper))
        case.require(
            "max-eigenvalue-multiplicity",
            measured >= mult,
            W=W,
            k=k,
            witness={"measured": measured, "lower": mult},
        )
    if case.seed != 0:
        return
    fixtures = [(cocktail_party(m), 0, m) for m in (2, 3, 4)]
    fixtures += [(friendship(m), 1, 1) for m in (3, 4)]
    for X, k, expected in fixtures:
        W = WeightedComplex(X)
        measured = multiplicity(_spectrum(W, k), float(W.total))
        case.require(
            "max-eigenvalue-multiplicity",
            measured == expected,
            W=W,
            k=k,
            witness={"measured": measured, "expected": expected},
        )


@suite("alexander")
def check_alexander(case):
    """Multiplicities of ``s_k(X)`` against ``s_{n-k-3}(X^∨)``."""
    W = random_weighted(case.rng, max(2, min(6, case.max_n)))
    X, n, tau, total = W.complex, W.n, _tau(W), float(W.total)
    Wd = W.with_complex(alexander_dual(X))
    for k in range(-1, n - 1):
        sx = _spectrum_or_empty(W, k)
        sd = _spectrum_or_empty(Wd, n - k - 3)
        values = {
            value
            for value, _ in grouped(sx) + grouped(sd)
            if value < total - tau
        }
        mismatches = sum(
            1
            for value in values
            if multiplicity(sx, value, tau) != multiplicity(sd, value, tau)
        )
        witness = {"X": list(sx), "dual": list(sd)}
        case.record(
            "alexander-multiplicity",
            mismatches,
            0.0,
            W=W,
            k=k,
            witness=witness,
        )
        difference = multiplicity(sx, total, tau) - multiplicity(
            sd, total, tau
        )
        case.require(
            "alexander-top-multiplicity",
            difference == X.f(k) + X.f(k + 1) - comb(n, k + 2),
            W=W,
            k=k,
            witness=witness,
        )


@suite("alexander-homology")
def check_alexander_homology(case):
    """``b_{k-1}(X^∨) = b_{n-2-k}(X)`` from exact ranks."""
    W = random_weighted(case.rng, case.max_n)
    pairs = alexander_pairs(W.complex)
    mismatches = sum(1 for _, lhs, rhs in pairs if lhs != rhs)
    case.record(
        "alexander-homology",
        mismatches,
        0.0,
        W=W,
        witness={"pairs": [list(p) for p in pairs]},
    )


@suite("join")
def check_join(case):
    """Spectra of a join composed from the spectra of its blocks."""
    W1 = random_weighted(case.rng, 4, min_n=1)
    W2 = random_weighted(case.rng, 4, min_n=1)
    J = join(W1, W2)
    s1 = {i: _spectrum(W1, i) for i in range(-1, W1.dim + 1)}
    s2 = {i: _spectrum(W2, i) for i in range(-1, W2.dim + 1)}
    tau = _tau(J)
    for k in range(-1, J.dim + 1):
        measured = _spectrum(J, k)
        composed = join_spectrum(s1, s2, k)
        case.record(
            "join-spectrum",
            _sorted_residual(measured, composed),
            tau,
            W=J,
            k=k,
            witness={"measured": list(measured), "composed": list(composed)},
        )


@suite("compound")
def check_compound(case):
    """Eigenvalues of ``M^{[k]}`` are the ``k``-subset sums."""
    M = random_symmetric(case.rng, min(6, case.max_n))
    values = eigenvalues_symmetric(M)
    tol = 1e-9 * max(1.0, max(abs(v) for v in values))
    for k in range(1, M.shape[0] + 1):
        measured = eigenvalues_symmetric(additive_compound(M, k)).ascending
        expected = sum_set(values, k).sums
        case.record(
            "compound-spectrum",
            _sorted_residual(measured, expected),
            tol,
            k=k,
            order=M.shape[0],
        )


@suite("interlacing")
def check_interlacing(case):
    """Cauchy interlacing on a random principal submatrix of ``L_k``."""
    W = random_weighted(case.rng, case.max_n)
    k = int(case.rng.integers(0, W.dim + 1))
    M = full_laplacian(W, k)
    size = M.shape[0]
    m = int(case.rng.integers(1, size + 1))
    indices = sorted(
        int(i) for i in case.rng.choice(size, size=m, replace=False)
    )
    passed, violations = interlacing_check(M, indices)
    residual = max(
        [0.0]
        + [
            max(v["lower"] - v["value"], v["value"] - v["upper"])
            for v in violations
        ]
    )
    case.record(
        "interlacing",
        residual,
        _tau(W),
        W=W,
        k=k,
        witness={"indices": indices, "violations": violations},
    )


def _disjoint_union(W1, W2):
    n1 = W1.n
    X = Complex(
        [f"1.{v}" for v in W1.vertices] + [f"2.{v}" for v in W2.vertices],
        list(W1.complex)
        + [tuple(n1 + v for v in face) for face in W2.complex],
    )
    return WeightedComplex(X, W1.weights + W2.weights)


@suite("eigvec-support")
def check_eigvec_support(case):
    """
    ``L_k ⊕ L_k`` has a ``λ_min``-eigenvector on the first block, and on a
    disconnected complex the shared minimum and the supported eigenvector
    on one component's faces come together.

    """
    W = random_weighted(case.rng, case.max_n)
    k = int(case.rng.integers(0, W.dim + 1))
    M = full_laplacian(W, k)
    A = direct_sum(M, M)
    size = M.shape[0]
    for indices in (range(size), range(2 * size)):
        result = shares_kernel_support(A, indices)
        case.require(
            "eigenvector-support",
            result.shares_minimum and result.supported,
            W=W,
            k=k,
            block=len(indices),
            witness={"residual": result.residual},
        )

    # Vertex Laplacians couple the components through the empty face
    half = max(2, case.max_n // 2)
    first = random_weighted(case.rng, half, min_n=1)
    U = _disjoint_union(first, random_weighted(case.rng, half, min_n=1))
    for k in range(0, U.dim + 1):
        faces = U.complex.faces(k)
        indices = [i for i, face in enumerate(faces) if face[0] < first.n]
        if not 0 < len(indices) < len(faces):
            continue
        result = shares_kernel_support(full_laplacian(U, k), indices)
        case.require(
            "eigenvector-support-coupled",
            result.consistent,
            W=U,
            k=k,
            block=len(indices),
            witness={
                "shares": bool(result.shares_minimum),
                "supported": bool(result.supported),
                "residual": result.residual,
            },
        )


def _record_gap_bounds(case, W, k, measured):
    tau, total = _tau(W), float(W.total)
    bound = gap_bound(W, k)
    weak = gap_bound_weak(W, k)
    if not applicable(bound):
        return
    case.record(
        "gap-bound",
        max(0.0, float(bound) - measured),
        tau,
        W=W,
        k=k,
        witness={"bound": float(bound), "gap": measured},
    )
    case.require("weak-gap-bound", weak <= bound, W=W, k=k)
    attained = abs(float(weak) - measured) <= 1e-10 * max(1.0, total)
    case.require(
        "extremal-equality",
        not attained or is_extremal_family(W, k),
        W=W,
        k=k,
        witness={"weak": float(weak), "gap": measured},
    )


def _extremal_parameters(rng, cap):
    combos = [
        (d, t, r)
        for d in (1, 2, 3)
        for t in (1, 2, 3)
        for r in (1, 2)
        if (d + 1) * t + r <= cap
    ]
    return combos[int(rng.integers(len(combos)))]


@suite("gap")
def check_gap(case):
    """Gap lower bounds, their unweighted form and the extremal family."""
    W = random_weighted(case.rng, case.max_n)
    X = W.complex
    for k in range(-1, W.dim + 1):
        _record_gap_bounds(case, W, k, _spectrum(W, k).up(1))
        case.require(
            "unweighted-gap-bound",
            gap_bound(WeightedComplex(X), k)
            == unweighted_gap_bound(X, k),
            W=W,
            k=k,
        )

    d, t, r = _extremal_parameters(
        case.rng, max(EXTREMAL_MAX_N, case.max_n)
    )
    spheres = [random_weights(case.rng, 1)[0] for _ in range(t)]
    family = extremal_family(d, t, r, spheres + [random_weights(case.rng, r)])
    unit = extremal_family(d, t, r)
    Wf, Wu = family.weighted, unit.weighted
    shape = {"d": d, "t": t, "r": r}
    for k in range(-1, family.dim + 1):
        gap = family.gap(k)
        measured = _spectrum(Wf, k).up(1)
        case.record(
            "extremal-gap",
            abs(measured - float(gap)),
            _tau(Wf),
            W=Wf,
            k=k,
            witness={"measured": measured, "closed_form": float(gap)},
            **shape,
        )
        case.require(
            "extremal-gap", gap_bound(Wf, k) == gap, W=Wf, k=k, **shape
        )
        unit_gap = extremal_gap_unit(d, t, r, k)
        case.record(
            "extremal-gap",
            abs(_spectrum(Wu, k).up(1) - unit_gap),
            _tau(Wu),
            W=Wu,
            k=k,
            **shape,
        )
        case.require(
            "extremal-gap",
            min_degree(Wu.complex, k) == extremal_min_gap_degree(d, t, r, k),
            W=Wu,
            k=k,
            **shape,
        )
        _record_gap_bounds(case, Wf, k, measured)

    top = family.dim
    measured = _spectrum(Wf, top).up(1)
    case.record(
        "extremal-equality",
        abs(float(gap_bound_weak(Wf, top)) - measured),
        _tau(Wf),
        W=Wf,
        k=top,
        **shape,
    )
    weights = list(Wf.weights)
    weights[0] *= 2
    perturbed = Wf.with_weights(weights)
    case.require(
        "extremal-equality",
        is_extremal_family(Wf, top) and not is_extremal_family(perturbed, top),
        W=perturbed,
        k=top,
        **shape,
    )
    for k in range(-1, perturbed.dim + 1):
        _record_gap_bounds(case, perturbed, k, _spectrum(perturbed, k).up(1))


@suite("link-sum")
def check_link_sum(case):
    """The link-sum inequality at every face of dimension ``k >= 0``."""
    W = random_weighted(case.rng, case.max_n)
    X = W.complex
    if h(X) is None:
        return
    worst, witness = 0.0, None
    for k in range(0, X.dim + 1):
        for sigma in X.faces(k):
            lhs, rhs = link_sum_sides(W, sigma)
            if lhs - rhs > worst:
                worst = float(lhs - rhs)
                witness = {"face": list(X.labels(sigma))}
    case.record("link-sum", worst, 0.0, W=W, witness=witness)


@suite("eig-lower")
def check_eig_lower(case):
    """Subset-sum lower bounds on every ``λ_i^↑(L_k)``."""
    W = random_weighted(case.rng, case.max_n)
    tau = _tau(W)
    clique = is_clique_complex(W.complex)
    for k in range(0, W.dim + 1):
        s = _spectrum(W, k)
        lower = eig_lower_all(W, k)
        case.record(
            "eigenvalue-lower",
            _excess(low - s.up(i) for i, low in enumerate(lower, start=1)),
            tau,
            W=W,
            k=k,
            witness={"lower": lower, "measured": list(s.ascending)},
        )
        if clique:
            case.require("clique-penalty", penalty(W, k) == 0, W=W, k=k)
    if case.seed != 0:
        return
    W = WeightedComplex(simplex(4), random_weights(case.rng, 4))
    for k in range(0, W.dim + 1):
        s = _spectrum(W, k)
        lower = eig_lower_all(W, k)
        case.record(
            "simplex-tightness",
            max(abs(low - s.up(i)) for i, low in enumerate(lower, start=1)),
            _tau(W),
            W=W,
            k=k,
        )


@suite("cohom-upper")
def check_cohom_upper(case):
    """Cohomology dimension bounds and vanishing criteria against exact
    Betti numbers."""
    W = random_weighted(case.rng, case.max_n)
    X = W.complex
    betti = betti_exact(X)
    unit = WeightedComplex(X)
    for k in range(0, W.dim + 1):
        bound = cohom_dim_upper(W, k)
        case.require(
            "cohomology-upper",
            bound >= betti[k],
            W=W,
            k=k,
            witness={"bound": bound, "betti": betti[k]},
        )
        checks = vanishing_checks(W, k)
        case.require(
            "gap-vanishing", checks["consistent"], W=W, k=k, witness=checks
        )
        clique = clique_vanishing(unit, k)
        case.require(
            "clique-vanishing",
            not clique["applicable"]
            or not clique["fired"]
            or clique["betti"] == 0,
            W=unit,
            k=k,
            witness=clique,
        )

    edges = [X.labels(e) for e in X.faces(1)]
    independent = independence_complex(X.vertices, edges)
    Wi = W.with_complex(independent)
    for k in range(0, independent.dim + 1):
        direct = independence_cohom_upper(X.vertices, edges, W.weights, k)
        general = cohom_dim_upper(Wi, k)
        case.require(
            "independence-upper",
            direct == general,
            W=Wi,
            k=k,
            witness={"independence": direct, "general": general},
        )


@suite("subcomplex")
def check_subcomplex(case):
    """Spectral shift and vanishing criteria for ``X`` minus a facet."""
    W = random_weighted(case.rng, case.max_n)
    X = W.complex
    facets = [f for f in X.facets() if f]
    sigma = facets[int(case.rng.integers(len(facets)))]
    Wp = W.with_complex(delete_face(X, sigma))
    for k in range(0, Wp.dim + 1):
        shift = float(subcomplex_shift(W, Wp, k))
        s, sp = _spectrum(W, k), _spectrum(Wp, k)
        case.record(
            "subcomplex-shift",
            _excess(
                s.up(i) - (k + 2) * shift - sp.up(i)
                for i in range(1, Wp.complex.f(k) + 1)
            ),
            _tau(W),
            W=Wp,
            k=k,
            witness={"shift": shift, "X": list(s), "sub": list(sp)},
        )
        case.require(
            "subcomplex-shift", subcomplex_shift(W, W, k) == 0, W=W, k=k
        )
        checks = vanishing_checks(W, k, Wp)
        case.require(
            "subcomplex-vanishing",
            checks["consistent"],
            W=Wp,
            k=k,
            witness=checks,
        )


@suite("hodge")
def check_hodge(case):
    """Kernel dimensions of ``L_k^ω`` equal exact Betti numbers for two
    weight draws."""
    W = random_weighted(case.rng, case.max_n)
    X = W.complex
    betti = betti_exact(X)
    for draw in (W, W.with_weights(random_weights(case.rng, W.n))):
        mismatches = [
            k
            for k in range(-1, X.dim + 1)
            if betti_hodge(draw, k) != betti[k]
        ]
        case.record(
            "hodge",
            len(mismatches),
            0.0,
            W=draw,
            witness={"dimensions": mismatches, "betti": betti.to_dict()},
        )


def _symmetrizable(M):
    try:
        symmetrize(M)
    except exceptions.NotSymmetrizable:
        return False
    return True


@suite("identities")
def check_identities(case):
    """Exact operator identities over the rationals."""
    W = random_weighted(case.rng, case.max_n)
    X, n = W.complex, W.n
    for k in range(-1, W.dim - 1):
        case.require(
            "operator-identities",
            (coboundary(W, k + 1) @ coboundary(W, k)).is_zero(),
            W=W,
            k=k,
            identity="dd",
        )
    for k in range(-1, W.dim + 1):
        down = down_laplacian(W, k)
        up = up_laplacian_restricted(W, k)
        full = full_laplacian(W, k)
        checks = {
            "down": down == down_laplacian_product(W, k),
            "up": up == up_laplacian_product(W, k),
            "full": full == down + up,
            "symmetrizable": all(
                _symmetrizable(M)
                for M in (down, up, full, up_laplacian_extended(W, k))
            ),
            "orthogonal": (up @ down).is_zero() and (down @ up).is_zero(),
        }
        case.require(
            "operator-identities",
            all(checks.values()),
            W=W,
            k=k,
            witness=checks,
        )
    shifted = graph_laplacian(W) + j_matrix(W)
    for k in range(0, W.dim + 1):
        P, Q = pq_split(W, k)
        compound = additive_compound(shifted, k + 1)
        basis = list(combinations(range(n), k + 1))
        rows = [basis.index(face) for face in X.faces(k)]
        restricted = compound[np.ix_(rows, rows)]
        case.require(
            "pq-split",
            Q - P == full_laplacian(W, k)
            and bool(np.all(Q.entries == restricted)),
            W=W,
            k=k,
        )


@suite("gershgorin")
def check_gershgorin(case):
    """Row-sum bounds on ``λ_max(L_k)`` and ``λ_max(P)``."""
    W = random_weighted(case.rng, case.max_n)
    tau = _tau(W)
    for k in range(0, W.dim + 1):
        full = full_laplacian(W, k)
        top = _spectrum(W, k).down(1)
        case.record(
            "gershgorin",
            max(0.0, top - gershgorin_radius(full)),
            tau,
            W=W,
            k=k,
            bound="full",
        )
        P, _ = pq_split(W, k)
        upper = float(p_upper(W, k))
        p_top = spectrum_of(P, clamp=False).down(1)
        case.record(
            "gershgorin",
            max(0.0, p_top - upper, gershgorin_radius(P, raw=True) - upper),
            tau,
            W=W,
            k=k,
            bound="P",
            witness={"lambda_max": p_top, "p_upper": upper},
        )
