from fractions import Fraction

import numpy as np
import pytest

from weightedhodge import exceptions
from weightedhodge.bounds import (
    INAPPLICABLE,
    applicable,
    clique_vanishing,
    cohom_dim_upper,
    eig_lower_all,
    eig_lower_bound,
    gap_bound,
    gap_bound_weak,
    independence_cohom_upper,
    link_sum_sides,
    m_k,
    max_eigen_bounds,
    min_degree,
    p_upper,
    penalty,
    report,
    subcomplex_bound,
    subcomplex_shift,
    unweighted_gap_bound,
    vanishing_checks,
)
from weightedhodge.complex import from_facets, from_faces, void_complex
from weightedhodge.constructions import (
    extremal_family,
    simplex,
    sphere_boundary,
)
from weightedhodge.operators import WeightedComplex, full_laplacian
from weightedhodge.spectra import spectrum_of

SQUARE = [["a", "b"], ["b", "c"], ["c", "d"], ["a", "d"]]


@pytest.fixture
def square():
    return WeightedComplex(from_facets("abcd", SQUARE))


def test_gap_bounds_of_square(square):
    assert m_k(square, 0) == (3, ("a",))
    assert gap_bound(square, 0) == 2
    assert gap_bound_weak(square, 0) == -2
    assert unweighted_gap_bound(square.complex, 0) == 2
    assert min_degree(square.complex, 0) == 2
    measured = spectrum_of(full_laplacian(square, 0)).up(1)
    assert measured == pytest.approx(2)


def test_gap_bound_on_simplex_is_inapplicable():
    W = WeightedComplex(simplex(3))
    assert gap_bound(W, 0) == INAPPLICABLE
    assert not applicable(gap_bound_weak(W, 0))
    assert m_k(WeightedComplex(void_complex("ab")), 0) == INAPPLICABLE


def test_gap_bound_is_attained_by_extremal_family():
    family = extremal_family(1, 2, 1, [2, 3, [5]])
    W = family.weighted
    for k in range(-1, family.dim + 1):
        assert gap_bound(W, k) == family.gap(k)
    top = family.dim
    measured = spectrum_of(full_laplacian(W, top)).up(1)
    assert float(gap_bound_weak(W, top)) == pytest.approx(measured)


def test_ghost_vertices_are_dropped(square):
    X = from_facets("abcde", SQUARE, ghosts=["e"])
    W = WeightedComplex(X, {"e": 100})
    assert gap_bound(W, 0) == gap_bound(square, 0)
    assert max_eigen_bounds(W, 0) == max_eigen_bounds(square, 0)


def test_max_eigen_bounds(square):
    assert max_eigen_bounds(square, 0) == (4, 2)
    s = spectrum_of(full_laplacian(square, 0))
    assert s.down(1) == pytest.approx(4)


def test_penalty():
    W = WeightedComplex(sphere_boundary(3), [1, 1, 1, 2])
    # The face opposite the vertex of weight 2 sees it from all 3 facets
    assert penalty(W, 2) == 8
    assert p_upper(W, 2) == 2 * 5 + 8


def test_penalty_vanishes_on_clique_complexes(square):
    assert penalty(square, 0) == 0
    assert penalty(square, 1) == 0


def test_eigenvalue_lower_bounds_of_square(square):
    assert np.allclose(eig_lower_all(square, 0), [2, 2, 4, 4])
    assert eig_lower_bound(square, 0, 1) == pytest.approx(2)
    with pytest.raises(exceptions.IndexOutOfRange):
        eig_lower_bound(square, 0, 5)


def test_cohomology_upper_bounds_of_square(square):
    assert cohom_dim_upper(square, 0) == 0
    assert cohom_dim_upper(square, 1) == 1


def test_subcomplex_shift():
    full = WeightedComplex(simplex(3), [1, 2, 3])
    boundary = WeightedComplex(sphere_boundary(2), [1, 2, 3])
    assert subcomplex_shift(full, boundary, 0) == 0
    assert subcomplex_shift(full, boundary, 1) == 3
    measured = spectrum_of(full_laplacian(full, 1)).up(1)
    assert subcomplex_bound(full, boundary, 1, 1) == pytest.approx(
        measured - 9
    )


def test_subcomplex_needs_matching_weights():
    full = WeightedComplex(simplex(3), [1, 2, 3])
    boundary = WeightedComplex(sphere_boundary(2))
    with pytest.raises(exceptions.NotASubcomplex):
        subcomplex_shift(full, boundary, 0)
    with pytest.raises(exceptions.NotASubcomplex):
        subcomplex_shift(boundary, full, 0)


def test_vanishing_checks(square):
    result = vanishing_checks(square, 0)
    assert result["gap"]["fired"]
    assert result["gap"]["betti"] == 0
    assert result["consistent"]
    result = vanishing_checks(square, 1)
    assert not result["gap"]["fired"]
    assert result["gap"]["betti"] == 1


def test_link_sum(square):
    assert link_sum_sides(square, (0, 1)) == (4, 4)
    with pytest.raises(exceptions.FaceNotInComplex):
        link_sum_sides(square, (0, 2))


def test_clique_vanishing(square):
    result = clique_vanishing(square, 0)
    assert result["applicable"] and result["fired"]
    assert result["lhs"] == pytest.approx(2)
    assert result["betti"] == 0
    weighted = square.with_weights([1, 2, 1, 1])
    assert not clique_vanishing(weighted, 0)["applicable"]
    # The triangle boundary agrees with K_3 up to dimension 1
    result = clique_vanishing(WeightedComplex(sphere_boundary(2)), 1)
    assert result["applicable"] and not result["fired"]
    assert result["rhs"] == pytest.approx(3)
    assert result["betti"] == 1


def test_independence_bound_of_square():
    edges = [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")]
    # I(C_4) is two disjoint edges, so the reduced b_0 is 1
    assert independence_cohom_upper("abcd", edges, None, 0) == 1


def test_report(square):
    result = report(square, 0)
    assert result["gap_bound"] == 2
    assert result.violations() == []
    data = result.to_dict()
    assert data["k"] == 0
    assert data["exact"]["gap_bound"] == "2"
    assert data["bounds"]["max_mult_lower"] == 2
    assert data["witnesses"]["d"] == 1
    assert data["witnesses"]["m_k_face"] == ["a"]


def test_report_on_full_simplex():
    W = WeightedComplex(simplex(3), [1, Fraction(1, 2), 2])
    data = report(W, 1).to_dict()
    assert data["bounds"]["gap_bound"] == {
        "inapplicable": "full simplex: h(X) is undefined"
    }
    assert data["violations"] == []


def test_report_rejects_bad_input(square):
    with pytest.raises(exceptions.VoidComplexError):
        report(WeightedComplex(void_complex("ab")), 0)
    with pytest.raises(exceptions.DimensionOutOfRange):
        report(square, 2)


def test_report_with_ghosts():
    X = from_faces("abc", [(0, 1)])
    data = report(WeightedComplex(X, {"c": 7}), 0).to_dict()
    assert data["violations"] == []
