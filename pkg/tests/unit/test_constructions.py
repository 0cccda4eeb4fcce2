import numpy as np
import pytest

from weightedhodge import exceptions
from weightedhodge.complex import f_vector, from_facets, missing_faces
from weightedhodge.constructions import (
    FIXTURES,
    alexander_dual,
    cocktail_party,
    complement_complex,
    complete_skeleton_spectrum,
    cycle,
    extremal_blocks,
    extremal_family,
    extremal_gap_unit,
    extremal_min_gap_degree,
    friendship,
    is_extremal_family,
    join,
    join_spectrum,
    simplex,
    skeleton_simplex,
    sphere_boundary,
    star_complex,
)
from weightedhodge.operators import WeightedComplex, full_laplacian
from weightedhodge.spectra import spectrum_of


def labelled(X, faces):
    return sorted(tuple(X.labels(face)) for face in faces)


def spectra(W):
    return {k: spectrum_of(full_laplacian(W, k)) for k in range(-1, W.dim + 1)}


def test_complement_of_square():
    X = cycle(4)
    C = complement_complex(X, 1)
    assert labelled(C, C.faces(1)) == [("0", "2"), ("1", "3")]
    assert C.dim == 1
    with pytest.raises(exceptions.EmptyGenerators):
        complement_complex(simplex(3), 1)


def test_star_complex():
    triangle = skeleton_simplex(3, 1)
    star = star_complex(triangle, 0)
    assert f_vector(star) == [1, 3, 3]
    assert star_complex(cycle(4), 1) == cycle(4)
    with pytest.raises(exceptions.EmptyGenerators):
        star_complex(triangle, 2)


def test_alexander_dual_of_triangle_boundary():
    dual = alexander_dual(sphere_boundary(2))
    assert f_vector(dual) == [1]
    assert dual.ghosts == ("0", "1", "2")


def test_alexander_dual_of_simplex():
    assert alexander_dual(simplex(3)).void


def test_alexander_dual_is_an_involution():
    X = from_facets("abcde", [["a", "b", "c"], ["c", "d"], ["d", "e"]])
    assert alexander_dual(alexander_dual(X)) == X


def test_join_of_two_point_spheres():
    S0 = WeightedComplex(sphere_boundary(1))
    J = join(S0, S0)
    assert J.vertices == ("0.0", "0.1", "1.0", "1.1")
    assert f_vector(J.complex) == [1, 4, 4]
    assert labelled(J.complex, missing_faces(J.complex)) == [
        ("0.0", "0.1"),
        ("1.0", "1.1"),
    ]
    assert J.block(1) == [2, 3]


def test_join_without_namespace():
    A = WeightedComplex(from_facets("ab", [["a", "b"]]))
    B = WeightedComplex(from_facets("c", []), {"c": 3})
    J = join(A, B, namespace=False)
    assert J.vertices == ("a", "b", "c")
    assert J.weights == (1, 1, 3)
    assert J.complex.dim == 2
    with pytest.raises(exceptions.LabelCollision):
        join(A, A, namespace=False)


def test_join_spectrum_of_two_point_spheres():
    S0 = WeightedComplex(sphere_boundary(1))
    composed = join_spectrum(spectra(S0), spectra(S0), 0)
    assert np.allclose(composed.values, [4, 4, 2, 2])
    direct = spectrum_of(full_laplacian(join(S0, S0), 0))
    assert np.allclose(composed.values, direct.values)


@pytest.mark.parametrize("n, p, k", [(4, 1, 1), (4, 2, 0), (5, 2, 2)])
def test_complete_skeleton_spectrum(n, p, k):
    W = WeightedComplex(skeleton_simplex(n, p))
    expected = []
    for value, m in complete_skeleton_spectrum(n, p, k, n):
        expected.extend([value] * m)
    measured = spectrum_of(full_laplacian(W, k))
    assert np.allclose(measured.values, expected)


def test_extremal_family_unit_gaps():
    family = extremal_family(1, 2, 1)
    assert family.n == 5 and family.dim == 2
    W = family.weighted
    for k, gap in [(-1, 5), (0, 3), (1, 1), (2, 1)]:
        assert family.gap(k) == gap
        assert extremal_gap_unit(1, 2, 1, k) == gap
        assert spectrum_of(full_laplacian(W, k)).up(1) == pytest.approx(gap)


def test_extremal_family_weighted_gap():
    family = extremal_family(1, 2, 1, [2, 3, [5]])
    assert family.block_sum(0) == 4
    assert family.block_sum(2) == 5
    assert family.gap(0) == 9
    measured = spectrum_of(full_laplacian(family.weighted, 0)).up(1)
    assert measured == pytest.approx(9)


def test_extremal_min_gap_degree():
    family = extremal_family(2, 2, 1)
    X = family.weighted.complex
    for k in range(0, family.dim + 1):
        degree = min(len(X.cofaces(sigma)) for sigma in X.faces(k))
        assert degree == extremal_min_gap_degree(2, 2, 1, k)


def test_extremal_recognition():
    family = extremal_family(1, 2, 1, [2, 3, [5]])
    W = family.weighted
    assert extremal_blocks(W.complex, 2) is not None
    assert is_extremal_family(W, 2)
    assert not is_extremal_family(W, 1)
    weights = list(W.weights)
    weights[0] *= 2
    assert not is_extremal_family(W.with_weights(weights), 2)
    assert extremal_blocks(cycle(5), 1) is None


def test_extremal_family_parameters():
    with pytest.raises(exceptions.InvalidParameters):
        extremal_family(0, 1, 1)
    with pytest.raises(exceptions.InvalidParameters):
        extremal_family(1, 2, 1, [1, 1])


def test_fixtures():
    assert f_vector(cocktail_party(2)) == [1, 4, 4]
    assert f_vector(friendship(2)) == [1, 5, 6, 2]
    assert set(FIXTURES) == {
        "simplex",
        "skeleton",
        "sphere",
        "cycle",
        "cocktail-party",
        "friendship",
    }
    with pytest.raises(exceptions.InvalidParameters):
        cycle(2)
