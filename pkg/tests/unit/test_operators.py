import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from weightedhodge import exceptions
from weightedhodge.complex import from_facets, random_complex, void_complex
from weightedhodge.operators import (
    WeightedComplex,
    adjoint_coboundary,
    coboundary,
    direct_sum,
    down_laplacian,
    down_laplacian_product,
    full_laplacian,
    gershgorin_radius,
    graph_laplacian,
    j_matrix,
    laplacian,
    pq_split,
    principal_submatrix,
    simplex_weight,
    symmetrize,
    up_laplacian_extended,
    up_laplacian_product,
    up_laplacian_restricted,
)
from weightedhodge.spectra import spectrum_of


@pytest.fixture
def edge():
    return WeightedComplex(from_facets("ab", [["a", "b"]]), {"b": 2})


@pytest.fixture
def square():
    X = from_facets(
        "abcd", [["a", "b"], ["b", "c"], ["c", "d"], ["a", "d"]]
    )
    return WeightedComplex(X)


weights = st.lists(
    st.fractions(min_value=Fraction(1, 4), max_value=8).filter(
        lambda w: w > 0
    ),
    min_size=6,
    max_size=6,
)


def test_weights():
    X = from_facets("abc", [["a", "b"]])
    W = WeightedComplex(X, {"c": "3/2"})
    assert W.weights == (1, 1, Fraction(3, 2))
    assert W.total == Fraction(7, 2)
    assert W.weight("c") == Fraction(3, 2)
    assert WeightedComplex(X, [1, 2, 3]).weight_map() == {
        "a": 1,
        "b": 2,
        "c": 3,
    }


@pytest.mark.parametrize(
    "weights, error",
    [
        ({"z": 1}, exceptions.UnknownVertex),
        ({"a": 0}, exceptions.NonPositiveWeight),
        ({"a": "-1/2"}, exceptions.NonPositiveWeight),
        ([1, 2], exceptions.InvalidParameters),
    ],
)
def test_bad_weights(weights, error):
    X = from_facets("abc", [["a", "b"]])
    with pytest.raises(error):
        WeightedComplex(X, weights)


def test_simplex_weight(edge):
    assert simplex_weight(edge, (0, 1)) == 2
    assert simplex_weight(edge, ()) == 1
    assert simplex_weight(WeightedComplex(edge.complex), (0, 1)) == 1


def test_coboundary_signs():
    W = WeightedComplex(from_facets("abc", [["a", "b", "c"]]))
    d1 = coboundary(W, 1)
    assert d1.shape == (1, 3)
    # Columns ab, ac, bc
    assert list(d1.entries[0]) == [1, -1, 1]
    assert coboundary(W, -1).shape == (3, 1)
    with pytest.raises(exceptions.DimensionOutOfRange):
        coboundary(W, 2)


def test_unit_adjoint_is_transpose(square):
    d = coboundary(square, 0)
    assert np.all(adjoint_coboundary(square, 0).entries == d.entries.T)


def test_coboundary_squares_to_zero():
    W = WeightedComplex(from_facets("abcd", [["a", "b", "c", "d"]]))
    for k in range(-1, 2):
        assert (coboundary(W, k + 1) @ coboundary(W, k)).is_zero()


def test_down_laplacian_of_weighted_edge(edge):
    L = down_laplacian(edge, 0)
    assert L.entries.tolist() == [[1, 2], [1, 2]]
    S = symmetrize(L)
    assert np.allclose(S, [[1, np.sqrt(2)], [np.sqrt(2), 2]])


def test_down_laplacian_at_minus_one(edge):
    L = down_laplacian(edge, -1)
    assert L.shape == (1, 1)
    assert L.is_zero()


def test_full_laplacian_of_weighted_edge(edge):
    L = full_laplacian(edge, 0)
    assert L.entries.tolist() == [[3, 0], [0, 3]]


def test_full_laplacian_of_square(square):
    s = spectrum_of(full_laplacian(square, 0))
    assert np.allclose(s.values, [4, 4, 2, 2])


def test_maximal_face_has_zero_up_row(edge):
    L = up_laplacian_restricted(edge, 1)
    assert L.shape == (1, 1)
    assert L.is_zero()


def test_extended_up_laplacian(square):
    L = up_laplacian_extended(square, 1)
    assert L.shape == (6, 6)
    assert L.is_zero()
    restricted = up_laplacian_restricted(square, 0)
    assert up_laplacian_extended(square, 0) == restricted
    assert up_laplacian_extended(square, -1).shape == (1, 1)
    for k in (4, -2):
        with pytest.raises(exceptions.DimensionOutOfRange):
            up_laplacian_extended(square, k)


def test_extended_up_laplacian_on_void_complex():
    W = WeightedComplex(void_complex("abc"))
    L = up_laplacian_extended(W, 0)
    assert L.shape == (3, 3)
    assert L.is_zero()
    assert laplacian(W, 0).shape == (0, 0)


def test_laplacian_dispatch(square):
    assert laplacian(square, 0, "up") == up_laplacian_restricted(square, 0)
    with pytest.raises(exceptions.InvalidParameters):
        laplacian(square, 0, "sideways")


def test_graph_laplacian_and_j_of_complete_graph():
    X = from_facets("abc", [["a", "b"], ["b", "c"], ["a", "c"]])
    W = WeightedComplex(X, [1, 2, 3])
    total = graph_laplacian(W) + j_matrix(W)
    assert total.entries.tolist() == [[6, 0, 0], [0, 6, 0], [0, 0, 6]]


def test_unit_graph_laplacian(square):
    L = graph_laplacian(square)
    assert [L[i, i] for i in range(4)] == [2, 2, 2, 2]
    assert L[0, 1] == -1 and L[0, 2] == 0
    assert np.all(j_matrix(square).entries == 1)


def test_not_symmetrizable():
    W = WeightedComplex(from_facets("ab", [["a", "b"]]), {"b": 2})
    L = down_laplacian(W, 0)
    L.entries[0, 1] = Fraction(5)
    with pytest.raises(exceptions.NotSymmetrizable):
        symmetrize(L)


def test_exports(edge):
    L = down_laplacian(edge, 0)
    data = json.loads(L.to_json())
    assert data["basis"] == [["a"], ["b"]]
    assert data["weights"] == ["1", "2"]
    assert data["entries"] == [["1", "2"], ["1", "2"]]
    rows = L.to_csv().splitlines()
    assert rows[0] == ",a,b"
    assert rows[2] == "b,1,2"


def test_gershgorin(square):
    L = full_laplacian(square, 0)
    assert gershgorin_radius(L) == pytest.approx(4.0)
    assert gershgorin_radius(L, raw=True) == pytest.approx(4.0)


def test_principal_submatrix_and_direct_sum(square):
    L = full_laplacian(square, 0)
    sub = principal_submatrix(L, [0, 2])
    assert sub.entries.tolist() == [[3, 1], [1, 3]]
    with pytest.raises(exceptions.IndexOutOfRange):
        principal_submatrix(L, [4])
    both = direct_sum(L, sub)
    assert both.shape == (6, 6)
    assert both[4, 5] == 1 and both[0, 4] == 0


@seed(2)
@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**16), weights)
def test_laplacian_identities(draw, omega):
    X = random_complex(6, 2, 0.4, draw)
    W = WeightedComplex(X, omega)
    for k in range(0, X.dim + 1):
        down = down_laplacian(W, k)
        up = up_laplacian_restricted(W, k)
        full = full_laplacian(W, k)
        assert down == down_laplacian_product(W, k)
        assert up == up_laplacian_product(W, k)
        assert full == up + down
        assert (up @ down).is_zero()
        # W L = L^T W for every operator
        symmetrize(full)
        P, Q = pq_split(W, k)
        assert Q - P == full
