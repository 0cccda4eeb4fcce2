from fractions import Fraction

import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from weightedhodge import exceptions
from weightedhodge.complex import from_facets, random_complex, void_complex
from weightedhodge.constructions import cycle, simplex, sphere_boundary
from weightedhodge.homology import (
    alexander_check,
    alexander_pairs,
    betti_exact,
    betti_hodge,
    euler_check,
    rank_exact,
)
from weightedhodge.operators import WeightedComplex


@pytest.mark.parametrize(
    "entries, rank",
    [
        ([[1, 2], [2, 4]], 1),
        ([[0, 0], [0, 0]], 0),
        ([[Fraction(1, 2), 1], [1, Fraction(1, 3)]], 2),
        ([[1, 0, 1], [0, 1, 1], [1, 1, 2]], 2),
        ([], 0),
    ],
)
def test_rank_exact(entries, rank):
    assert rank_exact(entries) == rank


def test_betti_of_triangle_boundary():
    b = betti_exact(sphere_boundary(2))
    assert b.to_dict() == {"-1": 0, "0": 0, "1": 1}
    assert b[5] == 0


@pytest.mark.parametrize(
    "X, expected",
    [
        (simplex(4), {"-1": 0, "0": 0, "1": 0, "2": 0, "3": 0}),
        (sphere_boundary(3), {"-1": 0, "0": 0, "1": 0, "2": 1}),
        (from_facets("ab", []), {"-1": 0, "0": 1}),
        (from_facets("abc", [], ghosts="abc"), {"-1": 1}),
        (cycle(5), {"-1": 0, "0": 0, "1": 1}),
    ],
)
def test_betti_exact(X, expected):
    assert betti_exact(X).to_dict() == expected


def test_betti_of_void_complex():
    with pytest.raises(exceptions.VoidComplexError):
        betti_exact(void_complex("ab"))


def test_hodge_kernel_matches_betti():
    W = WeightedComplex(cycle(4), [1, 2, 3, 4])
    assert betti_hodge(W, 0) == 0
    assert betti_hodge(W, 1) == 1


def test_alexander_duality_of_triangle_boundary():
    pairs = alexander_pairs(sphere_boundary(2))
    assert all(lhs == rhs for _, lhs, rhs in pairs)
    # The dual is {∅}, whose only Betti number sits at -1
    assert pairs[0] == (0, 1, 1)


def test_alexander_needs_two_vertices():
    with pytest.raises(exceptions.InvalidParameters):
        alexander_pairs(simplex(1))


@seed(1)
@settings(max_examples=30, deadline=None)
@given(
    st.integers(min_value=2, max_value=6),
    st.integers(min_value=0, max_value=2),
    st.floats(min_value=0.1, max_value=0.9),
    st.integers(0, 2**16),
)
def test_duality_and_euler(n, k, density, draw):
    X = random_complex(n, min(k, n - 1), density, draw)
    assert alexander_check(X)
    assert euler_check(X)
    W = WeightedComplex(X)
    b = betti_exact(X)
    for j in range(-1, X.dim + 1):
        assert betti_hodge(W, j) == b[j]
