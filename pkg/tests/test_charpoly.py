import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph
from twoeig.charpoly import char_poly_graph, char_poly_matrix
from twoeig.graph import complete_graph, disjoint_union, petersen_graph
from twoeig.poly import mul


def sympy_charpoly(matrix):
    x = sympy.symbols("x")
    return tuple(int(c) for c in reversed(sympy.Matrix(matrix).charpoly(x).all_coeffs()))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12), st.integers(0, 2**32))
def test_graph_charpoly_against_sympy(n, seed):
    g = random_graph(random.Random(seed), n)
    expected = sympy_charpoly(g.adjacency_matrix())
    assert char_poly_graph(g) == expected
    assert char_poly_graph(g, "modular") == expected


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 8), st.integers(0, 2**32))
def test_integer_matrix_charpoly_against_sympy(n, seed):
    rng = random.Random(seed)
    m = [[rng.randint(-50, 50) for _ in range(n)] for _ in range(n)]
    expected = sympy_charpoly(m)
    assert char_poly_matrix(m, "leverrier") == expected
    assert char_poly_matrix(m, "modular") == expected


@pytest.mark.parametrize("n,p", [(25, 0.2), (40, 0.5), (60, 0.1)])
def test_routes_agree_on_larger_graphs(n, p):
    g = random_graph(random.Random(n), n, p)
    assert char_poly_graph(g, "leverrier") == char_poly_graph(g, "modular")


def test_known_polynomials():
    # K_4: (x-3)(x+1)^3
    assert char_poly_graph(complete_graph(4)) == mul((-3, 1), mul((1, 1), mul((1, 1), (1, 1))))
    # Petersen: (x-3)(x-1)^5(x+2)^4
    pet = char_poly_graph(petersen_graph())
    expected = (-3, 1)
    for _ in range(5):
        expected = mul(expected, (-1, 1))
    for _ in range(4):
        expected = mul(expected, (2, 1))
    assert pet == expected


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32))
def test_multiplicative_over_disjoint_union(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(1, 14))
    h = random_graph(rng, rng.randint(1, 14))
    assert char_poly_graph(disjoint_union(g, h)) == mul(char_poly_graph(g), char_poly_graph(h))


def test_bad_inputs():
    with pytest.raises(ValueError):
        char_poly_matrix([[1, 2]])
    with pytest.raises(ValueError):
        char_poly_matrix([[1]], "nope")
