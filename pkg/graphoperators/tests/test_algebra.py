#!/usr/bin/env python
"""
Tests for the groupoid *-algebra.

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
import pytest

from graphoperators.data.data import fixture_graph
from graphoperators.guts.algebra import (AlgebraElement, DiagonalElement,
                                         adjoint, expectation,
                                         identity_element, inner_product,
                                         multiply, word_element)
from graphoperators.guts.graph import Edge, build_regular_tree
from graphoperators.guts.groupoid import (EMPTY, ForeignEdgeError, Truncation,
                                          enumerate_words, path_word, shadow,
                                          vertex_word)
from graphoperators.guts.rationals import GaussianRational
from graphoperators.guts.utilities import random_element, random_state


@pytest.fixture
def line():
    return build_regular_tree(1, 4)


def edge(a, b):
    return path_word([Edge(a, b)])


def test_product_of_words(line):
    product = multiply(word_element(line, edge('1', '2'), 2),
                       word_element(line, edge('2', '3'), 3))
    w = path_word([Edge('1', '2'), Edge('2', '3')])
    assert product.support() == {w}
    assert product.coefficient(w) == 6


def test_non_admissible_product_is_zero(line):
    assert multiply(word_element(line, edge('1', '2')),
                    word_element(line, edge('3', '4'))).is_zero()


def test_cancellation_gives_vertex_unit(line):
    e = edge('1', '2')
    assert multiply(word_element(line, e), word_element(line, shadow(e))) == \
        word_element(line, vertex_word('1'))
    assert multiply(word_element(line, shadow(e)), word_element(line, e)) == \
        word_element(line, vertex_word('2'))


def test_identity_is_unit(line):
    T = AlgebraElement(line, {edge('2', '3'): GaussianRational(1, 2),
                              vertex_word('4'): 5})
    one = identity_element(line)
    assert multiply(one, T) == T
    assert multiply(T, one) == T


def test_adjoint(line):
    T = AlgebraElement(line, {edge('1', '2'): 1j, vertex_word('3'): 2})
    assert adjoint(T) == AlgebraElement(
        line, {shadow(edge('1', '2')): -1j, vertex_word('3'): 2})
    assert T.adjoint().adjoint() == T


def test_algebra_laws_on_random_elements():
    g = fixture_graph()
    words = enumerate_words(Truncation(g, 2))
    rng = random_state(7)
    for _ in range(5):
        a, b, c = [random_element(g, words, rng) for _ in range(3)]
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
        assert multiply(a, b + c) == multiply(a, b) + multiply(a, c)
        assert adjoint(multiply(a, b)) == multiply(adjoint(b), adjoint(a))
        assert inner_product(a, b) == inner_product(b, a).conjugate()


def test_expectation_keeps_vertices(line):
    T = AlgebraElement(line, {edge('1', '2'): 3, vertex_word('1'): 4,
                              vertex_word('2'): -1})
    E = expectation(T)
    assert isinstance(E, DiagonalElement)
    assert E.support() == {vertex_word('1'), vertex_word('2')}
    assert expectation(E) == E


def test_inner_product(line):
    a = AlgebraElement(line, {edge('1', '2'): 1j, vertex_word('1'): 2})
    b = AlgebraElement(line, {edge('1', '2'): 3, vertex_word('2'): 7})
    assert inner_product(a, b) == GaussianRational(0, -3)
    assert inner_product(a, a) == 5


def test_words_are_orthonormal(line):
    words = enumerate_words(Truncation(line, 2))
    for u in words:
        for w in words:
            value = inner_product(word_element(line, u), word_element(line, w))
            assert value == (1 if u == w else 0)


def test_linear_structure(line):
    a = word_element(line, edge('1', '2'))
    assert a + a == a * 2 == 2 * a
    assert (a - a).is_zero()
    assert len(a + word_element(line, vertex_word('1'))) == 2
    assert word_element(line, EMPTY).is_zero()


def test_loop_products():
    g = fixture_graph()
    loop = edge('v', 'v')
    square = multiply(word_element(g, loop), word_element(g, loop))
    assert [w.length for w in square.support()] == [2]
    assert multiply(word_element(g, loop), word_element(g, shadow(loop))) == \
        word_element(g, vertex_word('v'))


def test_errors(line):
    with pytest.raises(ValueError):
        AlgebraElement(line, {EMPTY: 1})
    with pytest.raises(ForeignEdgeError):
        AlgebraElement(line, {edge('1', '9'): 1})
    with pytest.raises(ValueError):
        word_element(line, edge('1', '2')) + \
            word_element(build_regular_tree(1, 5), edge('1', '2'))
    with pytest.raises(ValueError):
        DiagonalElement(line, {edge('1', '2'): 1})
