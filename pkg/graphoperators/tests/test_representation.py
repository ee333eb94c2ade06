#!/usr/bin/env python
"""
Tests for truncated matrices of the canonical representation.

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
import itertools

import numpy as np
from numpy.testing import assert_allclose
import pytest
from scipy.sparse import csr_matrix

from graphoperators.data.data import fixture_graph
from graphoperators.guts.algebra import AlgebraElement, multiply
from graphoperators.guts.graph import Edge, build_regular_tree
from graphoperators.guts.groupoid import (EMPTY, Truncation, enumerate_words,
                                          path_word, product, shadow,
                                          vertex_word)
from graphoperators.guts.representation import (BasisIndex,
                                                DimensionMismatchError,
                                                compress_to_path_space,
                                                compress_to_vertex_space,
                                                identity_matrix,
                                                interior_equal,
                                                is_partial_isometry,
                                                is_projection,
                                                matrix_of_element,
                                                matrix_of_word, prune,
                                                vertex_column_terms,
                                                vertex_projection)
from graphoperators.guts.utilities import random_element, random_state


@pytest.fixture
def line_basis():
    return BasisIndex.from_truncation(Truncation(build_regular_tree(1, 4), 2))


def test_basis_layout(line_basis):
    assert len(line_basis) == 5 + 8 + 6
    assert line_basis.vertex_count == 5
    assert line_basis.boundary_distance.tolist()[:5] == [2] * 5
    assert line_basis.vertex_space().boundary_distance.tolist() == \
        [4, 3, 2, 1, 0]
    assert line_basis.label(0) == 'v:1'


def test_basis_validation():
    with pytest.raises(ValueError):
        BasisIndex(['a', 'a'], [0, 0])
    with pytest.raises(DimensionMismatchError):
        BasisIndex(['a', 'b'], [0])


def test_word_matrix_is_partial_permutation(line_basis):
    w = path_word([Edge('1', '2'), Edge('2', '3')])
    m = matrix_of_word(w, line_basis)
    dense = m.toarray()
    assert set(np.unique(dense).tolist()) <= {0, 1}
    assert (np.abs(dense).sum(axis=0) <= 1).all()
    assert (np.abs(dense).sum(axis=1) <= 1).all()
    assert m[line_basis.index[w], line_basis.index[vertex_word('3')]] == 1


def test_overflow_columns():
    basis = BasisIndex.from_truncation(Truncation(build_regular_tree(1, 4), 1))
    e = path_word([Edge('1', '2')])
    m, overflow = matrix_of_word(e, basis, return_overflow=True)
    assert overflow == [basis.index[path_word([Edge('2', '3')])]]
    assert m.nnz == 2


def test_empty_word_is_zero(line_basis):
    assert matrix_of_word(EMPTY, line_basis).nnz == 0


def test_multiplicative_on_interior():
    g = build_regular_tree(2, 2)
    words = enumerate_words(Truncation(g, 1))
    basis = BasisIndex.from_truncation(Truncation(g, 3))
    for u, w in itertools.product(words, repeat=2):
        lhs = matrix_of_word(u, basis).dot(matrix_of_word(w, basis))
        rhs = matrix_of_word(product(u, w), basis)
        equal, report = interior_equal(lhs, rhs, basis, u.length + w.length)
        assert equal, report


def test_element_matrices_are_homomorphic():
    g = fixture_graph()
    words = enumerate_words(Truncation(g, 1))
    basis = BasisIndex.from_truncation(Truncation(g, 3))
    rng = random_state(3)
    for _ in range(4):
        a = random_element(g, words, rng)
        b = random_element(g, words, rng)
        lhs = matrix_of_element(a, basis).dot(matrix_of_element(b, basis))
        rhs = matrix_of_element(multiply(a, b), basis)
        assert interior_equal(lhs, rhs, basis, 2)[0]
        adj = matrix_of_element(a.adjoint(), basis)
        assert interior_equal(adj, matrix_of_element(a, basis).conj().T,
                              basis, 1)[0]


def test_adjoint_is_conjugate_transpose(line_basis):
    for w in enumerate_words(Truncation(line_basis.graph, 2)):
        lhs = matrix_of_word(shadow(w), line_basis)
        rhs = matrix_of_word(w, line_basis).conj().T
        assert interior_equal(lhs, rhs, line_basis, w.length)[0]


def test_vertex_projections(line_basis):
    n = len(line_basis)
    total = csr_matrix((n, n), dtype=complex)
    for v in line_basis.graph.vertices:
        p = vertex_projection(v, line_basis)
        assert is_projection(p, line_basis)
        total = total + p
    assert interior_equal(total, identity_matrix(n), line_basis, 0)[0]


def test_words_are_partial_isometries(line_basis):
    for w in enumerate_words(Truncation(line_basis.graph, 2)):
        m = matrix_of_word(w, line_basis)
        assert is_partial_isometry(m, line_basis, w.length)


def test_vertex_column_terms(line_basis):
    g = line_basis.graph
    T = AlgebraElement(g, {path_word([Edge('1', '2')]): 3,
                           vertex_word('3'): 1j,
                           path_word([Edge('2', '3'), Edge('3', '4')]): 2})
    terms = dict(vertex_column_terms(matrix_of_element(T, line_basis),
                                     line_basis))
    assert terms == dict((w, complex(c)) for w, c in T.items())


def test_blocks(line_basis):
    n = len(line_basis)
    m = identity_matrix(n)
    assert compress_to_vertex_space(m, line_basis).shape == (5, 5)
    assert compress_to_path_space(m, line_basis).shape == (n - 5, n - 5)


def test_interior_equal_reports_worst_column():
    basis = BasisIndex(['a', 'b', 'c'], [2, 1, 0])
    a = np.eye(3)
    b = np.eye(3)
    b[1, 1] = 1.5
    equal, report = interior_equal(a, b, basis, 1)
    assert not equal
    assert report['worst_column'] == 1
    assert report['worst_word'] == 'b'
    assert_allclose(report['max_deviation'], 0.5)
    assert interior_equal(a, b, basis, 2)[0]
    with pytest.raises(DimensionMismatchError):
        interior_equal(np.eye(2), b, basis, 0)


def test_prune():
    m = prune(np.array([[1e-17, 1.0], [0.5, 1e-20j]]))
    assert m.nnz == 2
    assert_allclose(m.toarray(), [[0, 1], [0.5, 0]])


def test_element_on_wrong_graph(line_basis):
    with pytest.raises(ValueError):
        matrix_of_element(AlgebraElement(fixture_graph()), line_basis)
