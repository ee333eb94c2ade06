#!/usr/bin/env python
"""
Tests for Toeplitz operators on the 1-regular tree.

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
import numpy as np
from numpy.testing import assert_allclose, assert_array_equal
import pytest

from graphoperators.evaluate.evaluate_toeplitz import line_basis
from graphoperators.guts.algebra import adjoint
from graphoperators.guts.graph import build_regular_tree
from graphoperators.guts.groupoid import Truncation
from graphoperators.guts.rationals import GaussianRational
from graphoperators.guts.representation import (BasisIndex, identity_matrix,
                                                interior_equal,
                                                matrix_of_element)
from graphoperators.guts.utilities import random_state, random_symbol
from graphoperators.operators.tree_toeplitz import (ToeplitzSymbol,
                                                    alpha_matrix,
                                                    alpha_matrix_path,
                                                    banded_toeplitz_matrix,
                                                    build_tminus_element,
                                                    build_tplus_element,
                                                    combo_element,
                                                    combo_matrix,
                                                    t_matrix,
                                                    t_minus_matrix,
                                                    t_plus_matrix,
                                                    toeplitz_rewrite)


def test_alpha_matrix_path_entries():
    A = alpha_matrix_path(3, 2, 6).toarray()
    expected = np.zeros((6, 6))
    expected[2, 2] = expected[2, 4] = 1
    assert_array_equal(A, expected)


@pytest.mark.parametrize('j, k, m', [(0, 1, 4), (1, 0, 4), (3, 2, 4)])
def test_alpha_matrix_path_rejects_long_paths(j, k, m):
    with pytest.raises(ValueError):
        alpha_matrix_path(j, k, m)


def test_band_generators():
    m = 7
    assert_array_equal(t_minus_matrix(2, m).toarray(),
                       t_plus_matrix(2, m).toarray().T)
    assert_array_equal(t_matrix(0, m).toarray(), np.eye(m))
    assert_array_equal(t_matrix(-3, m).toarray(), t_minus_matrix(3, m).toarray())
    assert_array_equal(t_matrix(3, m).toarray(), t_plus_matrix(3, m).toarray())
    with pytest.raises(ValueError):
        t_plus_matrix(0, m)
    with pytest.raises(ValueError):
        t_plus_matrix(7, m)


def test_band_power_law():
    m = 40
    basis = line_basis(m)
    unit = identity_matrix(m)
    shift = t_plus_matrix(1, m) - unit
    power = unit
    for k in range(1, 9):
        power = power.dot(shift)
        assert interior_equal(power, t_plus_matrix(k, m) - unit, basis, k)[0]


@pytest.mark.parametrize('k', [1, 2, 3])
def test_groupoid_elements_match_band_matrices(k):
    t = Truncation(build_regular_tree(1, 12), 3)
    basis = BasisIndex.from_truncation(t)
    vertex_basis = basis.vertex_space()
    plus = build_tplus_element(k, t)
    minus = build_tminus_element(k, t)
    assert adjoint(plus) == minus
    assert len(plus) == 13 - k
    A = alpha_matrix(matrix_of_element(plus, basis), basis)
    assert interior_equal(A, t_plus_matrix(k, 13), vertex_basis, k)[0]
    B = alpha_matrix(matrix_of_element(minus, basis), basis)
    assert interior_equal(B, t_minus_matrix(k, 13), vertex_basis, k)[0]


def test_path_elements_need_line_and_length():
    t = Truncation(build_regular_tree(2, 2), 2)
    with pytest.raises(ValueError):
        build_tplus_element(1, t)
    with pytest.raises(ValueError):
        build_tplus_element(3, Truncation(build_regular_tree(1, 5), 2))


def test_symbol_validation():
    sym = ToeplitzSymbol({-2: 1, 0: 0, 3: '1/2'}, n=4)
    assert (sym.n, sym.k) == (4, 3)
    assert sym.coefficient(0) == 0
    assert sym.coefficient(3) == GaussianRational(1, 0) / 2
    with pytest.raises(ValueError):
        ToeplitzSymbol({2: 1}, k=1)


def test_rewrite_example():
    sym = ToeplitzSymbol({-1: 3, 0: 2, 1: 1})
    combo = toeplitz_rewrite(sym)
    assert combo.plus_terms == {1: 3}
    assert combo.minus_terms == {1: 1}
    assert combo.unit == -2
    assert sym.s0 == combo.unit
    A = banded_toeplitz_matrix(sym, 6).toarray()
    assert_allclose(A[2], [0, 1, 2, 3, 0, 0])
    basis = line_basis(6)
    assert interior_equal(combo_matrix(combo, 6), A, basis, 1)[0]


def test_rewrite_of_constant_symbol():
    combo = toeplitz_rewrite(ToeplitzSymbol({0: 5}))
    assert combo.plus_terms == {} and combo.minus_terms == {}
    assert_allclose(combo_matrix(combo, 4).toarray(), 5 * np.eye(4))
    assert banded_toeplitz_matrix(ToeplitzSymbol({}), 3).nnz == 0


def test_random_rewrites_agree_on_interior():
    rng = random_state(11)
    m = 30
    basis = line_basis(m)
    for _ in range(10):
        sym = random_symbol(rng)
        combo = toeplitz_rewrite(sym)
        equal, report = interior_equal(combo_matrix(combo, m),
                                       banded_toeplitz_matrix(sym, m),
                                       basis, max(sym.n, sym.k))
        assert equal, report


def test_combo_element_vertex_representation():
    sym = ToeplitzSymbol({-2: 1j, -1: 3, 0: 2, 1: '-1/3'})
    combo = toeplitz_rewrite(sym)
    t = Truncation(build_regular_tree(1, 10), 2)
    basis = BasisIndex.from_truncation(t)
    A = alpha_matrix(matrix_of_element(combo_element(combo, t), basis), basis)
    assert interior_equal(A, banded_toeplitz_matrix(sym, 11),
                          basis.vertex_space(), 2)[0]


def test_banded_matrix_size_check():
    with pytest.raises(ValueError):
        banded_toeplitz_matrix(ToeplitzSymbol({-2: 1, 2: 1}), 4)


def test_alpha_matrix_needs_line():
    t = Truncation(build_regular_tree(2, 2), 1)
    basis = BasisIndex.from_truncation(t)
    with pytest.raises(ValueError):
        alpha_matrix(identity_matrix(len(basis)), basis)
