#!/usr/bin/env python
"""
Finite truncations of the canonical representation of the groupoid algebra
on the graph Hilbert space spanned by the orthonormal basis {xi_w}:

    - basis indexing with per-word boundary distances
    - sparse matrices of L_w and of algebra elements
    - vertex-space / path-space blocks
    - truncation-aware operator comparison

Matrices are scipy.sparse csr matrices of dtype complex128 acting on
column vectors: entry [r, c] is <A xi_c, xi_r>.

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
import logging

import numpy as np
from scipy.sparse import coo_matrix, csr_matrix, identity

from graphoperators.guts.groupoid import (enumerate_words, product,
                                          check_word, vertex_word)

LOG = logging.getLogger(__name__)

TOLERANCE = 1e-12
PRUNE_THRESHOLD = 1e-15


class DimensionMismatchError(ValueError):
    """Operands of a comparison or product have incompatible shapes."""


class BasisIndex(object):
    """
    Ordered basis of a truncated Hilbert space.

    Parameters
    ----------
    words : list
        basis words (GroupoidWord objects, or tuples for Fock words)
    boundary_distance : list of integers
        how far each basis word sits from the truncation boundary; an
        operator identity involving words of total length l is exact on
        every column whose boundary distance is at least l
    graph : DirectedGraph or None
    vertex_count : integer
        number of leading vertex words (the vertex block is a prefix)
    max_path_length : integer or None

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree
    >>> from graphoperators.guts.groupoid import Truncation
    >>> from graphoperators.guts.representation import BasisIndex
    >>> basis = BasisIndex.from_truncation(Truncation(build_regular_tree(1, 3), 1))
    >>> len(basis), basis.vertex_count
    (10, 4)
    >>> basis.boundary_distance.tolist()
    [1, 1, 1, 1, 0, 0, 0, 0, 0, 0]
    >>> basis.vertex_space().boundary_distance.tolist()
    [3, 2, 1, 0]

    """

    def __init__(self, words, boundary_distance, graph=None, vertex_count=0,
                 max_path_length=None):
        self.words = tuple(words)
        self.index = dict((w, i) for i, w in enumerate(self.words))
        if len(self.index) != len(self.words):
            raise ValueError("Basis words must be distinct.")
        self.boundary_distance = np.asarray(boundary_distance, dtype=int)
        if self.boundary_distance.shape != (len(self.words),):
            raise DimensionMismatchError(
                "Need one boundary distance per basis word.")
        self.graph = graph
        self.vertex_count = vertex_count
        self.max_path_length = max_path_length
        self._by_source = None

    @classmethod
    def from_truncation(cls, t):
        """Basis of all groupoid words of a truncation."""
        words = enumerate_words(t)
        boundary = [t.max_path_length - w.length for w in words]
        vertex_count = sum(1 for w in words if w.is_vertex)
        LOG.info('Basis of {0} words ({1} vertices) for {2}, max length {3}'.
                 format(len(words), vertex_count, t.graph,
                        t.max_path_length))
        return cls(words, boundary, graph=t.graph, vertex_count=vertex_count,
                   max_path_length=t.max_path_length)

    def __len__(self):
        return len(self.words)

    def __repr__(self):
        return 'BasisIndex({0} words, {1} vertices)'.format(
            len(self.words), self.vertex_count)

    def vertex_space(self):
        """
        Basis of the vertex space alone.

        Tree vertices sit (depth - level) steps from the truncation
        boundary; vertices of general graphs keep the path-length bound.
        """
        words = self.words[:self.vertex_count]
        graph = self.graph
        if graph is not None and graph.kind == 'regular_tree':
            boundary = [graph.depth - graph.level(w.vertex) for w in words]
        else:
            boundary = [self.max_path_length or 0] * len(words)
        return BasisIndex(words, boundary, graph=graph,
                          vertex_count=len(words),
                          max_path_length=self.max_path_length)

    @property
    def by_source(self):
        """Map a vertex label to the indices of basis words starting there."""
        if self._by_source is None:
            groups = {}
            for i, w in enumerate(self.words):
                groups.setdefault(w.source, []).append(i)
            self._by_source = dict((v, np.array(idx, dtype=int))
                                   for v, idx in groups.items())
        return self._by_source

    def interior_columns(self, margin):
        return np.flatnonzero(self.boundary_distance >= margin)

    def label(self, i):
        from graphoperators.mio.words import format_basis_word
        return format_basis_word(self.words[i])


def _sparse(rows, cols, data, n):
    m = coo_matrix((np.asarray(data, dtype=complex),
                    (np.asarray(rows, dtype=int), np.asarray(cols, dtype=int))),
                   shape=(n, n)).tocsr()
    m.sum_duplicates()
    return prune(m)


def _word_columns(w, basis, coefficient, rows, cols, data, overflow):
    for col in basis.by_source.get(w.range, ()):
        row = basis.index.get(product(w, basis.words[col]))
        if row is None:
            overflow.append(int(col))
        else:
            rows.append(row)
            cols.append(int(col))
            data.append(coefficient)


def matrix_of_word(w, basis, return_overflow=False):
    """
    Sparse matrix of the operator L_w on a truncated basis.

    Column xi_u holds a single 1 at row index(w u) when range(w) = source(u)
    and w u is enumerated; columns whose product leaves the truncation are
    zero and reported as overflow.

    Parameters
    ----------
    w : GroupoidWord
    basis : BasisIndex
    return_overflow : bool
        also return the list of boundary-affected column indices?

    Returns
    -------
    m : csr_matrix (complex128)
    overflow : list of integers (only if return_overflow)

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree, Edge
    >>> from graphoperators.guts.groupoid import (Truncation, path_word,
    ...     vertex_word, EMPTY)
    >>> from graphoperators.guts.representation import (BasisIndex,
    ...     matrix_of_word)
    >>> basis = BasisIndex.from_truncation(Truncation(build_regular_tree(1, 4), 3))
    >>> e = path_word([Edge('1', '2')])
    >>> m = matrix_of_word(e, basis)
    >>> int(m[basis.index[e], basis.index[vertex_word('2')]].real)
    1
    >>> m.nnz
    4
    >>> matrix_of_word(EMPTY, basis).nnz
    0

    """
    n = len(basis)
    rows, cols, data, overflow = [], [], [], []
    if not w.is_empty:
        check_word(basis.graph, w)
        _word_columns(w, basis, 1.0, rows, cols, data, overflow)
    if overflow:
        LOG.debug('{0} boundary-affected columns for a word of length {1}'.
                  format(len(overflow), w.length))

    m = _sparse(rows, cols, data, n)
    if return_overflow:
        return m, overflow
    return m


def matrix_of_element(a, basis):
    """
    Sparse matrix of T = sum_w t_w L_w on a truncated basis.

    Examples
    --------
    >>> from scipy.sparse import identity
    >>> from graphoperators.guts.graph import build_regular_tree
    >>> from graphoperators.guts.groupoid import Truncation
    >>> from graphoperators.guts.algebra import identity_element
    >>> from graphoperators.guts.representation import (BasisIndex,
    ...     matrix_of_element)
    >>> g = build_regular_tree(2, 2)
    >>> basis = BasisIndex.from_truncation(Truncation(g, 2))
    >>> m = matrix_of_element(identity_element(g), basis)
    >>> m.nnz == len(basis), float(abs(m - identity(len(basis))).max())
    (True, 0.0)

    """
    if a.graph != basis.graph:
        raise ValueError("Element and basis live on different graphs.")

    rows, cols, data, overflow = [], [], [], []
    for w, c in a.items():
        _word_columns(w, basis, complex(c), rows, cols, data, overflow)

    return _sparse(rows, cols, data, len(basis))


def prune(m, threshold=PRUNE_THRESHOLD):
    """Drop stored entries with magnitude below threshold."""
    m = csr_matrix(m, dtype=complex, copy=True)
    m.data[np.abs(m.data) < threshold] = 0
    m.eliminate_zeros()
    m.sort_indices()
    return m


def interior_equal(a, b, basis, margin, tolerance=TOLERANCE):
    """
    Compare two matrices on the columns far enough from the boundary.

    Parameters
    ----------
    a, b : sparse or dense matrices of shape (len(basis), len(basis))
    basis : BasisIndex
    margin : integer
        only columns with boundary_distance >= margin are compared
    tolerance : float

    Returns
    -------
    equal : bool
    report : dict
        margin, number of compared columns, worst deviation, worst column

    Examples
    --------
    >>> import numpy as np
    >>> from graphoperators.guts.representation import (BasisIndex,
    ...     interior_equal)
    >>> basis = BasisIndex(['a', 'b', 'c'], [2, 1, 0])
    >>> A = np.eye(3)
    >>> B = np.eye(3); B[2, 2] = 5
    >>> interior_equal(A, B, basis, 1)[0], interior_equal(A, B, basis, 0)[0]
    (True, False)
    >>> interior_equal(A, B, basis, 0)[1]['worst_column']
    2

    """
    n = len(basis)
    a = csr_matrix(a, dtype=complex)
    b = csr_matrix(b, dtype=complex)
    if a.shape != (n, n) or b.shape != (n, n):
        raise DimensionMismatchError(
            "Cannot compare {0} and {1} matrices on a basis of size {2}".
            format(a.shape, b.shape, n))

    cols = basis.interior_columns(margin)
    worst, worst_col = 0.0, None
    if len(cols):
        diff = abs((a - b).tocsc()[:, cols])
        if diff.nnz:
            col_max = np.asarray(diff.max(axis=0).todense()).ravel()
            j = int(np.argmax(col_max))
            worst, worst_col = float(col_max[j]), int(cols[j])

    report = {'margin': int(margin), 'columns': int(len(cols)),
              'max_deviation': worst, 'worst_column': worst_col}
    equal = worst <= tolerance
    if not equal:
        report['worst_word'] = basis.label(worst_col)
        LOG.debug('Interior mismatch {0}'.format(report))

    return equal, report


def compress_to_vertex_space(m, basis):
    """
    Return the vertex block (rows and columns of vertex words).

    Examples
    --------
    >>> from scipy.sparse import identity
    >>> from graphoperators.guts.graph import build_regular_tree
    >>> from graphoperators.guts.groupoid import Truncation
    >>> from graphoperators.guts.representation import (BasisIndex,
    ...     compress_to_vertex_space)
    >>> basis = BasisIndex.from_truncation(Truncation(build_regular_tree(1, 3), 2))
    >>> compress_to_vertex_space(identity(len(basis)), basis).shape
    (4, 4)

    """
    k = basis.vertex_count
    return prune(csr_matrix(m)[:k, :k])


def compress_to_path_space(m, basis):
    """Return the path block (rows and columns of non-vertex words)."""
    k = basis.vertex_count
    return prune(csr_matrix(m)[k:, k:])


def vertex_column_terms(m, basis):
    """
    Read an operator's word coefficients off its vertex columns.

    For T = sum t_w L_w, T xi_v = sum over range(w) = v of t_w xi_w, so the
    vertex columns list every term of T whose word is enumerated.

    Returns
    -------
    terms : list of (GroupoidWord, complex) pairs, in basis order

    """
    k = basis.vertex_count
    block = csr_matrix(m)[:, :k].tocoo()
    terms = sorted((int(r), basis.words[r], complex(v))
                   for r, v in zip(block.row, block.data)
                   if abs(v) >= PRUNE_THRESHOLD)

    return [(w, v) for r, w, v in terms]


def vertex_projection(v, basis):
    """Matrix of the vertex projection L_v."""
    return matrix_of_word(vertex_word(v), basis)


def is_projection(m, basis, margin=0, tolerance=TOLERANCE):
    """Check m = m^2 = m^* on interior columns."""
    m = csr_matrix(m, dtype=complex)
    idempotent, _ = interior_equal(m.dot(m), m, basis, margin, tolerance)
    selfadjoint, _ = interior_equal(m.conj().T, m, basis, margin, tolerance)

    return idempotent and selfadjoint


def is_partial_isometry(m, basis, margin, tolerance=TOLERANCE):
    """Check m m^* m = m on interior columns."""
    m = csr_matrix(m, dtype=complex)
    equal, _ = interior_equal(m.dot(m.conj().T).dot(m), m, basis, margin,
                              tolerance)
    return equal


def identity_matrix(n):
    return csr_matrix(identity(n, dtype=complex, format='csr'))


# ============================================================================
# Doctests
# ============================================================================
if __name__ == "__main__":
    import doctest
    doctest.testmod(verbose=True)  # py.test --doctest-modules
