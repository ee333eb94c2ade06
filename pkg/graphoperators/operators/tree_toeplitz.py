#!/usr/bin/env python
"""
Toeplitz operators as operators of the 1-regular tree (the line graph
1 -> 2 -> 3 -> ...):

    - the vertex representation of path operators as banded 0/1 matrices
    - the band generators T(+k), T(-k) and their matrices
    - rewriting a banded Toeplitz matrix with trigonometric-polynomial
      symbol as a combination of T(+j), T(-i) and the unit

Matrix convention: matrices act on column vectors, rows and columns are
indexed by the vertices 1..m, and A[r][c] = <A xi_c, xi_r>.  The last rows
of truncated band matrices are boundary rows and are left zero rather than
wrapped around.

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
from collections import namedtuple
from functools import lru_cache
import logging

import numpy as np
from scipy.sparse import lil_matrix, diags

from graphoperators.guts.rationals import to_exact, ZERO
from graphoperators.guts.representation import (identity_matrix, prune,
                                                vertex_column_terms)

LOG = logging.getLogger(__name__)


class ToeplitzSymbol(object):
    """
    Coefficients t_p, -n <= p <= k, of a trigonometric polynomial symbol
    phi(z) = sum_p t_p z^p.

    Parameters
    ----------
    coeffs : dict
        integer offset -> number (stored exactly)
    n, k : integers or None
        band widths; inferred from the offsets when omitted

    Examples
    --------
    >>> from graphoperators.operators.tree_toeplitz import ToeplitzSymbol
    >>> sym = ToeplitzSymbol({-1: 3, 0: 2, 1: 1})
    >>> sym.n, sym.k, str(sym.coefficient(-1)), str(sym.coefficient(4))
    (1, 1, '3', '0')

    """

    def __init__(self, coeffs, n=None, k=None):
        coeffs = dict((int(p), to_exact(t)) for p, t in dict(coeffs).items())
        offsets = [p for p, t in coeffs.items() if t]
        low = max([0] + [-p for p in offsets])
        high = max([0] + offsets)
        self.n = low if n is None else int(n)
        self.k = high if k is None else int(k)
        if self.n < low or self.k < high:
            raise ValueError("Symbol offsets exceed the declared band "
                             "[-{0}, {1}]".format(self.n, self.k))
        self.coeffs = dict((p, t) for p, t in coeffs.items() if t)

    def coefficient(self, p):
        return self.coeffs.get(p, ZERO)

    @property
    def s0(self):
        """Unit coefficient t_0 minus every off-diagonal coefficient."""
        unit = self.coefficient(0)
        for p, t in self.coeffs.items():
            if p != 0:
                unit = unit - t
        return unit

    def __repr__(self):
        return 'ToeplitzSymbol({0})'.format(', '.join(
            't{0}={1}'.format(p, self.coeffs[p]) for p in sorted(self.coeffs)))

    def __eq__(self, other):
        if not isinstance(other, ToeplitzSymbol):
            return NotImplemented
        return (self.coeffs, self.n, self.k) == (other.coeffs, other.n,
                                                 other.k)


TreeOperatorCombo = namedtuple('TreeOperatorCombo',
                               'plus_terms minus_terms unit')
TreeOperatorCombo.__doc__ = """
Combination sum_j c_j T(+j) + unit * 1 + sum_i d_i T(-i).

plus_terms and minus_terms map k >= 1 to exact coefficients.
"""


def _check_band(k, m):
    if k < 1:
        raise ValueError("Band offset must be at least 1, not {0}".format(k))
    if m <= k:
        raise ValueError("Truncation size {0} must exceed the offset {1}".
                         format(m, k))


def alpha_matrix_path(j, k, m):
    """
    Vertex-space matrix of the length-k forward path starting at vertex j.

    The two entries are (j, j) and (j, j+k) in 1-based vertex coordinates.

    Parameters
    ----------
    j : integer
        start vertex, >= 1
    k : integer
        path length, >= 1
    m : integer
        truncation size (number of vertices)

    Returns
    -------
    A : csr_matrix (complex128), m x m

    Examples
    --------
    >>> from graphoperators.operators.tree_toeplitz import alpha_matrix_path
    >>> A = alpha_matrix_path(2, 1, 5)
    >>> sorted((int(r) + 1, int(c) + 1) for r, c in zip(*A.nonzero()))
    [(2, 2), (2, 3)]
    >>> B = alpha_matrix_path(1, 2, 6)
    >>> sorted((int(r) + 1, int(c) + 1) for r, c in zip(*B.nonzero()))
    [(1, 1), (1, 3)]

    """
    if j < 1 or k < 1 or j + k > m:
        raise ValueError("Path from {0} of length {1} leaves the "
                         "{2}-vertex truncation".format(j, k, m))

    A = lil_matrix((m, m), dtype=complex)
    A[j - 1, j - 1] = 1
    A[j - 1, j + k - 1] = 1

    return A.tocsr()


def t_plus_matrix(k, m):
    """
    Matrix of T(+k): ones at (j, j) and (j, j+k) for j <= m - k.

    Rows j > m - k are boundary rows and stay zero.

    Examples
    --------
    >>> from graphoperators.operators.tree_toeplitz import t_plus_matrix
    >>> t_plus_matrix(1, 4).toarray().real.astype(int).tolist()
    [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 0]]

    """
    _check_band(k, m)

    A = lil_matrix((m, m), dtype=complex)
    for j in range(m - k):
        A[j, j] = 1
        A[j, j + k] = 1

    return A.tocsr()


def t_minus_matrix(k, m):
    """
    Matrix of T(-k), the conjugate transpose of t_plus_matrix(k, m).

    Examples
    --------
    >>> from graphoperators.operators.tree_toeplitz import t_minus_matrix
    >>> t_minus_matrix(1, 3).toarray().real.astype(int).tolist()
    [[1, 0, 0], [1, 1, 0], [0, 1, 0]]

    """
    return t_plus_matrix(k, m).conj().T.tocsr()


def t_matrix(p, m):
    """
    Matrix of the generator T(p) for any integer p, with T(0) the unit.
    """
    if p > 0:
        return t_plus_matrix(p, m)
    if p < 0:
        return t_minus_matrix(-p, m)

    return identity_matrix(m)


def _require_line(graph):
    if graph.kind != 'regular_tree' or graph.n != 1:
        raise ValueError("Expected the 1-regular tree, got {0}".format(graph))


@lru_cache(maxsize=64)
def _line_paths(t, k, shadow):
    from graphoperators.guts.groupoid import enumerate_words

    _require_line(t.graph)
    if not 1 <= k <= t.max_path_length:
        raise ValueError("Path length {0} is outside 1..{1}".format(
            k, t.max_path_length))

    return tuple(w for w in enumerate_words(t)
                 if w.length == k and all(s.shadow == shadow for s in w.steps))


def build_tplus_element(k, t):
    """
    T(+k) = sum of L_w over forward paths of length k.

    Parameters
    ----------
    k : integer, 1 <= k <= t.max_path_length
    t : Truncation of the 1-regular tree

    Returns
    -------
    element : AlgebraElement

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree
    >>> from graphoperators.guts.groupoid import Truncation
    >>> from graphoperators.operators.tree_toeplitz import build_tplus_element
    >>> t = Truncation(build_regular_tree(1, 4), 2)
    >>> len(build_tplus_element(1, t)), len(build_tplus_element(2, t))
    (4, 3)

    """
    from graphoperators.guts.algebra import AlgebraElement

    return AlgebraElement(t.graph, [(w, 1) for w in _line_paths(t, k, False)])


def build_tminus_element(k, t):
    """T(-k) = sum of L_w over shadow paths of length k."""
    from graphoperators.guts.algebra import AlgebraElement

    return AlgebraElement(t.graph, [(w, 1) for w in _line_paths(t, k, True)])


def alpha_matrix(m, basis):
    """
    Vertex representation of an operator on the 1-regular tree.

    The operator's terms are read off the vertex columns of its matrix on
    the full basis.  A vertex term t_v sits at (v, v); a path term t_w
    between vertices a < b contributes t_w at (a, a) and at
    (source(w), range(w)), so forward paths give the band above the
    diagonal and shadow paths its transpose.

    Parameters
    ----------
    m : sparse matrix on the full basis
    basis : BasisIndex of a 1-regular tree truncation

    Returns
    -------
    A : csr_matrix on the vertex space (vertices 1..depth+1)

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree
    >>> from graphoperators.guts.groupoid import Truncation
    >>> from graphoperators.guts.representation import (BasisIndex,
    ...     matrix_of_element)
    >>> from graphoperators.operators.tree_toeplitz import (alpha_matrix,
    ...     build_tplus_element, t_plus_matrix)
    >>> t = Truncation(build_regular_tree(1, 5), 2)
    >>> basis = BasisIndex.from_truncation(t)
    >>> A = alpha_matrix(matrix_of_element(build_tplus_element(2, t), basis), basis)
    >>> float(abs(A - t_plus_matrix(2, 6)).max())
    0.0

    """
    graph = basis.graph
    _require_line(graph)

    size = basis.vertex_count
    A = lil_matrix((size, size), dtype=complex)
    for w, c in vertex_column_terms(m, basis):
        a = int(w.source) - 1
        b = int(w.range) - 1
        low = min(a, b)
        A[low, low] += c
        if w.is_path:
            A[a, b] += c

    return prune(A)


def toeplitz_rewrite(sym):
    """
    Rewrite a banded Toeplitz operator as a 1-tree operator combination.

    S' = sum_j t_{-j} T(+j) + s0 * 1 + sum_i t_i T(-i), with
    s0 = t_0 - sum_j t_{-j} - sum_i t_i computed exactly.

    Parameters
    ----------
    sym : ToeplitzSymbol

    Returns
    -------
    combo : TreeOperatorCombo

    Examples
    --------
    >>> from graphoperators.operators.tree_toeplitz import (ToeplitzSymbol,
    ...     toeplitz_rewrite)
    >>> combo = toeplitz_rewrite(ToeplitzSymbol({-1: 3, 0: 2, 1: 1}))
    >>> str(combo.unit), str(combo.plus_terms[1]), str(combo.minus_terms[1])
    ('-2', '3', '1')
    >>> str(toeplitz_rewrite(ToeplitzSymbol({0: 1})).unit)
    '1'

    """
    plus_terms = {}
    minus_terms = {}
    for j in range(1, sym.n + 1):
        if sym.coefficient(-j):
            plus_terms[j] = sym.coefficient(-j)
    for i in range(1, sym.k + 1):
        if sym.coefficient(i):
            minus_terms[i] = sym.coefficient(i)

    unit = sym.s0

    LOG.debug('Rewrote {0} with unit coefficient {1}'.format(sym, unit))

    return TreeOperatorCombo(plus_terms, minus_terms, unit)


def combo_matrix(combo, m):
    """Vertex-space matrix of a TreeOperatorCombo on m vertices."""
    A = complex(combo.unit) * identity_matrix(m)
    for j, c in combo.plus_terms.items():
        A = A + complex(c) * t_plus_matrix(j, m)
    for i, c in combo.minus_terms.items():
        A = A + complex(c) * t_minus_matrix(i, m)

    return prune(A)


def combo_element(combo, t):
    """
    A TreeOperatorCombo as an algebra element on a 1-tree truncation.

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree
    >>> from graphoperators.guts.groupoid import Truncation
    >>> from graphoperators.operators.tree_toeplitz import (ToeplitzSymbol,
    ...     toeplitz_rewrite, combo_element)
    >>> t = Truncation(build_regular_tree(1, 4), 1)
    >>> T = combo_element(toeplitz_rewrite(ToeplitzSymbol({-1: 3, 0: 2, 1: 1})), t)
    >>> len(T)
    13

    """
    from graphoperators.guts.algebra import identity_element

    element = identity_element(t.graph) * combo.unit
    for j, c in combo.plus_terms.items():
        element = element + build_tplus_element(j, t) * c
    for i, c in combo.minus_terms.items():
        element = element + build_tminus_element(i, t) * c

    return element


def banded_toeplitz_matrix(sym, m):
    """
    Truncated banded Toeplitz matrix A[r][c] = t_{r-c}.

    Entry t_{-j} sits j places above the diagonal and t_i sits i places
    below it.

    Examples
    --------
    >>> from graphoperators.operators.tree_toeplitz import (ToeplitzSymbol,
    ...     banded_toeplitz_matrix)
    >>> banded_toeplitz_matrix(ToeplitzSymbol({-1: 1}), 3).toarray().real.astype(int).tolist()
    [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
    >>> A = banded_toeplitz_matrix(ToeplitzSymbol({-1: 3, 0: 2, 1: 1}), 4)
    >>> A.toarray().real.astype(int).tolist()[1]
    [1, 2, 3, 0]

    """
    if m <= sym.n + sym.k:
        raise ValueError("Size {0} must exceed the band width {1}".format(
            m, sym.n + sym.k))

    offsets = []
    bands = []
    for p, t in sorted(sym.coeffs.items()):
        offset = -p
        offsets.append(offset)
        bands.append(np.full(m - abs(offset), complex(t)))
    if not offsets:
        return prune(identity_matrix(m) * 0)

    return prune(diags(bands, offsets, shape=(m, m), dtype=complex))


# ============================================================================
# Doctests
# ============================================================================
if __name__ == "__main__":
    import doctest
    doctest.testmod(verbose=True)  # py.test --doctest-modules
