#!/usr/bin/env python
"""
Truncated Fock space over C^N and the right Toeplitz operators of the
N-regular tree:

    - Fock vectors over tensor words in the letters 1..N, truncated at a
      degree cap (tensors that overflow the cap are dropped and counted)
    - left and right creation / annihilation operators
    - operator words and the anti-isomorphism between left and right
      operator words (products reverse, l_h <-> r_h*)
    - the vertex <-> Fock basis bijection of the N-regular tree and the
      tree operators R_j = sum over edges (W, Wj) of L_(W, Wj)

The Fock inner product is conjugate-linear in its first argument.

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
from collections import namedtuple
import itertools
import logging

import numpy as np
from scipy.sparse import coo_matrix, csr_matrix

from graphoperators.guts.representation import (BasisIndex,
                                                DimensionMismatchError,
                                                PRUNE_THRESHOLD,
                                                identity_matrix, prune,
                                                vertex_column_terms)

LOG = logging.getLogger(__name__)

VACUUM = ()

SIDES = ('left', 'right')


class FockVector(object):
    """
    Finite combination of Fock words (tuples of letters in 1..n).

    Parameters
    ----------
    terms : dict
        Fock word -> complex coefficient
    n : integer
        dimension of the one-particle space
    cap : integer
        degree cap (maximal word length)
    dropped : integer
        number of tensors dropped so far because they overflowed the cap

    Examples
    --------
    >>> from graphoperators.operators.fock import FockVector, left_create
    >>> omega = FockVector.vacuum(2, 3)
    >>> left_create([1, 0], omega).terms
    {(1,): (1+0j)}
    >>> left_create([2, 3], omega).terms == {(1,): 2, (2,): 3}
    True

    """

    def __init__(self, terms, n, cap, dropped=0):
        self.n = int(n)
        self.cap = int(cap)
        self.dropped = int(dropped)
        collected = {}
        for word, c in dict(terms).items():
            word = tuple(int(x) for x in word)
            if len(word) > self.cap:
                raise ValueError("Word {0} exceeds the degree cap {1}".format(
                    word, self.cap))
            if any(not 1 <= x <= self.n for x in word):
                raise ValueError("Word {0} has letters outside 1..{1}".format(
                    word, self.n))
            collected[word] = collected.get(word, 0) + complex(c)
        self.terms = dict((w, c) for w, c in collected.items()
                          if abs(c) >= PRUNE_THRESHOLD)

    @classmethod
    def vacuum(cls, n, cap):
        return cls({VACUUM: 1}, n, cap)

    @classmethod
    def basis_vector(cls, word, n, cap):
        return cls({tuple(word): 1}, n, cap)

    def __repr__(self):
        return 'FockVector({0}, n={1}, cap={2})'.format(
            dict(sorted(self.terms.items(), key=lambda i: (len(i[0]), i[0]))),
            self.n, self.cap)

    def coefficient(self, word):
        return self.terms.get(tuple(word), 0j)

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if (self.n, self.cap) != (other.n, other.cap):
            raise DimensionMismatchError(
                "Fock vectors over (n={0}, cap={1}) and (n={2}, cap={3})".
                format(self.n, self.cap, other.n, other.cap))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0j) + c
        return FockVector(terms, self.n, self.cap,
                          self.dropped + other.dropped)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, scalar):
        scalar = complex(scalar)
        return FockVector(dict((w, scalar * c) for w, c in self.terms.items()),
                          self.n, self.cap, self.dropped)

    __rmul__ = __mul__

    def allclose(self, other, tolerance=1e-12):
        diff = self - other
        return all(abs(c) <= tolerance for c in diff.terms.values())


def inner(a, b):
    """
    Fock inner product <a, b> = sum_w conj(a_w) b_w.

    Examples
    --------
    >>> from graphoperators.operators.fock import FockVector, inner
    >>> a = FockVector({(1,): 1j}, 2, 2)
    >>> inner(a, a), inner(a, FockVector({(1,): 1}, 2, 2))
    ((1+0j), -1j)

    """
    a._check(b)
    return sum((a.terms[w].conjugate() * c for w, c in b.terms.items()
                if w in a.terms), 0j)


def _one_particle(h, n):
    h = np.asarray(h, dtype=complex).ravel()
    if h.shape != (n,):
        raise DimensionMismatchError(
            "Vector of length {0} on a Fock space over C^{1}".format(
                h.shape[0], n))
    return h


def _create(h, v, left):
    h = _one_particle(h, v.n)
    terms = {}
    dropped = v.dropped
    letters = [(j + 1, h[j]) for j in range(v.n) if h[j] != 0]
    for word, c in v.terms.items():
        if len(word) >= v.cap:
            dropped += len(letters)
            continue
        for letter, weight in letters:
            new = (letter,) + word if left else word + (letter,)
            terms[new] = terms.get(new, 0j) + weight * c

    return FockVector(terms, v.n, v.cap, dropped)


def _annihilate(h, v, left):
    h = _one_particle(h, v.n)
    terms = {}
    for word, c in v.terms.items():
        if not word:
            continue
        letter, rest = (word[0], word[1:]) if left else (word[-1], word[:-1])
        weight = h[letter - 1].conjugate()
        if weight != 0:
            terms[rest] = terms.get(rest, 0j) + weight * c

    return FockVector(terms, v.n, v.cap, v.dropped)


def left_create(h, v):
    """
    l_h: prepend h to every tensor word (Omega -> h).

    Examples
    --------
    >>> from graphoperators.operators.fock import FockVector, left_create
    >>> left_create([0, 1], FockVector.basis_vector((1,), 2, 3)).terms
    {(2, 1): (1+0j)}

    """
    return _create(h, v, left=True)


def left_annihilate(h, v):
    """
    l_h*: strip the first letter with weight <h, e_letter>; Omega -> 0.

    Examples
    --------
    >>> from graphoperators.operators.fock import FockVector, left_annihilate
    >>> left_annihilate([1, 0], FockVector.basis_vector((1, 2), 2, 3)).terms
    {(2,): (1+0j)}
    >>> left_annihilate([1, 0], FockVector.basis_vector((2, 2), 2, 3)).is_zero()
    True

    """
    return _annihilate(h, v, left=True)


def right_create(h, v):
    """
    r_h: append h to every tensor word.

    Examples
    --------
    >>> from graphoperators.operators.fock import FockVector, right_create
    >>> right_create([0, 1], FockVector.basis_vector((1,), 2, 3)).terms
    {(1, 2): (1+0j)}

    """
    return _create(h, v, left=False)


def right_annihilate(h, v):
    """
    r_h*: strip the last letter with weight <h, e_letter>; Omega -> 0.

    Examples
    --------
    >>> from graphoperators.operators.fock import FockVector, right_annihilate
    >>> right_annihilate([1, 0], FockVector.vacuum(2, 3)).is_zero()
    True

    """
    return _annihilate(h, v, left=False)


class Generator(namedtuple('Generator', 'side vector starred')):
    """One creation (starred=False) or annihilation (starred=True) operator."""
    __slots__ = ()

    def __new__(cls, side, vector, starred=False):
        if side not in SIDES:
            raise ValueError("Generator side must be one of {0}, not {1!r}".
                             format(SIDES, side))
        vector = tuple(complex(x) for x in np.asarray(vector).ravel())
        return super(Generator, cls).__new__(cls, side, vector, bool(starred))

    def adjoint(self):
        return Generator(self.side, self.vector, not self.starred)

    def apply(self, v):
        if self.side == 'left':
            action = left_annihilate if self.starred else left_create
        else:
            action = right_annihilate if self.starred else right_create
        return action(self.vector, v)

    def __str__(self):
        name = 'l' if self.side == 'left' else 'r'
        return '{0}{1}{2}'.format(name, list(self.vector),
                                  '*' if self.starred else '')


def left(h, starred=False):
    return Generator('left', h, starred)


def right(h, starred=False):
    return Generator('right', h, starred)


def basis_letter(j, n):
    """Standard basis vector e_j of C^n (1-based)."""
    e = np.zeros(n, dtype=complex)
    e[j - 1] = 1
    return e


class FockOperatorWord(object):
    """
    Product g_1 g_2 ... g_k of generators, applied right to left.

    The empty word is the identity.  Multiplication concatenates.

    Examples
    --------
    >>> from graphoperators.operators.fock import (FockOperatorWord, right,
    ...     FockVector, apply_operator_word)
    >>> ow = FockOperatorWord([right([0, 1]), right([1, 0])])
    >>> apply_operator_word(ow, FockVector.vacuum(2, 3)).terms
    {(1, 2): (1+0j)}
    >>> len(ow * ow.adjoint()), ow.adjoint().generators[0].starred
    (4, True)

    """

    def __init__(self, generators=()):
        self.generators = tuple(generators)
        for g in self.generators:
            if not isinstance(g, Generator):
                raise TypeError("Expected Generator, got {0!r}".format(g))
        sizes = set(len(g.vector) for g in self.generators)
        if len(sizes) > 1:
            raise DimensionMismatchError(
                "Generators over different one-particle dimensions {0}".
                format(sorted(sizes)))
        self.n = sizes.pop() if sizes else None

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other):
        if not isinstance(other, FockOperatorWord):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        if not self.generators:
            return 'FockOperatorWord(1)'
        return 'FockOperatorWord({0})'.format(
            ' '.join(str(g) for g in self.generators))

    def __mul__(self, other):
        if not isinstance(other, FockOperatorWord):
            return NotImplemented
        return FockOperatorWord(self.generators + other.generators)

    @property
    def sides(self):
        return set(g.side for g in self.generators)

    def adjoint(self):
        return FockOperatorWord(g.adjoint() for g in reversed(self.generators))


def apply_operator_word(ow, v):
    """Apply the generators of an operator word from right to left."""
    if ow.n is not None and ow.n != v.n:
        raise DimensionMismatchError(
            "Operator word over C^{0} applied to a Fock vector over C^{1}".
            format(ow.n, v.n))
    for g in reversed(ow.generators):
        v = g.apply(v)

    return v


def _swap_sides(ow, source, target):
    if ow.sides - {source}:
        raise ValueError("Expected only {0} generators, got sides {1}".format(
            source, sorted(ow.sides)))
    return FockOperatorWord(Generator(target, g.vector, not g.starred)
                            for g in reversed(ow.generators))


def phi_map(ow):
    """
    Send a left operator word to a right one: products reverse,
    l_h -> r_h* and l_h* -> r_h; the identity goes to the identity.

    Examples
    --------
    >>> from graphoperators.operators.fock import (FockOperatorWord, left,
    ...     right, phi_map)
    >>> phi_map(FockOperatorWord([left([1, 0])])) == FockOperatorWord([right([1, 0], True)])
    True
    >>> ow = FockOperatorWord([left([1, 0]), left([0, 1], True)])
    >>> phi_map(ow) == FockOperatorWord([right([0, 1]), right([1, 0], True)])
    True

    """
    return _swap_sides(ow, 'left', 'right')


def phi_inverse(ow):
    """Inverse of phi_map, from right operator words to left ones."""
    return _swap_sides(ow, 'right', 'left')


def fock_words(n, d):
    """All Fock words of degree <= d, by degree then lexicographic."""
    words = []
    for degree in range(d + 1):
        words.extend(itertools.product(range(1, n + 1), repeat=degree))
    return words


def fock_basis(n, d):
    """
    Basis of the Fock space over C^n truncated at degree d.

    A word of degree k sits d - k steps from the truncation boundary.

    Examples
    --------
    >>> from graphoperators.operators.fock import fock_basis
    >>> basis = fock_basis(3, 2)
    >>> len(basis), basis.words[:2], basis.boundary_distance.tolist()[:2]
    (13, ((), (1,)), [2, 1])

    """
    if n < 1 or d < 0:
        raise ValueError("Need n >= 1 and d >= 0, got n={0}, d={1}".format(
            n, d))
    words = fock_words(n, d)
    basis = BasisIndex(words, [d - len(w) for w in words])
    basis.n = n
    basis.cap = d

    return basis


def _letter_matrices(basis, side):
    """0/1 matrices prepending (left) or appending (right) each letter."""
    cache = basis.__dict__.setdefault('_letter_matrices', {})
    if side not in cache:
        n, cap, size = basis.n, basis.cap, len(basis)
        matrices = []
        for letter in range(1, n + 1):
            rows, cols = [], []
            for col, word in enumerate(basis.words):
                if len(word) < cap:
                    new = (letter,) + word if side == 'left' else word + (letter,)
                    rows.append(basis.index[new])
                    cols.append(col)
            matrices.append(csr_matrix((np.ones(len(rows), dtype=complex),
                                        (rows, cols)), shape=(size, size)))
        cache[side] = matrices

    return cache[side]


def generator_matrix(g, basis):
    """
    Sparse matrix of one generator on a Fock basis.

    A creation operator is sum_j h_j times the 0/1 letter matrix; the
    annihilation operator is its conjugate transpose.
    """
    h = _one_particle(g.vector, basis.n)
    m = csr_matrix((len(basis), len(basis)), dtype=complex)
    for weight, letter_matrix in zip(h, _letter_matrices(basis, g.side)):
        if weight != 0:
            m = m + weight * letter_matrix
    if g.starred:
        m = m.conj().T

    return prune(m)


def operator_matrix(ow, basis, by_columns=False):
    """
    Sparse matrix of an operator word on a Fock basis.

    The matrix is the product of the generator matrices, with the degree
    cap applied after every factor.  With by_columns=True each column is
    computed instead by applying the word to a basis vector; both give the
    same matrix.

    Parameters
    ----------
    ow : FockOperatorWord
    basis : BasisIndex from fock_basis()
    by_columns : bool

    Returns
    -------
    m : csr_matrix (complex128)

    Examples
    --------
    >>> from graphoperators.operators.fock import (FockOperatorWord, right,
    ...     fock_basis, operator_matrix)
    >>> basis = fock_basis(2, 2)
    >>> m = operator_matrix(FockOperatorWord([right([1, 0])]), basis)
    >>> int(m[basis.index[(2, 1)], basis.index[(2,)]].real), m.nnz
    (1, 3)
    >>> ow = FockOperatorWord([right([1, 0], True), right([1, 2])])
    >>> float(abs(operator_matrix(ow, basis) -
    ...           operator_matrix(ow, basis, by_columns=True)).max())
    0.0

    """
    n, cap = basis.n, basis.cap
    if ow.n is not None and ow.n != n:
        raise DimensionMismatchError(
            "Operator word over C^{0} on a Fock basis over C^{1}".format(
                ow.n, n))
    if not len(ow):
        return identity_matrix(len(basis))

    if not by_columns:
        m = generator_matrix(ow.generators[0], basis)
        for g in ow.generators[1:]:
            m = m.dot(generator_matrix(g, basis))
        return prune(m)

    rows, cols, data = [], [], []
    for col, word in enumerate(basis.words):
        image = apply_operator_word(ow, FockVector.basis_vector(word, n, cap))
        for w, c in image.terms.items():
            rows.append(basis.index[w])
            cols.append(col)
            data.append(c)

    m = coo_matrix((np.asarray(data, dtype=complex), (rows, cols)),
                   shape=(len(basis), len(basis)))
    return prune(m)


VertexFockBijection = namedtuple('VertexFockBijection', 'to_fock to_vertex')


def vertex_fock_bijection(n, d):
    """
    Match tree vertices with Fock words: label j1...jk <-> (j1, ..., jk),
    root "" <-> Omega.

    Returns
    -------
    bijection : VertexFockBijection
        two dicts, vertex label -> Fock word and Fock word -> vertex label

    Examples
    --------
    >>> from graphoperators.operators.fock import vertex_fock_bijection
    >>> b = vertex_fock_bijection(2, 2)
    >>> b.to_fock[''], b.to_fock['12'], b.to_vertex[(2, 1)]
    ((), (1, 2), '21')
    >>> len(vertex_fock_bijection(3, 2).to_fock)
    13

    """
    from graphoperators.guts.graph import build_regular_tree

    if n <= 1:
        raise ValueError("The vertex/Fock bijection needs n >= 2, not {0}".
                         format(n))
    tree = build_regular_tree(n, d)
    to_fock = dict((v, tuple(int(x) for x in v)) for v in tree.vertices)
    to_vertex = dict((w, v) for v, w in to_fock.items())

    return VertexFockBijection(to_fock, to_vertex)


def build_rj_element(j, t):
    """
    R_j = sum of L_(W, Wj) over the tree edges appending the symbol j.

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree
    >>> from graphoperators.guts.groupoid import Truncation
    >>> from graphoperators.operators.fock import build_rj_element
    >>> R1 = build_rj_element(1, Truncation(build_regular_tree(2, 2), 1))
    >>> sorted((w.source, w.range) for w in R1.support())
    [('', '1'), ('1', '11'), ('2', '21')]

    """
    from graphoperators.guts.algebra import AlgebraElement
    from graphoperators.guts.groupoid import path_word

    graph = t.graph
    if graph.kind != 'regular_tree' or graph.n < 2:
        raise ValueError("R_j lives on an N-regular tree with N >= 2.")
    if not 1 <= j <= graph.n:
        raise ValueError("Symbol {0} is outside 1..{1}".format(j, graph.n))
    if t.max_path_length < 1:
        raise ValueError("The truncation must contain edges.")

    return AlgebraElement(graph, [(path_word([e]), 1) for e in graph.edges
                                  if e.target[-1] == str(j)])


def tree_action_matrix(m, basis):
    """
    Vertex-space action of a tree operator: a term t_w carries the source
    vertex of w to its range (entry (range, source)); vertex terms sit on
    the diagonal.

    This action reverses products: the action of T1 T2 is the action of T2
    followed by the action of T1.

    Parameters
    ----------
    m : sparse matrix on the full groupoid basis
    basis : BasisIndex of a tree truncation

    Returns
    -------
    A : csr_matrix on the vertex space

    """
    size = basis.vertex_count
    rows, cols, data = [], [], []
    for w, c in vertex_column_terms(m, basis):
        rows.append(basis.index[_vertex(w.range)])
        cols.append(basis.index[_vertex(w.source)])
        data.append(c)

    A = coo_matrix((np.asarray(data, dtype=complex), (rows, cols)),
                   shape=(size, size))
    return prune(A)


def _vertex(label):
    from graphoperators.guts.groupoid import vertex_word
    return vertex_word(label)


def reindex_to_fock(m, vertex_basis, basis, bijection):
    """
    Push a vertex-space matrix through the vertex/Fock bijection.

    Parameters
    ----------
    m : sparse matrix indexed by vertex_basis
    vertex_basis : BasisIndex of vertex words
    basis : Fock BasisIndex
    bijection : VertexFockBijection

    Returns
    -------
    P m P^T : csr_matrix indexed by the Fock basis

    """
    if len(vertex_basis) != len(basis):
        raise DimensionMismatchError(
            "{0} vertices against {1} Fock words".format(len(vertex_basis),
                                                         len(basis)))
    rows = [basis.index[bijection.to_fock[w.vertex]]
            for w in vertex_basis.words]
    P = csr_matrix((np.ones(len(rows), dtype=complex),
                    (rows, np.arange(len(rows)))),
                   shape=(len(basis), len(vertex_basis)))

    return prune(P.dot(csr_matrix(m)).dot(P.T))


# ============================================================================
# Doctests
# ============================================================================
if __name__ == "__main__":
    import doctest
    doctest.testmod(verbose=True)  # py.test --doctest-modules
