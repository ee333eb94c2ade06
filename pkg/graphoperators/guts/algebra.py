#!/usr/bin/env python
"""
The groupoid *-algebra of a graph: finitely supported complex combinations
T = sum_w t_w L_w of groupoid words ("graph operators").

    - linear structure, convolution product and adjoint
    - support and coefficients
    - diagonal subalgebra and the conditional expectation onto it
    - the inner product induced by the expectation

Coefficients are exact GaussianRational scalars.

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
import numbers

from graphoperators.guts.groupoid import (product, shadow, check_word,
                                          word_key, vertex_word)
from graphoperators.guts.rationals import to_exact, ZERO


class AlgebraElement(object):
    """
    Finitely supported combination of groupoid words.

    Parameters
    ----------
    graph : DirectedGraph
    terms : dict or iterable of (GroupoidWord, number) pairs
        repeated words are summed; zero coefficients are dropped

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree, Edge
    >>> from graphoperators.guts.groupoid import path_word, vertex_word
    >>> from graphoperators.guts.algebra import AlgebraElement
    >>> g = build_regular_tree(1, 3)
    >>> e = path_word([Edge('1', '2')])
    >>> T = AlgebraElement(g, {e: 2, vertex_word('1'): 3})
    >>> len(T.support()), str(T.coefficient(e))
    (2, '2')
    >>> (T - T).is_zero()
    True

    """

    def __init__(self, graph, terms=()):
        if isinstance(terms, dict):
            terms = terms.items()
        self.graph = graph
        collected = {}
        for w, c in terms:
            if w.is_empty:
                raise ValueError("The empty word cannot carry a coefficient.")
            check_word(graph, w)
            collected[w] = collected.get(w, ZERO) + to_exact(c)
        self._terms = dict((w, c) for w, c in collected.items() if c)

    def __repr__(self):
        return '{0}({1})'.format(type(self).__name__, ', '.join(
            '{0}: {1}'.format(c, _word_text(w)) for w, c in self.items()))

    def items(self):
        """Return (word, coefficient) pairs in enumeration order."""
        return sorted(self._terms.items(),
                      key=lambda item: word_key(self.graph, item[0]))

    @property
    def terms(self):
        return dict(self._terms)

    def support(self):
        return frozenset(self._terms)

    def coefficient(self, w):
        return self._terms.get(w, ZERO)

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.graph == other.graph and self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def _check_graph(self, other):
        if self.graph != other.graph:
            raise ValueError("Elements live on different graphs.")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_graph(other)
        return AlgebraElement(self.graph, list(self._terms.items()) +
                              list(other._terms.items()))

    def __neg__(self):
        return AlgebraElement(self.graph,
                              [(w, -c) for w, c in self._terms.items()])

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, numbers.Number) or hasattr(other, 'conjugate'):
            c = to_exact(other)
            return AlgebraElement(self.graph,
                                  [(w, c * t) for w, t in self._terms.items()])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, AlgebraElement):
            return NotImplemented
        return self.__mul__(other)

    def adjoint(self):
        return adjoint(self)


class DiagonalElement(AlgebraElement):
    """Algebra element supported on vertex units only."""

    def __init__(self, graph, terms=()):
        super(DiagonalElement, self).__init__(graph, terms)
        for w in self._terms:
            if not w.is_vertex:
                raise ValueError("Diagonal elements hold vertex words only.")


def _word_text(w):
    from graphoperators.mio.words import format_word
    return format_word(w)


def multiply(a, b):
    """
    Convolution product of two algebra elements.

    Only pairs with range(u) = source(w) contribute; every other pair
    multiplies to the empty word and is dropped.

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree, Edge
    >>> from graphoperators.guts.groupoid import path_word, vertex_word, shadow
    >>> from graphoperators.guts.algebra import word_element, multiply
    >>> g = build_regular_tree(1, 3)
    >>> w = path_word([Edge('1', '2'), Edge('2', '3')])
    >>> multiply(word_element(g, w), word_element(g, shadow(w))).support() == {vertex_word('1')}
    True
    >>> multiply(word_element(g, shadow(w)), word_element(g, shadow(w))).is_zero()
    True

    """
    a._check_graph(b)

    by_source = {}
    for w, t in b._terms.items():
        by_source.setdefault(w.source, []).append((w, t))

    terms = []
    for u, s in a._terms.items():
        for w, t in by_source.get(u.range, ()):
            p = product(u, w)
            if not p.is_empty:
                terms.append((p, s * t))

    return AlgebraElement(a.graph, terms)


def adjoint(a):
    """
    Adjoint: (sum t_w w)* = sum conj(t_w) w^-1.

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree, Edge
    >>> from graphoperators.guts.groupoid import path_word, shadow
    >>> from graphoperators.guts.algebra import word_element, adjoint
    >>> g = build_regular_tree(1, 2)
    >>> e = path_word([Edge('1', '2')])
    >>> adjoint(word_element(g, e, 1j)) == word_element(g, shadow(e), -1j)
    True

    """
    cls = DiagonalElement if isinstance(a, DiagonalElement) else AlgebraElement
    return cls(a.graph, [(shadow(w), c.conjugate())
                         for w, c in a._terms.items()])


def expectation(a):
    """
    Conditional expectation onto the diagonal: keep the vertex terms.

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree, Edge
    >>> from graphoperators.guts.groupoid import path_word, vertex_word
    >>> from graphoperators.guts.algebra import AlgebraElement, expectation
    >>> g = build_regular_tree(1, 2)
    >>> T = AlgebraElement(g, {vertex_word('1'): 3, path_word([Edge('1', '2')]): 2})
    >>> expectation(T)
    DiagonalElement(3: v:1)

    """
    return DiagonalElement(a.graph, [(w, c) for w, c in a._terms.items()
                                     if w.is_vertex])


def inner_product(a, b):
    """
    Inner product <a, b> = sum_w conj(a_w) b_w, conjugate-linear in a.

    This agrees with the expectation-induced form E(a* b) summed over
    vertices, because u^-1 w reduces to a vertex only when u = w.

    Returns
    -------
    value : GaussianRational

    """
    a._check_graph(b)

    total = ZERO
    for w, s in a._terms.items():
        t = b._terms.get(w)
        if t is not None:
            total = total + s.conjugate() * t

    return total


def word_element(graph, w, coefficient=1):
    """Return coefficient * L_w as an algebra element (zero for Empty)."""
    if w.is_empty:
        return AlgebraElement(graph)
    return AlgebraElement(graph, [(w, coefficient)])


def identity_element(graph):
    """
    Return the unit sum_v L_v over all vertices of the graph.

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree
    >>> from graphoperators.guts.algebra import identity_element
    >>> len(identity_element(build_regular_tree(1, 3)))
    4

    """
    return DiagonalElement(graph, [(vertex_word(v), 1)
                                   for v in graph.vertices])


# ============================================================================
# Doctests
# ============================================================================
if __name__ == "__main__":
    import doctest
    doctest.testmod(verbose=True)  # py.test --doctest-modules
