#!/usr/bin/env python
"""
Groupoid words on a shadowed graph:

    - reduced admissible paths, vertex units and the empty word
    - reduction of step sequences (cancellation of e e^-1 pairs)
    - partial product, shadow (inverse) of words
    - deterministic enumeration of all words up to a maximal length

The empty word is the absorbing zero of the product: it stands for every
non-admissible concatenation.

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
from collections import namedtuple
import logging

LOG = logging.getLogger(__name__)


class ForeignEdgeError(ValueError):
    """A step or word does not belong to the graph it is used with."""


class GroupoidWord(namedtuple('GroupoidWord', 'vertex steps')):
    """
    Element of the graph groupoid.

    Three variants share one immutable tuple:

        - Empty: vertex is None and steps is ()
        - Vertex: vertex is a label and steps is ()
        - Path: vertex is None and steps is a reduced admissible tuple of
          Edge steps

    Examples
    --------
    >>> from graphoperators.guts.graph import Edge
    >>> from graphoperators.guts.groupoid import vertex_word, path_word, EMPTY
    >>> w = path_word([Edge('1', '2'), Edge('2', '3')])
    >>> w.source, w.range, w.length
    ('1', '3', 2)
    >>> vertex_word('2').is_vertex, EMPTY.is_empty
    (True, True)

    """
    __slots__ = ()

    @property
    def is_empty(self):
        return self.vertex is None and not self.steps

    @property
    def is_vertex(self):
        return self.vertex is not None

    @property
    def is_path(self):
        return bool(self.steps)

    @property
    def source(self):
        if self.vertex is not None:
            return self.vertex
        if self.steps:
            return self.steps[0].source
        return None

    @property
    def range(self):
        if self.vertex is not None:
            return self.vertex
        if self.steps:
            return self.steps[-1].target
        return None

    @property
    def length(self):
        return len(self.steps)


EMPTY = GroupoidWord(None, ())


def vertex_word(label):
    """Return the vertex unit for a vertex label."""
    return GroupoidWord(label, ())


def path_word(steps):
    """Wrap an already reduced, admissible step sequence as a word."""
    return GroupoidWord(None, tuple(steps))


def check_word(graph, w):
    """
    Raise unless w is a valid groupoid word on graph.

    Foreign vertices or steps raise ForeignEdgeError; non-admissible or
    non-reduced step tuples raise ValueError.

    """
    if w.is_empty:
        return
    if w.is_vertex:
        if not graph.has_vertex(w.vertex):
            raise ForeignEdgeError("Vertex {0!r} is not in the graph.".
                                   format(w.vertex))
        return
    for step in w.steps:
        if not graph.has_edge(step):
            raise ForeignEdgeError("Step {0} is not in the graph.".
                                   format(step))
    for first, second in zip(w.steps, w.steps[1:]):
        if first.target != second.source:
            raise ValueError("Word is not admissible at {0}, {1}".
                             format(first, second))
        if second == first.inverse():
            raise ValueError("Word is not reduced at {0}, {1}".
                             format(first, second))


def reduce(steps, graph=None):
    """
    Reduce a sequence of steps on the shadowed graph to a groupoid word.

    A single left-to-right stack pass: a step cancels the top of the stack
    when it is the top's shadow.  If any adjacent pair of the input is not
    admissible the result is the empty word.  If everything cancels, the
    result is the vertex unit at the source of the first step.

    Parameters
    ----------
    steps : sequence of Edge objects
        non-empty step sequence
    graph : DirectedGraph or None
        if given, every step must belong to it

    Returns
    -------
    word : GroupoidWord

    Examples
    --------
    >>> from graphoperators.guts.graph import Edge, build_regular_tree
    >>> from graphoperators.guts.groupoid import reduce
    >>> g = build_regular_tree(1, 4)
    >>> e = Edge('1', '2')
    >>> reduce([e, e.inverse()], g)
    GroupoidWord(vertex='1', steps=())
    >>> reduce([Edge('1', '2'), Edge('3', '4')], g).is_empty
    True
    >>> reduce([Edge('1', '2'), Edge('2', '3'), Edge('3', '2', 0, True)], g).length
    1

    """
    steps = list(steps)
    if not steps:
        raise ValueError("Cannot reduce an empty step sequence; "
                         "use vertex_word() for units.")
    if graph is not None:
        for step in steps:
            if not graph.has_edge(step):
                raise ForeignEdgeError("Step {0} is not in the graph.".
                                       format(step))

    for first, second in zip(steps, steps[1:]):
        if first.target != second.source:
            return EMPTY

    stack = []
    for step in steps:
        if stack and stack[-1] == step.inverse():
            stack.pop()
        else:
            stack.append(step)

    if not stack:
        return vertex_word(steps[0].source)
    return path_word(stack)


def product(a, b):
    """
    Partial product of groupoid words.

    Examples
    --------
    >>> from graphoperators.guts.graph import Edge
    >>> from graphoperators.guts.groupoid import (product, shadow, path_word,
    ...     vertex_word, EMPTY)
    >>> w = path_word([Edge('1', '2'), Edge('2', '3')])
    >>> product(w, shadow(w))
    GroupoidWord(vertex='1', steps=())
    >>> product(vertex_word('1'), vertex_word('1'))
    GroupoidWord(vertex='1', steps=())
    >>> product(EMPTY, w).is_empty, product(vertex_word('2'), w).is_empty
    (True, True)

    """
    if a.is_empty or b.is_empty:
        return EMPTY
    if a.is_vertex:
        return b if b.source == a.vertex else EMPTY
    if b.is_vertex:
        return a if a.range == b.vertex else EMPTY
    if a.range != b.source:
        return EMPTY

    return reduce(a.steps + b.steps)


def shadow(w):
    """
    Return the shadow (groupoid inverse) of a word.

    Examples
    --------
    >>> from graphoperators.guts.graph import Edge
    >>> from graphoperators.guts.groupoid import shadow, path_word, vertex_word
    >>> shadow(path_word([Edge('1', '2')])).steps
    (Edge(source='2', target='1', tag=0, shadow=True),)
    >>> shadow(vertex_word('v')) == vertex_word('v')
    True

    """
    if not w.is_path:
        return w

    return path_word(step.inverse() for step in reversed(w.steps))


class Truncation(namedtuple('Truncation', 'graph max_path_length')):
    """Finite window onto the groupoid of a graph."""
    __slots__ = ()

    def __new__(cls, graph, max_path_length):
        if max_path_length < 0:
            raise ValueError("max_path_length must be non-negative, not {0}".
                             format(max_path_length))
        return super(Truncation, cls).__new__(cls, graph,
                                              int(max_path_length))


def word_key(graph, w):
    """
    Sort key: vertices first (level order), then paths by length, then
    lexicographic in their steps.
    """
    if w.is_vertex:
        return (0, (graph.vertex_key(w.vertex),))
    return (w.length, tuple(graph.step_key(s) for s in w.steps))


def enumerate_words(t):
    """
    Enumerate all vertices and reduced paths of length <= max_path_length.

    Parameters
    ----------
    t : Truncation

    Returns
    -------
    words : list of GroupoidWord objects
        vertices in level order, then reduced paths by length, then
        lexicographic; every word exactly once

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree
    >>> from graphoperators.guts.groupoid import Truncation, enumerate_words
    >>> len(enumerate_words(Truncation(build_regular_tree(1, 3), 1)))
    10
    >>> words = enumerate_words(Truncation(build_regular_tree(2, 1), 2))
    >>> [w.length for w in words]
    [0, 0, 0, 1, 1, 1, 1, 2, 2]
    >>> len(enumerate_words(Truncation(build_regular_tree(2, 3), 0)))
    15

    """
    graph = t.graph
    words = [vertex_word(v) for v in graph.vertices]

    frontier = [(step,) for v in graph.vertices
                for step in graph.out_steps(v)]
    length = 1
    while frontier and length <= t.max_path_length:
        frontier.sort(key=lambda steps: tuple(graph.step_key(s)
                                              for s in steps))
        words.extend(path_word(steps) for steps in frontier)
        if length == t.max_path_length:
            break
        extended = []
        for steps in frontier:
            back = steps[-1].inverse()
            for step in graph.out_steps(steps[-1].target):
                if step != back:
                    extended.append(steps + (step,))
        frontier = extended
        length += 1

    LOG.debug('Enumerated {0} words (max length {1}) on {2}'.format(
        len(words), t.max_path_length, graph))

    return words


def partition_by_length(words):
    """
    Split words into level sets by length (vertices are level 0).

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree
    >>> from graphoperators.guts.groupoid import (Truncation, enumerate_words,
    ...     partition_by_length)
    >>> levels = partition_by_length(enumerate_words(
    ...     Truncation(build_regular_tree(1, 3), 2)))
    >>> sorted((k, len(v)) for k, v in levels.items())
    [(0, 4), (1, 6), (2, 4)]

    """
    levels = {}
    for w in words:
        if not w.is_empty:
            levels.setdefault(w.length, []).append(w)

    return levels


def steps_from_vertices(graph, labels):
    """
    Convert the vertex-tuple notation (v1, v2, ..., vk) of a simplicial
    graph into steps; a reversed pair travels along a shadow edge.

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree
    >>> from graphoperators.guts.groupoid import steps_from_vertices, reduce
    >>> g = build_regular_tree(1, 4)
    >>> reduce(steps_from_vertices(g, ['1', '2', '1']))
    GroupoidWord(vertex='1', steps=())

    """
    from graphoperators.guts.graph import Edge, is_simplicial

    if not is_simplicial(graph):
        raise ValueError("Vertex-tuple notation needs a simplicial graph.")
    labels = list(labels)
    if len(labels) < 2:
        raise ValueError("Need at least two vertices to name a path.")

    steps = []
    for a, b in zip(labels, labels[1:]):
        forward = Edge(a, b)
        backward = Edge(a, b, 0, True)
        if graph.has_edge(forward):
            steps.append(forward)
        elif graph.has_edge(backward):
            steps.append(backward)
        else:
            raise ForeignEdgeError("No edge between {0!r} and {1!r}".
                                   format(a, b))

    return steps


# ============================================================================
# Doctests
# ============================================================================
if __name__ == "__main__":
    import doctest
    doctest.testmod(verbose=True)  # py.test --doctest-modules
