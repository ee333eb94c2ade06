#!/usr/bin/env python
"""
Directed graph operations:

    - Directed graphs with tagged (multi-)edges and loops
    - Depth-truncated N-regular rooted trees with word-labeled vertices
    - Shadow (reversed-edge) closure of a graph
    - Structural predicates (simpliciality)

Graphs are stored as frozen networkx MultiDiGraph objects, so a graph
is immutable after construction and can be shared between processes.

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
from collections import namedtuple

import networkx as nx


GRAPH_KINDS = ('general', 'regular_tree')

# Tree labels are words over single-digit symbols.
MAX_BRANCHING = 9


class Edge(namedtuple('Edge', 'source target tag shadow')):
    """
    A step on the shadowed graph.

    A non-shadow edge e = (v1, v2, tag) travels from v1 to v2.  Its shadow
    travels from v2 to v1 and is stored as Edge(v2, v1, tag, shadow=True),
    so that `source` and `target` always give the direction of travel.

    Examples
    --------
    >>> from graphoperators.guts.graph import Edge
    >>> e = Edge('1', '2')
    >>> e.inverse()
    Edge(source='2', target='1', tag=0, shadow=True)
    >>> e.inverse().inverse() == e
    True

    """
    __slots__ = ()

    def __new__(cls, source, target, tag=0, shadow=False):
        return super(Edge, cls).__new__(cls, source, target, int(tag),
                                        bool(shadow))

    def inverse(self):
        """Return the shadow of this step (reversed, shadow flag toggled)."""
        return Edge(self.target, self.source, self.tag, not self.shadow)

    def underlying(self):
        """Return the non-shadow edge this step travels along."""
        if self.shadow:
            return self.inverse()
        return self


class DirectedGraph(object):
    """
    Finite directed graph with tagged multi-edges, loops and vertex labels.

    Parameters
    ----------
    vertices : list of strings
        vertex labels, in the order used for enumeration
    edges : list of Edge objects or (source, target[, tag]) tuples
        non-shadow edges
    kind : string
        'general' or 'regular_tree'
    n : integer
        branching factor (regular trees only)
    depth : integer
        truncation depth (regular trees only)

    Examples
    --------
    >>> from graphoperators.guts.graph import DirectedGraph
    >>> g = DirectedGraph(['v', 'w'], [('v', 'v'), ('v', 'w', 0), ('v', 'w', 1)])
    >>> len(g.vertices), len(g.edges)
    (2, 3)
    >>> [e.target for e in g.out_steps('w')]
    ['v', 'v']

    """

    def __init__(self, vertices, edges=(), kind='general', n=None,
                 depth=None):

        if kind not in GRAPH_KINDS:
            raise ValueError("Graph kind must be one of {0}, not {1!r}".
                             format(GRAPH_KINDS, kind))

        vertices = [str(v) for v in vertices]
        if len(set(vertices)) != len(vertices):
            raise ValueError("Vertex labels must be unique.")

        graph = nx.MultiDiGraph()
        graph.add_nodes_from(vertices)
        edge_list = []
        for edge in edges:
            if not isinstance(edge, Edge):
                edge = Edge(*edge)
            if edge.shadow:
                raise ValueError("Declare non-shadow edges only: {0}".
                                 format(edge))
            if edge.source not in graph or edge.target not in graph:
                raise ValueError("Edge {0} has an undeclared endpoint.".
                                 format(edge))
            if graph.has_edge(edge.source, edge.target, key=edge.tag):
                raise ValueError("Duplicate edge {0}.".format(edge))
            graph.add_edge(edge.source, edge.target, key=edge.tag, edge=edge)
            edge_list.append(edge)

        self.graph = nx.freeze(graph)
        self.kind = kind
        self.n = n
        self.depth = depth
        self._position = dict((v, i) for i, v in enumerate(vertices))
        self.vertices = tuple(sorted(vertices, key=self.vertex_key))
        self.edges = tuple(sorted(edge_list, key=self.step_key))

        # Outgoing steps of the shadowed graph, per vertex.
        self._out_steps = dict((v, []) for v in self.vertices)
        for edge in self.edges:
            self._out_steps[edge.source].append(edge)
            self._out_steps[edge.target].append(edge.inverse())
        for v in self._out_steps:
            self._out_steps[v] = tuple(sorted(self._out_steps[v],
                                              key=self.step_key))

        self._hash = hash((self.kind, self.n, self.depth,
                           frozenset(self.vertices), frozenset(self.edges)))

    def __repr__(self):
        if self.kind == 'regular_tree':
            return 'DirectedGraph(regular_tree, n={0}, depth={1})'.format(
                self.n, self.depth)
        return 'DirectedGraph(general, {0} vertices, {1} edges)'.format(
            len(self.vertices), len(self.edges))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return (self._hash == other._hash and self.kind == other.kind and
                self.n == other.n and self.depth == other.depth and
                set(self.vertices) == set(other.vertices) and
                set(self.edges) == set(other.edges))

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return self._hash

    def vertex_key(self, label):
        """Sort key putting vertices in level order, then lexicographic."""
        if self.kind == 'regular_tree':
            if self.n == 1:
                return (int(label), label)
            return (len(label), label)
        return (self._position[label], label)

    def step_key(self, step):
        """Sort key for edges and shadow steps."""
        return (self.vertex_key(step.source), self.vertex_key(step.target),
                step.tag, step.shadow)

    def has_vertex(self, label):
        return label in self._out_steps

    def has_edge(self, step):
        """
        Check whether a step (edge or shadow edge) belongs to the graph.

        Examples
        --------
        >>> from graphoperators.guts.graph import build_regular_tree, Edge
        >>> g = build_regular_tree(1, 3)
        >>> g.has_edge(Edge('1', '2')), g.has_edge(Edge('2', '1', 0, True))
        (True, True)
        >>> g.has_edge(Edge('2', '1'))
        False

        """
        if not isinstance(step, Edge):
            return False
        edge = step.underlying()
        return self.graph.has_edge(edge.source, edge.target, key=edge.tag)

    def out_steps(self, label):
        """Return the steps of the shadowed graph leaving a vertex."""
        return self._out_steps[label]

    def level(self, label):
        """
        Return the level (distance from the root) of a tree vertex.

        Examples
        --------
        >>> from graphoperators.guts.graph import build_regular_tree
        >>> build_regular_tree(2, 3).level('121')
        3
        >>> build_regular_tree(1, 3).level('1')
        0

        """
        self._require_tree()
        if self.n == 1:
            return int(label) - 1
        return len(label)

    def parent(self, label):
        """Return the parent label of a tree vertex (None for the root)."""
        self._require_tree()
        if self.level(label) == 0:
            return None
        if self.n == 1:
            return str(int(label) - 1)
        return label[:-1]

    def child(self, label, j):
        """Return the j-th child of a tree vertex, or None past the depth."""
        self._require_tree()
        if self.level(label) >= self.depth:
            return None
        return child_label(label, j, self.n)

    def _require_tree(self):
        if self.kind != 'regular_tree':
            raise ValueError("Operation only defined for regular trees.")


def child_label(label, j, n):
    """
    Append the symbol j to a tree label (the action W -> Wj).

    Parameters
    ----------
    label : string
        tree vertex label
    j : integer
        symbol in 1..n
    n : integer
        branching factor

    Returns
    -------
    child : string
        label of the j-th child

    Examples
    --------
    >>> from graphoperators.guts.graph import child_label
    >>> child_label('', 2, 2)
    '2'
    >>> child_label('12', 1, 2)
    '121'
    >>> child_label('3', 1, 1)
    '4'

    """
    if not 1 <= j <= n:
        raise ValueError("Symbol {0} is outside 1..{1}".format(j, n))
    if n == 1:
        return str(int(label) + 1)
    return label + str(j)


def build_regular_tree(n, depth):
    """
    Build the depth-truncated N-regular rooted tree.

    For n = 1 the vertices are "1", "2", ..., "depth+1" along a line.
    For n >= 2 the root is the empty word "" and the vertices are words over
    the symbols 1..n; the children of W are W1, ..., Wn.
    Edges point away from the root.

    Parameters
    ----------
    n : integer
        branching factor, 1 <= n <= 9
    depth : integer
        number of levels below the root, >= 0

    Returns
    -------
    tree : DirectedGraph

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree
    >>> line = build_regular_tree(1, 3)
    >>> line.vertices
    ('1', '2', '3', '4')
    >>> [(e.source, e.target) for e in line.edges]
    [('1', '2'), ('2', '3'), ('3', '4')]
    >>> tree = build_regular_tree(2, 1)
    >>> tree.vertices
    ('', '1', '2')
    >>> len(build_regular_tree(3, 0).vertices), len(build_regular_tree(3, 0).edges)
    (1, 0)
    >>> len(build_regular_tree(2, 3).vertices)
    15

    """
    import itertools

    if n < 1:
        raise ValueError("Branching factor must be at least 1, not {0}".
                         format(n))
    if n > MAX_BRANCHING:
        raise ValueError("Branching factor must be at most {0}, not {1}".
                         format(MAX_BRANCHING, n))
    if depth < 0:
        raise ValueError("Depth must be non-negative, not {0}".format(depth))

    if n == 1:
        vertices = [str(i) for i in range(1, depth + 2)]
        edges = [Edge(str(i), str(i + 1)) for i in range(1, depth + 1)]
    else:
        symbols = [str(j) for j in range(1, n + 1)]
        vertices = []
        edges = []
        for level in range(depth + 1):
            for word in itertools.product(symbols, repeat=level):
                label = ''.join(word)
                vertices.append(label)
                if level > 0:
                    edges.append(Edge(label[:-1], label))

    return DirectedGraph(vertices, edges, kind='regular_tree', n=n,
                         depth=depth)


def shadowed(g):
    """
    Return the shadow closure of a graph.

    The result is a frozen networkx MultiDiGraph on the same vertices whose
    edges are keyed by Edge objects: every edge of g together with its
    shadow.  Applying shadowed() to its own output returns it unchanged.

    Parameters
    ----------
    g : DirectedGraph or shadowed MultiDiGraph

    Returns
    -------
    closure : networkx MultiDiGraph (frozen)

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree, shadowed
    >>> closure = shadowed(build_regular_tree(1, 1))
    >>> sorted(k for u, v, k in closure.edges(keys=True))
    [Edge(source='1', target='2', tag=0, shadow=False), Edge(source='2', target='1', tag=0, shadow=True)]
    >>> shadowed(closure).number_of_edges()
    2

    """
    if isinstance(g, nx.MultiDiGraph) and g.graph.get('shadowed'):
        return g

    closure = nx.MultiDiGraph(shadowed=True)
    closure.add_nodes_from(g.vertices)
    for edge in g.edges:
        for step in (edge, edge.inverse()):
            closure.add_edge(step.source, step.target, key=step, step=step)

    return nx.freeze(closure)


def is_simplicial(g):
    """
    Check that a graph has no loop-edges and no multi-edges.

    Examples
    --------
    >>> from graphoperators.guts.graph import (DirectedGraph, is_simplicial,
    ...     build_regular_tree)
    >>> is_simplicial(DirectedGraph(['v', 'w'], [('v', 'v'), ('v', 'w')]))
    False
    >>> is_simplicial(DirectedGraph(['v1', 'v2'], [('v1', 'v2', 0), ('v1', 'v2', 1)]))
    False
    >>> is_simplicial(build_regular_tree(2, 3))
    True

    """
    graph = g.graph
    for u, v in graph.edges():
        if u == v or graph.number_of_edges(u, v) > 1:
            return False

    return True


# ============================================================================
# Doctests
# ============================================================================
if __name__ == "__main__":
    import doctest
    doctest.testmod(verbose=True)  # py.test --doctest-modules
