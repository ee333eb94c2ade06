#!/usr/bin/env python
"""
Graph import/export as JSON documents:

    {"vertices": [...],
     "edges": [{"src": ..., "dst": ..., "tag": ...}, ...],
     "kind": "general" | "regular_tree",
     "n": N, "depth": D}        (regular trees only)

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
import json


def graph_to_dict(g):
    """
    Return the JSON-ready description of a graph.

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree
    >>> from graphoperators.mio.graphs import graph_to_dict
    >>> d = graph_to_dict(build_regular_tree(2, 1))
    >>> d['vertices'], d['edges'][0], d['kind'], d['n']
    (['', '1', '2'], {'src': '', 'dst': '1', 'tag': 0}, 'regular_tree', 2)

    """
    record = {'vertices': list(g.vertices),
              'edges': [{'src': e.source, 'dst': e.target, 'tag': e.tag}
                        for e in g.edges],
              'kind': g.kind}
    if g.kind == 'regular_tree':
        record['n'] = g.n
        record['depth'] = g.depth

    return record


def graph_from_dict(record):
    """Build a DirectedGraph from its JSON description."""
    from graphoperators.guts.graph import (DirectedGraph, Edge,
                                           build_regular_tree)
    from graphoperators.mio.words import LiteralSyntaxError

    try:
        kind = record.get('kind', 'general')
        if kind == 'regular_tree':
            return build_regular_tree(int(record['n']), int(record['depth']))
        edges = [Edge(str(e['src']), str(e['dst']), int(e.get('tag', 0)))
                 for e in record.get('edges', [])]
        return DirectedGraph(record['vertices'], edges, kind=kind)
    except (AttributeError, KeyError, TypeError) as error:
        raise LiteralSyntaxError("Malformed graph document: {0}".format(
            error))


def read_graph(input_file):
    """
    Read a graph from a JSON file.

    Examples
    --------
    >>> from graphoperators.data.data import fetch_file_path
    >>> from graphoperators.mio.graphs import read_graph
    >>> g = read_graph(fetch_file_path('loop_multi_edge.json'))
    >>> g.vertices, len(g.edges)
    (('v', 'w'), 3)

    """
    import os
    from graphoperators.mio.words import LiteralSyntaxError

    if not os.path.exists(input_file):
        raise IOError(input_file + " not found")
    with open(input_file) as f:
        try:
            record = json.load(f)
        except ValueError as error:
            raise LiteralSyntaxError("{0} is not valid JSON: {1}".format(
                input_file, error))

    return graph_from_dict(record)


def write_graph(g, output_file=None):
    """Return a graph as JSON text, optionally writing it to a file."""
    text = json.dumps(graph_to_dict(g), indent=2, ensure_ascii=False)
    if output_file:
        with open(output_file, 'w') as f:
            f.write(text + '\n')

    return text


def parse_tree_spec(text):
    """
    Build a regular tree from an "N,DEPTH" argument.

    Examples
    --------
    >>> from graphoperators.mio.graphs import parse_tree_spec
    >>> parse_tree_spec('2,3')
    DirectedGraph(regular_tree, n=2, depth=3)

    """
    from graphoperators.guts.graph import build_regular_tree
    from graphoperators.mio.words import LiteralSyntaxError

    try:
        n, depth = [int(x) for x in text.split(',')]
    except ValueError:
        raise LiteralSyntaxError("Tree argument must be N,DEPTH, not "
                                 "{0!r}".format(text))

    return build_regular_tree(n, depth)


# ============================================================================
# Doctests
# ============================================================================
if __name__ == "__main__":
    import doctest
    doctest.testmod(verbose=True)  # py.test --doctest-modules
