#!/usr/bin/env python
"""
Functions for fetching the graph fixtures shipped with the package.

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""

FIXTURE_GRAPH = 'loop_multi_edge.json'


def fetch_file_path(file_name):
    """
    Return the path to files in the data directory.

    Parameters
    ----------
    file_name : str
        name of the file whose full path is to be returned

    Returns
    -------
    file_path : str
        full path to file

    Examples
    --------
    >>> import os
    >>> from graphoperators.data.data import fetch_file_path
    >>> os.path.exists(fetch_file_path('loop_multi_edge.json'))
    True

    """
    import os

    file_path = os.path.join(os.path.dirname(__file__), file_name)

    return file_path


def fixture_graph():
    """
    Non-simplicial fixture: vertex v with a loop-edge v -> v and a double
    edge v => w.
    """
    from graphoperators.mio.graphs import read_graph

    return read_graph(fetch_file_path(FIXTURE_GRAPH))
