#!/usr/bin/env python
"""
Tests for directed graphs and depth-truncated regular trees.

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
import pytest

from graphoperators.data.data import fixture_graph
from graphoperators.guts.graph import (DirectedGraph, Edge, build_regular_tree,
                                       child_label, is_simplicial, shadowed)


@pytest.mark.parametrize('n, depth, vertices', [(1, 4, 5), (2, 3, 15),
                                                (3, 2, 13), (4, 0, 1)])
def test_tree_sizes(n, depth, vertices):
    tree = build_regular_tree(n, depth)
    assert len(tree.vertices) == vertices
    assert len(tree.edges) == vertices - 1
    assert tree.kind == 'regular_tree'


def test_tree_level_order():
    tree = build_regular_tree(2, 2)
    assert tree.vertices == ('', '1', '2', '11', '12', '21', '22')
    assert [tree.level(v) for v in tree.vertices] == [0, 1, 1, 2, 2, 2, 2]


def test_tree_navigation():
    tree = build_regular_tree(3, 2)
    assert tree.parent('') is None
    assert tree.parent('31') == '3'
    assert tree.child('', 2) == '2'
    assert tree.child('12', 1) is None
    line = build_regular_tree(1, 3)
    assert line.parent('3') == '2'
    assert line.child('4', 1) is None
    assert child_label('3', 1, 1) == '4'


def test_tree_edges_point_away_from_root():
    tree = build_regular_tree(2, 3)
    for edge in tree.edges:
        assert tree.level(edge.target) == tree.level(edge.source) + 1
        assert tree.parent(edge.target) == edge.source


@pytest.mark.parametrize('n, depth', [(0, 2), (10, 1), (2, -1)])
def test_tree_invalid_arguments(n, depth):
    with pytest.raises(ValueError):
        build_regular_tree(n, depth)


def test_child_label_invalid_symbol():
    with pytest.raises(ValueError):
        child_label('1', 3, 2)


def test_tree_operations_need_tree():
    with pytest.raises(ValueError):
        fixture_graph().level('v')


@pytest.mark.parametrize('vertices, edges', [
    (['v', 'v'], []),
    (['v'], [('v', 'w')]),
    (['v', 'w'], [('v', 'w'), ('v', 'w')]),
    (['v', 'w'], [Edge('w', 'v', 0, True)]),
])
def test_graph_validation(vertices, edges):
    with pytest.raises(ValueError):
        DirectedGraph(vertices, edges)


def test_graph_kind_validation():
    with pytest.raises(ValueError):
        DirectedGraph(['v'], kind='forest')


def test_fixture_steps():
    g = fixture_graph()
    assert g.vertices == ('v', 'w')
    assert len(g.edges) == 3
    # loop: the edge and its shadow both leave v
    out_v = g.out_steps('v')
    assert Edge('v', 'v') in out_v
    assert Edge('v', 'v', 0, True) in out_v
    assert Edge('v', 'w', 1) in out_v
    assert len(out_v) == 4
    assert set(g.out_steps('w')) == {Edge('w', 'v', 0, True),
                                     Edge('w', 'v', 1, True)}
    assert not g.has_edge(Edge('w', 'v', 2, True))
    assert not g.has_edge(('v', 'w'))


def test_equality_and_hash():
    assert build_regular_tree(2, 2) == build_regular_tree(2, 2)
    assert build_regular_tree(2, 2) != build_regular_tree(2, 3)
    assert len({build_regular_tree(1, 2), build_regular_tree(1, 2)}) == 1
    reordered = DirectedGraph(['w', 'v'], [('v', 'w', 1), ('v', 'v'),
                                           ('v', 'w', 0)])
    assert reordered == fixture_graph()


def test_shadowed_closure():
    closure = shadowed(fixture_graph())
    assert closure.number_of_edges() == 6
    assert shadowed(closure) is closure


def test_is_simplicial():
    assert is_simplicial(build_regular_tree(3, 2))
    assert not is_simplicial(fixture_graph())
