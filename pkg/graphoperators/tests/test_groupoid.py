#!/usr/bin/env python
"""
Tests for groupoid words: reduction, product, shadow and enumeration.

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
import itertools

import pytest

from graphoperators.data.data import fixture_graph
from graphoperators.evaluate.evaluate_groupoid import brute_force_reduce
from graphoperators.guts.graph import Edge, build_regular_tree
from graphoperators.guts.groupoid import (EMPTY, ForeignEdgeError, Truncation,
                                          check_word, enumerate_words,
                                          partition_by_length, path_word,
                                          product, reduce, shadow,
                                          steps_from_vertices, vertex_word)
from graphoperators.guts.utilities import all_steps


@pytest.fixture
def line():
    return build_regular_tree(1, 4)


def test_reduce_cancels_backtracks(line):
    e12, e23 = Edge('1', '2'), Edge('2', '3')
    assert reduce([e12, e23, e23.inverse(), e12.inverse()], line) == \
        vertex_word('1')
    assert reduce([e12.inverse(), e12], line) == vertex_word('2')
    assert reduce([e12, e23], line) == path_word([e12, e23])


def test_reduce_non_admissible_is_empty(line):
    assert reduce([Edge('1', '2'), Edge('3', '4')], line) is EMPTY
    assert reduce([Edge('1', '2'), Edge('1', '2')], line).is_empty


def test_reduce_errors(line):
    with pytest.raises(ValueError):
        reduce([], line)
    with pytest.raises(ForeignEdgeError):
        reduce([Edge('1', '9')], line)
    with pytest.raises(ForeignEdgeError):
        reduce([Edge('2', '1')], line)


def test_loop_and_multi_edge_words():
    g = fixture_graph()
    loop = Edge('v', 'v')
    e0, e1 = Edge('v', 'w', 0), Edge('v', 'w', 1)
    assert reduce([loop, loop], g).length == 2
    assert reduce([loop, loop.inverse()], g) == vertex_word('v')
    assert reduce([loop.inverse(), loop], g) == vertex_word('v')
    # different tags never cancel
    assert reduce([e0, e1.inverse()], g).length == 2
    assert reduce([e0, e0.inverse()], g) == vertex_word('v')


def test_confluence_against_brute_force():
    for g in (build_regular_tree(2, 2), fixture_graph()):
        steps = all_steps(g)
        for length in (2, 3):
            for sequence in itertools.product(steps, repeat=length):
                assert reduce(sequence, g) == brute_force_reduce(sequence)


def test_inverse_laws():
    g = fixture_graph()
    for w in enumerate_words(Truncation(g, 3)):
        assert shadow(shadow(w)) == w
        assert product(w, shadow(w)) == vertex_word(w.source)
        assert product(shadow(w), w) == vertex_word(w.range)
        assert product(vertex_word(w.source), w) == w
        assert product(w, vertex_word(w.range)) == w


def test_product_is_associative():
    words = enumerate_words(Truncation(build_regular_tree(2, 2), 2))
    for a, b, c in itertools.product(words[:12], repeat=3):
        assert product(product(a, b), c) == product(a, product(b, c))


def test_empty_absorbs():
    w = path_word([Edge('1', '2')])
    assert product(EMPTY, w).is_empty
    assert product(w, EMPTY).is_empty
    assert shadow(EMPTY) is EMPTY


@pytest.mark.parametrize('n, depth, maxlen, count', [
    (1, 3, 1, 10), (2, 1, 2, 9), (1, 4, 4, 25), (2, 3, 0, 15)])
def test_enumerate_counts(n, depth, maxlen, count):
    words = enumerate_words(Truncation(build_regular_tree(n, depth), maxlen))
    assert len(words) == count
    assert len(set(words)) == count


def test_enumerate_is_reduced_and_ordered():
    g = fixture_graph()
    words = enumerate_words(Truncation(g, 3))
    lengths = [w.length for w in words]
    assert lengths == sorted(lengths)
    assert words[:2] == [vertex_word('v'), vertex_word('w')]
    for w in words:
        check_word(g, w)
    levels = partition_by_length(words)
    # steps ending at v extend 3 ways, steps ending at w only 1 way
    assert [len(levels[k]) for k in range(3)] == [2, 6, 14]


def test_check_word_errors(line):
    e12 = Edge('1', '2')
    with pytest.raises(ValueError):
        check_word(line, path_word([e12, e12.inverse()]))
    with pytest.raises(ValueError):
        check_word(line, path_word([e12, Edge('3', '4')]))
    with pytest.raises(ForeignEdgeError):
        check_word(line, vertex_word('7'))
    check_word(line, EMPTY)


def test_truncation_rejects_negative_length(line):
    with pytest.raises(ValueError):
        Truncation(line, -1)


def test_steps_from_vertices(line):
    steps = steps_from_vertices(line, ['3', '2', '1'])
    assert steps == [Edge('3', '2', 0, True), Edge('2', '1', 0, True)]
    with pytest.raises(ForeignEdgeError):
        steps_from_vertices(line, ['1', '3'])
    with pytest.raises(ValueError):
        steps_from_vertices(fixture_graph(), ['v', 'w'])
