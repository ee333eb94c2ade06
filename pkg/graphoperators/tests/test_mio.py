#!/usr/bin/env python
"""
Tests for literal parsing and file input/output.

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
import json

import numpy as np
from numpy.testing import assert_allclose
import pandas as pd
import pytest

from graphoperators.data.data import fixture_graph
from graphoperators.guts.algebra import AlgebraElement
from graphoperators.guts.graph import Edge, build_regular_tree
from graphoperators.guts.groupoid import (EMPTY, ForeignEdgeError, Truncation,
                                          path_word, vertex_word)
from graphoperators.guts.rationals import GaussianRational
from graphoperators.guts.representation import BasisIndex, matrix_of_word
from graphoperators.mio.graphs import (parse_tree_spec, read_graph,
                                       write_graph)
from graphoperators.mio.matrices import (matrix_to_table, read_coordinate,
                                         write_coordinate, write_matrix_json)
from graphoperators.mio.tables import (SuiteReport, write_reports,
                                       write_summary_table)
from graphoperators.mio.words import (LiteralSyntaxError, format_word,
                                      parse_element, parse_scalar, parse_word,
                                      read_element, read_symbol,
                                      write_element)


def test_word_literals():
    tree = build_regular_tree(2, 2)
    assert parse_word('v:\u2205', tree) == vertex_word('')
    assert format_word(vertex_word('')) == 'v:\u2205'
    assert parse_word('null', tree) is EMPTY
    w = parse_word('\u2205>1;1>12', tree)
    assert w == path_word([Edge('', '1'), Edge('1', '12')])
    assert format_word(w) == '\u2205>1;1>12'
    assert format_word(parse_word('1<\u2205;\u2205>1', tree)) == 'v:1'


def test_tagged_steps():
    g = fixture_graph()
    w = parse_word('v>w#1;w<v', g)
    assert w.length == 2
    assert format_word(w) == 'v>w#1;w<v'
    assert format_word(parse_word('v>w#1;w<v#1', g)) == 'v:v'


@pytest.mark.parametrize('text', ['', '1=2', '1>2;;2>3', '1>2#x'])
def test_malformed_words(text):
    with pytest.raises(LiteralSyntaxError):
        parse_word(text, build_regular_tree(1, 4))


@pytest.mark.parametrize('text', ['1>9', 'v:7', '2>1'])
def test_foreign_words(text):
    with pytest.raises(ForeignEdgeError):
        parse_word(text, build_regular_tree(1, 4))


@pytest.mark.parametrize('text, value', [
    ('3', GaussianRational(3)),
    ('-1/2', GaussianRational('-1/2')),
    ('2j', GaussianRational(0, 2)),
    ('j', GaussianRational(0, 1)),
    ('1/2-3j', GaussianRational('1/2', -3)),
    ('0.25', GaussianRational('1/4')),
    ('1 + 1j', GaussianRational(1, 1)),
])
def test_scalars(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize('text', ['', 'abc', '1/0', '2jj'])
def test_bad_scalars(text):
    with pytest.raises(LiteralSyntaxError):
        parse_scalar(text)


def test_element_files(tmp_path):
    g = fixture_graph()
    T = AlgebraElement(g, {path_word([Edge('v', 'v')]): GaussianRational(1, -2),
                           vertex_word('w'): '3/4'})
    element_file = str(tmp_path / 'element.json')
    write_element(T, element_file)
    assert read_element(element_file, g) == T
    with pytest.raises(IOError):
        read_element(str(tmp_path / 'missing.json'), g)


@pytest.mark.parametrize('text', [
    '{"word": "v:v"}', 'not json', '[{"re": "1"}]',
    '[{"word": "v:v", "re": "x"}]', '[{"word": "null", "re": "1"}]'])
def test_malformed_elements(text):
    with pytest.raises(LiteralSyntaxError):
        parse_element(text, fixture_graph())


def test_symbols():
    sym = read_symbol('t-2=1j, t0=5')
    assert (sym.n, sym.k) == (2, 0)
    assert sym.coefficient(-2) == GaussianRational(0, 1)
    for text in ['', 't1=1,t1=2', 'x1=2', 't1=']:
        with pytest.raises(LiteralSyntaxError):
            read_symbol(text)


def test_graph_files(tmp_path):
    graph_file = str(tmp_path / 'graph.json')
    write_graph(fixture_graph(), graph_file)
    assert read_graph(graph_file) == fixture_graph()
    tree_file = str(tmp_path / 'tree.json')
    write_graph(build_regular_tree(3, 2), tree_file)
    assert read_graph(tree_file) == build_regular_tree(3, 2)


def test_bad_graph_files(tmp_path):
    with pytest.raises(IOError):
        read_graph(str(tmp_path / 'missing.json'))
    bad = tmp_path / 'bad.json'
    bad.write_text('{"vertices": ')
    with pytest.raises(LiteralSyntaxError):
        read_graph(str(bad))
    incomplete = tmp_path / 'incomplete.json'
    incomplete.write_text(json.dumps({'edges': []}))
    with pytest.raises(LiteralSyntaxError):
        read_graph(str(incomplete))


def test_tree_spec():
    assert parse_tree_spec('1,4') == build_regular_tree(1, 4)
    with pytest.raises(LiteralSyntaxError):
        parse_tree_spec('2')
    with pytest.raises(ValueError):
        parse_tree_spec('0,3')


def test_coordinate_files(tmp_path):
    basis = BasisIndex.from_truncation(Truncation(build_regular_tree(1, 3), 2))
    m = matrix_of_word(path_word([Edge('1', '2')]), basis) * (1 - 2j)
    matrix_file = str(tmp_path / 'matrix.txt')
    text = write_coordinate(m, matrix_file)
    assert text.splitlines()[0] == 'dim {0} nnz {1}'.format(len(basis), m.nnz)
    assert_allclose(read_coordinate(matrix_file).toarray(), m.toarray())

    empty_file = str(tmp_path / 'empty.txt')
    write_coordinate(m * 0, empty_file)
    assert read_coordinate(empty_file).nnz == 0

    bad = tmp_path / 'bad.txt'
    bad.write_text('size 3\n')
    with pytest.raises(LiteralSyntaxError):
        read_coordinate(str(bad))


def test_matrix_table_is_sorted():
    table = matrix_to_table(np.array([[0, 1], [2, 3]]))
    assert table[['row', 'col']].values.tolist() == [[0, 1], [1, 0], [1, 1]]


def test_matrix_json_carries_labels():
    basis = BasisIndex.from_truncation(Truncation(build_regular_tree(1, 2), 1))
    m = matrix_of_word(vertex_word('2'), basis)
    record = json.loads(write_matrix_json(m, basis))
    assert record['dim'] == len(basis)
    assert record['basis'][:3] == ['v:1', 'v:2', 'v:3']
    assert record['nnz'] == len(record['entries'])


def test_reports_are_deterministic(tmp_path):
    report = SuiteReport('groupoid-axioms', {'maxlen': 3, 'seed': 0})
    report.record('case-2', True, deviation=1e-14)
    report.record('case-1', False, expected=1j, got='0', deviation=1.0)
    report.wall_time = 0.5
    text = write_reports(report)
    assert text == write_reports(report)
    record = json.loads(text)
    assert 'wall_time' not in record
    assert record['failures'][0]['expected'] == [0.0, 1.0]
    assert record['max_error'] == 1.0
    assert json.loads(write_reports(report, timing=True))['wall_time'] == 0.5

    other = SuiteReport('anti-iso')
    records = json.loads(write_reports([report, other]))
    assert [r['suite'] for r in records] == ['anti-iso', 'groupoid-axioms']

    table_file = str(tmp_path / 'summary.csv')
    write_summary_table([report, other], table_file)
    table = pd.read_csv(table_file)
    assert table['suite'].tolist() == ['anti-iso', 'groupoid-axioms']
    assert table['failures'].tolist() == [0, 1]
