#!/usr/bin/env python
"""
Text literals for words, scalars, algebra elements and Toeplitz symbols.

Word literals:

    - "null" for the empty word
    - "v:LABEL" for a vertex unit (the tree root is written "v:∅")
    - steps joined by ";" for paths: "A>B" travels along the edge A -> B,
      "A<B" travels from A to B along the shadow of the edge B -> A, and an
      optional "#TAG" suffix selects one of several parallel edges

For example "1>2;2>3" is the length-2 forward path on the line graph and
"1>2;2<1" reduces to "v:1".

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
from fractions import Fraction
import json
import re

ROOT_SYMBOL = '\u2205'
NULL_LITERAL = 'null'

_STEP = re.compile(r'^(?P<src>[^<>#;]*)(?P<dir>[<>])(?P<dst>[^<>#;]*)'
                   r'(?:#(?P<tag>\d+))?$')
_SYMBOL_ITEM = re.compile(r'^t(?P<offset>[+-]?\d+)=(?P<value>.+)$')


class LiteralSyntaxError(ValueError):
    """A word, scalar, element or symbol literal cannot be parsed."""


def _label_out(label):
    return ROOT_SYMBOL if label == '' else label


def _label_in(text):
    text = text.strip()
    return '' if text == ROOT_SYMBOL else text


def format_word(w):
    """
    Write a groupoid word as a literal.

    Examples
    --------
    >>> from graphoperators.guts.graph import Edge
    >>> from graphoperators.guts.groupoid import path_word, vertex_word, EMPTY
    >>> from graphoperators.mio.words import format_word
    >>> format_word(path_word([Edge('1', '2'), Edge('2', '3')]))
    '1>2;2>3'
    >>> format_word(path_word([Edge('2', '1', 0, True)]))
    '2<1'
    >>> format_word(vertex_word('')) == 'v:\u2205', format_word(EMPTY)
    (True, 'null')

    """
    if w.is_empty:
        return NULL_LITERAL
    if w.is_vertex:
        return 'v:' + _label_out(w.vertex)

    return ';'.join(format_step(s) for s in w.steps)


def format_step(step):
    text = '{0}{1}{2}'.format(_label_out(step.source),
                              '<' if step.shadow else '>',
                              _label_out(step.target))
    if step.tag:
        text += '#{0}'.format(step.tag)
    return text


def format_basis_word(w):
    """Label for any basis word: groupoid words, Fock words (tuples)."""
    from graphoperators.guts.groupoid import GroupoidWord

    if isinstance(w, GroupoidWord):
        return format_word(w)
    if isinstance(w, tuple):
        return ''.join(str(x) for x in w) or '\u03a9'
    return str(w)


def parse_steps(text):
    """
    Parse a path literal into its (unreduced) list of steps.

    Examples
    --------
    >>> from graphoperators.mio.words import parse_steps
    >>> parse_steps('1>2;2<1')
    [Edge(source='1', target='2', tag=0, shadow=False), Edge(source='2', target='1', tag=0, shadow=True)]
    >>> parse_steps('v>w#1')[0].tag
    1

    """
    from graphoperators.guts.graph import Edge

    steps = []
    for item in text.strip().split(';'):
        match = _STEP.match(item.strip())
        if not match:
            raise LiteralSyntaxError("Cannot parse step {0!r}".format(item))
        tag = int(match.group('tag') or 0)
        steps.append(Edge(_label_in(match.group('src')),
                          _label_in(match.group('dst')), tag,
                          match.group('dir') == '<'))

    return steps


def parse_word(text, graph):
    """
    Parse a word literal on a graph; paths are reduced.

    Raises LiteralSyntaxError for malformed text and ForeignEdgeError for
    vertices or steps outside the graph.

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree
    >>> from graphoperators.mio.words import parse_word, format_word
    >>> g = build_regular_tree(1, 8)
    >>> format_word(parse_word('1>2;2<1', g))
    'v:1'
    >>> format_word(parse_word('1>2;3>4', g))
    'null'

    """
    from graphoperators.guts.groupoid import (EMPTY, ForeignEdgeError,
                                              reduce, vertex_word)

    text = text.strip()
    if not text:
        raise LiteralSyntaxError("Empty word literal.")
    if text == NULL_LITERAL:
        return EMPTY
    if text.startswith('v:'):
        label = _label_in(text[2:])
        if not graph.has_vertex(label):
            raise ForeignEdgeError("Vertex {0!r} is not in the graph.".
                                   format(label))
        return vertex_word(label)

    return reduce(parse_steps(text), graph)


def parse_scalar(text):
    """
    Parse an exact complex scalar: "3", "-1/2", "2j", "1/2-3j", "0.25".

    Examples
    --------
    >>> from graphoperators.mio.words import parse_scalar
    >>> str(parse_scalar('1/2-3j')), str(parse_scalar('-j')), str(parse_scalar('7'))
    ('1/2-3j', '-1j', '7')

    """
    from graphoperators.guts.rationals import GaussianRational

    text = str(text).replace(' ', '')
    if not text:
        raise LiteralSyntaxError("Empty scalar literal.")
    try:
        if not text.endswith('j'):
            return GaussianRational(Fraction(text), 0)
        body = text[:-1]
        split = 0
        for i in range(len(body) - 1, 0, -1):
            if body[i] in '+-' and body[i - 1] not in 'eE':
                split = i
                break
        real, imag = body[:split], body[split:]
        if imag in ('', '+'):
            imag = '1'
        elif imag == '-':
            imag = '-1'
        return GaussianRational(Fraction(real) if real else 0, Fraction(imag))
    except (ValueError, ZeroDivisionError):
        raise LiteralSyntaxError("Cannot parse scalar {0!r}".format(text))


def format_element(a):
    """Return the JSON-ready list of {"word", "re", "im"} records."""
    return [{'word': format_word(w), 're': str(c.real), 'im': str(c.imag)}
            for w, c in a.items()]


def parse_element(text, graph):
    """
    Parse an algebra element from its JSON text.

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree
    >>> from graphoperators.mio.words import parse_element, format_element
    >>> g = build_regular_tree(1, 3)
    >>> T = parse_element('[{"word": "1>2", "re": "1/2", "im": "-1"}]', g)
    >>> format_element(T)
    [{'word': '1>2', 're': '1/2', 'im': '-1'}]

    """
    from graphoperators.guts.algebra import AlgebraElement
    from graphoperators.guts.groupoid import ForeignEdgeError
    from graphoperators.guts.rationals import GaussianRational

    try:
        records = json.loads(text)
    except ValueError as error:
        raise LiteralSyntaxError("Element is not valid JSON: {0}".format(
            error))
    if not isinstance(records, list):
        raise LiteralSyntaxError("Element JSON must be a list of terms.")

    terms = []
    for record in records:
        try:
            word = parse_word(record['word'], graph)
            value = GaussianRational(Fraction(str(record.get('re', '0'))),
                                     Fraction(str(record.get('im', '0'))))
        except (LiteralSyntaxError, ForeignEdgeError):
            raise
        except (KeyError, TypeError, ValueError, ZeroDivisionError):
            raise LiteralSyntaxError("Malformed term {0!r}".format(record))
        if word.is_empty:
            raise LiteralSyntaxError("Term {0!r} reduces to the empty word.".
                                     format(record['word']))
        terms.append((word, value))

    return AlgebraElement(graph, terms)


def read_element(input_file, graph):
    import os

    if not os.path.exists(input_file):
        raise IOError(input_file + " not found")
    with open(input_file) as f:
        return parse_element(f.read(), graph)


def write_element(a, output_file=None):
    """Serialize an algebra element as JSON text (and optionally save it)."""
    text = json.dumps(format_element(a), indent=2, ensure_ascii=False)
    if output_file:
        with open(output_file, 'w') as f:
            f.write(text + '\n')
    return text


def read_symbol(text):
    """
    Parse a Toeplitz symbol literal such as "t-1=3,t0=2,t1=1".

    Examples
    --------
    >>> from graphoperators.mio.words import read_symbol
    >>> sym = read_symbol('t-1=3, t0=2, t1=1/2+1j')
    >>> sym.n, sym.k, str(sym.coefficient(1))
    (1, 1, '1/2+1j')

    """
    from graphoperators.operators.tree_toeplitz import ToeplitzSymbol

    coeffs = {}
    for item in text.split(','):
        item = item.strip()
        if not item:
            continue
        match = _SYMBOL_ITEM.match(item.replace(' ', ''))
        if not match:
            raise LiteralSyntaxError("Cannot parse symbol term {0!r}".format(
                item))
        offset = int(match.group('offset'))
        if offset in coeffs:
            raise LiteralSyntaxError("Offset {0} given twice.".format(offset))
        coeffs[offset] = parse_scalar(match.group('value'))
    if not coeffs:
        raise LiteralSyntaxError("Empty symbol literal.")

    return ToeplitzSymbol(coeffs)


# ============================================================================
# Doctests
# ============================================================================
if __name__ == "__main__":
    import doctest
    doctest.testmod(verbose=True)  # py.test --doctest-modules
