#!/usr/bin/env python
"""
Verify the groupoid layer and its canonical representation.

Two suites:

    - groupoid-axioms: inverse laws of reduced words, confluence of the
      stack reduction against an all-orders rewriter, associativity of the
      partial product, and the *-algebra laws of random elements
    - representation-homomorphism: products, vertex projections, partial
      isometries and adjoints of L_w matrices on a truncated basis

Each suite returns a SuiteReport; a run is fully determined by its
parameters and seed.

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
import itertools
import logging

from graphoperators.guts.groupoid import (EMPTY, Truncation, enumerate_words,
                                          path_word, product, reduce, shadow,
                                          vertex_word)
from graphoperators.mio.tables import SuiteReport

LOG = logging.getLogger(__name__)

DEFAULT_SEED = 0


def describe_graph(graph):
    """
    Short, stable text naming a graph in report parameters.

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree
    >>> from graphoperators.evaluate.evaluate_groupoid import describe_graph
    >>> describe_graph(build_regular_tree(2, 3))
    'tree 2,3'

    """
    if graph.kind == 'regular_tree':
        return 'tree {0},{1}'.format(graph.n, graph.depth)
    return 'graph {0} vertices, {1} edges'.format(len(graph.vertices),
                                                 len(graph.edges))


def _text(w):
    from graphoperators.mio.words import format_word
    return format_word(w)


def brute_force_normal_forms(steps):
    """
    Every normal form reachable by cancelling adjacent e e^-1 pairs in any
    order.

    A sequence with a non-admissible adjacent pair is empty in every order.
    A confluent rewriting system gives exactly one normal form.

    Parameters
    ----------
    steps : sequence of Edge objects (non-empty)

    Returns
    -------
    forms : set of GroupoidWord objects

    Examples
    --------
    >>> from graphoperators.guts.graph import Edge
    >>> from graphoperators.evaluate.evaluate_groupoid import brute_force_normal_forms
    >>> e, f = Edge('1', '2'), Edge('2', '3')
    >>> forms = brute_force_normal_forms([e, f, f.inverse(), e.inverse(), e])
    >>> [w.steps for w in forms]
    [(Edge(source='1', target='2', tag=0, shadow=False),)]

    """
    steps = tuple(steps)
    for first, second in zip(steps, steps[1:]):
        if first.target != second.source:
            return {EMPTY}

    forms = set()
    seen = set()
    stack = [steps]
    while stack:
        s = stack.pop()
        if s in seen:
            continue
        seen.add(s)
        moves = [i for i in range(len(s) - 1) if s[i + 1] == s[i].inverse()]
        if not moves:
            forms.add(path_word(s) if s else vertex_word(steps[0].source))
        for i in moves:
            stack.append(s[:i] + s[i + 2:])

    return forms


def brute_force_reduce(steps):
    """Reduce by exhaustive rewriting; raise if the normal form is not unique."""
    forms = brute_force_normal_forms(steps)
    if len(forms) != 1:
        raise ValueError("Rewriting is not confluent: {0} normal forms".
                         format(len(forms)))
    return forms.pop()


def admissible_walks(graph, length):
    """All step sequences of the given length with matching endpoints."""
    walks = [(step,) for v in graph.vertices for step in graph.out_steps(v)]
    for _ in range(length - 1):
        walks = [walk + (step,) for walk in walks
                 for step in graph.out_steps(walk[-1].target)]
    return walks


def check_inverse_laws(graph, words, report):
    """w w^-1 = source(w), w^-1 w = range(w), and (w^-1)^-1 = w."""
    for i, w in enumerate(words):
        if w.is_vertex:
            ok = product(w, w) == w and shadow(w) == w
            expected = got = _text(w)
        else:
            left = product(w, shadow(w))
            right = product(shadow(w), w)
            ok = (left == vertex_word(w.source) and
                  right == vertex_word(w.range) and shadow(shadow(w)) == w)
            expected = '{0} | {1}'.format(w.source, w.range)
            got = '{0} | {1}'.format(_text(left), _text(right))
        report.record('inverse-{0:05d}'.format(i), ok, expected, got)


def check_confluence(graph, report, rng, max_walk=6, cases=100):
    """
    Compare reduce() with the all-orders rewriter on every sequence of
    length <= 2, every admissible walk of length 3..max_walk, and a sample
    of arbitrary sequences.
    """
    from graphoperators.guts.utilities import all_steps, random_steps

    steps = all_steps(graph)
    sequences = []
    for length in (1, 2):
        sequences.extend(itertools.product(steps, repeat=length))
    for length in range(3, max_walk + 1):
        sequences.extend(admissible_walks(graph, length))
    for _ in range(cases):
        length = int(rng.randint(3, max_walk + 1))
        sequences.append(tuple(random_steps(steps, rng, length)))
    LOG.info('Checking confluence on {0} step sequences'.format(
        len(sequences)))

    for i, sequence in enumerate(sequences):
        forms = brute_force_normal_forms(sequence)
        got = reduce(sequence, graph)
        ok = forms == {got}
        expected = ' | '.join(sorted(_text(w) for w in forms))
        report.record('confluence-{0:06d}'.format(i), ok, expected,
                      _text(got))


def check_associativity(graph, words, report, rng, cases=100):
    """(a b) c = a (b c) on all admissible triples and on random triples."""
    by_source = {}
    for w in words:
        by_source.setdefault(w.source, []).append(w)

    triples = [(a, b, c) for a in words for b in by_source[a.range]
               for c in by_source[b.range]]
    pool = list(words) + [EMPTY]
    for _ in range(cases):
        triples.append(tuple(pool[j] for j in
                             rng.randint(0, len(pool), size=3)))

    for i, (a, b, c) in enumerate(triples):
        first = product(product(a, b), c)
        second = product(a, product(b, c))
        report.record('associativity-{0:06d}'.format(i), first == second,
                      _text(first), _text(second))


def _brute_force_multiply(a, b):
    from graphoperators.guts.algebra import AlgebraElement

    terms = []
    for u, s in a.terms.items():
        for w, t in b.terms.items():
            p = product(u, w)
            if not p.is_empty:
                terms.append((p, s * t))
    return AlgebraElement(a.graph, terms)


def check_algebra_laws(graph, words, report, rng, cases=100):
    """
    *-algebra laws of random elements with exact coefficients, and the
    conditional expectation and inner product.
    """
    from graphoperators.guts.algebra import (DiagonalElement, adjoint,
                                             expectation, inner_product,
                                             multiply, word_element)
    from graphoperators.guts.rationals import ZERO
    from graphoperators.guts.utilities import random_element, random_scalar

    vertices = [w for w in words if w.is_vertex]
    for i in range(cases):
        a, b, c = [random_element(graph, words, rng) for _ in range(3)]
        z = random_scalar(rng)
        d1 = DiagonalElement(graph, [(vertices[int(rng.randint(len(vertices)))],
                                      random_scalar(rng))])
        d2 = DiagonalElement(graph, [(vertices[int(rng.randint(len(vertices)))],
                                      random_scalar(rng))])
        ab = multiply(a, b)
        a_star_b = multiply(adjoint(a), b)
        vertex_sum = ZERO
        for w, t in expectation(a_star_b).terms.items():
            vertex_sum = vertex_sum + t
        laws = [
            ('multiply', ab == _brute_force_multiply(a, b)),
            ('associative', multiply(ab, c) == multiply(a, multiply(b, c))),
            ('distributive', multiply(a, b + c) == ab + multiply(a, c)),
            ('scalar', multiply(a * z, b) == ab * z),
            ('involution', adjoint(adjoint(a)) == a),
            ('anti-multiplicative',
             adjoint(ab) == multiply(adjoint(b), adjoint(a))),
            ('conjugate-linear', adjoint(a * z) == adjoint(a) * z.conjugate()),
            ('expectation-idempotent',
             expectation(expectation(a)) == expectation(a)),
            ('expectation-bimodule',
             expectation(multiply(multiply(d1, a), d2)) ==
             multiply(multiply(d1, expectation(a)), d2)),
            ('inner-product', inner_product(a, b) == vertex_sum),
        ]
        for name, ok in laws:
            report.record('algebra-{0:04d}-{1}'.format(i, name), ok)

    # Orthonormality of the word basis.
    for i, (u, w) in enumerate(itertools.product(words[:20], repeat=2)):
        value = inner_product(word_element(graph, u), word_element(graph, w))
        expected = 1 if u == w else 0
        report.record('orthonormal-{0:04d}'.format(i), value == expected,
                      expected, str(value))


def groupoid_axioms(graph=None, maxlen=3, seed=DEFAULT_SEED, cases=100,
                    max_walk=6):
    """
    Run the groupoid-axioms suite.

    Parameters
    ----------
    graph : DirectedGraph or None
        graph to check; by default the 2-regular tree of depth 3 and the
        loop/multi-edge fixture
    maxlen : integer
        longest enumerated word for the inverse laws
    seed : integer
        seed of the random samples
    cases : integer
        number of random samples per check
    max_walk : integer
        longest admissible walk given to the confluence check

    Returns
    -------
    report : SuiteReport

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree
    >>> from graphoperators.evaluate.evaluate_groupoid import groupoid_axioms
    >>> report = groupoid_axioms(build_regular_tree(2, 1), maxlen=2,
    ...                          cases=5, max_walk=3)
    >>> report.passed, report.params['graphs']
    (True, ['tree 2,1'])

    """
    from graphoperators.data.data import fixture_graph
    from graphoperators.guts.graph import build_regular_tree
    from graphoperators.guts.utilities import random_state

    if graph is None:
        graphs = [build_regular_tree(2, 3), fixture_graph()]
    else:
        graphs = [graph]

    report = SuiteReport('groupoid-axioms',
                         {'graphs': [describe_graph(g) for g in graphs],
                          'maxlen': maxlen, 'seed': seed, 'cases': cases,
                          'max_walk': max_walk})
    rng = random_state(seed)
    for g in graphs:
        words = enumerate_words(Truncation(g, maxlen))
        short = enumerate_words(Truncation(g, min(maxlen, 2)))
        check_inverse_laws(g, words, report)
        check_confluence(g, report, rng, max_walk, cases)
        check_associativity(g, short, report, rng, cases)
        check_algebra_laws(g, short, report, rng, cases)

    LOG.info('groupoid-axioms: {0} cases, {1} failures'.format(
        report.cases, len(report.failures)))

    return report


def check_products(words, matrices, basis, report):
    """L_a L_b = L_(ab) on columns at least |a| + |b| from the boundary."""
    from graphoperators.guts.representation import (interior_equal,
                                                    matrix_of_word)

    by_source = {}
    for w in words:
        by_source.setdefault(w.source, []).append(w)

    i = 0
    for a in words:
        for b in by_source[a.range]:
            ab = product(a, b)
            equal, details = interior_equal(
                matrices[a].dot(matrices[b]), matrix_of_word(ab, basis),
                basis, a.length + b.length)
            report.record('product-{0:06d}'.format(i), equal,
                          _text(ab), details.get('worst_word'),
                          details['max_deviation'])
            i += 1


def check_vertex_projections(graph, basis, report):
    """L_v L_v' = delta L_v, each L_v a projection, and sum L_v = 1."""
    from scipy.sparse import csr_matrix

    from graphoperators.guts.representation import (identity_matrix,
                                                    interior_equal,
                                                    is_projection,
                                                    matrix_of_word)

    n = len(basis)
    vertex = dict((v, matrix_of_word(vertex_word(v), basis))
                  for v in graph.vertices)
    for i, (v, u) in enumerate(itertools.product(graph.vertices, repeat=2)):
        expected = vertex[v] if v == u else csr_matrix((n, n), dtype=complex)
        equal, details = interior_equal(vertex[v].dot(vertex[u]), expected,
                                        basis, 0)
        report.record('vertex-pair-{0:05d}'.format(i), equal,
                      deviation=details['max_deviation'])
    for i, v in enumerate(graph.vertices):
        report.record('projection-{0:04d}'.format(i),
                      is_projection(vertex[v], basis), _text(vertex_word(v)))

    total = csr_matrix((n, n), dtype=complex)
    for m in vertex.values():
        total = total + m
    equal, details = interior_equal(total, identity_matrix(n), basis, 0)
    report.record('vertex-sum', equal, deviation=details['max_deviation'])


def check_non_admissible(words, matrices, basis, report, rng, cases=100):
    """L_a L_b = 0 when range(a) != source(b)."""
    from scipy.sparse import csr_matrix

    from graphoperators.guts.representation import interior_equal

    n = len(basis)
    zero = csr_matrix((n, n), dtype=complex)
    checked = 0
    for _ in range(cases * 10):
        if checked == cases:
            break
        a, b = [words[j] for j in rng.randint(0, len(words), size=2)]
        if a.range == b.source:
            continue
        equal, details = interior_equal(matrices[a].dot(matrices[b]), zero,
                                        basis, 0)
        report.record('non-admissible-{0:04d}'.format(checked), equal,
                      deviation=details['max_deviation'])
        checked += 1


def check_partial_isometries(words, matrices, basis, report):
    """L_w L_w* L_w = L_w and L_(w^-1) = L_w* on interior columns."""
    from graphoperators.guts.representation import (interior_equal,
                                                    is_partial_isometry,
                                                    matrix_of_word)

    for i, w in enumerate(words):
        if not w.is_path:
            continue
        report.record('partial-isometry-{0:05d}'.format(i),
                      is_partial_isometry(matrices[w], basis, w.length),
                      _text(w))
        equal, details = interior_equal(matrix_of_word(shadow(w), basis),
                                        matrices[w].conj().T, basis, w.length)
        report.record('adjoint-{0:05d}'.format(i), equal, _text(shadow(w)),
                      details.get('worst_word'), details['max_deviation'])


def check_element_homomorphism(graph, words, basis, report, rng, cases=20):
    """Matrices of random elements multiply and adjoin like the elements."""
    from graphoperators.guts.algebra import adjoint, multiply
    from graphoperators.guts.representation import (interior_equal,
                                                    matrix_of_element)
    from graphoperators.guts.utilities import random_element

    for i in range(cases):
        a = random_element(graph, words, rng)
        b = random_element(graph, words, rng)
        span_a = max(w.length for w in a.support())
        span_b = max(w.length for w in b.support())
        ma = matrix_of_element(a, basis)
        mb = matrix_of_element(b, basis)
        equal, details = interior_equal(matrix_of_element(multiply(a, b), basis),
                                        ma.dot(mb), basis, span_a + span_b)
        report.record('element-product-{0:04d}'.format(i), equal,
                      deviation=details['max_deviation'])
        equal, details = interior_equal(matrix_of_element(adjoint(a), basis),
                                        ma.conj().T, basis, span_a)
        report.record('element-adjoint-{0:04d}'.format(i), equal,
                      deviation=details['max_deviation'])


def representation_homomorphism(graph=None, maxlen=3, seed=DEFAULT_SEED,
                                cases=20):
    """
    Run the representation-homomorphism suite.

    Words of length <= maxlen act on the basis of all words of length
    <= 2 * maxlen, so every product of two of them is exact on the vertex
    columns at least.

    Parameters
    ----------
    graph : DirectedGraph or None
        by default the 2-regular tree of depth 4 (maxlen 3) and the
        loop/multi-edge fixture (maxlen 2)
    maxlen : integer
    seed : integer
    cases : integer
        random pairs for the non-admissible and element checks

    Returns
    -------
    report : SuiteReport

    Examples
    --------
    >>> from graphoperators.guts.graph import build_regular_tree
    >>> from graphoperators.evaluate.evaluate_groupoid import representation_homomorphism
    >>> report = representation_homomorphism(build_regular_tree(2, 2), maxlen=2,
    ...                                      cases=3)
    >>> report.passed, report.max_error < 1e-12
    (True, True)

    """
    from graphoperators.data.data import fixture_graph
    from graphoperators.guts.graph import build_regular_tree
    from graphoperators.guts.representation import BasisIndex, matrix_of_word
    from graphoperators.guts.utilities import random_state

    if graph is None:
        runs = [(build_regular_tree(2, 4), maxlen), (fixture_graph(), 2)]
    else:
        runs = [(graph, maxlen)]

    report = SuiteReport('representation-homomorphism',
                         {'graphs': [describe_graph(g) for g, k in runs],
                          'maxlen': [k for g, k in runs], 'seed': seed,
                          'cases': cases})
    rng = random_state(seed)
    for g, k in runs:
        words = enumerate_words(Truncation(g, k))
        basis = BasisIndex.from_truncation(Truncation(g, 2 * k))
        matrices = dict((w, matrix_of_word(w, basis)) for w in words)
        check_products(words, matrices, basis, report)
        check_vertex_projections(g, basis, report)
        check_non_admissible(words, matrices, basis, report, rng, cases)
        check_partial_isometries(words, matrices, basis, report)
        check_element_homomorphism(g, words, basis, report, rng, cases)

    LOG.info('representation-homomorphism: {0} cases, {1} failures'.format(
        report.cases, len(report.failures)))

    return report


# ============================================================================
# Doctests
# ============================================================================
if __name__ == "__main__":
    import doctest
    doctest.testmod(verbose=True)  # py.test --doctest-modules
