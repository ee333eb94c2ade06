#!/usr/bin/env python
"""
Verify the Fock space operators and the tree <-> Fock correspondence.

Three suites:

    - fock-relations: l_h1* l_h2 and r_h1* r_h2 act as scalars
    - anti-iso: the left -> right word map reverses products and commutes
      with adjoints
    - tree-fock-correspondence: the N-regular tree operators R_j and their
      products match right creation / annihilation operators

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
import itertools
import logging

import numpy as np

from graphoperators.mio.tables import SuiteReport

LOG = logging.getLogger(__name__)

DEFAULT_SEED = 0


def _scalar_matrix(value, basis):
    from graphoperators.guts.representation import identity_matrix
    return value * identity_matrix(len(basis))


def fock_relations(ns=(2, 3), depth=6, cases=50, seed=DEFAULT_SEED):
    """
    Run the fock-relations suite.

    For random complex h1, h2 both l_h1* l_h2 and r_h1* r_h2 equal
    vdot(h1, h2) times the identity on every word of degree <= depth - 1.
    Each relation is checked twice: as a product of sparse generator
    matrices and by applying the operators to every basis vector.

    Parameters
    ----------
    ns : sequence of integers
        one-particle dimensions
    depth : integer
        degree cap
    cases : integer
        random vector pairs per dimension
    seed : integer

    Returns
    -------
    report : SuiteReport

    Examples
    --------
    >>> from graphoperators.evaluate.evaluate_fock import fock_relations
    >>> report = fock_relations(ns=(2,), depth=3, cases=2)
    >>> report.passed, report.cases
    (True, 8)

    """
    from graphoperators.guts.representation import interior_equal
    from graphoperators.guts.utilities import random_state, random_vector
    from graphoperators.operators.fock import (FockOperatorWord, FockVector,
                                               apply_operator_word, fock_basis,
                                               left, operator_matrix, right)

    report = SuiteReport('fock-relations', {'n': list(ns), 'depth': depth,
                                            'cases': cases, 'seed': seed})
    rng = random_state(seed)
    for n in ns:
        basis = fock_basis(n, depth)
        interior = [basis.words[i] for i in basis.interior_columns(1)]
        for i in range(cases):
            h1 = random_vector(rng, n)
            h2 = random_vector(rng, n)
            value = complex(np.vdot(h1, h2))
            for name, side in (('left', left), ('right', right)):
                ow = FockOperatorWord([side(h1, True), side(h2)])
                case = 'n{0}-{1:04d}-{2}'.format(n, i, name)
                equal, details = interior_equal(
                    operator_matrix(ow, basis), _scalar_matrix(value, basis),
                    basis, 1)
                report.record(case, equal, value, details.get('worst_word'),
                              details['max_deviation'])

                worst = 0.0
                for word in interior:
                    v = FockVector.basis_vector(word, n, depth)
                    image = apply_operator_word(ow, v)
                    worst = max(worst, max([abs(c) for c in
                                            (image - v * value).terms.values()]
                                           + [0.0]))
                report.record(case + '-vectors', worst <= 1e-12, value,
                              deviation=worst)

    LOG.info('fock-relations: {0} cases, {1} failures'.format(
        report.cases, len(report.failures)))

    return report


def anti_iso(n=2, depth=8, cases=200, seed=DEFAULT_SEED, max_length=4,
             margin=8):
    """
    Run the anti-iso suite.

    For random left operator words ow1, ow2 of length <= max_length:

        - phi(ow1 ow2) acts as phi(ow2) phi(ow1)
        - phi(ow1*) = phi(ow1)* as words, and as matrices
        - phi_inverse(phi(ow1)) = ow1

    Matrix comparisons use columns at least `margin` steps from the degree
    cap.

    Returns
    -------
    report : SuiteReport

    Examples
    --------
    >>> from graphoperators.evaluate.evaluate_fock import anti_iso
    >>> report = anti_iso(depth=4, cases=3, margin=4)
    >>> report.passed, report.cases
    (True, 12)

    """
    from graphoperators.guts.representation import interior_equal
    from graphoperators.guts.utilities import random_left_word, random_state
    from graphoperators.operators.fock import (fock_basis, operator_matrix,
                                               phi_inverse, phi_map)

    report = SuiteReport('anti-iso', {'n': n, 'depth': depth, 'cases': cases,
                                      'seed': seed, 'max_length': max_length,
                                      'margin': margin})
    rng = random_state(seed)
    basis = fock_basis(n, depth)
    for i in range(cases):
        ow1 = random_left_word(rng, n, int(rng.randint(1, max_length + 1)))
        ow2 = random_left_word(rng, n, int(rng.randint(1, max_length + 1)))
        case = 'word-{0:04d}'.format(i)

        m1 = operator_matrix(phi_map(ow1), basis)
        m2 = operator_matrix(phi_map(ow2), basis)
        equal, details = interior_equal(operator_matrix(phi_map(ow1 * ow2),
                                                        basis),
                                        m2.dot(m1), basis, margin)
        report.record(case + '-product', equal, repr(ow1 * ow2),
                      details.get('worst_word'), details['max_deviation'])

        report.record(case + '-adjoint-word',
                      phi_map(ow1.adjoint()) == phi_map(ow1).adjoint(),
                      repr(phi_map(ow1).adjoint()),
                      repr(phi_map(ow1.adjoint())))
        equal, details = interior_equal(
            operator_matrix(phi_map(ow1.adjoint()), basis), m1.conj().T,
            basis, margin)
        report.record(case + '-adjoint-matrix', equal,
                      deviation=details['max_deviation'])

        report.record(case + '-inverse', phi_inverse(phi_map(ow1)) == ow1,
                      repr(ow1), repr(phi_inverse(phi_map(ow1))))

    LOG.info('anti-iso: {0} cases, {1} failures'.format(
        report.cases, len(report.failures)))

    return report


def _tree_setting(n, depth, max_path):
    from graphoperators.guts.graph import build_regular_tree
    from graphoperators.guts.groupoid import Truncation
    from graphoperators.guts.representation import BasisIndex
    from graphoperators.operators.fock import (fock_basis,
                                               vertex_fock_bijection)

    t = Truncation(build_regular_tree(n, depth), max_path)
    basis = BasisIndex.from_truncation(t)
    return (t, basis, basis.vertex_space(), fock_basis(n, depth),
            vertex_fock_bijection(n, depth))


def check_generators(n, depth, report):
    """R_j and R_j* against r_ej and r_ej* on the whole Fock basis."""
    from graphoperators.guts.algebra import adjoint
    from graphoperators.guts.representation import (interior_equal,
                                                    matrix_of_element)
    from graphoperators.operators.fock import (basis_letter, build_rj_element,
                                               generator_matrix,
                                               reindex_to_fock, right,
                                               tree_action_matrix)

    t, basis, vertex_basis, fock, bijection = _tree_setting(n, depth, 1)
    for j in range(1, n + 1):
        rj = build_rj_element(j, t)
        for starred, element in ((False, rj), (True, adjoint(rj))):
            action = tree_action_matrix(matrix_of_element(element, basis),
                                        basis)
            pushed = reindex_to_fock(action, vertex_basis, fock, bijection)
            target = generator_matrix(right(basis_letter(j, n), starred), fock)
            equal, details = interior_equal(pushed, target, fock, 0)
            report.record('n{0}-R{1}{2}'.format(n, j, '*' if starred else ''),
                          equal, deviation=details['max_deviation'])


def check_products(n, depth, max_product, report):
    """
    Products of R_j^(*) against products of r_ej^(*).

    The matrix product of the tree actions runs in the same order as the
    Fock operator word; the action of the algebra product runs in the
    reverse order.
    """
    from graphoperators.guts.algebra import adjoint, multiply
    from graphoperators.guts.representation import (identity_matrix,
                                                    interior_equal,
                                                    matrix_of_element)
    from graphoperators.operators.fock import (FockOperatorWord, basis_letter,
                                               build_rj_element,
                                               operator_matrix,
                                               reindex_to_fock, right,
                                               tree_action_matrix)

    t, basis, vertex_basis, fock, bijection = _tree_setting(n, depth,
                                                            max_product)
    factors = {}
    actions = {}
    for j in range(1, n + 1):
        rj = build_rj_element(j, t)
        for starred, element in ((False, rj), (True, adjoint(rj))):
            factors[(j, starred)] = element
            actions[(j, starred)] = reindex_to_fock(
                tree_action_matrix(matrix_of_element(element, basis), basis),
                vertex_basis, fock, bijection)

    letters = sorted(factors)
    for k in range(1, max_product + 1):
        for sequence in itertools.product(letters, repeat=k):
            name = 'n{0}-'.format(n) + '.'.join(
                'R{0}{1}'.format(j, '*' if s else '') for j, s in sequence)
            word = FockOperatorWord([right(basis_letter(j, n), s)
                                     for j, s in sequence])
            target = operator_matrix(word, fock)

            composed = identity_matrix(len(fock))
            for key in sequence:
                composed = composed.dot(actions[key])
            equal, details = interior_equal(composed, target, fock, k)
            report.record(name + '-composed', equal,
                          deviation=details['max_deviation'])

            element = factors[sequence[0]]
            for key in sequence[1:]:
                element = multiply(element, factors[key])
            action = reindex_to_fock(
                tree_action_matrix(matrix_of_element(element, basis), basis),
                vertex_basis, fock, bijection)
            reverse = operator_matrix(FockOperatorWord(
                reversed(word.generators)), fock)
            equal, details = interior_equal(action, reverse, fock, k)
            report.record(name + '-reversed', equal,
                          deviation=details['max_deviation'])


def check_restriction(n, depth, report):
    """
    Each edge operator L_(W, Wj), moved to the Fock space, is r_ej
    restricted to the single basis word W.
    """
    from scipy.sparse import coo_matrix

    from graphoperators.guts.groupoid import path_word
    from graphoperators.guts.representation import (interior_equal,
                                                    matrix_of_word, prune)
    from graphoperators.operators.fock import (FockVector, basis_letter,
                                               reindex_to_fock, right_create,
                                               tree_action_matrix)

    t, basis, vertex_basis, fock, bijection = _tree_setting(n, depth, 1)
    size = len(fock)
    for i, edge in enumerate(t.graph.edges):
        j = int(edge.target[-1])
        pushed = reindex_to_fock(
            tree_action_matrix(matrix_of_word(path_word([edge]), basis),
                               basis), vertex_basis, fock, bijection)

        word = bijection.to_fock[edge.source]
        image = right_create(basis_letter(j, n),
                             FockVector.basis_vector(word, n, depth))
        rows = [fock.index[w] for w in image.terms]
        restricted = prune(coo_matrix(
            (np.asarray(list(image.terms.values()), dtype=complex),
             (rows, [fock.index[word]] * len(rows))), shape=(size, size)))
        equal, details = interior_equal(pushed, restricted, fock, 0)
        report.record('n{0}-edge-{1:04d}'.format(n, i), equal,
                      deviation=details['max_deviation'])


def tree_fock_correspondence(ns=(2, 3), depth=5, max_product=3,
                             restriction_depth=4):
    """
    Run the tree-fock-correspondence suite.

    Parameters
    ----------
    ns : sequence of integers >= 2
        branching factors
    depth : integer
        tree depth and Fock degree cap
    max_product : integer
        longest product of R_j / R_j* checked
    restriction_depth : integer
        tree depth for the edge-by-edge restriction check

    Returns
    -------
    report : SuiteReport

    Examples
    --------
    >>> from graphoperators.evaluate.evaluate_fock import tree_fock_correspondence
    >>> report = tree_fock_correspondence(ns=(2,), depth=3, max_product=1,
    ...                                   restriction_depth=2)
    >>> report.passed, report.cases
    (True, 18)

    """
    report = SuiteReport('tree-fock-correspondence',
                         {'n': list(ns), 'depth': depth,
                          'max_product': max_product,
                          'restriction_depth': restriction_depth})
    for n in ns:
        check_generators(n, depth, report)
        check_products(n, depth, max_product, report)
        check_restriction(n, restriction_depth, report)

    LOG.info('tree-fock-correspondence: {0} cases, {1} failures'.format(
        report.cases, len(report.failures)))

    return report


# ============================================================================
# Doctests
# ============================================================================
if __name__ == "__main__":
    import doctest
    doctest.testmod(verbose=True)  # py.test --doctest-modules
