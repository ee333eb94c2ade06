#!/usr/bin/env python
"""
Verify Toeplitz operators as 1-regular tree operators.

Two suites:

    - toeplitz-embed: band structure of T(+k) and T(-k) and agreement of the
      groupoid-built elements with their band matrices
    - toeplitz-rewrite: random banded Toeplitz matrices against the
      matrices of their rewritten tree operator combinations

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
import logging

from graphoperators.mio.tables import SuiteReport

LOG = logging.getLogger(__name__)

DEFAULT_SEED = 0


def line_basis(m):
    """
    Vertex basis of the line with m vertices; vertex j sits m - j steps
    from the truncation boundary.

    Examples
    --------
    >>> from graphoperators.evaluate.evaluate_toeplitz import line_basis
    >>> line_basis(4).boundary_distance.tolist()
    [3, 2, 1, 0]

    """
    from graphoperators.guts.graph import build_regular_tree
    from graphoperators.guts.groupoid import Truncation
    from graphoperators.guts.representation import BasisIndex

    t = Truncation(build_regular_tree(1, m - 1), 0)
    return BasisIndex.from_truncation(t).vertex_space()


def check_band_powers(m, max_band, report):
    """(T(+1) - 1)^k = T(+k) - 1 and T(-k) = T(+k)* on interior columns."""
    from graphoperators.guts.representation import (identity_matrix,
                                                    interior_equal)
    from graphoperators.operators.tree_toeplitz import (t_minus_matrix,
                                                        t_plus_matrix)

    basis = line_basis(m)
    unit = identity_matrix(m)
    shift = t_plus_matrix(1, m) - unit
    power = unit
    for k in range(1, max_band + 1):
        power = power.dot(shift)
        equal, details = interior_equal(power, t_plus_matrix(k, m) - unit,
                                        basis, k)
        report.record('band-power-{0}'.format(k), equal,
                      deviation=details['max_deviation'])

        equal, details = interior_equal(t_minus_matrix(k, m),
                                        t_plus_matrix(k, m).conj().T, basis, 0)
        report.record('band-adjoint-{0}'.format(k), equal,
                      deviation=details['max_deviation'])


def check_groupoid_bands(depth, max_path, report):
    """
    The vertex representation of T(+k) and T(-k) built from groupoid words
    matches t_plus_matrix / t_minus_matrix, and the literal vertex block
    of the same matrices is the diagonal part E(T).
    """
    from graphoperators.guts.algebra import expectation
    from graphoperators.guts.graph import build_regular_tree
    from graphoperators.guts.groupoid import Truncation
    from graphoperators.guts.representation import (BasisIndex,
                                                    compress_to_vertex_space,
                                                    interior_equal,
                                                    matrix_of_element)
    from graphoperators.operators.tree_toeplitz import (alpha_matrix,
                                                        build_tminus_element,
                                                        build_tplus_element,
                                                        t_minus_matrix,
                                                        t_plus_matrix)

    t = Truncation(build_regular_tree(1, depth), max_path)
    basis = BasisIndex.from_truncation(t)
    vertex_basis = basis.vertex_space()
    m = depth + 1
    builders = [('plus', build_tplus_element, t_plus_matrix),
                ('minus', build_tminus_element, t_minus_matrix)]
    for k in range(1, max_path + 1):
        for name, build, band in builders:
            element = build(k, t)
            matrix = matrix_of_element(element, basis)
            equal, details = interior_equal(alpha_matrix(matrix, basis),
                                            band(k, m), vertex_basis, k)
            report.record('alpha-{0}-{1}'.format(name, k), equal,
                          deviation=details['max_deviation'])

            block = compress_to_vertex_space(matrix, basis)
            diagonal = compress_to_vertex_space(
                matrix_of_element(expectation(element), basis), basis)
            equal, details = interior_equal(block, diagonal, vertex_basis, 0)
            report.record('vertex-block-{0}-{1}'.format(name, k), equal,
                          deviation=details['max_deviation'])


def toeplitz_embed(size=64, max_band=8, depth=16, max_path=3):
    """
    Run the toeplitz-embed suite.

    Parameters
    ----------
    size : integer
        number of vertices for the band-power law
    max_band : integer
        largest band offset k
    depth : integer
        depth of the 1-regular tree for the groupoid comparison
    max_path : integer
        longest path element T(+k) compared with its band matrix

    Returns
    -------
    report : SuiteReport

    Examples
    --------
    >>> from graphoperators.evaluate.evaluate_toeplitz import toeplitz_embed
    >>> report = toeplitz_embed(size=12, max_band=3, depth=6, max_path=2)
    >>> report.passed, report.cases
    (True, 14)

    """
    report = SuiteReport('toeplitz-embed',
                         {'size': size, 'max_band': max_band, 'depth': depth,
                          'max_path': max_path})
    check_band_powers(size, max_band, report)
    check_groupoid_bands(depth, max_path, report)

    LOG.info('toeplitz-embed: {0} cases, {1} failures'.format(
        report.cases, len(report.failures)))

    return report


def check_rewrite(sym, size, report, case, element_check=False):
    """
    Compare one banded Toeplitz matrix with its rewritten combination.

    The unit coefficient must equal t_0 minus the off-diagonal coefficients
    exactly; the band matrix of the combination must match on columns
    n + k away from the boundary.  With element_check the combination is
    also built as an algebra element on the 1-regular tree and read back
    through its vertex representation.
    """
    from graphoperators.guts.graph import build_regular_tree
    from graphoperators.guts.groupoid import Truncation
    from graphoperators.guts.representation import (BasisIndex,
                                                    interior_equal,
                                                    matrix_of_element)
    from graphoperators.operators.tree_toeplitz import (alpha_matrix,
                                                        banded_toeplitz_matrix,
                                                        combo_element,
                                                        combo_matrix,
                                                        toeplitz_rewrite)

    combo = toeplitz_rewrite(sym)
    expected_unit = sym.coefficient(0)
    for p in range(-sym.n, sym.k + 1):
        if p:
            expected_unit = expected_unit - sym.coefficient(p)
    report.record('{0}-unit'.format(case), combo.unit == expected_unit,
                  str(expected_unit), str(combo.unit))

    basis = line_basis(size)
    margin = sym.n + sym.k
    banded = banded_toeplitz_matrix(sym, size)
    equal, details = interior_equal(combo_matrix(combo, size), banded, basis,
                                    margin)
    report.record('{0}-band'.format(case), equal, repr(sym),
                  details.get('worst_word'), details['max_deviation'])

    if element_check:
        t = Truncation(build_regular_tree(1, size - 1), max(1, sym.n, sym.k))
        full = BasisIndex.from_truncation(t)
        alpha = alpha_matrix(matrix_of_element(combo_element(combo, t), full),
                             full)
        equal, details = interior_equal(alpha, banded, basis, margin)
        report.record('{0}-element'.format(case), equal, repr(sym),
                      details.get('worst_word'), details['max_deviation'])


def toeplitz_rewrite(size=64, cases=100, seed=DEFAULT_SEED, max_width=5,
                     element_cases=10):
    """
    Run the toeplitz-rewrite suite on seeded random symbols.

    Parameters
    ----------
    size : integer
        matrix size m
    cases : integer
        number of random symbols
    seed : integer
    max_width : integer
        largest band width n and k of a random symbol
    element_cases : integer
        how many of the symbols are also rebuilt as algebra elements

    Returns
    -------
    report : SuiteReport

    Examples
    --------
    >>> from graphoperators.evaluate.evaluate_toeplitz import toeplitz_rewrite
    >>> report = toeplitz_rewrite(size=16, cases=4, element_cases=1)
    >>> report.passed, report.cases
    (True, 9)

    """
    from graphoperators.guts.utilities import random_state, random_symbol

    report = SuiteReport('toeplitz-rewrite',
                         {'size': size, 'cases': cases, 'seed': seed,
                          'max_width': max_width,
                          'element_cases': element_cases})
    if size <= 2 * max_width:
        raise ValueError("Size {0} must exceed twice the band width {1}".
                         format(size, max_width))

    rng = random_state(seed)
    for i in range(cases):
        sym = random_symbol(rng, max_width)
        check_rewrite(sym, size, report, 'symbol-{0:04d}'.format(i),
                      element_check=i < element_cases)

    LOG.info('toeplitz-rewrite: {0} cases, {1} failures'.format(
        report.cases, len(report.failures)))

    return report


# ============================================================================
# Doctests
# ============================================================================
if __name__ == "__main__":
    import doctest
    doctest.testmod(verbose=True)  # py.test --doctest-modules
