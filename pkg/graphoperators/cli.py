#!/usr/bin/env python
"""
Command-line front end.

Subcommands::

    graphoperators reduce --tree 1,8 "1>2;2<1"
    graphoperators matrix --tree 1,16 --tplus 1 --vertex-block
    graphoperators verify toeplitz-rewrite --size 64 --cases 100 --seed 7
    graphoperators verify all --jobs 4 --table summary.csv
    graphoperators toeplitz rewrite --symbol "t-1=3,t0=2,t1=1" --verify
    graphoperators fock verify --n 2 --depth 5 --suite relations
    graphoperators graph --tree 2,3

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 data error (foreign word or edge, missing file).

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
import argparse
import json
import logging
import sys
import time

from graphoperators.evaluate.evaluate_fock import (anti_iso, fock_relations,
                                                   tree_fock_correspondence)
from graphoperators.evaluate.evaluate_groupoid import (
    groupoid_axioms, representation_homomorphism)
from graphoperators.evaluate.evaluate_toeplitz import (toeplitz_embed,
                                                       toeplitz_rewrite)
from graphoperators.guts.groupoid import ForeignEdgeError

LOG = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DATA = 3

DEFAULT_SEED = 0

# Suite name -> (function, command-line option -> keyword argument).
SUITES = {
    'groupoid-axioms': (groupoid_axioms,
                        {'graph': 'graph', 'maxlen': 'maxlen',
                         'seed': 'seed', 'cases': 'cases'}),
    'representation-homomorphism': (representation_homomorphism,
                                    {'graph': 'graph', 'maxlen': 'maxlen',
                                     'seed': 'seed', 'cases': 'cases'}),
    'toeplitz-embed': (toeplitz_embed,
                       {'size': 'size', 'depth': 'depth',
                        'maxlen': 'max_path'}),
    'toeplitz-rewrite': (toeplitz_rewrite,
                         {'size': 'size', 'cases': 'cases', 'seed': 'seed'}),
    'fock-relations': (fock_relations,
                       {'n': 'ns', 'depth': 'depth', 'cases': 'cases',
                        'seed': 'seed'}),
    'anti-iso': (anti_iso,
                 {'n': 'n', 'depth': 'depth', 'cases': 'cases',
                  'seed': 'seed'}),
    'tree-fock-correspondence': (tree_fock_correspondence,
                                 {'n': 'ns', 'depth': 'depth'}),
}

FOCK_SUITES = {'relations': 'fock-relations',
               'anti-iso': 'anti-iso',
               'correspondence': 'tree-fock-correspondence'}


def load_graph(tree=None, graph_file=None):
    """Build the graph named by --tree N,DEPTH or read it from --graph."""
    from graphoperators.mio.graphs import parse_tree_spec, read_graph

    if tree is not None and graph_file is not None:
        raise ValueError("Give either --tree or --graph, not both.")
    if tree is not None:
        return parse_tree_spec(tree)
    if graph_file is not None:
        return read_graph(graph_file)
    return None


def suite_params(name, ns):
    """
    Collect the command-line options a suite understands.

    Returns
    -------
    params : dict
        plain values only, so that the dict can be sent to a worker process

    """
    options = SUITES[name][1]
    params = {}
    for option in options:
        if option == 'graph':
            if ns.tree is not None:
                params['tree'] = ns.tree
            if ns.graph is not None:
                params['graph_file'] = ns.graph
            continue
        value = getattr(ns, option, None)
        if value is not None:
            params[option] = value

    return params


def run_suite(name, params):
    """
    Run one named suite with command-line parameters.

    Examples
    --------
    >>> from graphoperators.cli import run_suite
    >>> report = run_suite('toeplitz-rewrite', {'size': 16, 'cases': 2})
    >>> report.suite, report.passed
    ('toeplitz-rewrite', True)

    """
    function, options = SUITES[name]
    params = dict(params)
    kwargs = {}
    graph = load_graph(params.pop('tree', None), params.pop('graph_file', None))
    if graph is not None:
        kwargs['graph'] = graph
    for option, value in params.items():
        keyword = options[option]
        if keyword == 'ns':
            value = (value,)
        kwargs[keyword] = value

    start = time.time()
    report = function(**kwargs)
    report.wall_time = time.time() - start
    LOG.info('{0} finished in {1:.3f} s'.format(name, report.wall_time))

    return report


def _run_suite(args):
    return run_suite(*args)


def _emit(text, output_file):
    if output_file:
        with open(output_file, 'w') as f:
            f.write(text + '\n')
    else:
        print(text)


def cmd_reduce(ns):
    """Print the reduced form of a word literal."""
    from graphoperators.mio.words import format_word, parse_word

    graph = _require_graph(ns)
    print(format_word(parse_word(ns.word, graph)))

    return EXIT_PASS


def _require_graph(ns):
    graph = load_graph(ns.tree, ns.graph)
    if graph is None:
        raise ValueError("A graph is required: use --tree N,DEPTH or "
                         "--graph FILE.json")
    return graph


def build_element(ns, graph):
    """
    Build the algebra element and its truncation from matrix options.

    Returns
    -------
    element : AlgebraElement
    t : Truncation

    """
    from graphoperators.guts.algebra import identity_element, word_element
    from graphoperators.guts.groupoid import Truncation
    from graphoperators.mio.words import parse_word, read_element
    from graphoperators.operators.fock import build_rj_element
    from graphoperators.operators.tree_toeplitz import (build_tminus_element,
                                                        build_tplus_element)

    if ns.word is not None:
        w = parse_word(ns.word, graph)
        element = word_element(graph, w)
        longest = w.length
    elif ns.element is not None:
        element = read_element(ns.element, graph)
        longest = max([w.length for w in element.support()] + [0])
    elif ns.identity:
        element = identity_element(graph)
        longest = 0
    elif ns.tplus is not None or ns.tminus is not None:
        longest = ns.tplus if ns.tplus is not None else ns.tminus
        t = Truncation(graph, max(longest, ns.maxlen or 0))
        build = build_tplus_element if ns.tplus is not None \
            else build_tminus_element
        return build(longest, t), t
    else:
        longest = 1
        t = Truncation(graph, max(1, ns.maxlen or 0))
        return build_rj_element(ns.rj, t), t

    maxlen = ns.maxlen if ns.maxlen is not None else max(1, longest)
    if longest > maxlen:
        raise ValueError("The element has words of length {0} but --maxlen "
                         "is {1}".format(longest, maxlen))

    return element, Truncation(graph, maxlen)


def cmd_matrix(ns):
    """Emit the matrix of an element, or one of its vertex-space blocks."""
    from graphoperators.guts.representation import (BasisIndex,
                                                    compress_to_vertex_space,
                                                    matrix_of_element)
    from graphoperators.mio.matrices import write_coordinate, write_matrix_json
    from graphoperators.operators.fock import tree_action_matrix
    from graphoperators.operators.tree_toeplitz import alpha_matrix

    graph = _require_graph(ns)
    element, t = build_element(ns, graph)
    basis = BasisIndex.from_truncation(t)
    m = matrix_of_element(element, basis)

    block = ns.vertex_block
    if block == 'auto':
        if graph.kind != 'regular_tree':
            block = 'compress'
        elif graph.n == 1:
            block = 'alpha'
        else:
            block = 'action'
    if block is not None:
        if block == 'compress':
            m = compress_to_vertex_space(m, basis)
        elif block == 'alpha':
            m = alpha_matrix(m, basis)
        else:
            m = tree_action_matrix(m, basis)
        basis = basis.vertex_space()

    if ns.format == 'json':
        text = write_matrix_json(m, basis, ns.out)
        if not ns.out:
            print(text)
    else:
        text = write_coordinate(m, ns.out)
        if not ns.out:
            sys.stdout.write(text)

    return EXIT_PASS


def _verify(names, ns):
    from graphoperators.mio.tables import write_reports, write_summary_table

    jobs = [(name, suite_params(name, ns)) for name in sorted(names)]
    if getattr(ns, 'jobs', 1) > 1 and len(jobs) > 1:
        from multiprocessing import Pool

        pool = Pool(ns.jobs)
        try:
            reports = pool.map(_run_suite, jobs)
        finally:
            pool.close()
            pool.join()
    else:
        reports = [run_suite(name, params) for name, params in jobs]

    payload = reports[0] if len(reports) == 1 else reports
    text = write_reports(payload, ns.out, ns.timing)
    if not ns.out:
        print(text)
    if getattr(ns, 'table', None):
        write_summary_table(reports, ns.table)

    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL


def cmd_verify(ns):
    """Run one suite or every suite and report."""
    names = list(SUITES) if ns.suite == 'all' else [ns.suite]
    return _verify(names, ns)


def cmd_fock_verify(ns):
    return _verify([FOCK_SUITES[ns.suite]], ns)


def cmd_toeplitz_rewrite(ns):
    """Print the tree operator combination of a Toeplitz symbol."""
    from graphoperators.evaluate.evaluate_toeplitz import check_rewrite
    from graphoperators.mio.tables import SuiteReport
    from graphoperators.mio.words import read_symbol
    from graphoperators.operators.tree_toeplitz import toeplitz_rewrite

    sym = read_symbol(ns.symbol)
    combo = toeplitz_rewrite(sym)
    record = {'symbol': ns.symbol,
              'plus_terms': dict((str(j), str(c)) for j, c in
                                 sorted(combo.plus_terms.items())),
              'minus_terms': dict((str(i), str(c)) for i, c in
                                  sorted(combo.minus_terms.items())),
              'unit': str(combo.unit),
              's0': str(sym.s0)}

    status = EXIT_PASS
    if ns.verify:
        report = SuiteReport('toeplitz-rewrite', {'symbol': ns.symbol,
                                                  'size': ns.size})
        check_rewrite(sym, ns.size, report, 'symbol', element_check=True)
        record['verify'] = report.to_dict()
        if not report.passed:
            status = EXIT_FAIL

    _emit(json.dumps(record, indent=2, sort_keys=True), ns.out)

    return status


def cmd_graph(ns):
    """Export a graph as JSON."""
    from graphoperators.mio.graphs import write_graph

    text = write_graph(_require_graph(ns), ns.out)
    if not ns.out:
        print(text)

    return EXIT_PASS


def _add_graph_options(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument('--tree', metavar='N,DEPTH',
                       help='regular tree with branching N and depth DEPTH')
    group.add_argument('--graph', metavar='FILE.json',
                       help='graph document to read')


def _add_report_options(parser):
    parser.add_argument('--seed', type=int, default=None,
                        help='random seed (default {0})'.format(DEFAULT_SEED))
    parser.add_argument('--cases', type=int, default=None)
    parser.add_argument('--out', metavar='FILE', default=None)
    parser.add_argument('--table', metavar='FILE.csv', default=None,
                        help='also write a summary table')
    parser.add_argument('--timing', default=False, action='store_true',
                        help='include wall time in reports')


def build_parser():
    """Return the argparse parser with all subcommands."""
    parser = argparse.ArgumentParser(
        prog='graphoperators',
        description='Graph groupoid operators, Toeplitz and Fock '
                    'verification tools.')
    parser.add_argument('--debug', nargs='?', default=None, const='debug',
                        choices=['debug', 'info', 'warning', 'error',
                                 'critical'])
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    reduce_parser = commands.add_parser('reduce', help='reduce a word')
    _add_graph_options(reduce_parser)
    reduce_parser.add_argument('word', help='word literal, e.g. "1>2;2<1"')
    reduce_parser.set_defaults(func=cmd_reduce)

    matrix_parser = commands.add_parser('matrix',
                                        help='emit an operator matrix')
    _add_graph_options(matrix_parser)
    source = matrix_parser.add_mutually_exclusive_group(required=True)
    source.add_argument('--word', '--edge', dest='word', metavar='LITERAL')
    source.add_argument('--element', metavar='FILE.json')
    source.add_argument('--identity', default=False, action='store_true')
    source.add_argument('--tplus', type=int, metavar='K')
    source.add_argument('--tminus', type=int, metavar='K')
    source.add_argument('--rj', type=int, metavar='J')
    matrix_parser.add_argument('--maxlen', type=int, default=None,
                               help='longest basis word')
    matrix_parser.add_argument('--vertex-block', nargs='?', default=None,
                               const='auto',
                               choices=['auto', 'compress', 'alpha', 'action'])
    matrix_parser.add_argument('--format', choices=['coord', 'json'],
                               default='coord')
    matrix_parser.add_argument('--out', metavar='FILE', default=None)
    matrix_parser.set_defaults(func=cmd_matrix)

    verify_parser = commands.add_parser('verify', help='run a suite')
    verify_parser.add_argument('suite', choices=sorted(SUITES) + ['all'])
    _add_graph_options(verify_parser)
    verify_parser.add_argument('--maxlen', type=int, default=None)
    verify_parser.add_argument('--size', type=int, default=None)
    verify_parser.add_argument('--n', type=int, default=None)
    verify_parser.add_argument('--depth', type=int, default=None)
    verify_parser.add_argument('--jobs', type=int, default=1)
    _add_report_options(verify_parser)
    verify_parser.set_defaults(func=cmd_verify)

    toeplitz_parser = commands.add_parser('toeplitz',
                                          help='Toeplitz operators')
    toeplitz_commands = toeplitz_parser.add_subparsers(dest='action')
    toeplitz_commands.required = True
    rewrite_parser = toeplitz_commands.add_parser('rewrite')
    rewrite_parser.add_argument('--symbol', required=True,
                                help='e.g. "t-1=3,t0=2,t1=1"')
    rewrite_parser.add_argument('--size', type=int, default=64)
    rewrite_parser.add_argument('--verify', default=False,
                                action='store_true')
    rewrite_parser.add_argument('--out', metavar='FILE', default=None)
    rewrite_parser.set_defaults(func=cmd_toeplitz_rewrite)

    fock_parser = commands.add_parser('fock', help='Fock space operators')
    fock_commands = fock_parser.add_subparsers(dest='action')
    fock_commands.required = True
    fock_verify = fock_commands.add_parser('verify')
    fock_verify.add_argument('--suite', choices=sorted(FOCK_SUITES),
                             default='relations')
    fock_verify.add_argument('--n', type=int, default=None)
    fock_verify.add_argument('--depth', type=int, default=None)
    _add_report_options(fock_verify)
    fock_verify.set_defaults(func=cmd_fock_verify, tree=None, graph=None,
                             jobs=1)

    graph_parser = commands.add_parser('graph', help='export a graph')
    _add_graph_options(graph_parser)
    graph_parser.add_argument('--out', metavar='FILE', default=None)
    graph_parser.set_defaults(func=cmd_graph)

    return parser


def main(argv=None):
    """
    Parse arguments, run a subcommand and return its exit code.

    Examples
    --------
    >>> from graphoperators.cli import main
    >>> main(['reduce', '--tree', '1,8', '1>2;2<1'])
    v:1
    0
    >>> main(['reduce', '--tree', '1,8', '1>9'])
    3

    """
    parser = build_parser()
    ns = parser.parse_args(argv)

    if ns.debug is not None:
        logging.basicConfig(level=getattr(logging, ns.debug.upper()))

    try:
        return ns.func(ns)
    except (ForeignEdgeError, IOError) as error:
        sys.stderr.write('graphoperators: {0}\n'.format(error))
        return EXIT_DATA
    except ValueError as error:
        sys.stderr.write('graphoperators: {0}\n'.format(error))
        return EXIT_USAGE


# ============================================================================
# Doctests
# ============================================================================
if __name__ == "__main__":
    import doctest
    doctest.testmod(verbose=True)  # py.test --doctest-modules
