#!/usr/bin/env python
"""
Verification reports and summary tables.

A report records one suite run: its parameters, how many cases were
checked, the failing cases and the largest deviation seen.  Reports are
written as JSON with sorted keys, so identical runs give identical bytes.

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
import json

import pandas as pd

REPORT_SCHEMA = 1


class SuiteReport(object):
    """
    Result of one verification suite.

    Examples
    --------
    >>> from graphoperators.mio.tables import SuiteReport
    >>> report = SuiteReport('toeplitz-rewrite', {'size': 8})
    >>> report.record('case-001', True, deviation=0.0)
    >>> report.record('case-000', False, expected='I', got='0', deviation=1.0)
    >>> report.passed, report.cases, [f['case'] for f in report.to_dict()['failures']]
    (False, 2, ['case-000'])

    """

    def __init__(self, suite, params=None):
        self.suite = suite
        self.params = dict(params or {})
        self.cases = 0
        self.failures = []
        self.max_error = 0.0
        self.wall_time = None

    def record(self, case, ok, expected=None, got=None, deviation=0.0):
        """Count one checked case; keep it if it failed."""
        self.cases += 1
        deviation = float(deviation)
        if deviation > self.max_error:
            self.max_error = deviation
        if not ok:
            self.failures.append({'case': str(case),
                                  'expected': _plain(expected),
                                  'got': _plain(got),
                                  'max_deviation': deviation})

    @property
    def passed(self):
        return not self.failures

    def to_dict(self, timing=False):
        record = {'schema': REPORT_SCHEMA,
                  'suite': self.suite,
                  'params': self.params,
                  'cases': self.cases,
                  'failures': sorted(self.failures, key=lambda f: f['case']),
                  'max_error': self.max_error,
                  'pass': self.passed}
        if timing and self.wall_time is not None:
            record['wall_time'] = round(self.wall_time, 6)
        return record


def _plain(value):
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, complex):
        return [value.real, value.imag]
    return str(value)


def write_reports(reports, output_file=None, timing=False):
    """
    Serialize one report (or a list, sorted by suite name) as JSON text.
    """
    if isinstance(reports, SuiteReport):
        payload = reports.to_dict(timing)
    else:
        payload = [r.to_dict(timing) for r in
                   sorted(reports, key=lambda r: r.suite)]
    text = json.dumps(payload, indent=2, sort_keys=True)
    if output_file:
        with open(output_file, 'w') as f:
            f.write(text + '\n')

    return text


def write_summary_table(reports, output_table):
    """
    Write one summary row per report to a CSV file.

    Returns
    -------
    table : pandas DataFrame

    """
    rows = [{'suite': r.suite, 'cases': r.cases,
             'failures': len(r.failures), 'max_error': r.max_error,
             'pass': r.passed}
            for r in sorted(reports, key=lambda r: r.suite)]
    table = pd.DataFrame(rows, columns=['suite', 'cases', 'failures',
                                        'max_error', 'pass'])
    if output_table:
        table.to_csv(output_table, index=False)

    return table
