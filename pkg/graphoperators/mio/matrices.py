#!/usr/bin/env python
"""
Sparse matrix export.

Coordinate text: a header line "dim n nnz m" followed by one "row col re im"
line per stored entry (0-based basis indices), ordered by row then column.
JSON carries the same entries plus the basis word labels.

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
import io
import json

import pandas as pd
from scipy.sparse import csr_matrix


def matrix_to_table(m):
    """
    Return the stored entries of a sparse matrix as a pandas table.

    Examples
    --------
    >>> import numpy as np
    >>> from graphoperators.mio.matrices import matrix_to_table
    >>> table = matrix_to_table(np.array([[0, 2j], [1, 0]]))
    >>> table['row'].tolist(), table['col'].tolist(), table['im'].tolist()
    ([0, 1], [1, 0], [2.0, 0.0])

    """
    from graphoperators.guts.representation import prune

    coo = prune(csr_matrix(m, dtype=complex)).tocoo()
    table = pd.DataFrame({'row': coo.row.astype(int),
                          'col': coo.col.astype(int),
                          're': coo.data.real,
                          'im': coo.data.imag})
    table = table.sort_values(['row', 'col']).reset_index(drop=True)

    return table


def write_coordinate(m, output_file=None):
    """
    Write a matrix in coordinate text format.

    Examples
    --------
    >>> from scipy.sparse import identity
    >>> from graphoperators.mio.matrices import write_coordinate
    >>> print(write_coordinate(identity(2)))
    dim 2 nnz 2
    0 0 1.0 0.0
    1 1 1.0 0.0
    <BLANKLINE>

    """
    table = matrix_to_table(m)
    buffer = io.StringIO()
    buffer.write('dim {0} nnz {1}\n'.format(m.shape[0], len(table)))
    table.to_csv(buffer, sep=' ', header=False, index=False)
    text = buffer.getvalue()
    if output_file:
        with open(output_file, 'w') as f:
            f.write(text)

    return text


def read_coordinate(input_file):
    """Read a coordinate text file back into a csr matrix."""
    import os

    from graphoperators.mio.words import LiteralSyntaxError

    if not os.path.exists(input_file):
        raise IOError(input_file + " not found")
    with open(input_file) as f:
        header = f.readline().split()
        if len(header) != 4 or header[0] != 'dim' or header[2] != 'nnz':
            raise LiteralSyntaxError("Bad coordinate header in " + input_file)
        n, nnz = int(header[1]), int(header[3])
        if nnz:
            table = pd.read_csv(f, sep=' ', header=None,
                                names=['row', 'col', 're', 'im'])
        else:
            table = pd.DataFrame(columns=['row', 'col', 're', 'im'])
    if len(table) != nnz:
        raise LiteralSyntaxError("Expected {0} entries, found {1}".format(
            nnz, len(table)))

    data = table['re'].to_numpy(dtype=float) + \
        1j * table['im'].to_numpy(dtype=float)
    return csr_matrix((data, (table['row'].to_numpy(dtype=int),
                              table['col'].to_numpy(dtype=int))),
                      shape=(n, n))


def write_matrix_json(m, basis=None, output_file=None):
    """Write a matrix (and optionally its basis labels) as JSON text."""
    table = matrix_to_table(m)
    record = {'dim': int(m.shape[0]),
              'nnz': int(len(table)),
              'entries': [[int(r), int(c), float(x), float(y)]
                          for r, c, x, y in table.itertuples(index=False)]}
    if basis is not None:
        record['basis'] = [basis.label(i) for i in range(len(basis))]
    text = json.dumps(record, indent=2, ensure_ascii=False)
    if output_file:
        with open(output_file, 'w') as f:
            f.write(text + '\n')

    return text
