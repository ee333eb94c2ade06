#!/usr/bin/env python
"""
Utility functions for seeded random inputs:

    - exact complex scalars and algebra elements
    - step sequences on a shadowed graph
    - Toeplitz symbols
    - one-particle vectors and left operator words for the Fock space

All functions draw from a numpy RandomState passed in by the caller, so a
suite run is reproducible from its seed.

Authors:
    - Graph Operators team

Copyright 2026,  Graph Operators team, Apache v2.0 License

"""
from fractions import Fraction

import numpy as np


def random_state(seed=0):
    return np.random.RandomState(seed)


def random_scalar(rng, bound=10, denominator=10):
    """
    Nonzero exact complex scalar with modulus at most bound.

    Examples
    --------
    >>> from graphoperators.guts.utilities import random_state, random_scalar
    >>> z = random_scalar(random_state(0))
    >>> bool(z) and z.abs2() <= 100
    True

    """
    from graphoperators.guts.rationals import GaussianRational

    # Each part at most bound/sqrt(2).
    limit = int(bound * denominator / np.sqrt(2))
    while True:
        z = GaussianRational(
            Fraction(int(rng.randint(-limit, limit + 1)), denominator),
            Fraction(int(rng.randint(-limit, limit + 1)), denominator))
        if z:
            return z


def random_element(graph, words, rng, size=3):
    """Algebra element with `size` distinct words drawn from `words`."""
    from graphoperators.guts.algebra import AlgebraElement

    words = [w for w in words if not w.is_empty]
    picks = rng.choice(len(words), size=min(size, len(words)), replace=False)

    return AlgebraElement(graph, [(words[i], random_scalar(rng))
                                  for i in sorted(picks)])


def all_steps(graph):
    """All steps of the shadowed graph, in a deterministic order."""
    steps = []
    for v in graph.vertices:
        steps.extend(graph.out_steps(v))
    return steps


def random_steps(steps, rng, length):
    """Arbitrary (possibly non-admissible) sequence of steps."""
    return [steps[i] for i in rng.randint(0, len(steps), size=length)]


def random_symbol(rng, max_width=5, bound=10):
    """
    Toeplitz symbol with random band widths n, k <= max_width.

    Examples
    --------
    >>> from graphoperators.guts.utilities import random_state, random_symbol
    >>> sym = random_symbol(random_state(3))
    >>> sym.n <= 5 and sym.k <= 5
    True

    """
    from graphoperators.operators.tree_toeplitz import ToeplitzSymbol

    n = int(rng.randint(0, max_width + 1))
    k = int(rng.randint(0, max_width + 1))
    coeffs = dict((p, random_scalar(rng, bound)) for p in range(-n, k + 1))

    return ToeplitzSymbol(coeffs, n, k)


def random_vector(rng, n):
    """Complex one-particle vector with standard normal parts."""
    return rng.normal(size=n) + 1j * rng.normal(size=n)


def random_left_word(rng, n, length):
    """Product of `length` random left creation/annihilation operators."""
    from graphoperators.operators.fock import FockOperatorWord, left

    return FockOperatorWord([left(random_vector(rng, n),
                                  bool(rng.randint(0, 2)))
                             for _ in range(length)])


# ============================================================================
# Doctests
# ============================================================================
if __name__ == "__main__":
    import doctest
    doctest.testmod(verbose=True)  # py.test --doctest-modules
