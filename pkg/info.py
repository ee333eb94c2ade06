#!/usr/bin/env python
"""
This file contains parameters for GraphOperators to fill settings in
setup.py, the top-level docstring, and for building the docs.
In setup.py we execute this file, so it cannot import graphoperators
beyond its version module.
"""

# Format expected by setup.py and docs/conf.py: string of form "X.Y.Z"
from graphoperators.version import __version__ as __version__

CLASSIFIERS = ["Development Status :: Beta",
               "Environment :: Console",
               "Intended Audience :: Science/Research",
               "License :: OSI Approved :: Apache v2.0",
               "Operating System :: OS Independent",
               "Programming Language :: Python 3",
               "Topic :: Scientific/Engineering :: Mathematics"]

description  = ("Graph groupoid algebras, truncated operator "
                "representations, and tree Toeplitz / Fock operators")

# Note: this long_description is also the top of docs/index.rst, so please
# remember to edit it in both places.
long_description = """
==============
GraphOperators
==============

GraphOperators builds the groupoid of a directed graph (reduced paths,
their shadows and vertex units), its *-algebra of finitely supported
combinations, and finite sparse-matrix truncations of the canonical
representation.  On regular trees it rewrites banded Toeplitz matrices as
tree operators and matches tree operators with creation and annihilation
operators on a truncated Fock space.  Every identity comes with a seeded,
deterministic verification suite, licensed under the terms of the
Apache v2.0 license.

"""

# Main setup parameters
NAME                = 'GraphOperators'
MAINTAINER          = "Graph Operators team"
MAINTAINER_EMAIL    = ""
DESCRIPTION         = description
LONG_DESCRIPTION    = long_description
URL                 = ""
DOWNLOAD_URL        = ""
LICENSE             = "Apache v2.0"
CLASSIFIERS         = CLASSIFIERS
AUTHOR              = "Graph Operators team"
AUTHOR_EMAIL        = ""
PLATFORMS           = "OS Independent"
VERSION             = __version__
PROVIDES            = ["graphoperators"]
REQUIRES            = ["numpy", "scipy", "networkx", "pandas"]
TESTS_REQUIRES      = ["pytest"]
EXTRAS_REQUIRE      = {"tests": TESTS_REQUIRES}
