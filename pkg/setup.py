#!/usr/bin/env python
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:
"""
GraphOperators: graph groupoid algebras, their operator representations,
and the Toeplitz and Fock-space operators of regular trees.

"""

import os
from os.path import join as pjoin

# Remove a stale MANIFEST left over from older builds.
if os.path.exists('MANIFEST'): os.remove('MANIFEST')

from setuptools import setup

# Get version and release info, which is all stored in info.py
ver_file = pjoin(os.getcwd(), 'info.py')
exec(open(ver_file).read())

def main(**extra_args):
    setup(name=NAME,
          maintainer=MAINTAINER,
          maintainer_email=MAINTAINER_EMAIL,
          description=DESCRIPTION,
          long_description=LONG_DESCRIPTION,
          url=URL,
          download_url=DOWNLOAD_URL,
          license=LICENSE,
          classifiers=CLASSIFIERS,
          author=AUTHOR,
          author_email=AUTHOR_EMAIL,
          platforms=PLATFORMS,
          version=VERSION,
          install_requires=REQUIRES,
          extras_require=EXTRAS_REQUIRE,
          provides=PROVIDES,
          packages=['graphoperators',
                    'graphoperators.data',
                    'graphoperators.evaluate',
                    'graphoperators.guts',
                    'graphoperators.mio',
                    'graphoperators.operators',
                    'graphoperators.tests'],
          package_data={'graphoperators': [pjoin('data', '*.json')]},
          scripts=[pjoin('graphoperators', 'graphoperators')],
          **extra_args
         )

if __name__ == "__main__":
    main()
