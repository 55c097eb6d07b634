#!/usr/bin/env python

from setuptools import setup
setup(
    name = 'akdual',
    version = '0.1.0',
    description = 'A-infinity Koszul duals of monomial path algebras over the A_n quiver',
    packages = ['akdual', 'akdual.bin', 'akdual.ext', 'akdual.generator'],
    install_requires=[
        'numpy',
        'sympy',
        'click',
        'pandas',
        'pyyaml',
        'matplotlib',
    ],
    entry_points={
          'console_scripts': [
              'akd = akdual.bin.akd:cmdline',
          ]
      },
)
