"""Computational checks for support sizes of zero divisors and units in group algebras.

Submodules:

- ``words``: reduced words over h2, h3
- ``fp``: elimination of two-generator presentations
- ``cosets``: Todd-Coxeter enumeration
- ``cycles``: labelings of cycle configurations
- ``catalog``: forbidden configuration catalog
- ``algebra``: group algebras over F_p and support graphs
- ``census``: cubic triangle-free graph census and filter pipeline
- ``bounds``: counting arguments for small supports
"""

__version__ = "0.1.0"
