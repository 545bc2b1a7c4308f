"""Exact symbolic engine for jet reparametrization invariants.

Subpackages and modules:

* rings: sparse exact-rational polynomial arithmetic, term orders, parser
* jets: total derivative, composition with reparametrizations, wronskians
* catalog: the bracket catalog of invariants and ghost generators
* syzygies: curated relation suites and their certification
* groebner: Buchberger engine, basis certification, staircase complements
* euler: exact Euler-characteristic leading coefficients and thresholds
* cli: the ``jetbrackets`` command line front end
"""

from __future__ import annotations

__version__ = "0.1.0"
