"""Exact verification toolkit for the binary code of a projective plane of order 10.

Everything here is exact integer / GF(2) arithmetic; no floating point is
used anywhere in the package.
"""

__version__ = "0.1.0"
