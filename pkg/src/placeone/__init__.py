"""Exact invariants of plane algebraic curves and the pencils they generate.

Everything is computed symbolically over the rationals and their finite
extensions: intersection numbers via subresultants, Milnor numbers at finite
points and at infinity, branch counts through rational Puiseux expansions,
and the census of rational members of the pencil f - lambda.
"""

__version__ = "0.1.0"
