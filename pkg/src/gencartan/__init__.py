"""Exact computations in generalized Cartan-type Lie algebras (types W, S, H, K)
built on the group algebra of Z^k tensored with a polynomial algebra."""

from gencartan.algebra import AlgebraElement, Monomial, monomial, one, total_degree
from gencartan.errors import ConfigError, Violation

__all__ = [
    "AlgebraElement",
    "ConfigError",
    "Monomial",
    "Violation",
    "monomial",
    "one",
    "total_degree",
]

__version__ = "0.1.0"
