"""Exact independence polynomials, basis factorizations and equivalence classes."""

from ._core import (
    SpecParseError,
    admissible,
    basis,
    bruteforce_class_size,
    cycle_class,
    factor_cycle,
    factor_path,
    graph6,
    independence_polynomial,
    path_class,
)

__all__ = [
    "SpecParseError",
    "admissible",
    "basis",
    "bruteforce_class_size",
    "cycle_class",
    "factor_cycle",
    "factor_path",
    "graph6",
    "independence_polynomial",
    "path_class",
]
