"""Exact-arithmetic toolkit for group-graded Lie algebras."""

from ._gradedlie import (
    GradedAlgebra,
    MismatchError,
    ParseError,
    contains,
    example,
    example_names,
    load,
    random_graded,
    rref,
    subspace_intersect,
    subspace_sum,
)

__all__ = [
    "GradedAlgebra",
    "MismatchError",
    "ParseError",
    "contains",
    "example",
    "example_names",
    "load",
    "random_graded",
    "rref",
    "subspace_intersect",
    "subspace_sum",
]
