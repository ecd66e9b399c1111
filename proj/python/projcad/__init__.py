"""Cylindrical algebraic decomposition over the reals."""

from ._core import (
    DomainError,
    Error,
    NotWellOriented,
    ParseError,
    cell_count,
    compute,
    discriminant,
    resultant,
    run_examples,
    warnings,
)

__all__ = [
    "DomainError",
    "Error",
    "NotWellOriented",
    "ParseError",
    "cell_count",
    "compute",
    "discriminant",
    "resultant",
    "run_examples",
    "warnings",
]
