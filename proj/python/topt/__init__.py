"""T-count optimizing compiler for Clifford+T circuits."""

from ._core import (
    ParseError,
    TooLarge,
    compile,
    fit_scaling,
    optimize_signature,
    parse_and_emit,
    random_signature,
    signature_of_columns,
    t_count,
    verify,
)

__all__ = [
    "ParseError",
    "TooLarge",
    "compile",
    "fit_scaling",
    "optimize_signature",
    "parse_and_emit",
    "random_signature",
    "signature_of_columns",
    "t_count",
    "verify",
]
