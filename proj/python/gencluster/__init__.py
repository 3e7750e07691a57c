"""Exact mutation engine for generalized cluster seeds."""

from ._core import (
    Error,
    InvalidSeed,
    ParseError,
    Seed,
    fpoly,
    orbit,
    verify,
)

__all__ = ["Error", "InvalidSeed", "ParseError", "Seed", "fpoly", "orbit", "verify"]
