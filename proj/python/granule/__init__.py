"""Granule definability and approaching descriptions over concept lattices."""

from ._granule import (
    CompoundContext,
    ContextError,
    FormalContext,
    FormulaError,
    SizeGuardError,
    approximate,
    common_necessary,
    concepts,
    define,
    evaluate,
    load,
    parse_compound,
    parse_context,
)

__all__ = [
    "CompoundContext",
    "ContextError",
    "FormalContext",
    "FormulaError",
    "SizeGuardError",
    "approximate",
    "common_necessary",
    "concepts",
    "define",
    "evaluate",
    "load",
    "parse_compound",
    "parse_context",
]

__version__ = "0.1.0"
