"""Count, enumerate and sample alignments of several sequences over a step set."""

from ._mmalign import (
    EnumerationCapExceeded,
    Error,
    approx,
    count,
    count_multinomial,
    count_with_parts,
    enumerate,
    formula,
    formulas,
    parse_steps,
    sample,
    series_coefficients,
    table4,
    table5,
    verify,
)

__all__ = [
    "Error",
    "EnumerationCapExceeded",
    "approx",
    "count",
    "count_multinomial",
    "count_with_parts",
    "enumerate",
    "formula",
    "formulas",
    "parse_steps",
    "sample",
    "series_coefficients",
    "table4",
    "table5",
    "verify",
]
