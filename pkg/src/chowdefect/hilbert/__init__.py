"""Hilbert functions, closed-form series and the defect series."""

from chowdefect.hilbert.functions import (
    METHODS,
    DefectSeries,
    check_containment,
    d_series,
    defect_series,
    hf_linalg,
    hf_staircase,
    hilbert_function,
    slice_dump,
    tilde_quotient,
    tilde_series,
)
from chowdefect.hilbert.series import (
    ZERO,
    AugmentationIdeal,
    Exterior,
    ExteriorPlus,
    FreeModule,
    PolyAlgebra,
    RegSeqQuotient,
    Series,
    SeriesExpr,
    Sum,
    Tensor,
    Truncated,
    bounded_monomial_series,
    parse_series,
    series_add,
    series_divide,
    series_eval,
    series_mul,
    series_sub,
)

__all__ = [
    "METHODS",
    "DefectSeries",
    "ZERO",
    "AugmentationIdeal",
    "Exterior",
    "ExteriorPlus",
    "FreeModule",
    "PolyAlgebra",
    "RegSeqQuotient",
    "Series",
    "SeriesExpr",
    "Sum",
    "Tensor",
    "Truncated",
    "bounded_monomial_series",
    "check_containment",
    "d_series",
    "defect_series",
    "hf_linalg",
    "hf_staircase",
    "hilbert_function",
    "slice_dump",
    "parse_series",
    "series_add",
    "series_divide",
    "series_eval",
    "series_mul",
    "series_sub",
    "tilde_quotient",
    "tilde_series",
]
