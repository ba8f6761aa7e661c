"""Exception hierarchy for the chow-defect engine.

Every error raised on purpose by the package derives from ChowDefectError,
so the CLI can map failures to exit codes in one place.
"""

from __future__ import annotations


class ChowDefectError(Exception):
    """Base class for all engine errors."""


class ContextError(ChowDefectError):
    """Polynomials or ideals from different ring contexts were combined."""


class SubstitutionError(ChowDefectError):
    """A substitution map does not assign an image to every variable."""


class GradingError(ChowDefectError):
    """An operation that needs homogeneous input received something else."""


class ParseError(ChowDefectError):
    """A polynomial literal or series expression could not be parsed."""


class ExpressionError(ChowDefectError):
    """A series expression is malformed."""


class ContainmentError(ChowDefectError):
    """Ideal(Im) is not contained in Ker: the catalog entry is inconsistent."""

    def __init__(self, message: str, offending: list[str] | None = None):
        super().__init__(message)
        self.offending = offending or []

    def __reduce__(self):
        return (self.__class__, (str(self), self.offending))


class MethodDisagreement(ChowDefectError):
    """The Groebner staircase and the linear-algebra rank disagree."""

    def __init__(
        self,
        degree: int,
        staircase: int,
        linalg: int,
        ideal: str = "",
        slice_dump: list[str] | None = None,
    ):
        super().__init__(
            f"Hilbert function disagreement for {ideal or 'ideal'} in degree {degree}: "
            f"staircase={staircase}, linalg={linalg}"
        )
        self.degree = degree
        self.staircase = staircase
        self.linalg = linalg
        self.ideal = ideal
        # lines describing the degree slice where the methods differ
        self.slice_dump = slice_dump or []

    def __reduce__(self):
        return (
            self.__class__,
            (self.degree, self.staircase, self.linalg, self.ideal, self.slice_dump),
        )


class CatalogError(ChowDefectError):
    """Unknown case id or scenario, or an invalid case file."""


class SizeError(ChowDefectError):
    """A computation exceeds the configured desk-scale cap."""


class ConfigError(ChowDefectError):
    """Invalid run configuration."""
