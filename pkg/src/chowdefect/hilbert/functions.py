"""Hilbert functions of graded quotients S/I and the defect series.

Two independent methods are available: counting standard monomials outside
the leading-term ideal of a Groebner basis ("groebner", the staircase), and
the rank of the degree-d Macaulay slice ("linalg"). ``both`` runs the two and
insists that they agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from chowdefect.algebra.linalg import SparseRow, coordinates, rank_mod_p
from chowdefect.algebra.ops import divides, format_poly, monomials_of_degree
from chowdefect.algebra.ring import Monomial
from chowdefect.errors import ContainmentError, ExpressionError, MethodDisagreement
from chowdefect.groebner import IdealHandle, groebner_basis, non_members
from chowdefect.hilbert.series import Series, series_divide, series_sub
from chowdefect.log import get_logger

logger = get_logger(__name__)

METHODS = ("groebner", "linalg", "both")

# monomials listed per line of a disagreement dump
DUMP_LIMIT = 12


def _standard_monomials(ideal: IdealHandle, d: int) -> list[Monomial]:
    monomials = monomials_of_degree(ideal.context, d)
    if not ideal.generators:
        return monomials
    leading = groebner_basis(ideal, max_degree=d).leading
    return [m for m in monomials if not any(divides(lt, m) for lt in leading)]


def hf_staircase(ideal: IdealHandle, d: int) -> int:
    """dim (S/I)_d by counting degree-d monomials outside the leading-term ideal."""
    if d < 0:
        return 0
    return len(_standard_monomials(ideal, d))


def _slice(ideal: IdealHandle, d: int) -> tuple[list[Monomial], list[SparseRow]]:
    """Monomial basis of S_d and the rows {m*g : deg m = d - deg g} in it."""
    ctx = ideal.context
    monomials = monomials_of_degree(ctx, d)
    index = {m: i for i, m in enumerate(monomials)}
    rows = []
    for g in ideal.generators:
        if g.degree > d:
            continue
        for m in monomials_of_degree(ctx, d - g.degree):
            rows.append(coordinates(g.value.mul_monom(m), index))
    return monomials, rows


def hf_linalg(ideal: IdealHandle, d: int) -> int:
    """dim S_d minus the rank of the degree-d slice of the ideal."""
    if d < 0:
        return 0
    monomials, rows = _slice(ideal, d)
    rank = rank_mod_p(rows, len(monomials), ideal.context.prime)
    logger.debug("Slice d=%d of %s: %d rows, %d columns, rank %d",
                 d, ideal.label or "ideal", len(rows), len(monomials), rank)
    return len(monomials) - rank


def _monomial_text(ideal: IdealHandle, monomials: list[Monomial]) -> str:
    ring = ideal.context.ring
    shown = [format_poly(ring.from_dict({m: 1})) for m in monomials[:DUMP_LIMIT]]
    more = len(monomials) - len(shown)
    return ", ".join(shown) + (f", ... ({more} more)" if more > 0 else "")


def slice_dump(ideal: IdealHandle, d: int) -> list[str]:
    """Human-readable description of the degree-d slice of ``ideal``."""
    monomials, rows = _slice(ideal, d)
    rank = rank_mod_p(rows, len(monomials), ideal.context.prime)
    leading = []
    if ideal.generators:
        basis = groebner_basis(ideal, max_degree=d)
        leading = [lt for lt in basis.leading if ideal.context.weighted_degree(lt) <= d]
    return [
        f"S_{d}: {len(monomials)} monomials, {len(rows)} generator multiples, rank {rank}",
        f"generators in degree <= {d}: "
        + ", ".join(g.name for g in ideal.generators if g.degree <= d),
        f"leading terms: {_monomial_text(ideal, leading)}",
        f"standard monomials: {_monomial_text(ideal, _standard_monomials(ideal, d))}",
    ]


def hilbert_function(ideal: IdealHandle, max_degree: int, method: str = "both") -> Series:
    """HF(S/I, d) for d = 0..max_degree.

    Raises:
        MethodDisagreement: with ``method="both"``, in the first degree where the
            staircase count and the slice rank differ.
    """
    if method not in METHODS:
        raise ValueError(f"unknown Hilbert function method '{method}'")
    if method in ("groebner", "both") and ideal.generators:
        # one basis valid through max_degree serves every slice
        groebner_basis(ideal, max_degree=max_degree)
    values = []
    for d in range(max_degree + 1):
        if method == "groebner":
            values.append(hf_staircase(ideal, d))
        elif method == "linalg":
            values.append(hf_linalg(ideal, d))
        else:
            staircase = hf_staircase(ideal, d)
            linalg = hf_linalg(ideal, d)
            if staircase != linalg:
                raise MethodDisagreement(
                    d, staircase, linalg,
                    ideal=ideal.describe(),
                    slice_dump=slice_dump(ideal, d),
                )
            values.append(staircase)
    return values


def check_containment(im: IdealHandle, ker: IdealHandle) -> None:
    """Raise ContainmentError unless every generator of ``im`` lies in ``ker``."""
    offending = non_members(im, ker)
    if offending:
        names = [g.name for g in offending]
        raise ContainmentError(
            f"{im.label or 'Im'} is not contained in {ker.label or 'Ker'}: "
            f"{', '.join(names)} survive reduction",
            offending=names,
        )


@dataclass(frozen=True)
class DefectSeries:
    """Both Hilbert functions of a defect computation, degrees 0..max_degree."""

    hf_ker: Series
    hf_im: Series

    @property
    def values(self) -> Series:
        return series_sub(self.hf_im, self.hf_ker)


def defect_series(
    ker: IdealHandle,
    im: IdealHandle,
    max_degree: int,
    method: str = "both",
) -> DefectSeries:
    """HF(S/Ker) and HF(S/Im) after checking Im inside Ker.

    Raises:
        ContainmentError: some generator of ``im`` is not in ``ker``.
        MethodDisagreement: see ``hilbert_function``.
    """
    check_containment(im, ker)
    result = DefectSeries(
        hilbert_function(ker, max_degree, method),
        hilbert_function(im, max_degree, method),
    )
    negative = [d for d, v in enumerate(result.values) if v < 0]
    if negative:
        # unreachable once containment holds
        raise ContainmentError(f"negative defect in degrees {negative}")
    return result


def d_series(
    ker: IdealHandle,
    im: IdealHandle,
    max_degree: int,
    method: str = "both",
) -> list[int]:
    """D_d = HF(S/Im, d) - HF(S/Ker, d) for d = 1..max_degree."""
    return defect_series(ker, im, max_degree, method).values[1:]


def tilde_quotient(d_values: Series, divisor: Series) -> tuple[Series, list[int]]:
    """Quotient of a defect series by ``divisor`` and its negative degrees."""
    quotient = series_divide(d_values, divisor)
    return quotient, [d for d, v in enumerate(quotient) if v < 0]


def tilde_series(d_values: Series, divisor: Series) -> Series:
    """Quotient of a defect series (degree 0 included) by ``divisor``.

    Raises ExpressionError when a quotient coefficient is negative: the series
    does not factor through ``divisor`` with nonnegative dimensions.
    """
    quotient, negative = tilde_quotient(d_values, divisor)
    if negative:
        raise ExpressionError(f"negative quotient coefficients in degrees {negative}")
    return quotient
