"""Data models for verification cases and their reports."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum

from chowdefect.algebra.parser import parse_polynomial
from chowdefect.algebra.ring import RingContext, flag_context
from chowdefect.errors import CatalogError, ChowDefectError
from chowdefect.groebner import IdealHandle
from chowdefect.hilbert.series import (
    RegSeqQuotient,
    Series,
    SeriesExpr,
    Tensor,
    bounded_monomial_series,
    series_eval,
)
from chowdefect.symfun import alias_resolver


class CaseKind(str, Enum):
    """What a case verifies."""

    DEFECT = "defect"          # Ker, Im and the defect series D
    FLAG_ONLY = "flag_only"    # only HF(S/Ker) against the motive factorization
    BOUND_ONLY = "bound_only"  # only evaluates an upper-bound series


class Target(str, Enum):
    """Which computed series a reading is compared against."""

    D = "D"
    TILDE = "tilde"


@dataclass(frozen=True)
class BoundSpec:
    """Monomials in classes of the given degrees, under exponent caps.

    ``excluded`` lists exponent vectors whose multiples are not counted;
    ``min_total`` is the least total exponent counted.
    """

    weights: tuple[int, ...]
    caps: tuple[int | None, ...]
    excluded: tuple[tuple[int, ...], ...] = ()
    min_total: int = 0

    def series(self, n: int) -> Series:
        return bounded_monomial_series(self.weights, self.caps, n, self.excluded, self.min_total)

    def to_dict(self) -> dict:
        return {
            "weights": list(self.weights),
            "caps": list(self.caps),
            "excluded": [list(m) for m in self.excluded],
            "min_total": self.min_total,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BoundSpec":
        return cls(
            weights=tuple(data["weights"]),
            caps=tuple(data["caps"]),
            excluded=tuple(tuple(m) for m in data.get("excluded", [])),
            min_total=int(data.get("min_total", 0)),
        )


@dataclass(frozen=True)
class Reading:
    """An alternative statement of a claim, compared but never failing a run."""

    name: str
    series: SeriesExpr
    target: Target = Target.D


@dataclass(frozen=True)
class Scenario:
    """Overrides applied to a case; None keeps the base value."""

    ker_generators: tuple[str, ...] | None = None
    im_generators: tuple[str, ...] | None = None
    claimed_D: SeriesExpr | None = None
    claimed_flag: SeriesExpr | None = None
    motive_series: SeriesExpr | None = None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class CaseSpec:
    """One verification case: a ring, the two ideals and the claimed series.

    Generators are kept as polynomial literals over the case's named classes
    (``c2^2``, ``p1*pbar2``, ...); ideals are built on demand.
    """

    id: str
    prime: int
    variables: int
    kind: CaseKind = CaseKind.DEFECT
    ker_generators: tuple[str, ...] = ()
    im_generators: tuple[str, ...] = ()
    b_degrees: tuple[int, ...] = ()
    claimed_D: SeriesExpr | None = None
    claimed_flag: SeriesExpr | None = None
    motive_series: SeriesExpr | None = None
    tilde_bound: BoundSpec | None = None
    upper_degrees: tuple[int, ...] = ()
    vanishing_degree: int | None = None  # report whether D vanishes through this degree
    readings: tuple[Reading, ...] = ()
    scenarios: dict[str, Scenario] = field(default_factory=dict)
    default_scenario: str | None = None
    scenario: str | None = None
    provenance: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def context(self) -> RingContext:
        return flag_context(self.prime, self.variables)

    @property
    def label(self) -> str:
        return f"{self.id}:{self.scenario}" if self.scenario else self.id

    def _ideal(self, literals: tuple[str, ...], label: str) -> IdealHandle:
        ctx = self.context
        resolve = alias_resolver(ctx)
        try:
            polys = [parse_polynomial(text, ctx, resolve) for text in literals]
            return IdealHandle.from_polys(
                ctx, polys, names=list(literals), label=f"{label}[{self.label}]"
            )
        except ChowDefectError as exc:
            raise CatalogError(f"case {self.label}: {exc}") from exc

    def ker_ideal(self) -> IdealHandle:
        return self._ideal(self.ker_generators, "Ker")

    def im_ideal(self) -> IdealHandle:
        return self._ideal(self.im_generators, "Im")

    @property
    def regseq(self) -> RegSeqQuotient | None:
        """Hilbert series of S(t)/(b) when the b-sequence is known."""
        if not self.b_degrees or len(self.b_degrees) != self.variables:
            return None
        return RegSeqQuotient.standard(self.b_degrees)

    @property
    def factorization(self) -> SeriesExpr | None:
        """motive_series (x) S(t)/(b), the expected HF(S/Ker)."""
        if self.motive_series is None or self.regseq is None:
            return None
        return Tensor((self.motive_series, self.regseq))

    def with_scenario(self, name: str | None) -> "CaseSpec":
        """The case with a named scenario's overrides applied."""
        name = name if name is not None else self.default_scenario
        if name is None:
            if self.scenarios:
                raise CatalogError(f"case {self.id} needs a scenario: {', '.join(self.scenarios)}")
            return self
        name = canonical_scenario(name)
        if name not in self.scenarios:
            known = ", ".join(self.scenarios) or "none"
            raise CatalogError(f"unknown scenario '{name}' for case {self.id} (known: {known})")
        override = self.scenarios[name]
        changes = {
            key: getattr(override, key)
            for key in ("ker_generators", "im_generators", "claimed_D", "claimed_flag", "motive_series")
            if getattr(override, key) is not None
        }
        return replace(self, scenario=name, notes=self.notes + override.notes, **changes)

    def check(self, n: int) -> list[str]:
        """Consistency problems of the case data itself, as messages."""
        problems = []
        if self.kind is not CaseKind.BOUND_ONLY and not self.ker_generators:
            problems.append("no Ker generators")
        if self.kind is CaseKind.DEFECT and not self.im_generators:
            problems.append("no Im generators")
        if self.b_degrees and len(self.b_degrees) != self.variables:
            problems.append("b_degrees must list one degree per variable")
        if self.claimed_flag is not None and self.factorization is not None:
            if series_eval(self.claimed_flag, n) != series_eval(self.factorization, n):
                problems.append("claimed_flag differs from motive_series (x) S(t)/(b)")
        return problems


_SCENARIO_ALIASES = {"lambda0": "λ0", "lambda1": "λ1", "l0": "λ0", "l1": "λ1"}


def canonical_scenario(name: str) -> str:
    return _SCENARIO_ALIASES.get(name.lower(), name)


@dataclass(frozen=True)
class ReportRow:
    d: int
    hf_ker_quotient: int | None
    hf_im_quotient: int | None
    D: int | None
    claimed: int | None
    match: bool | None

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "hf_ker_quotient": self.hf_ker_quotient,
            "hf_im_quotient": self.hf_im_quotient,
            "D": self.D,
            "claimed": self.claimed,
            "match": self.match,
        }


@dataclass(frozen=True)
class TildeRow:
    d: int
    tilde_D: int | None
    bound: int | None
    within_bound: bool | None

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "tilde_D": self.tilde_D,
            "bound": self.bound,
            "within_bound": self.within_bound,
        }


@dataclass
class VerificationReport:
    """Machine-checked comparison of one case against its claims."""

    case: str
    scenario: str | None
    prime: int
    max_degree: int
    method: str
    kind: CaseKind = CaseKind.DEFECT
    containment_ok: bool | None = None
    factorization_ok: bool | None = None
    method_agreement: bool | None = None
    rows: list[ReportRow] = field(default_factory=list)
    suites: dict[str, dict] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    truncated_basis: bool = False
    structure_ok: bool | None = None
    tilde_rows: list[TildeRow] = field(default_factory=list)
    readings: dict[str, bool] = field(default_factory=dict)
    provenance: list[str] = field(default_factory=list)

    @property
    def label(self) -> str:
        return f"{self.case}:{self.scenario}" if self.scenario else self.case

    @property
    def mismatches(self) -> list[int]:
        return [row.d for row in self.rows if row.match is False]

    @property
    def passed(self) -> bool:
        """Every executed check passed: containment, claims, factorization, bounds, suites."""
        return (
            self.containment_ok is not False
            and self.factorization_ok is not False
            and self.method_agreement is not False
            and self.structure_ok is not False
            and not self.mismatches
            and all(row.within_bound is not False for row in self.tilde_rows)
            and all(suite.get("passed", True) for suite in self.suites.values())
        )
