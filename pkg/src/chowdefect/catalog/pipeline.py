"""Verification pipeline: CaseSpec in, VerificationReport out.

Cases are independent jobs. ``verify_jobs`` fans them out to a process pool
when more than one worker is configured and returns reports in job order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from chowdefect.catalog.cases import build_case
from chowdefect.catalog.casefile import load_case_file
from chowdefect.catalog.models import (
    CaseKind,
    CaseSpec,
    ReportRow,
    Target,
    TildeRow,
    VerificationReport,
)
from chowdefect.config import get_config
from chowdefect.errors import CatalogError, ConfigError
from chowdefect.hilbert.functions import (
    METHODS,
    defect_series,
    hilbert_function,
    tilde_quotient,
)
from chowdefect.hilbert.series import (
    ExteriorPlus,
    FreeModule,
    PolyAlgebra,
    SeriesExpr,
    Tensor,
    series_eval,
    series_mul,
    series_sub,
)
from chowdefect.log import case_extra, get_logger
from chowdefect.suites import dickson_suite, invariants_suite, steenrod_suite

logger = get_logger(__name__)


def _resolve(max_degree: int | None, method: str | None) -> tuple[int, str]:
    config = get_config()
    n = max_degree if max_degree is not None else config.max_degree
    method = method or config.method
    if n < 1:
        raise ConfigError("max degree must be >= 1")
    if method not in METHODS:
        raise ConfigError(f"method must be one of {', '.join(METHODS)}")
    return n, method


def _new_report(case: CaseSpec, n: int, method: str) -> VerificationReport:
    return VerificationReport(
        case=case.id,
        scenario=case.scenario,
        prime=case.prime,
        max_degree=n,
        method=method,
        kind=case.kind,
        notes=list(case.notes),
        provenance=list(case.provenance),
    )


def _attach_suites(report: VerificationReport, case: CaseSpec) -> None:
    if case.prime == 3 and case.variables == 4:
        report.suites["steenrod"] = steenrod_suite().to_dict()
        report.suites["invariants"] = invariants_suite().to_dict()
    if case.id.startswith("spin"):
        report.suites["dickson"] = dickson_suite().to_dict()


def _tilde(report: VerificationReport, case: CaseSpec, d_values: list[int], n: int):
    """Fill tilde rows; returns the quotient series or None without a b-sequence."""
    if case.regseq is None:
        return None
    quotient, negative = tilde_quotient(d_values, series_eval(case.regseq, n))
    report.structure_ok = not negative
    if negative:
        report.notes.append(
            f"D does not factor through S(t)/(b): negative quotient in degrees {negative}"
        )
        logger.warning("%s: D / S(t)/(b) has negative coefficients in %s", case.label, negative,
                       extra=case_extra(case.label))
    bound = case.tilde_bound.series(n) if case.tilde_bound else None
    for d in range(1, n + 1):
        b = bound[d] if bound else None
        report.tilde_rows.append(
            TildeRow(d, quotient[d], b, quotient[d] <= b if bound else None)
        )
    return quotient


def _factorization(report: VerificationReport, case: CaseSpec, hf_ker: list[int], n: int):
    expected = case.factorization
    if expected is None:
        return
    report.factorization_ok = hf_ker == series_eval(expected, n)
    if not report.factorization_ok:
        logger.warning("%s: HF(S/Ker) does not factor as %s", case.label, expected,
                       extra=case_extra(case.label))


def verify_case(
    case: CaseSpec,
    max_degree: int | None = None,
    method: str | None = None,
    suites: bool = False,
) -> VerificationReport:
    """Run every check a case calls for.

    Raises:
        ConfigError: ``max_degree`` is below the largest generator degree.
        ContainmentError: Im is not contained in Ker.
        MethodDisagreement: the two Hilbert-function methods differ.
    """
    n, method = _resolve(max_degree, method)
    problems = case.check(n)
    if problems:
        raise CatalogError(f"case {case.label}: {'; '.join(problems)}")
    logger.info("Verifying %s through degree %d (method %s)", case.label, n, method,
                extra=case_extra(case.label, n))

    report = _new_report(case, n, method)
    if case.kind is CaseKind.BOUND_ONLY:
        _bound_only(report, case, n)
    else:
        _defect_or_flag(report, case, n, method)

    if suites:
        _attach_suites(report, case)
    if report.mismatches:
        logger.warning("%s: claim mismatch in degrees %s", case.label, report.mismatches,
                       extra=case_extra(case.label))
    logger.info("%s: %s", case.label, "passed" if report.passed else "FAILED",
                extra=case_extra(case.label))
    return report


def _defect_or_flag(report: VerificationReport, case: CaseSpec, n: int, method: str) -> None:
    ker = case.ker_ideal()
    im = case.im_ideal() if case.kind is CaseKind.DEFECT else None
    top = max(ker.max_generator_degree, im.max_generator_degree if im else 0)
    if n < top:
        raise ConfigError(f"max degree {n} is below the largest generator degree {top} of {case.label}")

    if im is not None:
        defect = defect_series(ker, im, n, method)
        report.containment_ok = True
        hf_ker, hf_im, d_values = defect.hf_ker, defect.hf_im, defect.values
    else:
        hf_ker = hilbert_function(ker, n, method)
    if method == "both":
        report.method_agreement = True
    report.truncated_basis = ker.truncated or bool(im and im.truncated)
    if report.truncated_basis:
        report.notes.append(f"Groebner bases truncated at degree {n}; results hold through degree {n}")
    _factorization(report, case, hf_ker, n)

    if im is None:
        flag = series_eval(case.claimed_flag, n) if case.claimed_flag else None
        for d in range(1, n + 1):
            claimed = flag[d] if flag else None
            report.rows.append(
                ReportRow(d, hf_ker[d], None, None, claimed, hf_ker[d] == claimed if flag else None)
            )
        return

    claimed_series = series_eval(case.claimed_D, n) if case.claimed_D is not None else None
    for d in range(1, n + 1):
        claimed = claimed_series[d] if claimed_series else None
        match = d_values[d] == claimed if claimed_series else None
        report.rows.append(ReportRow(d, hf_ker[d], hf_im[d], d_values[d], claimed, match))

    quotient = _tilde(report, case, d_values, n)
    for reading in case.readings:
        computed = quotient if reading.target is Target.TILDE else d_values
        if computed is not None:
            report.readings[reading.name] = series_eval(reading.series, n) == computed

    if case.vanishing_degree is not None:
        window = min(case.vanishing_degree, n)
        nonzero = [d for d in range(1, window + 1) if d_values[d]]
        report.notes.append(
            f"D vanishes through Chow degree {window}: {'yes' if not nonzero else 'no'}"
            + (f" (first nonzero degree {nonzero[0]})" if nonzero else "")
        )


def _bound_only(report: VerificationReport, case: CaseSpec, n: int) -> None:
    if case.tilde_bound is None:
        raise CatalogError(f"case {case.label} has no bound to evaluate")
    base = case.tilde_bound.series(n)
    base[0] += 1
    bound = series_mul(base, series_eval(PolyAlgebra(case.upper_degrees), n))
    bound[0] = 0
    for d in range(1, n + 1):
        report.tilde_rows.append(TildeRow(d, None, bound[d], None))


# ── Split/versal law ────────────────────────────────────────────────


@dataclass
class LawResult:
    family: str
    max_degree: int
    split: list[int]
    versal: list[int]
    gap: list[int]

    @property
    def difference(self) -> list[int]:
        return series_sub(self.split, self.versal)

    @property
    def ok(self) -> bool:
        return self.difference == self.gap


def gap_series(case: CaseSpec) -> SeriesExpr:
    """Expected D(split) - D(versal) for a family with a b-sequence."""
    if case.regseq is None:
        raise CatalogError(f"case {case.id} has no b-sequence")
    if case.id.startswith("so_odd"):
        return Tensor((ExteriorPlus(case.b_degrees), case.regseq))
    count = 2 * case.prime - 2
    return Tensor((FreeModule(case.b_degrees[:count]), case.regseq))


def split_versal_law(family: str, max_degree: int | None = None, method: str | None = None) -> LawResult:
    """Compare D(split) - D(versal) with the family's gap series."""
    n, method = _resolve(max_degree, method)
    split = verify_case(build_case(family, "split"), n, method)
    versal_case = build_case(family, "versal")
    versal = verify_case(versal_case, n, method)
    result = LawResult(
        family=family,
        max_degree=n,
        split=[row.D for row in split.rows],
        versal=[row.D for row in versal.rows],
        gap=series_eval(gap_series(versal_case), n)[1:],
    )
    logger.info("Split/versal law for %s: %s", family, "holds" if result.ok else "FAILS")
    return result


# ── Jobs ────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class CaseJob:
    """A picklable verification request."""

    case_id: str | None = None
    path: str | None = None
    scenario: str | None = None
    max_degree: int | None = None
    method: str | None = None
    suites: bool = False


def load_job_case(job: CaseJob) -> CaseSpec:
    if job.path:
        return load_case_file(job.path, job.scenario)
    if not job.case_id:
        raise CatalogError("a job needs a case id or a case file")
    return build_case(job.case_id, job.scenario)


def run_case_job(job: CaseJob) -> VerificationReport:
    return verify_case(load_job_case(job), job.max_degree, job.method, job.suites)


def verify_jobs(jobs: list[CaseJob], workers: int = 1) -> list[VerificationReport]:
    """Run jobs, in a process pool when ``workers > 1``; reports keep job order."""
    if workers <= 1 or len(jobs) <= 1:
        return [run_case_job(job) for job in jobs]
    logger.info("Running %d cases on %d workers", len(jobs), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_case_job, jobs))
