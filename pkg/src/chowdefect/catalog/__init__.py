"""Verification cases, case files and the verification pipeline."""

from chowdefect.catalog.casefile import case_from_dict, case_to_dict, dump_case, load_case_file
from chowdefect.catalog.cases import base_case, build_case, families, list_cases
from chowdefect.catalog.models import (
    BoundSpec,
    CaseKind,
    CaseSpec,
    Reading,
    ReportRow,
    Scenario,
    Target,
    TildeRow,
    VerificationReport,
)
from chowdefect.catalog.pipeline import (
    CaseJob,
    LawResult,
    gap_series,
    run_case_job,
    split_versal_law,
    verify_case,
    verify_jobs,
)

__all__ = [
    "BoundSpec",
    "CaseJob",
    "CaseKind",
    "CaseSpec",
    "LawResult",
    "Reading",
    "ReportRow",
    "Scenario",
    "Target",
    "TildeRow",
    "VerificationReport",
    "base_case",
    "build_case",
    "case_from_dict",
    "case_to_dict",
    "dump_case",
    "families",
    "gap_series",
    "list_cases",
    "load_case_file",
    "run_case_job",
    "split_versal_law",
    "verify_case",
    "verify_jobs",
]
