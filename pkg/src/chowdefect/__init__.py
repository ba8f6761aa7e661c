"""chow-defect - verification engine for defect quotients of mod-p Chow rings."""

__version__ = "0.1.0"

from chowdefect.catalog import build_case, list_cases, verify_case  # noqa: E402
from chowdefect.report import emit_report  # noqa: E402

__all__ = ["build_case", "emit_report", "list_cases", "verify_case"]
