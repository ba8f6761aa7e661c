"""Rendering of verification reports, suite results and law checks.

JSON output has a fixed field order and no timestamps, so identical runs give
byte-identical documents. Text output is rich tables rendered to a string.
"""

from __future__ import annotations

import io
import json

from rich.console import Console
from rich.table import Table

from chowdefect.catalog.models import VerificationReport
from chowdefect.catalog.pipeline import LawResult
from chowdefect.suites import SuiteResult


def report_to_dict(report: VerificationReport) -> dict:
    return {
        "case": report.case,
        "scenario": report.scenario,
        "prime": report.prime,
        "max_degree": report.max_degree,
        "method": report.method,
        "containment_ok": report.containment_ok,
        "factorization_ok": report.factorization_ok,
        "rows": [row.to_dict() for row in report.rows],
        "suites": report.suites,
        "notes": report.notes,
        "kind": report.kind.value,
        "method_agreement": report.method_agreement,
        "truncated_basis": report.truncated_basis,
        "structure_ok": report.structure_ok,
        "tilde_rows": [row.to_dict() for row in report.tilde_rows],
        "readings": report.readings,
        "provenance": report.provenance,
        "passed": report.passed,
    }


def _console() -> Console:
    return Console(file=io.StringIO(), width=110, color_system=None, highlight=False)


def _flag(value: bool | None) -> str:
    if value is None:
        return "-"
    return "ok" if value else "FAIL"


def _cell(value) -> str:
    return "-" if value is None else str(value)


def render_text(report: VerificationReport) -> str:
    console = _console()
    console.print(f"Case {report.label}  (p={report.prime}, N={report.max_degree}, method={report.method})")
    console.print(
        f"  containment: {_flag(report.containment_ok)}   "
        f"factorization: {_flag(report.factorization_ok)}   "
        f"methods agree: {_flag(report.method_agreement)}   "
        f"truncated basis: {'yes' if report.truncated_basis else 'no'}"
    )

    if report.rows:
        table = Table(show_edge=False)
        for name in ("d", "HF(S/Ker)", "HF(S/Im)", "D", "claimed", "match"):
            table.add_column(name, justify="right")
        for row in report.rows:
            table.add_row(
                str(row.d), _cell(row.hf_ker_quotient), _cell(row.hf_im_quotient),
                _cell(row.D), _cell(row.claimed), _flag(row.match),
            )
        console.print(table)

    if report.tilde_rows:
        table = Table(title="tilde-D against the bound", show_edge=False)
        for name in ("d", "tilde-D", "bound", "within"):
            table.add_column(name, justify="right")
        for row in report.tilde_rows:
            table.add_row(str(row.d), _cell(row.tilde_D), _cell(row.bound), _flag(row.within_bound))
        console.print(table)

    for name, agrees in report.readings.items():
        console.print(f"  reading '{name}': {'agrees' if agrees else 'differs'}")
    for name, suite in report.suites.items():
        console.print(f"  suite {name}: {'passed' if suite.get('passed') else 'FAILED'}")
    for note in report.notes:
        console.print(f"  note: {note}")
    for source in report.provenance:
        console.print(f"  source: {source}")
    console.print(f"Result: {'PASS' if report.passed else 'FAIL'}")
    return console.file.getvalue()


def emit_report(report: VerificationReport, fmt: str = "text") -> str:
    """Render one report as ``json`` or ``text``."""
    if fmt == "json":
        return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"
    return render_text(report)


def emit_reports(reports: list[VerificationReport], fmt: str = "text") -> str:
    """Render several reports; one report renders exactly like emit_report."""
    if len(reports) == 1:
        return emit_report(reports[0], fmt)
    if fmt == "json":
        document = {
            "passed": all(r.passed for r in reports),
            "reports": [report_to_dict(r) for r in reports],
        }
        return json.dumps(document, indent=2, ensure_ascii=False) + "\n"
    return "\n".join(render_text(r) for r in reports)


def render_suite(suite: SuiteResult, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps({suite.name: suite.to_dict()}, indent=2, ensure_ascii=False) + "\n"
    console = _console()
    table = Table(title=f"{suite.name} suite", show_edge=False)
    table.add_column("check")
    table.add_column("result", justify="right")
    table.add_column("detail")
    for row in suite.rows:
        result = "ok" if row.passed else ("FAIL" if row.required else "differs")
        table.add_row(row.name, result, row.detail)
    console.print(table)
    console.print(f"Result: {'PASS' if suite.passed else 'FAIL'}")
    return console.file.getvalue()


def render_law(result: LawResult, fmt: str = "text") -> str:
    if fmt == "json":
        document = {
            "family": result.family,
            "max_degree": result.max_degree,
            "ok": result.ok,
            "rows": [
                {"d": d, "split": s, "versal": v, "difference": s - v, "gap": g}
                for d, (s, v, g) in enumerate(zip(result.split, result.versal, result.gap), start=1)
            ],
        }
        return json.dumps(document, indent=2, ensure_ascii=False) + "\n"
    console = _console()
    table = Table(title=f"D(split) - D(versal) for {result.family}", show_edge=False)
    for name in ("d", "split", "versal", "difference", "gap"):
        table.add_column(name, justify="right")
    for d, (s, v, g) in enumerate(zip(result.split, result.versal, result.gap), start=1):
        table.add_row(str(d), str(s), str(v), str(s - v), str(g))
    console.print(table)
    console.print(f"Result: {'PASS' if result.ok else 'FAIL'}")
    return console.file.getvalue()
