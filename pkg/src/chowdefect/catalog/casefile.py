"""JSON case files.

A case file mirrors CaseSpec: polynomial literals in the algebra grammar,
series in the hilbert grammar. Scenarios are stored unapplied; loading applies
the requested (or default) scenario.

    {
      "id": "pu3",
      "prime": 3,
      "variables": 2,
      "kind": "defect",
      "ker_generators": ["c1^2", "c1*c2", "c2^2"],
      "im_generators": ["c1^2", "c1^3", "c2^3"],
      "b_degrees": [1, 2],
      "claimed_D": "tensor(freemod(3,4,5), regseq(vars=2, degs=(1,2)))",
      ...
    }
"""

from __future__ import annotations

import json
from pathlib import Path

from chowdefect.catalog.models import BoundSpec, CaseKind, CaseSpec, Reading, Scenario, Target
from chowdefect.errors import CatalogError, ChowDefectError
from chowdefect.hilbert.series import SeriesExpr, parse_series

REQUIRED = ("id", "prime", "variables")


def _series_text(expr: SeriesExpr | None) -> str | None:
    return expr.to_text() if expr is not None else None


def _series(data: dict, key: str, where: str) -> SeriesExpr | None:
    text = data.get(key)
    if text is None:
        return None
    try:
        return parse_series(text)
    except ChowDefectError as exc:
        raise CatalogError(f"{where}: bad {key}: {exc}") from exc


def _literals(data: dict, key: str) -> tuple[str, ...] | None:
    values = data.get(key)
    if values is None:
        return None
    if not isinstance(values, list) or not all(isinstance(v, str) for v in values):
        raise CatalogError(f"{key} must be a list of polynomial strings")
    return tuple(values)


def case_to_dict(case: CaseSpec) -> dict:
    """Serialize a case (scenarios unapplied) in a stable field order."""
    return {
        "id": case.id,
        "prime": case.prime,
        "variables": case.variables,
        "kind": case.kind.value,
        "ker_generators": list(case.ker_generators),
        "im_generators": list(case.im_generators),
        "b_degrees": list(case.b_degrees),
        "claimed_D": _series_text(case.claimed_D),
        "claimed_flag": _series_text(case.claimed_flag),
        "motive_series": _series_text(case.motive_series),
        "tilde_bound": case.tilde_bound.to_dict() if case.tilde_bound else None,
        "upper_degrees": list(case.upper_degrees),
        "vanishing_degree": case.vanishing_degree,
        "readings": [
            {"name": r.name, "series": r.series.to_text(), "target": r.target.value}
            for r in case.readings
        ],
        "scenarios": {
            name: {
                key: value
                for key, value in (
                    ("ker_generators", list(s.ker_generators) if s.ker_generators else None),
                    ("im_generators", list(s.im_generators) if s.im_generators else None),
                    ("claimed_D", _series_text(s.claimed_D)),
                    ("claimed_flag", _series_text(s.claimed_flag)),
                    ("motive_series", _series_text(s.motive_series)),
                    ("notes", list(s.notes) or None),
                )
                if value is not None
            }
            for name, s in case.scenarios.items()
        },
        "default_scenario": case.default_scenario,
        "provenance": list(case.provenance),
        "notes": list(case.notes),
    }


def case_from_dict(data: dict) -> CaseSpec:
    """Build an unapplied CaseSpec from case-file data.

    Raises CatalogError on missing fields or unparsable series.
    """
    missing = [key for key in REQUIRED if key not in data]
    if missing:
        raise CatalogError(f"case file is missing {', '.join(missing)}")
    where = f"case {data['id']}"
    try:
        kind = CaseKind(data.get("kind", CaseKind.DEFECT.value))
        readings = tuple(
            Reading(r["name"], parse_series(r["series"]), Target(r.get("target", "D")))
            for r in data.get("readings", [])
        )
        bound = data.get("tilde_bound")
        scenarios = {
            name: Scenario(
                ker_generators=_literals(s, "ker_generators"),
                im_generators=_literals(s, "im_generators"),
                claimed_D=_series(s, "claimed_D", where),
                claimed_flag=_series(s, "claimed_flag", where),
                motive_series=_series(s, "motive_series", where),
                notes=tuple(s.get("notes", [])),
            )
            for name, s in data.get("scenarios", {}).items()
        }
        return CaseSpec(
            id=str(data["id"]),
            prime=int(data["prime"]),
            variables=int(data["variables"]),
            kind=kind,
            ker_generators=_literals(data, "ker_generators") or (),
            im_generators=_literals(data, "im_generators") or (),
            b_degrees=tuple(int(d) for d in data.get("b_degrees", [])),
            claimed_D=_series(data, "claimed_D", where),
            claimed_flag=_series(data, "claimed_flag", where),
            motive_series=_series(data, "motive_series", where),
            tilde_bound=BoundSpec.from_dict(bound) if bound else None,
            upper_degrees=tuple(int(d) for d in data.get("upper_degrees", [])),
            vanishing_degree=data.get("vanishing_degree"),
            readings=readings,
            scenarios=scenarios,
            default_scenario=data.get("default_scenario"),
            provenance=tuple(data.get("provenance", [])),
            notes=tuple(data.get("notes", [])),
        )
    except CatalogError:
        raise
    except ChowDefectError as exc:
        raise CatalogError(f"{where}: {exc}") from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise CatalogError(f"{where}: invalid field ({exc})") from exc


def load_case_file(path: str | Path, scenario: str | None = None) -> CaseSpec:
    """Read a JSON case file and apply ``scenario`` (or the file's default)."""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise CatalogError(f"cannot read case file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CatalogError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise CatalogError(f"{path} must contain a JSON object")
    case = case_from_dict(data).with_scenario(scenario)
    # parse every literal now, so a broken file fails before any computation
    try:
        case.ker_ideal()
        case.im_ideal()
    except CatalogError:
        raise
    except ChowDefectError as exc:
        raise CatalogError(f"{path}: {exc}") from exc
    return case


def dump_case(case: CaseSpec) -> str:
    return json.dumps(case_to_dict(case), indent=2, ensure_ascii=False) + "\n"
