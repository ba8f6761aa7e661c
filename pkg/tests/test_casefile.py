"""JSON case files, including the shipped golden files."""

import json

import pytest

from chowdefect.catalog import (
    base_case,
    build_case,
    case_from_dict,
    case_to_dict,
    dump_case,
    list_cases,
    load_case_file,
)
from chowdefect.catalog.cases import split_case_id
from chowdefect.errors import CatalogError

GOLDEN = {
    "pu3": "pu3",
    "spin7": "spin7",
    "spin9": "spin9",
    "f4_top": "f4_top",
    "f4_chow": "f4_chow",
    "so_odd_3": "so_odd:3",
    "spin_stable_6_12": "spin_stable:6:12",
    "pgl_flag_3": "pgl_flag:3",
    "e_upper": "e_upper:10,12,14",
}


def _mathematical(data: dict) -> dict:
    """Case-file data without its free-text fields."""
    data = {k: v for k, v in data.items() if k not in ("provenance", "notes")}
    data["scenarios"] = {
        name: {k: v for k, v in s.items() if k != "notes"} for name, s in data["scenarios"].items()
    }
    return data


@pytest.mark.parametrize(("stem", "case_id"), GOLDEN.items())
def test_golden_file_matches_builtin(cases_dir, stem, case_id):
    data = json.loads((cases_dir / f"{stem}.json").read_text(encoding="utf-8"))
    from_file = case_to_dict(case_from_dict(data))
    builtin = case_to_dict(base_case(case_id))
    assert _mathematical(from_file) == _mathematical(builtin)


@pytest.mark.parametrize("case_id", list_cases())
def test_every_catalog_case_dumps_and_loads(tmp_path, case_id):
    path = tmp_path / "case.json"
    path.write_text(dump_case(base_case(case_id)), encoding="utf-8")
    data = json.loads(path.read_text(encoding="utf-8"))
    assert case_to_dict(case_from_dict(data)) == case_to_dict(base_case(case_id))
    _, _, scenario = split_case_id(case_id)
    assert load_case_file(path, scenario=scenario).scenario == build_case(case_id).scenario


def test_variant_file_loads(cases_dir):
    case = load_case_file(cases_dir / "pu3_c1_variant.json")
    assert case.id == "pu3_c1_variant"
    assert case.im_generators[-1] == "c2^3 + c1*c2^2*t1"


def test_scenario_applied_on_load(cases_dir):
    assert load_case_file(cases_dir / "spin7.json").scenario == "versal"
    split = load_case_file(cases_dir / "spin7.json", scenario="split")
    assert split.ker_generators == ("c2", "c3", "c1^4")


def test_family_file_loads_with_scenario(cases_dir):
    case = load_case_file(cases_dir / "so_odd_3.json", scenario="split")
    assert case.id == "so_odd:3"
    assert case.ker_generators == ("c1", "c2", "c3")
    assert load_case_file(cases_dir / "e_upper.json").upper_degrees == (10, 12, 14)


def test_dump_is_loadable(tmp_path):
    path = tmp_path / "so_odd.json"
    path.write_text(dump_case(base_case("so_odd:3")), encoding="utf-8")
    case = load_case_file(path, scenario="split")
    assert case.scenario == "split"
    assert case_to_dict(case_from_dict(json.loads(path.read_text()))) == case_to_dict(base_case("so_odd:3"))


def test_missing_fields():
    with pytest.raises(CatalogError, match="missing"):
        case_from_dict({"id": "x"})


def test_bad_series():
    data = {"id": "x", "prime": 3, "variables": 2, "claimed_D": "freemod(1"}
    with pytest.raises(CatalogError, match="claimed_D"):
        case_from_dict(data)


def test_bad_generators():
    data = {"id": "x", "prime": 3, "variables": 2, "ker_generators": "c1^2"}
    with pytest.raises(CatalogError):
        case_from_dict(data)


def test_bad_kind():
    data = {"id": "x", "prime": 3, "variables": 2, "kind": "weird"}
    with pytest.raises(CatalogError):
        case_from_dict(data)


def test_unparsable_literal_fails_on_load(tmp_path):
    path = tmp_path / "broken.json"
    data = {"id": "broken", "prime": 3, "variables": 2,
            "ker_generators": ["c1^2"], "im_generators": ["c1^2 +"]}
    path.write_text(json.dumps(data), encoding="utf-8")
    with pytest.raises(CatalogError):
        load_case_file(path)


def test_not_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(CatalogError, match="not valid JSON"):
        load_case_file(path)


def test_missing_file(tmp_path):
    with pytest.raises(CatalogError):
        load_case_file(tmp_path / "absent.json")
