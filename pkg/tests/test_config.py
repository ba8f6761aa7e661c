"""Configuration, logging setup and error pickling."""

import json
import logging
import pickle

from chowdefect.config import Config, get_config, reload_config, set_config
from chowdefect.errors import ContainmentError, MethodDisagreement
from chowdefect.log import JsonLineFormatter, case_extra, get_logger, setup_logging


def test_defaults_validate():
    assert Config().validate() == []


def test_validation_messages():
    errors = Config(max_degree=0, method="x", output_format="yaml", workers=0).validate()
    assert len(errors) == 4
    assert Config(dickson_max_h=5).validate() == ["dickson_max_h must be between 1 and 4"]


def test_override_ignores_none():
    config = Config().override(max_degree=12, method=None)
    assert config.max_degree == 12
    assert config.method == "both"


def test_from_env(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("CHOWD_MAX_DEGREE", "16")
    monkeypatch.setenv("CHOWD_METHOD", "LINALG")
    monkeypatch.setenv("CHOWD_WORKERS", "3")
    config = Config.from_env()
    assert (config.max_degree, config.method, config.workers) == (16, "linalg", 3)


def test_env_file(monkeypatch, tmp_path):
    monkeypatch.setenv("CHOWD_FORMAT", "text")
    monkeypatch.delenv("CHOWD_FORMAT")
    env = tmp_path / "run.env"
    env.write_text("CHOWD_FORMAT=json\n", encoding="utf-8")
    assert Config.from_env(env).output_format == "json"


def test_global_config(monkeypatch):
    set_config(Config(max_degree=9))
    assert get_config().max_degree == 9
    monkeypatch.setenv("CHOWD_MAX_DEGREE", "11")
    assert reload_config().max_degree == 11


def test_reload_from_env_file(monkeypatch, tmp_path):
    monkeypatch.setenv("CHOWD_METHOD", "both")
    monkeypatch.delenv("CHOWD_METHOD")
    env = tmp_path / "run.env"
    env.write_text("CHOWD_METHOD=groebner\n", encoding="utf-8")
    config = reload_config(env)
    assert config.method == "groebner"
    assert get_config() is config


def test_logging_setup():
    setup_logging(level="DEBUG", fmt="plain", force=True)
    assert logging.getLogger("chowdefect").level == logging.DEBUG
    setup_logging(level="WARNING", fmt="json", force=True)
    assert get_logger("chowdefect.test").getEffectiveLevel() == logging.WARNING
    setup_logging(level="INFO", fmt="rich", force=True)


def test_json_lines_carry_case_context():
    record = logging.LogRecord("chowdefect.x", logging.INFO, __file__, 1, "slice %d", (3,), None)
    for key, value in case_extra("pu3", 3).items():
        setattr(record, key, value)
    payload = json.loads(JsonLineFormatter().format(record))
    assert payload["msg"] == "slice 3"
    assert (payload["case"], payload["degree"]) == ("pu3", 3)


def test_errors_survive_pickling():
    error = pickle.loads(pickle.dumps(ContainmentError("Im not in Ker", offending=["c1"])))
    assert error.offending == ["c1"]
    dump = ["S_4: 5 monomials"]
    raised = MethodDisagreement(4, 13, 12, ideal="Ker", slice_dump=dump)
    disagreement = pickle.loads(pickle.dumps(raised))
    assert (disagreement.degree, disagreement.staircase, disagreement.linalg) == (4, 13, 12)
    assert "degree 4" in str(disagreement)
    assert disagreement.slice_dump == dump
