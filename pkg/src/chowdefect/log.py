"""Logging for chow-defect.

Modules log through ``get_logger(__name__)``; the first call installs a
handler on the ``chowdefect`` logger. The environment picks the handler:

    LOG_LEVEL   DEBUG | INFO | WARNING | ERROR   (INFO)
    LOG_FORMAT  rich | json | plain              (rich)

Records may carry ``case`` and ``degree`` extras (see ``case_extra``); the
json handler emits them as fields so per-degree work of parallel case runs
can be told apart.
"""

from __future__ import annotations

import json
import logging
import os
import sys
from collections.abc import Callable
from datetime import datetime, timezone

ROOT = "chowdefect"
CONTEXT_FIELDS = ("case", "degree")

_configured = False


class JsonLineFormatter(logging.Formatter):
    def format(self, record: logging.LogRecord) -> str:
        payload = {
            "ts": datetime.fromtimestamp(record.created, timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "process": record.processName,
            "msg": record.getMessage(),
        }
        for field in CONTEXT_FIELDS:
            value = getattr(record, field, None)
            if value is not None:
                payload[field] = value
        if record.exc_info:
            payload["exc"] = self.formatException(record.exc_info)
        return json.dumps(payload, ensure_ascii=False)


def _stderr(formatter: logging.Formatter) -> logging.Handler:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)
    return handler


def _rich(level: int) -> logging.Handler:
    from rich.console import Console
    from rich.logging import RichHandler

    handler = RichHandler(
        console=Console(stderr=True),
        show_path=False,
        markup=False,
        rich_tracebacks=True,
        tracebacks_show_locals=level <= logging.DEBUG,
    )
    handler.setFormatter(logging.Formatter("%(message)s", datefmt="[%X]"))
    return handler


def _json(level: int) -> logging.Handler:
    return _stderr(JsonLineFormatter())


def _plain(level: int) -> logging.Handler:
    return _stderr(logging.Formatter(
        "%(asctime)s %(levelname)-7s %(processName)s %(name)s: %(message)s",
        datefmt="%H:%M:%S",
    ))


HANDLERS: dict[str, Callable[[int], logging.Handler]] = {
    "rich": _rich,
    "json": _json,
    "plain": _plain,
}


def setup_logging(level: str | None = None, fmt: str | None = None, force: bool = False) -> None:
    """Install the handler on the package logger; a no-op after the first call unless forced."""
    global _configured
    if _configured and not force:
        return
    _configured = True

    numeric = getattr(logging, (level or os.getenv("LOG_LEVEL", "INFO")).upper(), logging.INFO)
    builder = HANDLERS.get((fmt or os.getenv("LOG_FORMAT", "rich")).lower(), _plain)
    try:
        handler = builder(numeric)
    except ImportError:
        handler = _plain(numeric)
    handler.setLevel(numeric)

    package = logging.getLogger(ROOT)
    package.handlers.clear()
    package.addHandler(handler)
    package.setLevel(numeric)
    package.propagate = False

    # sympy's matrix and cache code is chatty at DEBUG
    logging.getLogger("sympy").setLevel(logging.WARNING)


def case_extra(case: str, degree: int | None = None) -> dict:
    """``extra=`` mapping tagging a record with its case and degree."""
    return {"case": case, "degree": degree}


def get_logger(name: str) -> logging.Logger:
    setup_logging()
    return logging.getLogger(name)
