"""Shared fixtures: small flag rings and the ideals of the PU(3) case."""

from pathlib import Path

import pytest

from chowdefect.algebra import flag_context, parse_polynomial
from chowdefect.config import Config, set_config
from chowdefect.groebner import IdealHandle
from chowdefect.symfun import alias_resolver

CASES_DIR = Path(__file__).resolve().parent.parent / "cases"


@pytest.fixture(autouse=True)
def default_config():
    """Every test starts from the built-in defaults, whatever the environment says."""
    set_config(Config())
    yield
    set_config(Config())


@pytest.fixture
def f3_2():
    return flag_context(3, 2)


@pytest.fixture
def f2_3():
    return flag_context(2, 3)


@pytest.fixture
def f3_4():
    return flag_context(3, 4)


def ideal(ctx, *literals, label=""):
    """An IdealHandle from polynomial literals over the named classes of ``ctx``."""
    resolve = alias_resolver(ctx)
    polys = [parse_polynomial(text, ctx, resolve) for text in literals]
    return IdealHandle.from_polys(ctx, polys, names=list(literals), label=label)


def poly(ctx, text):
    return parse_polynomial(text, ctx, alias_resolver(ctx))


@pytest.fixture
def pu3_ker(f3_2):
    return ideal(f3_2, "c1^2", "c1*c2", "c2^2", label="Ker")


@pytest.fixture
def pu3_im(f3_2):
    return ideal(f3_2, "c1^2", "c1^3", "c2^3", label="Im")


@pytest.fixture
def cases_dir():
    return CASES_DIR
