"""Symmetric functions, Toda's classes, the Dickson expansion and the alias vocabulary."""

import pytest

from chowdefect.algebra import degree, flag_context, q_context
from chowdefect.config import Config, set_config
from chowdefect.errors import ContextError, SizeError
from chowdefect.symfun import (
    alias_resolver,
    dickson_expand,
    elem_symmetric,
    named_classes,
    pontryagin,
    toda_generators,
)


def test_elementary_symmetric(f3_2):
    t1, t2 = f3_2.gens
    assert elem_symmetric(f3_2, 0) == f3_2.one
    assert elem_symmetric(f3_2, 1) == t1 + t2
    assert elem_symmetric(f3_2, 2) == t1 * t2
    assert not elem_symmetric(f3_2, 3)


def test_pontryagin(f3_2):
    t1, t2 = f3_2.gens
    assert pontryagin(f3_2, 2) == t1**2 * t2**2
    assert degree(pontryagin(f3_2, 1)) == 2


def test_negative_index(f3_2):
    with pytest.raises(ValueError):
        elem_symmetric(f3_2, -1)


def test_toda_degrees(f3_4):
    named = toda_generators(f3_4)
    degrees = {name: c.chow_degree for name, c in named.items()}
    assert degrees == {"p1": 2, "pbar2": 4, "pbar5": 10, "pbar9": 18, "pbar12": 24, "r15": 30}


def test_toda_definitions(f3_4):
    named = toda_generators(f3_4)
    p1, p2, p3, p4 = (pontryagin(f3_4, k) for k in range(1, 5))
    assert named["pbar2"].value == p2 - p1**2
    assert named["pbar5"].value == p4 * p1 + p3 * (p2 - p1**2)
    assert named["pbar9"].value == p3**3


def test_toda_needs_f4_context(f3_2):
    with pytest.raises(ContextError):
        toda_generators(f3_2)
    with pytest.raises(ContextError):
        toda_generators(flag_context(2, 4))


def test_named_classes(f3_2, f3_4):
    assert set(named_classes(f3_2)) == {"c0", "c1", "c2", "p0", "p1", "p2"}
    assert {"pbar2", "pbar5", "r15"} <= set(named_classes(f3_4))


def test_alias_resolver(f2_3):
    resolve = alias_resolver(f2_3)
    assert resolve("e2") == elem_symmetric(f2_3, 1) ** 2
    assert resolve("c7") == f2_3.zero
    assert resolve("pbar2") is None
    assert resolve("t1") is None


class TestDickson:
    def test_h1(self):
        expansion = dickson_expand(1)
        z, x1 = q_context(1).gens
        assert expansion.e == z**2 + x1 * z
        assert expansion.d == (x1,)
        assert expansion.z_powers == [2, 1]
        assert expansion.is_dickson_form()

    def test_h2(self):
        expansion = dickson_expand(2)
        z, x1, x2 = q_context(2).gens
        assert expansion.d[1] == x1**2 + x1 * x2 + x2**2
        assert expansion.d[0] == x1**2 * x2 + x1 * x2**2
        assert expansion.z_powers == [4, 2, 1]
        assert expansion.is_dickson_form()

    def test_h3_degrees(self):
        expansion = dickson_expand(3)
        assert expansion.z_powers == [8, 4, 2, 1]
        assert [degree(d) for d in expansion.d] == [7, 6, 4]

    def test_size_cap(self):
        with pytest.raises(SizeError):
            dickson_expand(3, max_h=2)

    def test_cap_from_config(self):
        set_config(Config(dickson_max_h=1))
        with pytest.raises(SizeError):
            dickson_expand(2)
