"""Reduced powers over F_p and Milnor derivations over F_2."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chowdefect.algebra import flag_context, make_context, q_context
from chowdefect.errors import ContextError, GradingError
from chowdefect.steenrod import (
    MilnorDerivation,
    TotalPowerMap,
    milnor_q,
    reduced_power,
    total_power,
)
from chowdefect.symfun import toda_generators


def test_first_power_on_a_generator(f3_2):
    t1 = f3_2.gen("t1")
    assert reduced_power(1, t1) == t1**3
    assert reduced_power(0, t1) == t1
    assert not reduced_power(2, t1)


def test_total_power(f3_2):
    t1, t2 = f3_2.gens
    assert total_power(t1 * t2) == (t1 + t1**3) * (t2 + t2**3)


def test_inhomogeneous_input(f3_2):
    t1, t2 = f3_2.gens
    with pytest.raises(GradingError):
        reduced_power(1, t1 + t2**2)


def test_negative_index(f3_2):
    with pytest.raises(ValueError):
        reduced_power(-1, f3_2.gen("t1"))


def test_zero(f3_2):
    assert not reduced_power(1, f3_2.zero)


def test_total_power_needs_unit_weights():
    with pytest.raises(ContextError):
        TotalPowerMap(make_context(3, ("a", "b"), (2, 3)))


class TestTodaClasses:
    @pytest.fixture
    def named(self, f3_4):
        return {name: c.value for name, c in toda_generators(f3_4).items()}

    def test_p1(self, named):
        p1, pbar2 = named["p1"], named["pbar2"]
        assert reduced_power(1, p1) == p1**2 - pbar2
        assert reduced_power(2, p1) == p1**3
        assert not reduced_power(3, p1)

    def test_pbar2(self, named):
        p1, pbar2, pbar5 = named["p1"], named["pbar2"], named["pbar5"]
        assert reduced_power(1, pbar2) == p1 * pbar2
        assert reduced_power(3, pbar2) == pbar5 - p1 * pbar2**2

    def test_pbar5(self, named):
        assert not reduced_power(1, named["pbar5"])


@settings(max_examples=30, deadline=None)
@given(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
)
def test_cartan_formula(a, b):
    ctx = flag_context(3, 2)
    f = ctx.from_terms({a: 1})
    g = ctx.from_terms({b: 1})
    assert reduced_power(1, f * g) == reduced_power(1, f) * g + f * reduced_power(1, g)


class TestMilnor:
    def test_degree_shift(self):
        assert MilnorDerivation(0).degree_shift == 1
        assert MilnorDerivation(2).degree_shift == 7

    def test_on_generators(self):
        z, x1 = q_context(1).gens
        assert milnor_q(0, x1) == x1**2
        assert milnor_q(1, x1) == x1**4
        assert not milnor_q(0, x1**2)

    def test_needs_f2(self, f3_2):
        with pytest.raises(ContextError):
            milnor_q(0, f3_2.gen("t1"))

    def test_negative_index(self):
        with pytest.raises(ValueError):
            MilnorDerivation(-1)

    @settings(max_examples=30, deadline=None)
    @given(
        st.dictionaries(
            st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
            st.just(1),
            max_size=5,
        ),
        st.integers(0, 2),
    )
    def test_squares_to_zero(self, terms, n):
        ctx = q_context(2)
        f = ctx.from_terms(terms)
        assert not milnor_q(n, milnor_q(n, f))

    def test_leibniz(self):
        z, x1, x2 = q_context(2).gens
        f, g = z * x1, x2**3 + z
        assert milnor_q(1, f * g) == milnor_q(1, f) * g + f * milnor_q(1, g)
