"""Series arithmetic, expression nodes and their text form."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chowdefect.errors import ExpressionError
from chowdefect.hilbert import (
    ZERO,
    AugmentationIdeal,
    Exterior,
    ExteriorPlus,
    FreeModule,
    PolyAlgebra,
    RegSeqQuotient,
    Sum,
    Tensor,
    Truncated,
    bounded_monomial_series,
    parse_series,
    series_divide,
    series_eval,
    series_mul,
)
from chowdefect.hilbert.series import SERIES_RING, X


class TestArithmetic:
    def test_mul_truncates(self):
        assert series_mul([1, 1, 0], [1, 1, 0]) == [1, 2, 1]
        assert series_mul([1, 1], [1, 1, 1]) == [1, 2]

    def test_divide(self):
        assert series_divide([1, 2, 1], [1, 1, 0]) == [1, 1, 0]

    def test_divide_needs_unit_constant(self):
        with pytest.raises(ExpressionError):
            series_divide([1, 2], [0, 1])

    @settings(max_examples=50, deadline=None)
    @given(
        st.lists(st.integers(-5, 5), min_size=6, max_size=6),
        st.lists(st.integers(-3, 3), min_size=5, max_size=5),
    )
    def test_divide_inverts_mul(self, a, tail):
        b = [1] + tail
        assert series_divide(series_mul(a, b), b) == a


class TestNodes:
    def test_poly(self):
        assert series_eval(PolyAlgebra((1, 1)), 3) == [1, 2, 3, 4]
        assert series_eval(PolyAlgebra((2,)), 4) == [1, 0, 1, 0, 1]

    def test_regseq(self):
        assert series_eval(RegSeqQuotient.standard((1, 2)), 4) == [1, 1, 0, 0, 0]
        assert sum(series_eval(RegSeqQuotient.standard((2, 3, 4)), 12)) == 24
        assert sum(series_eval(RegSeqQuotient.standard((2, 4, 6, 8)), 30)) == 384

    def test_elements_are_truncated_ring_series(self):
        element = RegSeqQuotient.standard((2, 3, 4)).element(20)
        assert element.ring == SERIES_RING
        assert element == 1 + 3*X + 5*X**2 + 6*X**3 + 5*X**4 + 3*X**5 + X**6
        assert PolyAlgebra((1,)).element(5) == sum(X**k for k in range(5))

    def test_f4_invariant_series(self):
        from chowdefect.weyl import F4_INVARIANT_SERIES

        values = series_eval(F4_INVARIANT_SERIES, 10)
        # p1^a pbar2^b pbar5^c
        assert values == [1, 0, 1, 0, 2, 0, 2, 0, 3, 0, 4]

    def test_exterior(self):
        assert series_eval(Exterior((4, 5)), 9) == [1, 0, 0, 0, 1, 1, 0, 0, 0, 1]
        assert series_eval(ExteriorPlus((4, 5)), 9) == [0, 0, 0, 0, 1, 1, 0, 0, 0, 1]

    def test_truncated(self):
        assert series_eval(Truncated(4, 4), 13) == [1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0]

    def test_free_module(self):
        assert series_eval(FreeModule((3, 4, 5)), 5) == [0, 0, 0, 1, 1, 1]
        assert series_eval(ZERO, 3) == [0, 0, 0, 0]

    def test_pu3_claim(self):
        claim = Tensor((FreeModule((3, 4, 5)), RegSeqQuotient.standard((1, 2))))
        assert series_eval(claim, 7) == [0, 0, 0, 1, 2, 2, 1, 0]

    def test_sum_and_aug(self):
        expr = Sum((FreeModule((0, 1)), AugmentationIdeal(Truncated(1, 3))))
        assert series_eval(expr, 3) == [1, 2, 1, 0]

    def test_bad_degrees(self):
        with pytest.raises(ExpressionError):
            series_eval(FreeModule((-1,)), 3)
        with pytest.raises(ExpressionError):
            series_eval(PolyAlgebra((0,)), 3)

    def test_not_an_expression(self):
        with pytest.raises(ExpressionError):
            series_eval([1, 2, 3], 3)

    def test_negative_truncation(self):
        with pytest.raises(ExpressionError):
            series_eval(ZERO, -1)


class TestBoundedMonomials:
    def test_caps_and_exclusions(self):
        # p1^a pbar2^b p3^c p4^e, |I| >= 2, capped, no multiples of p1*pbar2
        values = bounded_monomial_series((2, 4, 6, 8), (1, None, 2, 2), 10, [(1, 1, 0, 0)], 2)
        assert values[:9] == [0, 0, 0, 0, 0, 0, 0, 0, 2]
        assert values[10] == 2

    def test_cap_count_mismatch(self):
        with pytest.raises(ExpressionError):
            bounded_monomial_series((1, 2), (None,), 4)


class TestTextForm:
    @pytest.mark.parametrize(
        "text",
        [
            "poly(1,1,2)",
            "regseq(vars=2, degs=(1,2))",
            "regseq(weights=(1,2), degs=(4,))",
            "extplus(4,5)",
            "ext(5)",
            "trunc(4, 4)",
            "freemod(3,4,5)",
            "freemod()",
            "tensor(freemod(3,4,5), regseq(vars=2, degs=(1,2)))",
            "sum(freemod(1), aug(trunc(2, 3)))",
        ],
    )
    def test_canonical_text_is_stable(self, text):
        expr = parse_series(text)
        assert parse_series(expr.to_text()) == expr

    def test_regseq_text(self):
        assert parse_series("regseq(vars=3, degs=(2,3,4))") == RegSeqQuotient.standard((2, 3, 4))
        assert parse_series("regseq(weights=(2,4,10,18,24), degs=30)") == RegSeqQuotient(
            (2, 4, 10, 18, 24), (30,)
        )

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "bogus(1)",
            "poly(1",
            "tensor(1, 2)",
            "freemod(ext(1))",
            "regseq(degs=(1,2))",
            "trunc(1)",
            "poly(1) extra",
            "poly(1; 2)",
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(ExpressionError):
            parse_series(text)
