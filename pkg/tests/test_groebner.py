"""Buchberger, normal forms and ideal membership."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chowdefect.algebra import flag_context, monomials_of_degree
from chowdefect.errors import ContextError, GradingError
from chowdefect.groebner import (
    IdealHandle,
    buchberger,
    contains,
    groebner_basis,
    ideal_containment,
    leading_term_ideal,
    non_members,
    normal_form,
    verify_basis,
)
from tests.conftest import ideal, poly


def test_from_polys_drops_zero_generators(f3_2):
    I = IdealHandle.from_polys(f3_2, [f3_2.zero, f3_2.gen("t1")])
    assert len(I.generators) == 1
    assert I.generators[0].name == "t1"


def test_from_polys_rejects_inhomogeneous(f3_2):
    t1, t2 = f3_2.gens
    with pytest.raises(GradingError):
        IdealHandle.from_polys(f3_2, [t1 + t2**2])


def test_from_polys_rejects_foreign_ring(f3_2, f2_3):
    with pytest.raises(ContextError):
        IdealHandle.from_polys(f3_2, [f2_3.gen("t1")])


def test_basis_of_pu3_kernel(pu3_ker):
    basis = groebner_basis(pu3_ker)
    assert basis.complete
    assert all(g.LC == 1 for g in basis.polys)
    assert verify_basis(pu3_ker, basis)


def test_tracked_cofactors_reproduce_basis(pu3_im):
    basis = groebner_basis(pu3_im, track=True)
    assert basis.cofactors is not None
    assert len(basis.cofactors) == len(basis.polys)
    assert verify_basis(pu3_im, basis)


def test_empty_ideal(f3_2):
    basis = buchberger(f3_2, [])
    assert basis.polys == ()
    I = IdealHandle.from_polys(f3_2, [])
    assert normal_form(f3_2.gen("t1"), I) == f3_2.gen("t1")


def test_membership(f3_2, pu3_ker, pu3_im):
    assert contains(pu3_ker, poly(f3_2, "c1*c2^2"))
    assert not contains(pu3_im, poly(f3_2, "c1*c2"))
    assert contains(pu3_im, poly(f3_2, "c1^2*t2^5"))


def test_normal_form_is_reduced(f3_2, pu3_ker):
    f = poly(f3_2, "t1^3 + c1*c2 + t2^3")
    r = normal_form(f, pu3_ker)
    leading = leading_term_ideal(pu3_ker)
    for monom in r.itermonoms():
        assert not any(all(a <= b for a, b in zip(lt, monom)) for lt in leading)
    assert contains(pu3_ker, f - r)


def test_normal_form_in_other_context(f3_2, f2_3, pu3_ker):
    with pytest.raises(ContextError):
        normal_form(f2_3.gen("t1"), pu3_ker)


def test_containment(pu3_ker, pu3_im, f3_2):
    assert ideal_containment(pu3_im, pu3_ker)
    bigger = ideal(f3_2, "c1", label="Im")
    assert [g.name for g in non_members(bigger, pu3_ker)] == ["c1"]


def test_spin7_containment(f2_3):
    ker = ideal(f2_3, "c2^2", "c2*c3", "c3^2", "c1^4")
    im = ideal(f2_3, "c2^2", "c3^2", "c1^8")
    assert ideal_containment(im, ker)


def test_spin9_containment():
    ctx = flag_context(2, 4)
    ker = ideal(ctx, "c2^2", "c2*c3", "c3^2", "c4", "c1^8")
    im = ideal(ctx, "c2^2", "c3^2", "c1^8", "c4^4")
    assert ideal_containment(im, ker)


def test_truncated_basis(f2_3):
    I = ideal(f2_3, "c2^2", "c2*c3", "c3^2", "c1^4")
    basis = groebner_basis(I, max_degree=4)
    if not basis.complete:
        assert basis.truncated_at == 4
        assert basis.valid_through(4)
        assert not basis.valid_through(5)
    assert verify_basis(I, basis)


def test_basis_is_cached(pu3_ker):
    first = groebner_basis(pu3_ker)
    assert groebner_basis(pu3_ker) is first
    assert groebner_basis(pu3_ker, max_degree=3) is first


def test_leading_terms_of_monomial_ideal(f3_2):
    I = ideal(f3_2, "t1^2", "t1*t2", "t2^3")
    assert sorted(leading_term_ideal(I)) == [(0, 3), (1, 1), (2, 0)]


# ── Properties on random homogeneous ideals ─────────────────────────


@st.composite
def homogeneous_ideals(draw):
    p = draw(st.sampled_from([2, 3]))
    ctx = flag_context(p, 3)
    gens = []
    for _ in range(draw(st.integers(1, 3))):
        d = draw(st.integers(1, 3))
        monomials = monomials_of_degree(ctx, d)
        coeffs = draw(st.lists(st.integers(0, p - 1), min_size=len(monomials), max_size=len(monomials)))
        f = ctx.from_terms({m: c for m, c in zip(monomials, coeffs) if c})
        if f:
            gens.append(f)
    if not gens:
        gens.append(ctx.gen("t1"))
    return IdealHandle.from_polys(ctx, gens)


@settings(max_examples=25, deadline=None)
@given(homogeneous_ideals())
def test_random_bases_verify(I):
    basis = groebner_basis(I, track=True)
    assert verify_basis(I, basis)
    for g in I.generators:
        assert contains(I, g.value * I.context.gen("t2"))
