"""Group elements, invariance tests and invariant dimensions."""

import pytest

from chowdefect.algebra import flag_context, q_context
from chowdefect.errors import ContextError, SizeError
from chowdefect.groebner import IdealHandle
from chowdefect.hilbert import series_eval
from chowdefect.symfun import pontryagin, toda_generators
from chowdefect.weyl import (
    F4_INVARIANT_SERIES,
    GroupElement,
    f4_generators,
    f4_reflection,
    gl_generators,
    invariant_dimension,
    is_invariant,
    is_invariant_mod_ideal,
    signed_perm_generators,
)


def test_matrix_entries_reduce_mod_p(f3_2):
    g = GroupElement(f3_2, ((4, 0), (0, -1)))
    assert g.matrix == ((1, 0), (0, 2))


def test_singular_matrix(f3_2):
    with pytest.raises(ContextError):
        GroupElement(f3_2, ((1, 1), (1, 1)))


def test_wrong_shape(f3_2):
    with pytest.raises(ContextError):
        GroupElement(f3_2, ((1, 0, 0),))


def test_action_is_linear_substitution(f3_2):
    t1, t2 = f3_2.gens
    g = GroupElement(f3_2, ((1, 1), (0, 1)))
    # t_j -> sum_i A[i][j] t_i
    assert g.act(t1) == t1
    assert g.act(t2) == t1 + t2


def test_signed_permutations(f3_2):
    gens = signed_perm_generators(f3_2)
    assert [g.name for g in gens] == ["s1", "sign1"]
    assert all(g.is_monomial for g in gens)
    assert all(g.compose(g).is_identity for g in gens)


def test_reflection(f3_4):
    R = f4_reflection(f3_4)
    assert not R.is_monomial
    assert R.compose(R).is_identity
    assert is_invariant(toda_generators(f3_4)["p1"].value, [R])


def test_reflection_needs_f3_4(f3_2):
    with pytest.raises(ContextError):
        f4_reflection(f3_2)


def test_toda_classes_are_invariant(f3_4):
    gens = f4_generators(f3_4)
    named = toda_generators(f3_4)
    for name in ("p1", "pbar2", "pbar5"):
        assert is_invariant(named[name].value, gens)


def test_invariance_mod_ideal(f3_4):
    gens = f4_generators(f3_4)
    named = toda_generators(f3_4)
    ideal = IdealHandle.from_polys(f3_4, [named["p1"].value, named["pbar2"].value])
    assert is_invariant_mod_ideal(named["pbar5"].value, gens, ideal)


@pytest.mark.parametrize("prime", [2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_pontryagin_classes_are_invariant(prime, n):
    ctx = flag_context(prime, n)
    gens = signed_perm_generators(ctx)
    assert all(is_invariant(pontryagin(ctx, k), gens) for k in range(n + 1))


def test_non_invariant(f3_2):
    assert not is_invariant(f3_2.gen("t1"), signed_perm_generators(f3_2))


def test_signed_permutation_invariants(f3_2):
    gens = signed_perm_generators(f3_2)
    # p1^2 and p2 in degree 4, p1 in degree 2, nothing in odd degree
    assert [invariant_dimension(f3_2, gens, d) for d in range(5)] == [1, 0, 1, 0, 2]


def test_f4_invariants_low_degrees(f3_4):
    gens = f4_generators(f3_4)
    assert [invariant_dimension(f3_4, gens, d) for d in (0, 1, 2, 3, 4, 6)] == [1, 0, 1, 0, 2, 2]


def test_invariant_slice_cap(f3_4):
    with pytest.raises(SizeError):
        invariant_dimension(f3_4, f4_generators(f3_4), 6, cap=10)


def test_gl_generators_fix_skipped_variables():
    ctx = q_context(3)
    z, x1, x2, x3 = ctx.gens
    gens = gl_generators(ctx, skip=1)
    assert [g.name for g in gens] == ["s1", "s2", "shear"]
    assert is_invariant(z, gens)
    assert not is_invariant(x3, gens)
    assert not is_invariant(x1 * x2 * x3, gens)


def test_gl_generators_over_f2_see_dickson_invariant():
    ctx = q_context(2)
    _, x1, x2 = ctx.gens
    gens = gl_generators(ctx, skip=1)
    assert is_invariant(x1**2 * x2 + x1 * x2**2, gens)
    assert not is_invariant(x1**2 + x1 * x2 + x2**2 + x1, gens)


def test_gl_generators_scale_by_primitive_root(f3_2):
    t1, t2 = f3_2.gens
    gens = gl_generators(f3_2)
    assert [g.name for g in gens] == ["s1", "shear", "scale"]
    assert gens[-1].matrix == ((2, 0), (0, 1))
    # product of the four lines of F_3^2: GL_2 acts on it by the determinant
    lines = t1 * t2 * (t1 + t2) * (t1 - t2)
    assert not is_invariant(lines, gens)
    assert is_invariant(lines**2, gens)
    assert not is_invariant(t1 * t2, gens)


@pytest.mark.parametrize("skip", [-1, 2])
def test_gl_generators_bad_skip(f3_2, skip):
    with pytest.raises(ContextError):
        gl_generators(f3_2, skip=skip)


@pytest.mark.slow
def test_f4_invariants_through_degree_15(f3_4):
    gens = f4_generators(f3_4)
    dims = [invariant_dimension(f3_4, gens, d) for d in range(16)]
    assert dims == series_eval(F4_INVARIANT_SERIES, 15)
