"""Buchberger's algorithm over F_p for homogeneous ideals.

The implementation follows the textbook loop: normal pair selection (smallest
lcm in the monomial order, ties by index), Gebauer-Moeller pair elimination,
then minimalization and interreduction to the reduced monic basis. Arithmetic
is delegated to sympy's sparse PolyElement.

Usage:
    from chowdefect.groebner import IdealHandle, groebner_basis, contains

    I = IdealHandle.from_polys(ctx, [c1**2, c1*c2, c2**2], label="Ker")
    G = groebner_basis(I)
    contains(I, c1*c2**2)
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from chowdefect.algebra.ops import degree, format_poly, is_homogeneous, max_degree
from chowdefect.algebra.ring import Monomial, Polynomial, RingContext
from chowdefect.errors import ContextError, GradingError
from chowdefect.log import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class NamedPolynomial:
    """An ideal generator with a display name (usually its source literal)."""

    name: str
    value: Polynomial
    degree: int


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced monic Groebner basis, possibly truncated.

    ``truncated_at`` is set when S-pairs above that degree were discarded: the
    basis is then correct for every polynomial of degree <= truncated_at.
    ``cofactors[k]`` expresses ``polys[k]`` in terms of the input generators
    when the basis was computed with tracking.
    """

    polys: tuple[Polynomial, ...]
    leading: tuple[Monomial, ...]
    truncated_at: int | None = None
    cofactors: tuple[tuple[Polynomial, ...], ...] | None = None

    @property
    def complete(self) -> bool:
        return self.truncated_at is None

    def valid_through(self, d: int) -> bool:
        return self.truncated_at is None or d <= self.truncated_at


@dataclass(eq=False)
class IdealHandle:
    """Homogeneous ideal: generators plus a lazily computed Groebner basis."""

    context: RingContext
    generators: tuple[NamedPolynomial, ...]
    label: str = ""
    _bases: list[GroebnerBasis] = field(default_factory=list, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @classmethod
    def from_polys(
        cls,
        ctx: RingContext,
        polys: list[Polynomial],
        names: list[str] | None = None,
        label: str = "",
    ) -> "IdealHandle":
        """Build a handle, dropping zero generators and checking homogeneity."""
        names = names or [None] * len(polys)
        gens = []
        for name, f in zip(names, polys):
            if f.ring != ctx.ring:
                raise ContextError(f"generator {name or f!r} lies outside {ctx.describe()}")
            if not f:
                logger.debug("Dropping zero generator %s of %s", name, label or "ideal")
                continue
            if not is_homogeneous(f):
                raise GradingError(f"generator {name or format_poly(f)} is not homogeneous")
            gens.append(NamedPolynomial(name or format_poly(f), f, degree(f)))
        return cls(context=ctx, generators=tuple(gens), label=label)

    @property
    def polys(self) -> list[Polynomial]:
        return [g.value for g in self.generators]

    @property
    def max_generator_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    @property
    def truncated(self) -> bool:
        """Only degree-capped bases have been computed so far."""
        return bool(self._bases) and not any(b.complete for b in self._bases)

    def describe(self) -> str:
        names = ", ".join(g.name for g in self.generators) or "0"
        return f"{self.label or 'I'} = ({names})"

    def cached_basis(self, cap: int | None, track: bool = False) -> GroebnerBasis | None:
        for basis in self._bases:
            if track and basis.cofactors is None:
                continue
            if basis.complete or (cap is not None and basis.valid_through(cap)):
                return basis
        return None


# ── Buchberger ──────────────────────────────────────────────────────


def _spoly(R, f, g, lmf, lmg):
    lcm = R.monomial_lcm(lmf, lmg)
    mf = R.monomial_div(lcm, lmf)
    mg = R.monomial_div(lcm, lmg)
    return f.mul_monom(mf) - g.mul_monom(mg), mf, mg


def _select(R, lmG, P):
    def key(pair):
        i, j = pair
        return (R.order(R.monomial_lcm(lmG[i], lmG[j])), i, j)
    return min(P, key=key)


def _update(R, lmG, P, lmf):
    """Gebauer-Moeller update of the pair set when a polynomial with lead lmf joins."""
    lcm = R.monomial_lcm
    mul = R.monomial_mul
    div = R.monomial_div
    n = len(lmG)

    P = {
        (i, j) for (i, j) in P
        if (not div(lcm(lmG[i], lmG[j]), lmf)
            or lcm(lmG[i], lmG[j]) == lcm(lmG[i], lmf)
            or lcm(lmG[i], lmG[j]) == lcm(lmG[j], lmf))
    }

    lcm_dict: dict[Monomial, list[int]] = {}
    for i in range(n):
        lcm_dict.setdefault(lcm(lmG[i], lmf), []).append(i)
    minimal_lcms: list[Monomial] = []
    for L in sorted(lcm_dict, key=R.order):
        if all(not div(L, L_) for L_ in minimal_lcms):
            minimal_lcms.append(L)
    new_pairs = set()
    for L in minimal_lcms:
        if not any(lcm(lmG[i], lmf) == mul(lmG[i], lmf) for i in lcm_dict[L]):
            new_pairs.add((min(lcm_dict[L]), n))
    return P | new_pairs


def _scale(vec, c):
    return [v * c for v in vec]


def _combine(vec, quotients, cofs):
    out = list(vec)
    for q, cof in zip(quotients, cofs):
        if q:
            out = [o - q * c for o, c in zip(out, cof)]
    return out


def buchberger(
    ctx: RingContext,
    gens: list[Polynomial],
    cap: int | None = None,
    track: bool = False,
) -> GroebnerBasis:
    """Reduced Groebner basis of homogeneous ``gens``.

    Args:
        ctx: Ring context of the generators.
        gens: Nonzero homogeneous generators.
        cap: Optional degree cap; S-pairs of higher degree are discarded.
        track: Record cofactors expressing each basis element in ``gens``.
    """
    R = ctx.ring
    m = len(gens)
    if m == 0:
        return GroebnerBasis(polys=(), leading=(), cofactors=() if track else None)

    G: list[Polynomial] = []
    lmG: list[Monomial] = []
    cofs: list[list[Polynomial]] = []
    P: set[tuple[int, int]] = set()
    skipped = 0

    for k, f in enumerate(gens):
        inv = R.domain.one / f.LC
        f = f.monic()
        P = _update(R, lmG, P, f.LM)
        G.append(f)
        lmG.append(f.LM)
        if track:
            unit = [R.zero] * m
            unit[k] = R(inv)
            cofs.append(unit)

    while P:
        i, j = _select(R, lmG, P)
        P.remove((i, j))
        lcm_degree = ctx.weighted_degree(R.monomial_lcm(lmG[i], lmG[j]))
        if cap is not None and lcm_degree > cap:
            skipped += 1
            continue
        s, mi, mj = _spoly(R, G[i], G[j], lmG[i], lmG[j])
        if track:
            s_cof = [a.mul_monom(mi) - b.mul_monom(mj) for a, b in zip(cofs[i], cofs[j])]
            quotients, r = s.div(G)
            r_cof = _combine(s_cof, quotients, cofs)
        else:
            r = s.rem(G)
        if r:
            inv = R.domain.one / r.LC
            r = r.monic()
            P = _update(R, lmG, P, r.LM)
            G.append(r)
            lmG.append(r.LM)
            if track:
                cofs.append(_scale(r_cof, inv))

    logger.debug(
        "Buchberger over %s: %d generators -> %d polys, %d pairs above cap %s",
        ctx.describe(), m, len(G), skipped, cap,
    )

    # minimalize
    order = sorted(range(len(G)), key=lambda k: R.order(lmG[k]))
    keep: list[int] = []
    for k in order:
        if all(not R.monomial_div(lmG[k], lmG[h]) for h in keep):
            keep.append(k)

    # interreduce
    minimal = [G[k] for k in keep]
    reduced: list[Polynomial] = []
    reduced_cofs: list[tuple[Polynomial, ...]] = []
    for idx, k in enumerate(keep):
        others = minimal[:idx] + minimal[idx + 1:]
        if track:
            if others:
                quotients, g = G[k].div(others)
                other_cofs = [cofs[h] for h in keep[:idx] + keep[idx + 1:]]
                g_cof = _combine(cofs[k], quotients, other_cofs)
            else:
                g, g_cof = G[k], cofs[k]
            inv = R.domain.one / g.LC
            reduced_cofs.append(tuple(_scale(g_cof, inv)))
        else:
            g = G[k].rem(others) if others else G[k]
        reduced.append(g.monic())

    return GroebnerBasis(
        polys=tuple(reduced),
        leading=tuple(g.LM for g in reduced),
        truncated_at=cap if skipped else None,
        cofactors=tuple(reduced_cofs) if track else None,
    )


# ── Public operations ───────────────────────────────────────────────


def groebner_basis(
    ideal: IdealHandle,
    max_degree: int | None = None,
    track: bool = False,
) -> GroebnerBasis:
    """Reduced monic Groebner basis of ``ideal``, cached on the handle.

    With ``max_degree`` the computation may stop at that degree; the result
    says so through ``truncated_at``.
    """
    with ideal._lock:
        cached = ideal.cached_basis(max_degree, track=track)
        if cached is not None:
            return cached
        basis = buchberger(ideal.context, ideal.polys, cap=max_degree, track=track)
        if basis.truncated_at is not None:
            logger.debug("Basis of %s truncated at degree %d", ideal.describe(), basis.truncated_at)
        ideal._bases.append(basis)
        return basis


def normal_form(f: Polynomial, ideal: IdealHandle) -> Polynomial:
    """Complete reduction of ``f``: no remaining term is divisible by a lead term."""
    if f.ring != ideal.context.ring:
        raise ContextError(f"polynomial and {ideal.describe()} live in different contexts")
    if not f or not ideal.generators:
        return f
    basis = groebner_basis(ideal, max_degree=max_degree(f))
    if not basis.polys:
        return f
    return f.rem(list(basis.polys))


def contains(ideal: IdealHandle, f: Polynomial) -> bool:
    """True iff ``f`` lies in ``ideal``."""
    return not normal_form(f, ideal)


def ideal_containment(sub: IdealHandle, ideal: IdealHandle) -> bool:
    """True iff every generator of ``sub`` lies in ``ideal``."""
    return not non_members(sub, ideal)


def non_members(sub: IdealHandle, ideal: IdealHandle) -> list[NamedPolynomial]:
    """Generators of ``sub`` that do not reduce to zero modulo ``ideal``."""
    if sub.context != ideal.context:
        raise ContextError(f"{sub.describe()} and {ideal.describe()} live in different contexts")
    return [g for g in sub.generators if not contains(ideal, g.value)]


def leading_term_ideal(ideal: IdealHandle, max_degree: int | None = None) -> list[Monomial]:
    """Minimal generators of the leading-monomial ideal, smallest first."""
    basis = groebner_basis(ideal, max_degree=max_degree)
    R = ideal.context.ring
    return sorted(basis.leading, key=R.order)


def s_polynomials_reduce(ideal: IdealHandle, basis: GroebnerBasis) -> bool:
    """Buchberger criterion on ``basis`` (pairs within its valid degree range)."""
    ctx = ideal.context
    R = ctx.ring
    polys = list(basis.polys)
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            lcm = R.monomial_lcm(basis.leading[i], basis.leading[j])
            if not basis.valid_through(ctx.weighted_degree(lcm)):
                continue
            s, _, _ = _spoly(R, polys[i], polys[j], basis.leading[i], basis.leading[j])
            if s and s.rem(polys):
                return False
    return True


def verify_basis(ideal: IdealHandle, basis: GroebnerBasis) -> bool:
    """Check the basis against the generators it was built from.

    Every generator must reduce to zero, the basis must be reduced and monic,
    and tracked cofactors (when present) must reproduce every basis element.
    """
    R = ideal.context.ring
    polys = list(basis.polys)
    for g in ideal.generators:
        if basis.valid_through(g.degree) and polys and g.value.rem(polys):
            return False
        if not polys and g.value:
            return False
    for i, lm in enumerate(basis.leading):
        if polys[i].LC != R.domain.one:
            return False
        if any(R.monomial_div(lm, other) for k, other in enumerate(basis.leading) if k != i):
            return False
    if basis.cofactors is not None:
        for g, cof in zip(polys, basis.cofactors):
            total = R.zero
            for c, gen in zip(cof, ideal.polys):
                total += c * gen
            if total != g:
                return False
    return s_polynomials_reduce(ideal, basis)
