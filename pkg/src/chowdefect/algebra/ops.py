"""Polynomial operations over a RingContext.

Thin, checked wrappers over sympy's sparse polynomial arithmetic: every binary
operation verifies that its arguments live in one context, and every result is
canonical (no stored zero coefficients, coefficients reduced mod p).
"""

from __future__ import annotations

from collections.abc import Mapping
from functools import lru_cache

from chowdefect.algebra.ring import (
    Monomial,
    Polynomial,
    RingContext,
    context_of,
    require_same_context,
)
from chowdefect.errors import GradingError, SubstitutionError


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    """Termwise sum; coefficients that vanish mod p are dropped."""
    require_same_context(f, g)
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    """Product, fully reduced mod p."""
    require_same_context(f, g)
    return f * g


def term_degrees(f: Polynomial) -> set[int]:
    """Weighted degrees of the terms of ``f``."""
    ctx = context_of(f)
    return {ctx.weighted_degree(m) for m in f.itermonoms()}


def is_homogeneous(f: Polynomial) -> bool:
    return len(term_degrees(f)) <= 1


def degree(f: Polynomial) -> int:
    """Weighted degree of a homogeneous nonzero polynomial."""
    degrees = term_degrees(f)
    if not degrees:
        raise GradingError("the zero polynomial has no degree")
    if len(degrees) > 1:
        raise GradingError(f"polynomial is not homogeneous (degrees {sorted(degrees)})")
    return degrees.pop()


def max_degree(f: Polynomial) -> int:
    degrees = term_degrees(f)
    return max(degrees) if degrees else 0


def homogeneous_component(f: Polynomial, d: int) -> Polynomial:
    """Sum of the terms of weighted degree exactly ``d``."""
    ctx = context_of(f)
    return ctx.ring.from_dict(
        {m: c for m, c in f.iterterms() if ctx.weighted_degree(m) == d}
    )


def homogeneous_components(f: Polynomial) -> dict[int, Polynomial]:
    """All nonzero homogeneous components, keyed by degree."""
    return {d: homogeneous_component(f, d) for d in sorted(term_degrees(f))}


def apply_substitution(
    phi: Mapping[str | Polynomial, Polynomial],
    f: Polynomial,
) -> Polynomial:
    """Apply the ring endomorphism determined by variable images.

    ``phi`` maps every variable (by name or generator) to a polynomial of the
    same context; the unique ring-homomorphism extension is applied to ``f``.
    """
    ctx = context_of(f)
    images: dict[Polynomial, Polynomial] = {}
    for key, image in phi.items():
        gen = ctx.gen(key) if isinstance(key, str) else key
        if gen not in ctx.ring.gens:
            raise SubstitutionError(f"{key!r} is not a variable of {ctx.describe()}")
        if image.ring != ctx.ring:
            raise SubstitutionError(f"image of {key!r} lies outside {ctx.describe()}")
        images[gen] = image
    missing = [name for name, gen in zip(ctx.names, ctx.ring.gens) if gen not in images]
    if missing:
        raise SubstitutionError(f"no image given for variable(s) {', '.join(missing)}")
    return f.compose(images)


def compose_substitutions(
    ctx: RingContext,
    outer: Mapping[str, Polynomial],
    inner: Mapping[str, Polynomial],
) -> dict[str, Polynomial]:
    """The substitution ``f -> outer(inner(f))`` as a single variable map."""
    return {name: apply_substitution(outer, inner[name]) for name in ctx.names}


def monomials_of_degree(ctx: RingContext, d: int) -> list[Monomial]:
    """All monomials of weighted degree ``d``, largest first in the context order."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return list(_monomials_of_degree(ctx.weights, d, ctx))


@lru_cache(maxsize=256)
def _monomials_of_degree(weights: tuple[int, ...], d: int, ctx: RingContext) -> tuple:
    monomials = list(_compositions(weights, d))
    monomials.sort(key=ctx.order_key, reverse=True)
    return tuple(monomials)


def _compositions(weights: tuple[int, ...], d: int):
    if not weights:
        if d == 0:
            yield ()
        return
    w, rest = weights[0], weights[1:]
    for e in range(d // w, -1, -1):
        for tail in _compositions(rest, d - e * w):
            yield (e,) + tail


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff the monomial ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def format_poly(f: Polynomial) -> str:
    """Canonical text: terms in decreasing order, coefficients in [0, p)."""
    ctx = context_of(f)
    if not f:
        return "0"
    p = ctx.prime
    parts = []
    for monom in sorted(f.itermonoms(), key=ctx.order_key, reverse=True):
        c = int(f[monom]) % p
        factors = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(ctx.names, monom) if e
        ]
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append(f"{c}*" + "*".join(factors))
    return " + ".join(parts)
