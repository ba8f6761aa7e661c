"""Named classes in S(t): symmetric functions, Pontryagin classes, Toda's F4
invariants and the Dickson expansion of the spin Euler class.

The classes double as the alias vocabulary of the polynomial parser:
``alias_resolver(ctx)`` understands ``c<k>``, ``p<k>``, ``e<j>`` (= c1^j) and,
over F_3[t1..t4], ``pbar2``, ``pbar5``, ``pbar9``, ``pbar12`` and ``r15``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from chowdefect.algebra.ops import degree
from chowdefect.algebra.ring import Polynomial, RingContext, q_context
from chowdefect.config import get_config
from chowdefect.errors import ContextError, SizeError


@dataclass(frozen=True)
class NamedClass:
    name: str
    value: Polynomial
    chow_degree: int


def elem_symmetric(ctx: RingContext, k: int) -> Polynomial:
    """e_k(t1..tn); zero for k > n."""
    return _elementary(ctx.gens, k, ctx)


def pontryagin(ctx: RingContext, k: int) -> Polynomial:
    """e_k(t1^2..tn^2), of Chow degree 2k."""
    return _elementary(tuple(t**2 for t in ctx.gens), k, ctx)


def _elementary(values: tuple[Polynomial, ...], k: int, ctx: RingContext) -> Polynomial:
    if k < 0:
        raise ValueError("symmetric function index must be nonnegative")
    total = ctx.zero
    for subset in combinations(values, k):
        term = ctx.one
        for v in subset:
            term = term * v
        total += term
    return total


def _require_f4_context(ctx: RingContext) -> None:
    if ctx.prime != 3 or ctx.nvars != 4 or not ctx.unit_weights:
        raise ContextError(f"Toda's generators live in F_3[t1..t4], not {ctx.describe()}")


@lru_cache(maxsize=8)
def toda_generators(ctx: RingContext) -> dict[str, NamedClass]:
    """p1, pbar2, pbar5, pbar9, pbar12 and r15 in F_3[t1..t4].

    pbar9 and pbar12 are pinned to the representatives p3^3 and p4^3.
    """
    _require_f4_context(ctx)
    p1, p2, p3, p4 = (pontryagin(ctx, k) for k in range(1, 5))
    pbar2 = p2 - p1**2
    pbar5 = p4 * p1 + p3 * pbar2
    values = {
        "p1": p1,
        "pbar2": pbar2,
        "pbar5": pbar5,
        "pbar9": p3**3,
        "pbar12": p4**3,
        "r15": pbar5**3,
    }
    return {name: NamedClass(name, v, degree(v)) for name, v in values.items()}


@dataclass(frozen=True)
class DicksonExpansion:
    """e = prod over lambda in F_2^h of (z + sum lambda_i x_i), split by z-powers."""

    h: int
    e: Polynomial
    coefficients: dict[int, Polynomial]  # z-exponent -> coefficient in F_2[x]

    @property
    def d(self) -> tuple[Polynomial, ...]:
        """Dickson invariants d_0..d_{h-1} (coefficients of z^(2^i))."""
        zero = self.e.ring.zero
        return tuple(self.coefficients.get(2**i, zero) for i in range(self.h))

    @property
    def z_powers(self) -> list[int]:
        return sorted(self.coefficients, reverse=True)

    def is_dickson_form(self) -> bool:
        """Only z^(2^h) (coefficient 1) and z^(2^i), i < h, occur."""
        allowed = {2**i for i in range(self.h + 1)}
        top = self.coefficients.get(2**self.h)
        return set(self.coefficients) <= allowed and top == self.e.ring.one


def dickson_expand(h: int, max_h: int | None = None) -> DicksonExpansion:
    """Expand the restricted Euler class in F_2[z, x1..xh]."""
    cap = max_h if max_h is not None else get_config().dickson_max_h
    if h > cap:
        raise SizeError(f"Dickson expansion for h={h} exceeds the cap h <= {cap}")
    ctx = q_context(h)
    z, *xs = ctx.gens
    e = ctx.one
    for lam in product((0, 1), repeat=h):
        factor = z
        for bit, x in zip(lam, xs):
            if bit:
                factor = factor + x
        e = e * factor

    grouped: dict[int, dict] = {}
    for monom, c in e.iterterms():
        grouped.setdefault(monom[0], {})[(0,) + monom[1:]] = c
    coefficients = {k: ctx.ring.from_dict(terms) for k, terms in grouped.items()}
    return DicksonExpansion(h=h, e=e, coefficients=coefficients)


# ── Alias vocabulary ────────────────────────────────────────────────

_INDEXED = re.compile(r"^([cpe])(\d+)$")


@lru_cache(maxsize=64)
def named_classes(ctx: RingContext) -> dict[str, NamedClass]:
    """Every fixed-name class of ``ctx``: c0..cn, p0..pn and Toda's set over F_3[t1..t4]."""
    classes: dict[str, NamedClass] = {}
    if ctx.unit_weights:
        for k in range(ctx.nvars + 1):
            for prefix, build, scale in (("c", elem_symmetric, 1), ("p", pontryagin, 2)):
                classes[f"{prefix}{k}"] = NamedClass(f"{prefix}{k}", build(ctx, k), scale * k)
        if ctx.prime == 3 and ctx.nvars == 4:
            classes.update(toda_generators(ctx))
    return classes


def alias_resolver(ctx: RingContext):
    """Resolver for ``parse_polynomial``: known class names, e<j> = c1^j."""
    classes = named_classes(ctx)

    def resolve(name: str) -> Polynomial | None:
        if name in classes:
            return classes[name].value
        match = _INDEXED.match(name)
        if match and match.group(1) == "e" and ctx.unit_weights:
            return elem_symmetric(ctx, 1) ** int(match.group(2))
        if match:
            # c_k, p_k beyond the number of variables vanish
            return ctx.zero if ctx.unit_weights else None
        return None

    return resolve
