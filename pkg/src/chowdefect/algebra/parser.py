"""Polynomial literals used by case files and the CLI.

A literal is ordinary sympy syntax with ``^`` accepted for powers, e.g.
``"c2^3 + c1*c2^2*t1"``. Names are ring variables (``t1``..``t9``) or named
class aliases such as ``c2``, ``p1``, ``pbar5`` or ``e4``, supplied by the
caller (see ``chowdefect.symfun.alias_resolver``). Integer coefficients are
reduced mod p; anything that is not a polynomial with integer coefficients is
a ParseError.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping
from tokenize import TokenError

from sympy import Float, Integer, Poly, Rational, Symbol, SympifyError
from sympy.parsing.sympy_parser import (
    auto_number,
    auto_symbol,
    convert_xor,
    parse_expr,
)
from sympy.polys.domains import ZZ
from sympy.polys.polyerrors import BasePolynomialError

from chowdefect.algebra.ops import poly_add, poly_mul
from chowdefect.algebra.ring import Polynomial, RingContext
from chowdefect.errors import ParseError

AliasResolver = Callable[[str], Polynomial | None]

TRANSFORMATIONS = (auto_symbol, auto_number, convert_xor)

# Only what the transformations emit: names like E, I, S or N stay symbols.
_GLOBALS = {"Symbol": Symbol, "Integer": Integer, "Float": Float, "Rational": Rational}


def _resolver(aliases: Mapping[str, Polynomial] | AliasResolver | None) -> AliasResolver:
    if aliases is None:
        return lambda name: None
    if isinstance(aliases, Mapping):
        return aliases.get
    return aliases


def _value(name: str, ctx: RingContext, resolve: AliasResolver, text: str) -> Polynomial:
    if name in ctx.names:
        return ctx.gen(name)
    value = resolve(name)
    if value is None:
        raise ParseError(f"unknown name {name!r} in {text!r} over {ctx.describe()}")
    return value


def parse_polynomial(
    text: str,
    ctx: RingContext,
    aliases: Mapping[str, Polynomial] | AliasResolver | None = None,
) -> Polynomial:
    """Parse a polynomial literal in ``ctx``.

    Args:
        text: The literal, e.g. ``"c2^2 + t1*t3"``.
        ctx: Target ring context.
        aliases: Named classes, as a mapping or a resolver returning None for
            unknown names.

    Returns:
        The polynomial, with coefficients reduced mod p.
    """
    symbols = {name: Symbol(name) for name in ctx.names}
    try:
        expr = parse_expr(
            text.strip(),
            local_dict=dict(symbols),
            global_dict=dict(_GLOBALS),
            transformations=TRANSFORMATIONS,
        )
    except (SyntaxError, TokenError, SympifyError, NameError, TypeError, ValueError) as exc:
        raise ParseError(f"cannot parse {text!r}: {exc}") from exc

    gens = sorted(expr.free_symbols, key=lambda s: s.name)
    values = [_value(s.name, ctx, _resolver(aliases), text) for s in gens]
    if not gens:
        if not expr.is_Integer:
            raise ParseError(f"{text!r} is not an integer constant")
        return ctx.constant(int(expr))

    try:
        terms = Poly(expr, *gens, domain=ZZ).terms()
    except (BasePolynomialError, TypeError, ValueError) as exc:
        raise ParseError(f"{text!r} is not a polynomial with integer coefficients") from exc

    result = ctx.zero
    for exponents, coeff in terms:
        term = ctx.constant(int(coeff))
        for value, e in zip(values, exponents):
            if e:
                term = poly_mul(term, value**e)
        result = poly_add(result, term)
    return result
