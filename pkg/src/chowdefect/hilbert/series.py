"""Closed-form generating series and their truncated expansions.

A SeriesExpr is a small immutable AST; ``series_eval`` expands it to an exact
integer coefficient list ``[a_0, ..., a_N]``. Every node has a text form used
by case files:

    poly(1,1,2)                      1 / ((1-x)^2 (1-x^2))
    regseq(vars=2, degs=(1,2))       (1-x)(1-x^2) / (1-x)^2
    regseq(weights=(1,2), degs=(4,)) (1-x^4) / ((1-x)(1-x^2))
    extplus(4,5)                     (1+x^4)(1+x^5) - 1
    ext(5)                           1 + x^5
    trunc(4, 4)                      1 + x^4 + x^8 + x^12
    freemod(3,4,5)                   x^3 + x^4 + x^5   (freemod() is zero)
    tensor(a, b, ...)                product
    sum(a, b, ...)                   sum
    aug(a)                           a without its constant term
"""

from __future__ import annotations

import re
from abc import ABC, abstractmethod
from collections.abc import Iterable
from dataclasses import dataclass
from itertools import product

from sympy.polys.domains import ZZ
from sympy.polys.orderings import lex
from sympy.polys.ring_series import rs_mul, rs_series_inversion, rs_trunc
from sympy.polys.rings import PolyElement, ring

from chowdefect.errors import ExpressionError

Series = list[int]


# ── Truncated series arithmetic ─────────────────────────────────────
#
# Series live in ZZ[x] and are multiplied and inverted with sympy's
# ring_series, truncated at O(x^(n+1)). ``Series`` lists are the view handed
# to callers.

SERIES_RING, X = ring("x", ZZ, lex)

SeriesElement = PolyElement


def _element(a: Series) -> SeriesElement:
    return SERIES_RING.from_dict({(k,): c for k, c in enumerate(a) if c})


def _view(p: SeriesElement, n: int) -> Series:
    return [int(p.get((k,), 0)) for k in range(n + 1)]


def _monomial(degree: int) -> SeriesElement:
    return X**degree


def series_add(a: Series, b: Series) -> Series:
    n = min(len(a), len(b)) - 1
    return _view(_element(a) + _element(b), n)


def series_sub(a: Series, b: Series) -> Series:
    n = min(len(a), len(b)) - 1
    return _view(_element(a) - _element(b), n)


def series_mul(a: Series, b: Series) -> Series:
    """Product truncated to the shorter length."""
    n = min(len(a), len(b))
    if n == 0:
        return []
    return _view(rs_mul(_element(a), _element(b), X, n), n - 1)


def series_divide(a: Series, b: Series) -> Series:
    """Power-series quotient a / b; ``b`` must have constant term 1."""
    if not b or b[0] != 1:
        raise ExpressionError("series division needs a divisor with constant term 1")
    n = min(len(a), len(b))
    if n == 0:
        return []
    inverse = rs_series_inversion(_element(b), X, n)
    return _view(rs_mul(_element(a), inverse, X, n), n - 1)


def bounded_monomial_series(
    weights: tuple[int, ...],
    caps: tuple[int | None, ...],
    n: int,
    excluded: Iterable[tuple[int, ...]] = (),
    min_total: int = 0,
) -> Series:
    """Count monomials by weighted degree under exponent caps.

    A monomial with exponents ``e`` is counted when ``e[i] <= caps[i]`` (None
    means uncapped), it is divisible by none of the ``excluded`` exponent
    vectors, and its total exponent is at least ``min_total``.
    """
    if len(weights) != len(caps):
        raise ExpressionError("one cap per weight is required")
    excluded = [tuple(m) for m in excluded]
    ranges = []
    for w, cap in zip(weights, caps):
        top = n // w if cap is None else min(cap, n // w)
        ranges.append(range(top + 1))
    out = [0] * (n + 1)
    for exps in product(*ranges):
        d = sum(w * e for w, e in zip(weights, exps))
        if d > n or sum(exps) < min_total:
            continue
        if any(all(e >= x for e, x in zip(exps, m)) for m in excluded):
            continue
        out[d] += 1
    return out


# ── AST ─────────────────────────────────────────────────────────────


def _check_degrees(node: str, values, minimum: int) -> None:
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool) or v < minimum:
            raise ExpressionError(f"{node}: degree {v!r} must be an integer >= {minimum}")


def _ints(values) -> str:
    return ",".join(str(v) for v in values)


def _free(degrees: Iterable[int], prec: int) -> SeriesElement:
    return rs_trunc(sum((_monomial(d) for d in degrees), SERIES_RING.zero), X, prec)


class SeriesExpr(ABC):
    """A generating-series expression."""

    @abstractmethod
    def element(self, prec: int) -> SeriesElement:
        """The series modulo O(x^prec)."""

    @abstractmethod
    def to_text(self) -> str:
        ...

    def expand(self, n: int) -> Series:
        """Coefficients in degrees 0..n."""
        return _view(self.element(n + 1), n)

    def validate(self) -> None:
        """Raise ExpressionError when the node is malformed."""

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class PolyAlgebra(SeriesExpr):
    weights: tuple[int, ...]

    def validate(self) -> None:
        _check_degrees("poly", self.weights, 1)

    def element(self, prec: int) -> SeriesElement:
        out = SERIES_RING.one
        for w in self.weights:
            out = rs_mul(out, rs_series_inversion(1 - _monomial(w), X, prec), X, prec)
        return out

    def to_text(self) -> str:
        return f"poly({_ints(self.weights)})"


@dataclass(frozen=True)
class RegSeqQuotient(SeriesExpr):
    """Hilbert series of a polynomial algebra modulo a regular sequence."""

    weights: tuple[int, ...]
    degrees: tuple[int, ...]

    @classmethod
    def standard(cls, degrees: Iterable[int]) -> "RegSeqQuotient":
        """Quotient of len(degrees) weight-one variables by a regular sequence."""
        degrees = tuple(degrees)
        return cls(weights=(1,) * len(degrees), degrees=degrees)

    def validate(self) -> None:
        _check_degrees("regseq weights", self.weights, 1)
        _check_degrees("regseq degs", self.degrees, 1)

    def element(self, prec: int) -> SeriesElement:
        out = PolyAlgebra(self.weights).element(prec)
        for d in self.degrees:
            out = rs_mul(out, 1 - _monomial(d), X, prec)
        return out

    def to_text(self) -> str:
        degs = f"({_ints(self.degrees)},)" if len(self.degrees) == 1 else f"({_ints(self.degrees)})"
        if all(w == 1 for w in self.weights):
            return f"regseq(vars={len(self.weights)}, degs={degs})"
        weights = f"({_ints(self.weights)},)" if len(self.weights) == 1 else f"({_ints(self.weights)})"
        return f"regseq(weights={weights}, degs={degs})"


@dataclass(frozen=True)
class Exterior(SeriesExpr):
    degrees: tuple[int, ...]

    def validate(self) -> None:
        _check_degrees("ext", self.degrees, 1)

    def element(self, prec: int) -> SeriesElement:
        out = SERIES_RING.one
        for d in self.degrees:
            out = rs_mul(out, 1 + _monomial(d), X, prec)
        return rs_trunc(out, X, prec)

    def to_text(self) -> str:
        return f"ext({_ints(self.degrees)})"


@dataclass(frozen=True)
class ExteriorPlus(SeriesExpr):
    """Positive-degree part of an exterior algebra."""

    degrees: tuple[int, ...]

    def validate(self) -> None:
        _check_degrees("extplus", self.degrees, 1)

    def element(self, prec: int) -> SeriesElement:
        return rs_trunc(Exterior(self.degrees).element(prec) - 1, X, prec)

    def to_text(self) -> str:
        return f"extplus({_ints(self.degrees)})"


@dataclass(frozen=True)
class Truncated(SeriesExpr):
    """F_p[x]/(x^height) with x in the given degree."""

    degree: int
    height: int

    def validate(self) -> None:
        _check_degrees("trunc degree", (self.degree,), 1)
        _check_degrees("trunc height", (self.height,), 1)

    def element(self, prec: int) -> SeriesElement:
        return _free((k * self.degree for k in range(self.height)), prec)

    def to_text(self) -> str:
        return f"trunc({self.degree}, {self.height})"


@dataclass(frozen=True)
class FreeModule(SeriesExpr):
    """Free graded module on generators of the given degrees."""

    degrees: tuple[int, ...] = ()

    def validate(self) -> None:
        _check_degrees("freemod", self.degrees, 0)

    def element(self, prec: int) -> SeriesElement:
        return _free(self.degrees, prec)

    def to_text(self) -> str:
        return f"freemod({_ints(self.degrees)})"


def _check_children(node: str, children) -> None:
    for child in children:
        if not isinstance(child, SeriesExpr):
            raise ExpressionError(f"{node}: child {child!r} is not a series expression")
        child.validate()


@dataclass(frozen=True)
class Tensor(SeriesExpr):
    children: tuple[SeriesExpr, ...]

    def validate(self) -> None:
        _check_children("tensor", self.children)

    def element(self, prec: int) -> SeriesElement:
        out = SERIES_RING.one
        for child in self.children:
            out = rs_mul(out, child.element(prec), X, prec)
        return rs_trunc(out, X, prec)

    def to_text(self) -> str:
        return f"tensor({', '.join(c.to_text() for c in self.children)})"


@dataclass(frozen=True)
class Sum(SeriesExpr):
    children: tuple[SeriesExpr, ...]

    def validate(self) -> None:
        _check_children("sum", self.children)

    def element(self, prec: int) -> SeriesElement:
        return sum((child.element(prec) for child in self.children), SERIES_RING.zero)

    def to_text(self) -> str:
        return f"sum({', '.join(c.to_text() for c in self.children)})"


@dataclass(frozen=True)
class AugmentationIdeal(SeriesExpr):
    """The child series with its degree-0 coefficient dropped."""

    child: SeriesExpr

    def validate(self) -> None:
        _check_children("aug", (self.child,))

    def element(self, prec: int) -> SeriesElement:
        out = self.child.element(prec)
        return out - out.get(SERIES_RING.zero_monom, 0)

    def to_text(self) -> str:
        return f"aug({self.child.to_text()})"


ZERO = FreeModule(())


def series_eval(expr: SeriesExpr, n: int) -> Series:
    """Exact coefficients of ``expr`` in degrees 0..n."""
    if n < 0:
        raise ExpressionError("truncation degree must be nonnegative")
    if not isinstance(expr, SeriesExpr):
        raise ExpressionError(f"{expr!r} is not a series expression")
    expr.validate()
    return expr.expand(n)


# ── Text form ───────────────────────────────────────────────────────

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([(),=]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        match = _TOKEN.match(stripped, pos)
        if not match:
            raise ExpressionError(f"unexpected character {stripped[pos]!r} in {text!r}")
        number, name, punct = match.groups()
        if number is not None:
            tokens.append(("int", number))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("punct", punct))
        pos = match.end()
    tokens.append(("end", ""))
    return tokens


class _SeriesParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str]:
        return self.tokens[self.i]

    def take(self, kind: str, value: str | None = None) -> str:
        tok_kind, tok_value = self.peek()
        if tok_kind != kind or (value is not None and tok_value != value):
            raise ExpressionError(f"expected {value or kind!r}, got {tok_value!r} in {self.text!r}")
        self.i += 1
        return tok_value

    def accept(self, value: str) -> bool:
        if self.peek() == ("punct", value):
            self.i += 1
            return True
        return False

    def parse(self) -> SeriesExpr:
        expr = self.node()
        self.take("end")
        return expr

    def int_tuple(self) -> tuple[int, ...]:
        self.take("punct", "(")
        values = []
        while not self.accept(")"):
            values.append(int(self.take("int")))
            if not self.accept(","):
                self.take("punct", ")")
                break
        return tuple(values)

    def arguments(self) -> tuple[list, dict]:
        positional, keywords = [], {}
        self.take("punct", "(")
        if self.accept(")"):
            return positional, keywords
        while True:
            kind, value = self.peek()
            if kind == "int":
                positional.append(int(self.take("int")))
            elif kind == "name" and self.tokens[self.i + 1] == ("punct", "="):
                self.i += 2
                if self.peek()[0] == "int":
                    keywords[value] = int(self.take("int"))
                else:
                    keywords[value] = self.int_tuple()
            elif kind == "name":
                positional.append(self.node())
            else:
                raise ExpressionError(f"unexpected {value!r} in {self.text!r}")
            if self.accept(")"):
                return positional, keywords
            self.take("punct", ",")

    def node(self) -> SeriesExpr:
        name = self.take("name")
        args, kwargs = self.arguments()
        builder = _BUILDERS.get(name)
        if builder is None:
            raise ExpressionError(f"unknown series constructor {name!r} in {self.text!r}")
        try:
            expr = builder(args, kwargs)
        except (TypeError, ValueError) as exc:
            raise ExpressionError(f"bad arguments to {name}() in {self.text!r}: {exc}") from exc
        expr.validate()
        return expr


def _only_ints(args, kwargs) -> tuple[int, ...]:
    if kwargs or any(not isinstance(a, int) for a in args):
        raise ValueError("expected integer degrees only")
    return tuple(args)


def _only_series(args, kwargs) -> tuple[SeriesExpr, ...]:
    if kwargs or any(not isinstance(a, SeriesExpr) for a in args):
        raise ValueError("expected series arguments only")
    return tuple(args)


def _regseq(args, kwargs) -> RegSeqQuotient:
    if args or "degs" not in kwargs or set(kwargs) - {"vars", "weights", "degs"}:
        raise ValueError("use regseq(vars=n | weights=(..), degs=(..))")
    degs = kwargs["degs"]
    degs = (degs,) if isinstance(degs, int) else degs
    if "weights" in kwargs:
        weights = kwargs["weights"]
        weights = (weights,) if isinstance(weights, int) else weights
    elif "vars" in kwargs:
        weights = (1,) * kwargs["vars"]
    else:
        raise ValueError("regseq needs vars= or weights=")
    return RegSeqQuotient(weights=tuple(weights), degrees=tuple(degs))


def _trunc(args, kwargs) -> Truncated:
    degree, height = _only_ints(args, kwargs)
    return Truncated(degree, height)


def _aug(args, kwargs) -> AugmentationIdeal:
    (child,) = _only_series(args, kwargs)
    return AugmentationIdeal(child)


_BUILDERS = {
    "poly": lambda a, k: PolyAlgebra(_only_ints(a, k)),
    "regseq": _regseq,
    "ext": lambda a, k: Exterior(_only_ints(a, k)),
    "extplus": lambda a, k: ExteriorPlus(_only_ints(a, k)),
    "trunc": _trunc,
    "freemod": lambda a, k: FreeModule(_only_ints(a, k)),
    "tensor": lambda a, k: Tensor(_only_series(a, k)),
    "sum": lambda a, k: Sum(_only_series(a, k)),
    "aug": _aug,
}


def parse_series(text: str) -> SeriesExpr:
    """Parse the text form of a series expression."""
    if not text or not text.strip():
        raise ExpressionError("empty series expression")
    return _SeriesParser(text).parse()
