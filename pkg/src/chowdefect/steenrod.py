"""Reduced powers on S(t)/p and Milnor derivations on F_2[z, x1..xh]."""

from __future__ import annotations

from dataclasses import dataclass

from chowdefect.algebra.ops import apply_substitution, degree, homogeneous_component
from chowdefect.algebra.ring import Polynomial, RingContext, context_of
from chowdefect.errors import ContextError


@dataclass(frozen=True)
class TotalPowerMap:
    """The ring endomorphism t_i -> t_i + t_i^p of a weight-one context."""

    context: RingContext

    def __post_init__(self):
        if not self.context.unit_weights:
            raise ContextError(f"total power needs weight-one variables, not {self.context.describe()}")

    @property
    def substitution(self) -> dict[str, Polynomial]:
        p = self.context.prime
        return {name: t + t**p for name, t in zip(self.context.names, self.context.gens)}

    def __call__(self, f: Polynomial) -> Polynomial:
        return apply_substitution(self.substitution, f)


@dataclass(frozen=True)
class MilnorDerivation:
    """Q_n on F_2[z, x1..xh]: the derivation with x -> x^(2^(n+1)) on generators."""

    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("Milnor operations are indexed by n >= 0")

    @property
    def degree_shift(self) -> int:
        return 2 ** (self.n + 1) - 1

    def __call__(self, f: Polynomial) -> Polynomial:
        ctx = context_of(f)
        if ctx.prime != 2 or not ctx.unit_weights:
            raise ContextError(f"Q_{self.n} acts on weight-one F_2 contexts, not {ctx.describe()}")
        shift = self.degree_shift
        terms: dict = {}
        for monom, c in f.iterterms():
            for i, e in enumerate(monom):
                if e % 2 == 0:
                    continue
                image = monom[:i] + (e + shift,) + monom[i + 1:]
                terms[image] = terms.get(image, 0) + c
        return ctx.ring.from_dict(terms)


def total_power(f: Polynomial) -> Polynomial:
    """P(f) = P^0(f) + P^1(f) + ..., multiplicative with P(t) = t + t^p."""
    return TotalPowerMap(context_of(f))(f)


def reduced_power(k: int, f: Polynomial) -> Polynomial:
    """P^k(f) for homogeneous ``f``: the degree d + k(p-1) part of total_power(f).

    Raises GradingError for non-homogeneous input.
    """
    if k < 0:
        raise ValueError("reduced powers are indexed by k >= 0")
    if not f:
        return f
    d = degree(f)
    if k == 0:
        return f
    if k > d:
        return f.ring.zero
    p = context_of(f).prime
    return homogeneous_component(total_power(f), d + k * (p - 1))


def milnor_q(n: int, f: Polynomial) -> Polynomial:
    return MilnorDerivation(n)(f)
