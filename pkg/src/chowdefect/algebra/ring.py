"""Graded polynomial rings over prime fields.

A RingContext owns a sympy PolyRing over GF(p) together with the variable
weights used for grading. Polynomials are the ring's sparse PolyElements and
monomials are exponent tuples; both are immutable by convention once built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from sympy import isprime
from sympy.polys.domains import GF
from sympy.polys.orderings import MonomialOrder, grevlex
from sympy.polys.rings import PolyElement, PolyRing

from chowdefect.errors import ContextError

Monomial = tuple[int, ...]
Polynomial = PolyElement

MAX_PRIME = 2**31

# PolyRing -> RingContext, so a bare polynomial can find its grading.
_contexts: dict[PolyRing, "RingContext"] = {}


class WeightedReverseLexOrder(MonomialOrder):
    """Graded reverse lexicographic order for a weighted grading."""

    alias = "wgrevlex"
    is_global = True

    def __init__(self, weights: tuple[int, ...]):
        self.weights = tuple(weights)

    def __call__(self, monomial):
        degree = sum(w * e for w, e in zip(self.weights, monomial))
        return (degree, tuple(reversed([-m for m in monomial])))

    def __repr__(self):
        return f"WeightedReverseLexOrder({self.weights!r})"

    def __eq__(self, other):
        return isinstance(other, WeightedReverseLexOrder) and self.weights == other.weights

    def __hash__(self):
        return hash((self.__class__, self.weights))


@dataclass(frozen=True)
class RingContext:
    """A graded polynomial algebra F_p[x_1..x_n] with a monomial order.

    The order is graded reverse lexicographic with the declared variable
    order, refined by the weighted degree.
    """

    prime: int
    names: tuple[str, ...]
    weights: tuple[int, ...]
    order: str = "grevlex"
    ring: PolyRing = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not isprime(self.prime) or self.prime > MAX_PRIME:
            raise ContextError(f"modulus {self.prime} is not a prime <= 2^31")
        if len(self.names) != len(self.weights):
            raise ContextError("one weight per variable is required")
        if any(w < 1 for w in self.weights):
            raise ContextError("variable weights must be positive")
        if len(set(self.names)) != len(self.names):
            raise ContextError("variable names must be distinct")
        if self.order != "grevlex":
            raise ContextError(f"unsupported monomial order '{self.order}'")

        if all(w == 1 for w in self.weights):
            monomial_order = grevlex
        else:
            monomial_order = WeightedReverseLexOrder(self.weights)
        ring = PolyRing(self.names, GF(self.prime), monomial_order)
        object.__setattr__(self, "ring", ring)
        _contexts.setdefault(ring, self)

    # ── Basic accessors ─────────────────────────────────────────────

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.ring.gens)

    @property
    def one(self) -> Polynomial:
        return self.ring.one

    @property
    def zero(self) -> Polynomial:
        return self.ring.zero

    @property
    def unit_weights(self) -> bool:
        return all(w == 1 for w in self.weights)

    def gen(self, name: str) -> Polynomial:
        """The generator called ``name``."""
        try:
            return self.ring.gens[self.names.index(name)]
        except ValueError:
            raise ContextError(f"no variable '{name}' in {self.describe()}") from None

    def constant(self, value: int) -> Polynomial:
        return self.ring(value)

    def from_terms(self, terms: dict[Monomial, int]) -> Polynomial:
        """Build a polynomial from {exponent tuple: integer coefficient}."""
        for monom in terms:
            if len(monom) != self.nvars:
                raise ContextError(
                    f"monomial {monom} has {len(monom)} exponents, expected {self.nvars}"
                )
        return self.ring.from_dict(dict(terms))

    def weighted_degree(self, monom: Monomial) -> int:
        return sum(w * e for w, e in zip(self.weights, monom))

    def order_key(self, monom: Monomial):
        return self.ring.order(monom)

    def owns(self, f: Polynomial) -> bool:
        return getattr(f, "ring", None) == self.ring

    def describe(self) -> str:
        return f"F_{self.prime}[{','.join(self.names)}]"


def coefficient(f: Polynomial, monom: Monomial) -> int:
    """Coefficient of ``monom`` in ``f`` as an integer in [0, p)."""
    p = f.ring.domain.mod
    return int(f.get(monom, 0)) % p


def context_of(f: Polynomial) -> RingContext:
    """The RingContext a polynomial belongs to."""
    ring = getattr(f, "ring", None)
    ctx = _contexts.get(ring)
    if ctx is None:
        raise ContextError(f"polynomial {f!r} does not belong to a registered context")
    return ctx


def require_same_context(*polys: Polynomial) -> RingContext:
    """Return the shared context of ``polys`` or raise ContextError."""
    ctx = context_of(polys[0])
    for g in polys[1:]:
        if g.ring != ctx.ring:
            raise ContextError(
                f"context mismatch: {ctx.describe()} vs {context_of(g).describe()}"
            )
    return ctx


@lru_cache(maxsize=None)
def make_context(
    prime: int,
    names: tuple[str, ...],
    weights: tuple[int, ...] | None = None,
) -> RingContext:
    """Cached constructor, so equal requests share one RingContext."""
    weights = weights or (1,) * len(names)
    return RingContext(prime=prime, names=tuple(names), weights=tuple(weights))


def flag_context(prime: int, nvars: int) -> RingContext:
    """S(t)/p = F_p[t1..tn] in Chow grading (every t_i has degree 1)."""
    if nvars < 1:
        raise ContextError("a flag context needs at least one variable")
    return make_context(prime, tuple(f"t{i}" for i in range(1, nvars + 1)))


def q_context(h: int) -> RingContext:
    """F_2[z, x1..xh] in topological degree one, home of the Dickson expansion."""
    if h < 1:
        raise ContextError("the Dickson context needs h >= 1")
    return make_context(2, ("z",) + tuple(f"x{i}" for i in range(1, h + 1)))
