"""Weyl-group elements acting on S(t) by linear substitution.

A GroupElement is an invertible matrix A over F_p acting by
``t_j -> sum_i A[i][j] * t_i``. Invariance is only ever tested on generator
sets; the group itself is never enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from sympy import primitive_root
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from chowdefect.algebra.linalg import SparseRow, coordinates, nullspace_mod_p
from chowdefect.algebra.ops import apply_substitution, monomials_of_degree
from chowdefect.algebra.ring import Polynomial, RingContext
from chowdefect.config import get_config
from chowdefect.errors import ContextError, SizeError
from chowdefect.groebner import IdealHandle, contains
from chowdefect.hilbert.series import RegSeqQuotient
from chowdefect.log import get_logger

logger = get_logger(__name__)

Matrix = tuple[tuple[int, ...], ...]

# Invariants of W(F4) over F_3: generators in Chow degrees 2, 4, 10, 18, 24
# with a single relation r15 in degree 30.
F4_INVARIANT_SERIES = RegSeqQuotient(weights=(2, 4, 10, 18, 24), degrees=(30,))


@dataclass(frozen=True)
class GroupElement:
    context: RingContext
    matrix: Matrix
    name: str = ""
    _images: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        n, p = self.context.nvars, self.context.prime
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise ContextError(f"{self.name or 'group element'} needs a {n}x{n} matrix")
        reduced = tuple(tuple(a % p for a in row) for row in self.matrix)
        object.__setattr__(self, "matrix", reduced)
        K = GF(p)
        det = DomainMatrix([[K(a) for a in row] for row in reduced], (n, n), K).det()
        if not int(det) % p:
            raise ContextError(f"{self.name or 'matrix'} is not invertible over F_{p}")

    @property
    def substitution(self) -> dict[str, Polynomial]:
        ctx = self.context
        gens = ctx.gens
        images = {}
        for j, name in enumerate(ctx.names):
            image = ctx.zero
            for i in range(ctx.nvars):
                if self.matrix[i][j]:
                    image += self.matrix[i][j] * gens[i]
            images[name] = image
        return images

    def act(self, f: Polynomial) -> Polynomial:
        return apply_substitution(self.substitution, f)

    def compose(self, other: "GroupElement") -> "GroupElement":
        """The element acting as ``self`` after ``other``."""
        p, n = self.context.prime, self.context.nvars
        product = tuple(
            tuple(sum(self.matrix[i][k] * other.matrix[k][j] for k in range(n)) % p for j in range(n))
            for i in range(n)
        )
        return GroupElement(self.context, product, f"{self.name}*{other.name}")

    @property
    def is_identity(self) -> bool:
        n = self.context.nvars
        return all(self.matrix[i][j] == (i == j) for i in range(n) for j in range(n))

    @property
    def is_monomial(self) -> bool:
        """One nonzero entry per column: maps monomials to scalar multiples of monomials."""
        return all(sum(1 for row in self.matrix if row[j]) == 1 for j in range(self.context.nvars))

    def monomial_image(self, monom) -> Polynomial:
        image = self._images.get(monom)
        if image is None:
            image = self.act(self.context.ring.from_dict({monom: 1}))
            self._images[monom] = image
        return image


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def signed_perm_generators(ctx: RingContext) -> list[GroupElement]:
    """Adjacent transpositions (i, i+1) and the sign change t1 -> -t1."""
    n = ctx.nvars
    gens = []
    for i in range(n - 1):
        m = _identity(n)
        m[i][i] = m[i + 1][i + 1] = 0
        m[i][i + 1] = m[i + 1][i] = 1
        gens.append(GroupElement(ctx, tuple(map(tuple, m)), f"s{i + 1}"))
    m = _identity(n)
    m[0][0] = -1
    gens.append(GroupElement(ctx, tuple(map(tuple, m)), "sign1"))
    return gens


def gl_generators(ctx: RingContext, skip: int = 0) -> list[GroupElement]:
    """Generators of GL_m(F_p) on the variables from index ``skip`` on.

    Adjacent transpositions, the transvection v1 -> v1 + v2 and, for p > 2,
    the scaling v1 -> a*v1 by a primitive root a. Earlier variables are fixed.
    """
    n = ctx.nvars
    if not 0 <= skip < n:
        raise ContextError(f"no variables left after skipping {skip} in {ctx.describe()}")
    gens = []
    for i in range(skip, n - 1):
        m = _identity(n)
        m[i][i] = m[i + 1][i + 1] = 0
        m[i][i + 1] = m[i + 1][i] = 1
        gens.append(GroupElement(ctx, tuple(map(tuple, m)), f"s{i + 1 - skip}"))
    if n - skip >= 2:
        m = _identity(n)
        m[skip + 1][skip] = 1
        gens.append(GroupElement(ctx, tuple(map(tuple, m)), "shear"))
    if ctx.prime > 2:
        m = _identity(n)
        m[skip][skip] = primitive_root(ctx.prime)
        gens.append(GroupElement(ctx, tuple(map(tuple, m)), "scale"))
    return gens


def f4_reflection(ctx: RingContext) -> GroupElement:
    """The extra F4 reflection t_i -> t_i - (t1+t2+t3+t4)/2, i.e. I + J over F_3."""
    if ctx.prime != 3 or ctx.nvars != 4:
        raise ContextError(f"the F4 reflection acts on F_3[t1..t4], not {ctx.describe()}")
    matrix = tuple(tuple(1 + (i == j) for j in range(4)) for i in range(4))
    return GroupElement(ctx, matrix, "R")


def f4_generators(ctx: RingContext) -> list[GroupElement]:
    return signed_perm_generators(ctx) + [f4_reflection(ctx)]


def is_invariant(f: Polynomial, gens: list[GroupElement]) -> bool:
    """True iff every generator fixes ``f``."""
    return all(g.act(f) == f for g in gens)


def is_invariant_mod_ideal(f: Polynomial, gens: list[GroupElement], ideal: IdealHandle) -> bool:
    """True iff g(f) - f lies in ``ideal`` for every generator."""
    return all(contains(ideal, g.act(f) - f) for g in gens)


def invariant_dimension(
    ctx: RingContext,
    gens: list[GroupElement],
    d: int,
    cap: int | None = None,
) -> int:
    """dim of {f in S_d : g(f) = f for all generators}.

    The invariant subspace is cut down one generator at a time as the null
    space of (g - id) restricted to the current subspace; monomial generators
    go first.
    """
    cap = cap if cap is not None else get_config().invariant_slice_cap
    monomials = monomials_of_degree(ctx, d)
    if len(monomials) > cap:
        raise SizeError(f"degree-{d} slice has {len(monomials)} monomials (cap {cap})")
    p = ctx.prime
    index = {m: i for i, m in enumerate(monomials)}
    basis: list[SparseRow] = [{i: 1} for i in range(len(monomials))]

    for g in sorted(gens, key=lambda g: not g.is_monomial):
        if not basis:
            break
        images: dict[int, SparseRow] = {}
        columns = []
        for v in basis:
            w: dict[int, int] = {}
            for i, c in v.items():
                if i not in images:
                    images[i] = coordinates(g.monomial_image(monomials[i]), index)
                for r, a in images[i].items():
                    w[r] = (w.get(r, 0) + c * a) % p
            for i, c in v.items():
                w[i] = (w.get(i, 0) - c) % p
            columns.append({r: a for r, a in w.items() if a})
        rows: dict[int, SparseRow] = {}
        for k, column in enumerate(columns):
            for r, a in column.items():
                rows.setdefault(r, {})[k] = a
        kernel = nullspace_mod_p(list(rows.values()), len(basis), p)
        new_basis = []
        for combo in kernel:
            v: dict[int, int] = {}
            for k, c in combo.items():
                for i, a in basis[k].items():
                    v[i] = (v.get(i, 0) + c * a) % p
            new_basis.append({i: a for i, a in v.items() if a})
        basis = new_basis
        logger.debug("Invariant slice d=%d after %s: dimension %d", d, g.name, len(basis))
    return len(basis)
