"""Exact rank and null spaces over F_p.

Rows are sparse ``{column: int}`` dicts; the work is done by sympy's sparse
DomainMatrix over GF(p).
"""

from __future__ import annotations

from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from chowdefect.algebra.ring import Monomial, Polynomial

SparseRow = dict[int, int]


def _domain_matrix(rows: list[SparseRow], ncols: int, p: int) -> DomainMatrix:
    K = GF(p)
    dod = {}
    for i, row in enumerate(rows):
        entries = {j: K(v) for j, v in row.items() if v % p}
        if entries:
            dod[i] = entries
    return DomainMatrix(dod, (len(rows), ncols), K)


def rank_mod_p(rows: list[SparseRow], ncols: int, p: int) -> int:
    """Rank over F_p of the matrix with the given sparse rows."""
    if not rows or ncols == 0:
        return 0
    return _domain_matrix(rows, ncols, p).rank()


def nullspace_mod_p(rows: list[SparseRow], ncols: int, p: int) -> list[SparseRow]:
    """A basis of ``{v : A v = 0}`` for the matrix A with the given rows."""
    if ncols == 0:
        return []
    if not any(rows):
        return [{j: 1} for j in range(ncols)]
    kernel = _domain_matrix(rows, ncols, p).nullspace()
    basis = []
    for _, row in sorted(kernel.to_dod().items()):
        vector = {j: int(v) % p for j, v in row.items() if int(v) % p}
        if vector:
            basis.append(vector)
    return basis


def coordinates(f: Polynomial, index: dict[Monomial, int]) -> SparseRow:
    """Coordinates of ``f`` in a monomial basis given by ``index``.

    Raises KeyError when ``f`` has a term outside the basis.
    """
    p = f.ring.domain.mod
    return {index[m]: int(c) % p for m, c in f.iterterms()}
