"""Identity suites: reduced powers on Toda's classes, Milnor operations on the
Dickson expansion, and W(F4) invariants.

Each suite returns a SuiteResult of named checks. Checks marked
``required=False`` are reported but do not fail the suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from chowdefect.algebra.ops import format_poly
from chowdefect.algebra.ring import flag_context, q_context
from chowdefect.groebner import IdealHandle, contains
from chowdefect.hilbert.series import series_eval
from chowdefect.log import get_logger
from chowdefect.steenrod import milnor_q, reduced_power
from chowdefect.symfun import dickson_expand, pontryagin, toda_generators
from chowdefect.weyl import (
    F4_INVARIANT_SERIES,
    f4_generators,
    f4_reflection,
    gl_generators,
    invariant_dimension,
    is_invariant,
    is_invariant_mod_ideal,
    signed_perm_generators,
)

logger = get_logger(__name__)


@dataclass(frozen=True)
class CheckRow:
    name: str
    passed: bool
    required: bool = True
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "required": self.required,
            "detail": self.detail,
        }


@dataclass
class SuiteResult:
    name: str
    rows: list[CheckRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows if row.required)

    def check(self, name: str, passed: bool, required: bool = True, detail: str = "") -> None:
        row = CheckRow(name, bool(passed), required, detail)
        if not row.passed:
            log = logger.warning if required else logger.info
            log("%s: %s failed %s", self.name, name, detail)
        self.rows.append(row)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checks": [row.to_dict() for row in self.rows]}


def f4_context():
    return flag_context(3, 4)


def steenrod_suite() -> SuiteResult:
    """Reduced powers of Toda's generators in F_3[t1..t4]."""
    ctx = f4_context()
    named = toda_generators(ctx)
    p1, pbar2, pbar5 = named["p1"].value, named["pbar2"].value, named["pbar5"].value
    pbar9, pbar12 = named["pbar9"].value, named["pbar12"].value
    ideal = IdealHandle.from_polys(ctx, [p1, pbar2], names=["p1", "pbar2"], label="(p1, pbar2)")

    suite = SuiteResult("steenrod")
    suite.check("P1(p1) = p1^2 - pbar2", reduced_power(1, p1) == p1**2 - pbar2)
    suite.check("P1(pbar2) = p1*pbar2", reduced_power(1, pbar2) == p1 * pbar2)
    suite.check("P1(pbar5) = 0", not reduced_power(1, pbar5))
    suite.check("P3(p1) = 0", not reduced_power(3, p1))
    suite.check("P3(pbar2) = pbar5 - p1*pbar2^2", reduced_power(3, pbar2) == pbar5 - p1 * pbar2**2)
    suite.check(
        "P3(pbar9) = pbar12 mod (p1, pbar2)",
        contains(ideal, reduced_power(3, pbar9) - pbar12),
    )
    lhs = reduced_power(3, pbar5)
    rhs = pbar5 * p1 * (p1**2 - pbar2)
    difference = lhs - rhs
    suite.check(
        "P3(pbar5) = pbar5*p1*(p1^2 - pbar2)",
        not difference,
        required=False,
        detail="" if not difference else f"difference has {len(difference)} terms",
    )
    suite.check("P2(p1) = p1^3", reduced_power(2, p1) == p1**3)
    return suite


def dickson_suite(h_values: tuple[int, ...] = (1, 2, 3), max_h: int | None = None) -> SuiteResult:
    """Milnor operations on the Euler class: Q_k(e) = 0 for k < h-1 and Q_{h-1}(e) = d0*e."""
    suite = SuiteResult("dickson")
    for h in h_values:
        expansion = dickson_expand(h, max_h=max_h)
        e, d0 = expansion.e, expansion.d[0]
        suite.check(f"h={h}: e is a Dickson polynomial in z", expansion.is_dickson_form())
        for k in range(h - 1):
            suite.check(f"h={h}: Q{k}(e) = 0", not milnor_q(k, e))
        suite.check(f"h={h}: Q{h - 1}(e) = d0*e", milnor_q(h - 1, e) == d0 * e)
        if h >= 2:
            gl = gl_generators(q_context(h), skip=1)
            for i, d in enumerate(expansion.d):
                suite.check(f"h={h}: d{i} is GL-invariant", is_invariant(d, gl))
    return suite


def invariants_suite(max_degree: int = 15, cap: int | None = None) -> SuiteResult:
    """W(F4) invariants over F_3 and Pontryagin invariance under signed permutations."""
    ctx = f4_context()
    named = toda_generators(ctx)
    gens = f4_generators(ctx)
    reflection = f4_reflection(ctx)
    p1, pbar2 = named["p1"].value, named["pbar2"].value
    ideal = IdealHandle.from_polys(ctx, [p1, pbar2], names=["p1", "pbar2"], label="(p1, pbar2)")

    suite = SuiteResult("invariants")
    suite.check("R is an involution", reflection.compose(reflection).is_identity)
    for name in ("p1", "pbar2", "pbar5"):
        suite.check(f"{name} is W(F4)-invariant", is_invariant(named[name].value, gens))
    for name in ("pbar9", "pbar12"):
        suite.check(
            f"{name} is W(F4)-invariant mod (p1, pbar2)",
            is_invariant_mod_ideal(named[name].value, gens, ideal),
        )
    r15 = named["pbar5"].value ** 3
    relation = r15 - p1**3 * named["pbar12"].value - pbar2**3 * named["pbar9"].value
    suite.check("r15 = p1^3*pbar12 + pbar2^3*pbar9", not relation,
                detail="" if not relation else format_poly(relation))

    expected = series_eval(F4_INVARIANT_SERIES, max_degree)
    for d in range(max_degree + 1):
        dim = invariant_dimension(ctx, gens, d, cap=cap)
        suite.check(f"dim S_{d}^W = {expected[d]}", dim == expected[d], detail=f"computed {dim}")

    for prime in (2, 3):
        for n in range(1, 6):
            small = flag_context(prime, n)
            perms = signed_perm_generators(small)
            ok = all(is_invariant(pontryagin(small, k), perms) for k in range(n + 1))
            suite.check(f"p_k invariant under signed permutations (p={prime}, n={n})", ok)
    return suite
