"""Built-in verification cases.

Cases are grouped in families registered with ``@register_family``. A case id
is the family name followed by its parameters and optionally a scenario, all
separated by colons: ``pu3``, ``so_odd:3:versal``, ``spin_stable:6:12``,
``f4_chow:λ1``.

Adding a family:
    1. Write a builder taking the parameter strings and returning a CaseSpec
    2. Register it with @register_family("name", params=..., listed=[...])
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from chowdefect.catalog.models import (
    BoundSpec,
    CaseKind,
    CaseSpec,
    Reading,
    Scenario,
    Target,
    canonical_scenario,
)
from chowdefect.errors import CatalogError
from chowdefect.hilbert.series import (
    ZERO,
    AugmentationIdeal,
    Exterior,
    ExteriorPlus,
    FreeModule,
    RegSeqQuotient,
    SeriesExpr,
    Sum,
    Tensor,
    Truncated,
)

Builder = Callable[[list[str]], CaseSpec]


@dataclass(frozen=True)
class Family:
    name: str
    builder: Builder
    params: tuple[str, ...]
    listed: tuple[str, ...]
    summary: str

    @property
    def pattern(self) -> str:
        return ":".join([self.name] + [f"<{p}>" for p in self.params])


_families: dict[str, Family] = {}


def register_family(name: str, params: tuple[str, ...] = (), listed=(), summary: str = ""):
    """Decorator to register a case family builder."""
    def decorator(fn: Builder):
        _families[name] = Family(name, fn, tuple(params), tuple(listed) or (name,), summary)
        return fn
    return decorator


def families() -> list[Family]:
    return list(_families.values())


def list_cases() -> list[str]:
    """Concrete case ids of the built-in catalog."""
    return [case_id for family in _families.values() for case_id in family.listed]


def split_case_id(case_id: str) -> tuple[Family, list[str], str | None]:
    """Split an id into its family, parameters and trailing scenario."""
    parts = [part.strip() for part in case_id.split(":")]
    family = _families.get(parts[0])
    if family is None:
        known = ", ".join(sorted(_families))
        raise CatalogError(f"unknown case '{case_id}' (families: {known})")
    n = len(family.params)
    params, rest = parts[1:n + 1], parts[n + 1:]
    if len(params) < n or len(rest) > 1:
        raise CatalogError(f"case '{case_id}' does not match {family.pattern}[:<scenario>]")
    return family, params, rest[0] if rest else None


def build_case(case_id: str, scenario: str | None = None) -> CaseSpec:
    """Materialize a built-in case with the scenario applied.

    Raises CatalogError for unknown ids, bad parameters or unknown scenarios.
    """
    family, params, id_scenario = split_case_id(case_id)
    if scenario and id_scenario and canonical_scenario(scenario) != canonical_scenario(id_scenario):
        raise CatalogError(f"scenario '{scenario}' conflicts with case id '{case_id}'")
    try:
        base = family.builder(params)
    except ValueError as exc:
        raise CatalogError(f"bad parameters for {family.pattern}: {exc}") from exc
    return base.with_scenario(scenario or id_scenario)


def base_case(case_id: str) -> CaseSpec:
    """The case with its scenarios still unapplied (for case files)."""
    family, params, _ = split_case_id(case_id)
    try:
        return family.builder(params)
    except ValueError as exc:
        raise CatalogError(f"bad parameters for {family.pattern}: {exc}") from exc


def _int(text: str, name: str, low: int, high: int | None = None) -> int:
    value = int(text)
    if value < low or (high is not None and value > high):
        bound = f"{low}..{high}" if high is not None else f">= {low}"
        raise ValueError(f"{name} must be {bound}, got {value}")
    return value


def _regseq(degrees) -> RegSeqQuotient:
    return RegSeqQuotient.standard(tuple(degrees))


def _products(names: list[str]) -> tuple[str, ...]:
    """All b_i*b_j with i <= j, written as literals."""
    out = []
    for i, a in enumerate(names):
        for b in names[i:]:
            out.append(f"{a}^2" if a == b else f"{a}*{b}")
    return tuple(out)


# ── PU(3) and PGL(p) flag rings ─────────────────────────────────────


@register_family("pu3", summary="PU(3) at p=3: defect Z/3{c1c2, c2^2, c1c2^2} (x) S(t)/(c1,c2)")
def _pu3(params: list[str]) -> CaseSpec:
    motive = FreeModule((0, 1, 2))
    b = (1, 2)
    return CaseSpec(
        id="pu3",
        prime=3,
        variables=2,
        ker_generators=("c1^2", "c1*c2", "c2^2"),
        im_generators=("c1^2", "c1^3", "c2^3"),
        b_degrees=b,
        claimed_D=Tensor((FreeModule((3, 4, 5)), _regseq(b))),
        claimed_flag=Tensor((motive, _regseq(b))),
        motive_series=motive,
        provenance=(
            "flag ring of the versal PU(3) torsor: S(t)/(3, c_i c_j)",
            "images c2' -> c1^2, c3' -> c1^3, c6' -> c2^3 mod (c1)",
            "defect Z/3{c1c2, c2^2, c1c2^2} (x) S(t)/(c1, c2)",
        ),
        notes=("c6' -> c2^3 is taken literally; a c1-multiple variant ships as a case file",),
    )


@register_family(
    "pgl_flag",
    params=("p",),
    listed=("pgl_flag:2", "pgl_flag:3", "pgl_flag:5"),
    summary="versal PGL(p) flag ring S(t)/(p, c_i c_j) against Z/p{1, c1..c_{p-1}} (x) S(t)/(c)",
)
def _pgl_flag(params: list[str]) -> CaseSpec:
    p = int(params[0])
    if p not in (2, 3, 5):
        raise ValueError(f"p must be one of 2, 3, 5, got {p}")
    n = p - 1
    b = tuple(range(1, n + 1))
    motive = FreeModule(tuple(range(0, p)))
    return CaseSpec(
        id=f"pgl_flag:{p}",
        prime=p,
        variables=n,
        kind=CaseKind.FLAG_ONLY,
        ker_generators=_products([f"c{i}" for i in b]),
        b_degrees=b,
        claimed_flag=Tensor((motive, _regseq(b))),
        motive_series=motive,
        provenance=(f"flag ring of the versal PGL({p}) torsor: S(t)/({p}, c_i c_j)",),
    )


# ── SO(2l+1) at p=2 ─────────────────────────────────────────────────


@register_family(
    "so_odd",
    params=("l",),
    listed=tuple(f"so_odd:{n}:{s}" for n in range(2, 6) for s in ("split", "versal")),
    summary="SO(2l+1) at p=2: split defect Lambda(c)^+ (x) S(t)/(c), versal defect 0",
)
def _so_odd(params: list[str]) -> CaseSpec:
    n = _int(params[0], "l", 1, 8)
    b = tuple(range(1, n + 1))
    classes = [f"c{i}" for i in b]
    squares = tuple(f"{c}^2" for c in classes)
    gap = Tensor((ExteriorPlus(b), _regseq(b)))
    return CaseSpec(
        id=f"so_odd:{n}",
        prime=2,
        variables=n,
        ker_generators=squares,
        im_generators=squares,
        b_degrees=b,
        claimed_D=ZERO,
        claimed_flag=Tensor((Exterior(b), _regseq(b))),
        motive_series=Exterior(b),
        scenarios={
            "split": Scenario(
                ker_generators=tuple(classes),
                claimed_D=gap,
                claimed_flag=_regseq(b),
                motive_series=FreeModule((0,)),
            ),
            "versal": Scenario(),
        },
        default_scenario="versal",
        provenance=(
            "versal flag ring S(t)/(2, c_1^2, ..., c_l^2)",
            "split defect Lambda(c_1, .., c_l)^+ (x) S(t)/(c)",
            "versal sequence is exact: D = 0",
        ),
    )


@register_family(
    "spin_stable",
    params=("n", "N"),
    listed=("spin_stable:6:12",),
    summary="stable-range shadow: Ker = Im = (c_i^2 : 2i <= N), D = 0",
)
def _spin_stable(params: list[str]) -> CaseSpec:
    n = _int(params[0], "n", 2, 8)
    top = _int(params[1], "N", 1)
    gens = tuple(f"c{i}^2" for i in range(2, n + 1) if 2 * i <= top)
    return CaseSpec(
        id=f"spin_stable:{n}:{top}",
        prime=2,
        variables=n,
        ker_generators=gens,
        im_generators=gens,
        claimed_D=ZERO,
        provenance=("defect of the stable-range spin groups vanishes in the limit",),
        notes=(f"generators truncated at Chow degree {top}",),
    )


# ── Spin(7), Spin(9) at p=2 ─────────────────────────────────────────

_MOD2_NOTE = "images divisible by 2 integrally (2c2, ...) vanish mod 2 and are omitted from Im"


def _split_scenario(b_classes: tuple[str, ...], versal_claim: SeriesExpr, b) -> Scenario:
    gap = Tensor((FreeModule(b[:2]), _regseq(b)))
    return Scenario(
        ker_generators=b_classes,
        claimed_D=Sum((versal_claim, gap)),
        claimed_flag=_regseq(b),
        motive_series=FreeModule((0,)),
        notes=("split claim = versal claim + Z/2{b1, b2} (x) S(t)/(b)",),
    )


@register_family(
    "spin7",
    listed=("spin7:split", "spin7:versal"),
    summary="Spin(7) at p=2: D = Lambda(c2c3, e4)^+ (x) S(t)/(c2, c3, c1^4) claimed",
)
def _spin7(params: list[str]) -> CaseSpec:
    b = (2, 3, 4)
    motive = FreeModule((0, 2, 3))
    claim = Tensor((ExteriorPlus((5, 4)), _regseq(b)))
    return CaseSpec(
        id="spin7",
        prime=2,
        variables=3,
        ker_generators=("c2^2", "c2*c3", "c3^2", "c1^4"),
        im_generators=("c2^2", "c3^2", "c1^8"),
        b_degrees=b,
        claimed_D=claim,
        claimed_flag=Tensor((motive, _regseq(b))),
        motive_series=motive,
        scenarios={
            "split": _split_scenario(("c2", "c3", "c1^4"), claim, b),
            "versal": Scenario(),
        },
        default_scenario="versal",
        provenance=(
            "Ker = (2c2, c2^2, c2c3, c3^2, e4) with e4 = c1^4, taken mod 2",
            "Im generated by c4 -> c2^2, c6 -> c3^2, c8'' -> e4^2",
            "defect Lambda(c2c3, e4)^+ (x) S(t)/(c2, c3, c1^4), additively",
        ),
        notes=(_MOD2_NOTE,),
    )


@register_family(
    "spin9",
    listed=("spin9:split", "spin9:versal"),
    summary="Spin(9) at p=2: D = (Z/2{1, c2c3} (x) Z/2[c4]/(c4^4))^+ (x) S(t,c) claimed",
)
def _spin9(params: list[str]) -> CaseSpec:
    b = (2, 3, 4, 8)
    motive = FreeModule((0, 2, 3))
    stated = AugmentationIdeal(Tensor((Exterior((5,)), Truncated(4, 4))))
    claim = Tensor((stated, _regseq(b)))
    return CaseSpec(
        id="spin9",
        prime=2,
        variables=4,
        ker_generators=("c2^2", "c2*c3", "c3^2", "c4", "c1^8"),
        im_generators=("c2^2", "c3^2", "c1^8", "c4^4"),
        b_degrees=b,
        claimed_D=claim,
        claimed_flag=Tensor((motive, _regseq(b))),
        motive_series=motive,
        readings=(
            Reading("full", claim, Target.D),
            Reading("tilde", stated, Target.TILDE),
        ),
        scenarios={
            "split": _split_scenario(("c2", "c3", "c4", "c1^8"), claim, b),
            "versal": Scenario(),
        },
        default_scenario="versal",
        provenance=(
            "Ker = (c2^2, c2c3, c3^2, e8, c4)",
            "Im includes c16'' -> c4^4; D/2 is the image of i* mod 2",
            "stated result (Z/2{1, c2c3} (x) Z/2[c4]/(c4^4))^+ (x) S(t,c)",
        ),
        notes=(
            _MOD2_NOTE,
            "S(t,c) is read as S(t)/(c2, c3, c4, c1^8)",
            "the stated series is labelled tilde-D but tensored with S(t,c); both readings are compared",
        ),
    )


# ── F4 at p=3 ───────────────────────────────────────────────────────

F4_B = ("p1", "pbar2", "p3", "p4")
F4_B_DEGREES = (2, 4, 6, 8)
_F4_NOTE = "R is read as t_i -> t_i - (t1+t2+t3+t4)/2, the matrix I + J over F_3"

# Z/3{p1^a pbar2^b p3^c p4^e : a+b+c+e >= 2} / (p1^2, p1 pbar2, p3^3, p4^3)
F4_DPRIME = BoundSpec(
    weights=F4_B_DEGREES,
    caps=(1, None, 2, 2),
    excluded=((1, 1, 0, 0),),
    min_total=2,
)


@register_family("f4_top", summary="F4 at p=3: D = Z/3[p3, p4]^+/(p3^3, p4^3) (x) S(t)/(b)")
def _f4_top(params: list[str]) -> CaseSpec:
    stated = AugmentationIdeal(Tensor((Truncated(6, 3), Truncated(8, 3))))
    return CaseSpec(
        id="f4_top",
        prime=3,
        variables=4,
        ker_generators=F4_B,
        im_generators=("p1", "pbar2", "pbar5", "p3^3", "p4^3"),
        b_degrees=F4_B_DEGREES,
        claimed_D=Tensor((stated, _regseq(F4_B_DEGREES))),
        claimed_flag=_regseq(F4_B_DEGREES),
        motive_series=FreeModule((0,)),
        readings=(Reading("tilde", stated, Target.TILDE),),
        provenance=(
            "i*(x4) = p1, i*(x8) = pbar2, i*(x20) = pbar5, i*(x36) = p3^3, i*(x48) = p4^3",
            "D_{H/3} = Z/3[p3, p4]^+/(p3^3, p4^3)",
        ),
        notes=(_F4_NOTE, "pbar9 and pbar12 are pinned to p3^3 and p4^3"),
    )


@register_family(
    "f4_chow",
    listed=("f4_chow:λ0", "f4_chow:λ1"),
    summary="versal F4 at p=3: tilde-D bounded by D(F4)'",
)
def _f4_chow(params: list[str]) -> CaseSpec:
    motive = FreeModule((0,) + F4_B_DEGREES)
    base_im = ("p1^2", "p1*pbar2", "p3^3", "p4^3")
    return CaseSpec(
        id="f4_chow",
        prime=3,
        variables=4,
        ker_generators=_products(list(F4_B)),
        im_generators=base_im,
        b_degrees=F4_B_DEGREES,
        claimed_flag=Tensor((motive, _regseq(F4_B_DEGREES))),
        motive_series=motive,
        tilde_bound=F4_DPRIME,
        vanishing_degree=8,
        scenarios={
            "λ0": Scenario(im_generators=base_im, notes=("x8^2 is not a cycle-map image",)),
            "λ1": Scenario(
                im_generators=base_im + ("pbar2^2",),
                notes=("x8^2 is a cycle-map image: i*(x8^2) = pbar2^2",),
            ),
        },
        default_scenario="λ0",
        provenance=(
            "CH*(G/B_k)/3 = S(t)/(p_i p_j | 1 <= i, j <= 4)",
            "Im = (3x4, x4^2, x4x8, x4^3, lambda x8^2, ..); p3^3 = i*(c18), p4^3 = i*(P^3 c18)",
            "tilde-D is a quotient of D(F4)' = Z/3{p^I : |I| >= 2}/(p1^2, p1p2, p3^3, p4^3)",
        ),
        notes=(_F4_NOTE, "pbar9 and pbar12 are pinned to p3^3 and p4^3"),
    )


@register_family(
    "e_upper",
    params=("degrees",),
    listed=("e_upper:10,12,14",),
    summary="E6/E7 at p=3: the bound ((1 + D(F4)') (x) Z/3[b5..b_l])^+ on tilde-D",
)
def _e_upper(params: list[str]) -> CaseSpec:
    try:
        degrees = tuple(int(d) for d in params[0].split(",") if d.strip())
    except ValueError:
        raise ValueError(f"degrees must be comma-separated integers, got '{params[0]}'") from None
    if not degrees or any(d < 1 for d in degrees):
        raise ValueError("degrees must be positive")
    return CaseSpec(
        id=f"e_upper:{','.join(map(str, degrees))}",
        prime=3,
        variables=4,
        kind=CaseKind.BOUND_ONLY,
        b_degrees=F4_B_DEGREES,
        tilde_bound=F4_DPRIME,
        upper_degrees=degrees,
        provenance=("(D(F4)' (x) Z/3[b5, .., b_l])^+ surjects onto tilde-D",),
        notes=("b5..b_l degrees are user-supplied",),
    )
