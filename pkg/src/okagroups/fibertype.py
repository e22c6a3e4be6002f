"""From pencil combinatorics to fundamental groups.

A component-free pencil of plane curves with connected generic fibers
can be written with two coprime completely general members of degrees
k*p and k*q (p >= q, gcd(p,q) = 1); at most two fibers are multiple,
namely the p-th and q-th powers.  Only this combinatorial shadow
(p, q, k, number of chosen fibers, optional special-fiber flags) is
modeled here; no curve equations are ever represented.

The complement of s generic fibers has fundamental group G(sp;sq;kq).
Adjoining one multiple fiber, assumed irreducible with abelian
complement group (an input hypothesis this module cannot check), gives
G((s+1)p;(s+1);k) for the degree-kp fiber and G((s+1)q;s+1;k) for the
degree-kq one.  Adjoining a further generic fiber to a group already in
fiber form G(s'p';s'q';k'q') gives G((s'+1)p';(s'+1)q';k'q').

Orbifold fundamental groups of marked spheres and higher-genus curves
are included since they are the quotients these groups centrally extend:
with at least one puncture they are free products of cyclic groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .oka import OkaParams, oka_presentation, structure_description
from .words import (
    Presentation,
    Word,
    free_product_presentation,
    gen,
)

__all__ = [
    "PencilSpec",
    "OrbifoldSpec",
    "GroupAnswer",
    "validate_pencil",
    "pi1_generic_fibers",
    "pi1_with_special_fiber",
    "add_generic_fiber",
    "oka_join_example",
    "orbifold_group",
    "parse_pencil_records",
    "format_pencil_record",
]

SPECIAL_FIBER_NOTE = (
    "assumes the special fiber is irreducible with abelian complement"
    " (input hypothesis, not verified)"
)


@dataclass(frozen=True)
class PencilSpec:
    """Combinatorics of a pencil and a choice of fibers.

    p >= q are coprime degree parameters, k the common degree divisor,
    fibers the number of generic fibers chosen.  include_fkp /
    include_fkq select at most one of the two possible multiple fibers
    (the degree-kp resp. degree-kq one) for inclusion in the curve.
    """

    p: int
    q: int
    k: int
    fibers: int
    include_fkp: bool = False
    include_fkq: bool = False


@dataclass(frozen=True)
class OrbifoldSpec:
    """A genus-g surface with punctures and integer marks >= 2."""

    genus: int
    punctures: int
    marks: tuple[int, ...]


@dataclass(frozen=True)
class GroupAnswer:
    """A computed fundamental group.

    oka is set when the group is delivered as G(p;q;r); in that case
    presentation is exactly oka_presentation(oka).
    """

    oka: OkaParams | None
    presentation: Presentation
    description: str


def validate_pencil(spec: PencilSpec) -> PencilSpec:
    """Check every invariant of a pencil spec, reporting violations by name."""
    problems = []
    if spec.p < 1 or spec.q < 1 or spec.k < 1:
        problems.append("p,q,k must be positive")
    else:
        if spec.p < spec.q:
            problems.append("p<q")
        if gcd(spec.p, spec.q) != 1:
            problems.append("gcd(p,q)!=1")
    if spec.fibers < 1:
        problems.append("fibers<1")
    if spec.include_fkp and spec.include_fkq:
        problems.append("both special fibers selected")
    if problems:
        raise ValueError("invalid pencil spec: " + "; ".join(problems))
    return spec


def pi1_generic_fibers(spec: PencilSpec) -> GroupAnswer:
    """Fundamental group of the complement of s generic fibers:
    G(s*p; s*q; k*q)."""
    spec = validate_pencil(spec)
    if spec.include_fkp or spec.include_fkq:
        raise ValueError("special fiber flags must be unset; use pi1_with_special_fiber")
    g = OkaParams(spec.fibers * spec.p, spec.fibers * spec.q, spec.k * spec.q)
    description = (
        f"complement of {spec.fibers} generic fiber(s) of a ({spec.p},{spec.q}) "
        f"pencil with k={spec.k}: {structure_description(g)}"
    )
    return GroupAnswer(oka=g, presentation=oka_presentation(g), description=description)


def pi1_with_special_fiber(spec: PencilSpec) -> GroupAnswer:
    """Fundamental group with one multiple fiber added to s generic ones.

    The degree-kp fiber gives G((s+1)*p; s+1; k), the degree-kq fiber
    G((s+1)*q; s+1; k).  Both readings require the special fiber to be
    irreducible with abelian complement group, which is geometric input
    taken on trust and recorded in the description.
    """
    spec = validate_pencil(spec)
    if spec.include_fkp == spec.include_fkq:
        raise ValueError("exactly one special fiber flag must be set")
    s = spec.fibers
    if spec.include_fkp:
        g = OkaParams((s + 1) * spec.p, s + 1, spec.k)
        which = f"degree-{spec.k * spec.p} fiber"
    else:
        g = OkaParams((s + 1) * spec.q, s + 1, spec.k)
        which = f"degree-{spec.k * spec.q} fiber"
    description = (
        f"complement of {s} generic fiber(s) plus the multiple {which}; "
        f"{SPECIAL_FIBER_NOTE}: {structure_description(g)}"
    )
    return GroupAnswer(oka=g, presentation=oka_presentation(g), description=description)


def add_generic_fiber(g: OkaParams) -> OkaParams:
    """One more generic fiber: G(s'p';s'q';k'q') -> G((s'+1)p';(s'+1)q';k'q').

    The fiber-form decomposition is recovered as s' = gcd(p,q),
    p' = p/s', q' = q/s', k' = r/q'; inputs where q' does not divide r
    or p' < q' are not of fiber form and are rejected.
    """
    s = gcd(g.p, g.q)
    p1, q1 = g.p // s, g.q // s
    if p1 < q1:
        raise ValueError(f"{g} is not in fiber form: p' < q'")
    if g.r % q1:
        raise ValueError(f"{g} is not in fiber form: q'={q1} does not divide r={g.r}")
    return OkaParams((s + 1) * p1, (s + 1) * q1, g.r)


def oka_join_example(r: int, m1: int, m2: int, d: int) -> OkaParams:
    """Group of the union of r+1 generic members of a degree-d pencil
    whose two base members are products of lines with multiplicity gcds
    m1 and m2: G((r+1)*m1; (r+1)*m2; d/m1)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    if m1 < 1 or m2 < 1 or d < 1:
        raise ValueError("m1, m2, d must be positive")
    if gcd(m1, m2) != 1:
        raise ValueError("gcd(m1,m2)!=1")
    if d % m1 or d % m2:
        raise ValueError("m1 and m2 must both divide d")
    return OkaParams((r + 1) * m1, (r + 1) * m2, d // m1)


def _free_product_text(rank: int, marks: tuple[int, ...]) -> str:
    parts = ([f"F{rank}"] if rank >= 1 else []) + [f"Z{m}" for m in marks]
    return " * ".join(parts) if parts else "1"


def orbifold_group(spec: OrbifoldSpec) -> GroupAnswer:
    """Orbifold fundamental group of a marked genus-g surface.

    With s >= 1 punctures the group is the free product
    F_{2g+s-1} * Z_{m1} * ... * Z_{mn}.  Without punctures it is
    presented on a1,b1,..,ag,bg,mu1,..,mun with relators mu_i^{m_i} and
    mu_1*...*mu_n = [a1,b1]*...*[ag,bg], and carries no free-product
    claim.
    """
    if spec.genus < 0:
        raise ValueError("genus must be non-negative")
    if spec.punctures < 0:
        raise ValueError("puncture count must be non-negative")
    marks = tuple(spec.marks)
    for m in marks:
        if m < 2:
            raise ValueError(f"mark {m} is less than 2")
    if spec.punctures >= 1:
        rank = 2 * spec.genus + spec.punctures - 1
        presentation = free_product_presentation(rank, marks)
        description = (
            f"orbifold group of a genus-{spec.genus} surface with "
            f"{spec.punctures} puncture(s) and marks {list(marks)}: "
            f"{_free_product_text(rank, marks)}"
        )
        return GroupAnswer(oka=None, presentation=presentation, description=description)
    g = spec.genus
    names = []
    for i in range(g):
        names.extend((f"a{i + 1}", f"b{i + 1}"))
    names.extend(f"mu{j + 1}" for j in range(len(marks)))
    relators = [gen(2 * g + j, m) for j, m in enumerate(marks)]
    product = Word()
    for j in range(len(marks)):
        product = product * gen(2 * g + j)
    commutators = Word()
    for i in range(g):
        ai, bi = gen(2 * i), gen(2 * i + 1)
        commutators = commutators * ai * bi * ~ai * ~bi
    relators.append(product * ~commutators)
    presentation = Presentation(tuple(names), tuple(relators))
    description = (
        f"orbifold group of a closed genus-{g} surface with marks {list(marks)}"
    )
    return GroupAnswer(oka=None, presentation=presentation, description=description)


_SPECIAL_VALUES = {"none": (False, False), "fkp": (True, False), "fkq": (False, True)}


def format_pencil_record(spec: PencilSpec) -> str:
    """Canonical one-line record: `p=3 q=2 k=1 fibers=1 special=none`."""
    if spec.include_fkp:
        special = "fkp"
    elif spec.include_fkq:
        special = "fkq"
    else:
        special = "none"
    return f"p={spec.p} q={spec.q} k={spec.k} fibers={spec.fibers} special={special}"


def parse_pencil_records(text: str) -> list[PencilSpec]:
    """Parse pencil records, one per line; `#` starts a comment.

    Round-trips with format_pencil_record byte-exactly on canonical
    records.  Every parsed record is validated.
    """
    specs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields: dict[str, str] = {}
        for item in line.split():
            key, sep, value = item.partition("=")
            if not sep:
                raise ValueError(f"line {lineno}: expected key=value, got {item!r}")
            if key in fields:
                raise ValueError(f"line {lineno}: duplicate key {key!r}")
            fields[key] = value
        unknown = set(fields) - {"p", "q", "k", "fibers", "special"}
        if unknown:
            raise ValueError(f"line {lineno}: unknown key(s) {sorted(unknown)}")
        try:
            numbers = {key: int(fields[key]) for key in ("p", "q", "k", "fibers")}
        except KeyError as missing:
            raise ValueError(f"line {lineno}: missing key {missing}") from None
        except ValueError:
            raise ValueError(f"line {lineno}: p, q, k, fibers must be integers") from None
        special = fields.get("special", "none")
        if special not in _SPECIAL_VALUES:
            raise ValueError(f"line {lineno}: special must be none, fkp, or fkq")
        include_fkp, include_fkq = _SPECIAL_VALUES[special]
        spec = PencilSpec(
            p=numbers["p"],
            q=numbers["q"],
            k=numbers["k"],
            fibers=numbers["fibers"],
            include_fkp=include_fkp,
            include_fkq=include_fkq,
        )
        try:
            specs.append(validate_pencil(spec))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return specs
