"""Oka groups G(p;q;r): presentations, invariants, and isomorphism.

G(p;q;r) is generated by letters a_i (indexed over the integers) and w,
subject to w = a_{p-1}...a_1*a_0, w^r = 1, the periodicity relations
a_i = a_{i+q}, and the conjugacy relations a_{i+p} = w*a_i*w^-1.  The
periodicity relations identify a_i with a_{i mod q}, so the group has a
finite presentation on a_0..a_{q-1} and w; oka_presentation builds it.

Every G(p;q;r) is a central extension of a free product of cyclic
groups F_{s-1} * Z_{p/s} * Z_a by the finite cyclic group Z_{r/a},
where s = gcd(p, q) and a = gcd(q/s, r).  That extension data, together
with the abelianization Z_{r*p/s} x Z^{s-1}, determines the group up to
isomorphism, which yields a closed-form solution of the isomorphism
problem for the whole family (is_isomorphic / canonical_form).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .abelian import AbelianInvariants
from .words import Presentation, Word, gen

__all__ = [
    "OkaParams",
    "SimplifiedParams",
    "StructureReport",
    "CanonicalOkaForm",
    "oka_presentation",
    "simplified_presentation",
    "structure",
    "canonical_form",
    "is_isomorphic",
    "free_product_to_oka",
    "structure_description",
]


@dataclass(frozen=True)
class OkaParams:
    """The parameter triple (p;q;r), all positive."""

    p: int
    q: int
    r: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1 or self.r < 1:
            raise ValueError("p, q, r must be positive")

    def __str__(self):
        return f"G({self.p};{self.q};{self.r})"


@dataclass(frozen=True)
class SimplifiedParams:
    """Data (free_rank, m1, m2, n) of the simplified presentation.

    The group is the central extension of F_{free_rank} * Z_m1 * Z_m2
    by Z_n in which a generator of Z_m1 lifts to an element of order
    m1*n; m1 and m2 must be coprime.
    """

    free_rank: int
    m1: int
    m2: int
    n: int

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        if self.m1 < 1 or self.m2 < 1 or self.n < 1:
            raise ValueError("m1, m2, n must be positive")
        if gcd(self.m1, self.m2) != 1:
            raise ValueError("m1 and m2 must be coprime")


@dataclass(frozen=True)
class StructureReport:
    """Structural invariants of G(p;q;r).

    s = gcd(p, q); a = gcd(q/s, r).  The center contains Z_{r/a} (equal
    to the center unless the quotient is cyclic), the quotient by it is
    F_{s-1} * Z_{p/s} * Z_a, and the abelianization is
    Z_{r*p/s} x Z^{s-1}.  quotient_cyclic_orders drops factors equal
    to 1.  The group splits as Z_{r/a} x (quotient) exactly when r/a is
    coprime to (p/s)*a.
    """

    s: int
    a: int
    center_order: int
    quotient_free_rank: int
    quotient_cyclic_orders: tuple[int, ...]
    abelianization: AbelianInvariants
    is_abelian: bool
    is_finite_cyclic: bool
    finite_cyclic_order: int | None
    splits_as_direct_product: bool


@dataclass(frozen=True)
class CanonicalOkaForm:
    """Canonical representative of the isomorphism class of G(p;q;r).

    Finite cyclic groups of order N are represented as G(N;1;1); any
    other class has a unique representative with p >= q and
    q/gcd(p,q) dividing r.  invariant_triple is (s, r/a, {a, p/s}) with
    the last entry a sorted pair.
    """

    params: OkaParams
    invariant_triple: tuple[int, int, tuple[int, int]]
    cyclic: bool


def oka_presentation(g: OkaParams) -> Presentation:
    """Finite presentation of G(p;q;r) on generators a0..a{q-1}, w.

    Relators: w*(a_{(p-1) mod q} * ... * a_{0 mod q})^-1, w^r, and
    a_{(i+p) mod q} * w * a_i^-1 * w^-1 for i = 0..q-1.  That is q+2
    relators on q+1 generators; the instances of the conjugacy relation
    for other i are consequences of periodicity.
    """
    p, q, r = g.p, g.q, g.r
    names = tuple(f"a{i}" for i in range(q)) + ("w",)
    w = gen(q)
    product = Word()
    for j in range(p - 1, -1, -1):
        product = product * gen(j % q)
    relators = [w * ~product, gen(q, r)]
    for i in range(q):
        relators.append(gen((i + p) % q) * w * gen(i, -1) * gen(q, -1))
    return Presentation(names, tuple(relators))


def simplified_presentation(h: SimplifiedParams) -> Presentation:
    """Presentation on x1..xr, a, b with relators a^m1*b^-m2, a^(m1*n),
    and [a^m1, x_i] for each i."""
    r, m1, m2, n = h.free_rank, h.m1, h.m2, h.n
    names = tuple(f"x{i + 1}" for i in range(r)) + ("a", "b")
    ia, ib = r, r + 1
    relators = [gen(ia, m1) * gen(ib, -m2), gen(ia, m1 * n)]
    for i in range(r):
        relators.append(gen(ia, m1) * gen(i) * gen(ia, -m1) * gen(i, -1))
    return Presentation(names, tuple(relators))


def structure(g: OkaParams) -> StructureReport:
    """Compute the structural invariants of G(p;q;r) in closed form."""
    s = gcd(g.p, g.q)
    a = gcd(g.q // s, g.r)
    center_order = g.r // a
    p_over_s = g.p // s
    torsion = g.r * p_over_s
    abelianization = AbelianInvariants(
        free_rank=s - 1, torsion=(torsion,) if torsion > 1 else ()
    )
    # The quotient F_{s-1} * Z_{p/s} * Z_a is cyclic exactly when s = 1
    # and one of the two torsion factors is trivial (finite case), or
    # s = 2 with both trivial (infinite case Z); the extension is then
    # abelian, finite cyclic in the first case.
    is_finite_cyclic = s == 1 and min(g.p, a) == 1
    is_abelian = is_finite_cyclic or (s == 2 and p_over_s == 1 and a == 1)
    return StructureReport(
        s=s,
        a=a,
        center_order=center_order,
        quotient_free_rank=s - 1,
        quotient_cyclic_orders=tuple(sorted(m for m in (p_over_s, a) if m > 1)),
        abelianization=abelianization,
        is_abelian=is_abelian,
        is_finite_cyclic=is_finite_cyclic,
        finite_cyclic_order=g.r * g.p if is_finite_cyclic else None,
        splits_as_direct_product=gcd(center_order, p_over_s * a) == 1,
    )


def _invariant_triple(g: OkaParams) -> tuple[int, int, tuple[int, int]]:
    st = structure(g)
    pair = tuple(sorted((st.a, g.p // st.s)))
    return (st.s, st.center_order, pair)


def canonical_form(g: OkaParams) -> CanonicalOkaForm:
    """Canonical representative G(p';q';r') with p' >= q' and
    q'/gcd(p',q') | r'; finite cyclic groups normalize to (N;1;1).

    The two candidates G(p; a*s; r) and G(a*s; p; (r/a)*(p/s)) are both
    isomorphic to G(p;q;r); exactly one satisfies p' >= q' except when
    p = a*s, where they coincide.
    """
    st = structure(g)
    triple = _invariant_triple(g)
    if st.is_finite_cyclic:
        return CanonicalOkaForm(
            params=OkaParams(st.finite_cyclic_order, 1, 1),
            invariant_triple=triple,
            cyclic=True,
        )
    s, a = st.s, st.a
    if g.p >= a * s:
        params = OkaParams(g.p, a * s, g.r)
    else:
        params = OkaParams(a * s, g.p, (g.r // a) * (g.p // s))
    return CanonicalOkaForm(params=params, invariant_triple=triple, cyclic=False)


def is_isomorphic(g1: OkaParams, g2: OkaParams) -> bool:
    """Decide G(p1;q1;r1) ~ G(p2;q2;r2).

    Finite cyclic groups compare by order; all other groups compare by
    the invariant triple (s, r/a, {a, p/s}), which is a complete
    isomorphism invariant for the family.
    """
    st1, st2 = structure(g1), structure(g2)
    if st1.is_finite_cyclic or st2.is_finite_cyclic:
        return (
            st1.is_finite_cyclic
            and st2.is_finite_cyclic
            and st1.finite_cyclic_order == st2.finite_cyclic_order
        )
    return _invariant_triple(g1) == _invariant_triple(g2)


def free_product_to_oka(s: int, p: int, q: int) -> OkaParams:
    """Parameters with G(s*p; s*q; q) ~ F_{s-1} * Z_p * Z_q.

    Requires gcd(p, q) = 1; the resulting group has trivial center.
    """
    if s < 1 or p < 1 or q < 1:
        raise ValueError("s, p, q must be positive")
    if gcd(p, q) != 1:
        raise ValueError("gcd(p,q)!=1")
    return OkaParams(s * p, s * q, q)


def _abelianization_text(inv: AbelianInvariants) -> str:
    parts = [f"Z{d}" for d in inv.torsion]
    if inv.free_rank == 1:
        parts.append("Z")
    elif inv.free_rank > 1:
        parts.append(f"Z^{inv.free_rank}")
    return " x ".join(parts) if parts else "1"


def _quotient_text(st: StructureReport) -> str:
    parts = []
    if st.quotient_free_rank >= 1:
        parts.append(f"F{st.quotient_free_rank}")
    parts.extend(f"Z{m}" for m in st.quotient_cyclic_orders)
    return " * ".join(parts) if parts else "1"


def structure_description(g: OkaParams) -> str:
    """One-line human-readable structure summary of G(p;q;r)."""
    st = structure(g)
    if st.is_finite_cyclic:
        return f"{g} is cyclic of order {st.finite_cyclic_order}"
    text = (
        f"{g} is a central extension of {_quotient_text(st)} by Z{st.center_order}; "
        f"abelianization {_abelianization_text(st.abelianization)}"
    )
    if st.splits_as_direct_product:
        text += f"; splits as Z{st.center_order} x ({_quotient_text(st)})"
    return text
