"""Finite groups by Cayley table and brute-force homomorphism counting.

The number of homomorphisms from a finitely presented group into a fixed
finite group is an isomorphism invariant, so a vector of such counts
over several targets (a "hom spectrum") separates non-isomorphic groups
at desk scale and confirms claimed isomorphisms.  Counting is exact: a
backtracking search over generator images, checking each relator as soon
as all its generators are assigned.

Search caps keep the worst case |target|^generators from hanging the
process; exceeding a cap raises SearchCapExceeded, which callers treat
as a refusal rather than a mathematical answer.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

from .words import Presentation, Word

__all__ = [
    "FiniteGroup",
    "HomSpectrum",
    "SearchCapExceeded",
    "make_cyclic",
    "make_symmetric",
    "make_dihedral",
    "count_homomorphisms",
    "hom_spectrum",
    "parse_target",
    "parse_targets",
    "DEFAULT_GENERATOR_CAP",
    "DEFAULT_ORDER_CAP",
]

DEFAULT_GENERATOR_CAP = 6
DEFAULT_ORDER_CAP = 120

# Full associativity check is cubic in the order; above this bound a
# fixed-seed random sample of triples is used instead.
_FULL_ASSOC_BOUND = 64
_ASSOC_SAMPLES = 4096


class SearchCapExceeded(Exception):
    """Search refused: the configured cost cap would be exceeded."""


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its composition table.

    table[i][j] is the index of element i composed with element j.
    Consistency of the identity and inverse tables is always verified at
    construction; associativity is verified on all triples for order up
    to 64 and on a deterministic sample above that.
    """

    label: str
    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]

    def __post_init__(self):
        n = self.order
        if n < 1 or len(self.table) != n or len(self.inverse) != n:
            raise ValueError("table and inverse sizes must match the order")
        for row in self.table:
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise ValueError("table entries must be element indices")
        e = self.identity
        for x in range(n):
            if self.table[e][x] != x or self.table[x][e] != x:
                raise ValueError("identity is inconsistent with the table")
            if (
                self.table[x][self.inverse[x]] != e
                or self.table[self.inverse[x]][x] != e
            ):
                raise ValueError("inverse table is inconsistent with the table")
        t = self.table
        if n <= _FULL_ASSOC_BOUND:
            triples = (
                (x, y, z) for x in range(n) for y in range(n) for z in range(n)
            )
        else:
            rng = random.Random(n)
            triples = (
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(_ASSOC_SAMPLES)
            )
        for x, y, z in triples:
            if t[t[x][y]][z] != t[x][t[y][z]]:
                raise ValueError(f"composition table is not associative at {x},{y},{z}")

    def element_order(self, x: int) -> int:
        k = 1
        y = x
        while y != self.identity:
            y = self.table[y][x]
            k += 1
        return k


@dataclass(frozen=True)
class HomSpectrum:
    """Counts of homomorphisms into each target, in target order."""

    targets: tuple[str, ...]
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.targets) != len(self.counts):
            raise ValueError("targets and counts must have equal length")


def _group_from_table(label: str, table: list[list[int]]) -> FiniteGroup:
    n = len(table)
    identity = None
    for e in range(n):
        if all(table[e][x] == x == table[x][e] for x in range(n)):
            identity = e
            break
    if identity is None:
        raise ValueError("table has no identity element")
    inverse = [-1] * n
    for x in range(n):
        for y in range(n):
            if table[x][y] == identity == table[y][x]:
                inverse[x] = y
                break
        if inverse[x] < 0:
            raise ValueError(f"element {x} has no inverse")
    return FiniteGroup(
        label=label,
        order=n,
        table=tuple(tuple(row) for row in table),
        identity=identity,
        inverse=tuple(inverse),
    )


@lru_cache(maxsize=None)
def make_cyclic(n: int) -> FiniteGroup:
    """Z_n with addition table."""
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return _group_from_table(f"Z{n}", table)


@lru_cache(maxsize=None)
def make_symmetric(n: int) -> FiniteGroup:
    """S_n for 1 <= n <= 5, elements in lexicographic one-line order.

    Composition is (p*q)(x) = p(q(x)).
    """
    if not 1 <= n <= 5:
        raise ValueError("symmetric group degree must be in 1..5")
    elements = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(elements)}
    table = [
        [index[tuple(p[q[x]] for x in range(n))] for q in elements]
        for p in elements
    ]
    return _group_from_table(f"S{n}", table)


@lru_cache(maxsize=None)
def make_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: symmetries x -> (-1)^f * x + r on Z_n.

    Element (f, r) has index f*n + r.
    """
    if n < 1:
        raise ValueError("dihedral parameter must be positive")
    table = [[0] * (2 * n) for _ in range(2 * n)]
    for f1 in range(2):
        for r1 in range(n):
            for f2 in range(2):
                for r2 in range(n):
                    f = (f1 + f2) % 2
                    r = (r1 + r2) % n if f1 == 0 else (r1 - r2) % n
                    table[f1 * n + r1][f2 * n + r2] = f * n + r
    return _group_from_table(f"D{n}", table)


def parse_target(spec: str) -> FiniteGroup:
    """Build a target group from a specifier: cyclic:n, sym:n, dihedral:n."""
    kind, sep, arg = spec.partition(":")
    if not sep or not arg.isdigit():
        raise ValueError(f"bad target specifier {spec!r}; expected kind:n")
    n = int(arg)
    builders = {"cyclic": make_cyclic, "sym": make_symmetric, "dihedral": make_dihedral}
    if kind not in builders:
        raise ValueError(f"unknown target kind {kind!r}")
    return builders[kind](n)


def parse_targets(specs: str) -> list[FiniteGroup]:
    """Parse a comma-separated list of target specifiers."""
    return [parse_target(item) for item in specs.split(",") if item]


def _assignment_order(ngens: int, relator_gens: list[frozenset[int]]) -> list[int]:
    """Greedy generator order maximizing early relator completion.

    At each step pick the unassigned generator that completes the most
    still-open relators, tie-broken by total number of relators it
    appears in, then by index.  Deterministic, and only a heuristic: the
    count itself does not depend on the order.
    """
    appearances = [0] * ngens
    for gens in relator_gens:
        for g in gens:
            appearances[g] += 1
    assigned: set[int] = set()
    open_rels = list(range(len(relator_gens)))
    order = []
    remaining = set(range(ngens))
    while remaining:
        best = min(
            remaining,
            key=lambda g: (
                -sum(1 for r in open_rels if relator_gens[r] <= assigned | {g}),
                -appearances[g],
                g,
            ),
        )
        order.append(best)
        assigned.add(best)
        open_rels = [r for r in open_rels if not relator_gens[r] <= assigned]
        remaining.discard(best)
    return order


def _power(target: FiniteGroup, x: int, e: int) -> int:
    if e < 0:
        x = target.inverse[x]
        e = -e
    result = target.identity
    t = target.table
    while e:
        if e & 1:
            result = t[result][x]
        x = t[x][x]
        e >>= 1
    return result


def count_homomorphisms(
    p: Presentation,
    t: FiniteGroup,
    *,
    generator_cap: int = DEFAULT_GENERATOR_CAP,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> int:
    """Exact number of homomorphisms from the presented group into t.

    Counts the assignments of target elements to generators under which
    every relator evaluates to the identity.  Backtracking search:
    generators are assigned one at a time (greedy order, see
    _assignment_order) and a relator is checked as soon as all of its
    generators have values.  When the generator being assigned occurs
    exactly once in some completed relator, with exponent +-1, its value
    is forced and computed directly instead of scanned.  The result is
    independent of these orderings, and deterministic.
    """
    ngens = len(p.generators)
    if ngens > generator_cap:
        raise SearchCapExceeded(
            f"{ngens} generators exceeds search cap {generator_cap}"
        )
    if t.order > order_cap:
        raise SearchCapExceeded(
            f"target order {t.order} exceeds search cap {order_cap}"
        )
    if ngens == 0:
        return 1

    relator_gens = [frozenset(g for g, _ in rel.syllables) for rel in p.relators]
    used = frozenset().union(*relator_gens) if relator_gens else frozenset()
    free_gens = ngens - len(used)
    constrained = sorted(used)
    remap = {g: i for i, g in enumerate(constrained)}
    if not constrained:
        return t.order**free_gens

    relators = [
        tuple((remap[g], e) for g, e in rel.syllables) for rel in p.relators
    ]
    relator_gens = [frozenset(g for g, _ in rel) for rel in relators]
    order = _assignment_order(len(constrained), relator_gens)

    # Schedule each relator at the first step where all its generators
    # are assigned, and find a forcing relator per step if one exists.
    position = {g: k for k, g in enumerate(order)}
    step_checks: list[list[tuple[tuple[int, int], ...]]] = [[] for _ in order]
    step_force: list[tuple[tuple, int, tuple] | None] = [None] * len(order)
    for rel, gens in zip(relators, relator_gens):
        step = max(position[g] for g in gens)
        step_checks[step].append(rel)
        g_new = order[step]
        occurrences = [i for i, (g, _) in enumerate(rel) if g == g_new]
        if step_force[step] is None and len(occurrences) == 1:
            i = occurrences[0]
            e = rel[i][1]
            if e in (1, -1):
                step_force[step] = (rel[:i], e, rel[i + 1 :])

    n = t.order
    tab = t.table
    inv = t.inverse
    identity = t.identity
    max_exp = max(
        (abs(e) for rel in relators for _, e in rel), default=1
    )
    # pows[x][k] = x^k for 0 <= k <= max_exp; negative exponents go
    # through the inverse table.
    pows = []
    for x in range(n):
        px = [identity]
        acc = identity
        for _ in range(max_exp):
            acc = tab[acc][x]
            px.append(acc)
        pows.append(px)

    assign = [0] * len(constrained)

    def evaluate(rel) -> int:
        v = identity
        for g, e in rel:
            x = assign[g]
            v = tab[v][pows[x][e] if e > 0 else inv[pows[x][-e]]]
        return v

    nsteps = len(order)

    def search(k: int) -> int:
        if k == nsteps:
            return 1
        g = order[k]
        checks = step_checks[k]
        force = step_force[k]
        if force is None:
            candidates: Iterable[int] = range(n)
        else:
            prefix, e, suffix = force
            w = tab[evaluate(suffix)][evaluate(prefix)]
            candidates = (w,) if e == -1 else (inv[w],)
        total = 0
        for x in candidates:
            assign[g] = x
            for rel in checks:
                if evaluate(rel) != identity:
                    break
            else:
                total += search(k + 1)
        return total

    return search(0) * t.order**free_gens


def hom_spectrum(
    p: Presentation,
    targets: Sequence[FiniteGroup],
    *,
    generator_cap: int = DEFAULT_GENERATOR_CAP,
    order_cap: int = DEFAULT_ORDER_CAP,
) -> HomSpectrum:
    """Homomorphism counts into each target, in the given order."""
    counts = tuple(
        count_homomorphisms(p, t, generator_cap=generator_cap, order_cap=order_cap)
        for t in targets
    )
    return HomSpectrum(tuple(t.label for t in targets), counts)
