"""Exact integer linear algebra for abelianized presentations.

Relation matrices, Smith normal form over Z, and the abelian invariants
(free rank plus torsion coefficients) of a finitely presented group.
All arithmetic uses Python's unbounded integers; intermediate entries in
a Smith reduction can exceed any fixed machine width even for small
inputs, so no fixed-width array type is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Presentation

__all__ = [
    "IntegerMatrix",
    "AbelianInvariants",
    "relation_matrix",
    "smith_normal_form",
    "abelian_invariants",
]


@dataclass(frozen=True)
class IntegerMatrix:
    """Dense integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]


@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant factors of a finitely generated abelian group.

    The group is Z^free_rank x Z_{d1} x ... x Z_{dk} with each torsion
    coefficient at least 2 and d1 | d2 | ... | dk.
    """

    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        prev = None
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion coefficient {d} is less than 2")
            if prev is not None and d % prev != 0:
                raise ValueError("torsion coefficients must form a divisibility chain")
            prev = d


def relation_matrix(p: Presentation) -> IntegerMatrix:
    """Abelianized relation matrix: rows = relators, columns = generators,
    entry = total exponent sum of the generator in the relator."""
    cols = len(p.generators)
    entries = []
    for rel in p.relators:
        row = [0] * cols
        for g, e in rel.syllables:
            row[g] += e
        entries.extend(row)
    return IntegerMatrix(len(p.relators), cols, tuple(entries))


def _find_pivot(a: list[list[int]], t: int, rows: int, cols: int):
    """Smallest nonzero |entry| in the trailing submatrix, row-major ties."""
    best = None
    best_abs = None
    for i in range(t, rows):
        row = a[i]
        for j in range(t, cols):
            v = row[j]
            if v and (best_abs is None or abs(v) < best_abs):
                best = (i, j)
                best_abs = abs(v)
                if best_abs == 1:
                    return best
    return best


def smith_normal_form(m: IntegerMatrix) -> list[int]:
    """Diagonal d1..dk (k = min(rows, cols)) of the Smith normal form.

    Each di >= 0 and d1 | d2 | ... | dk; trailing entries beyond the rank
    are 0.  Fully deterministic: the pivot is always the entry of
    smallest nonzero absolute value in the remaining submatrix (ties
    broken row-major), and the divisibility fix-up folds in the first
    offending row.
    """
    rows, cols = m.rows, m.cols
    k = min(rows, cols)
    diag = [0] * k
    a = [list(m.entries[i * cols : (i + 1) * cols]) for i in range(rows)]
    for t in range(k):
        while True:
            pivot = _find_pivot(a, t, rows, cols)
            if pivot is None:
                return diag
            pi, pj = pivot
            if pi != t:
                a[t], a[pi] = a[pi], a[t]
            if pj != t:
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
            if a[t][t] < 0:
                a[t] = [-v for v in a[t]]
            d = a[t][t]
            clean = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // d
                    if q:
                        ai, at = a[i], a[t]
                        for j in range(t, cols):
                            ai[j] -= q * at[j]
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // d
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        clean = False
            if not clean:
                continue
            bad = None
            for i in range(t + 1, rows):
                row = a[i]
                for j in range(t + 1, cols):
                    if row[j] % d:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                diag[t] = d
                break
            at = a[t]
            abad = a[bad]
            for j in range(t, cols):
                at[j] += abad[j]
    return diag


def abelian_invariants(p: Presentation) -> AbelianInvariants:
    """Abelianization of the presented group, via Smith normal form."""
    diag = smith_normal_form(relation_matrix(p))
    nonzero = [d for d in diag if d]
    return AbelianInvariants(
        free_rank=len(p.generators) - len(nonzero),
        torsion=tuple(d for d in nonzero if d > 1),
    )
