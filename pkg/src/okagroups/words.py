"""Words and finite group presentations over named generators.

A word is a sequence of syllables (generator_index, exponent), freely
reduced: adjacent syllables never share a generator and no exponent is
zero.  Relators stored in a Presentation are additionally cyclically
reduced and rotated to their lexicographically least rotation, so that
presentation equality is plain structural equality.

Presentation text format (ASCII, whitespace between tokens ignored):

    presentation := '<' gen-list '|' relator-list '>'
    gen-list     := ident (',' ident)* | empty
    relator-list := relator (',' relator)* | empty
    relator      := word | word '=' word
    word         := factor ('*'? factor)*
    factor       := ident ('^' integer)? | '(' word ')' ('^' integer)?
    ident        := letter (letter|digit|'_')*

A relator written `x = y` is shorthand for x*y^-1.  Exponents must be
nonzero integers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "Word",
    "Presentation",
    "ParseError",
    "free_reduce",
    "cyclic_reduce",
    "gen",
    "parse_presentation",
    "print_presentation",
    "free_product_presentation",
]

Syllable = tuple[int, int]

_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Word:
    """A freely reduced word; ``Word(())`` is the empty word."""

    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self):
        prev = None
        for g, e in self.syllables:
            if g < 0:
                raise ValueError(f"negative generator index {g}")
            if e == 0:
                raise ValueError("zero exponent in word; use free_reduce")
            if g == prev:
                raise ValueError("word is not freely reduced; use free_reduce")
            prev = g

    def __mul__(self, other: "Word") -> "Word":
        return free_reduce(self.syllables + other.syllables)

    def __invert__(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return (~self) ** (-n)
        return free_reduce(self.syllables * n)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def __iter__(self) -> Iterator[Syllable]:
        return iter(self.syllables)

    def length(self) -> int:
        """Number of letters (sum of |exponent| over syllables)."""
        return sum(abs(e) for _, e in self.syllables)

    def max_generator(self) -> int:
        """Largest generator index used, or -1 for the empty word."""
        return max((g for g, _ in self.syllables), default=-1)


def gen(index: int, exponent: int = 1) -> Word:
    """Single-syllable word; building block for relators."""
    if exponent == 0:
        return Word()
    return Word(((index, exponent),))


def free_reduce(raw: Iterable[Syllable]) -> Word:
    """Freely reduce a raw syllable sequence.

    Zero exponents are dropped, runs of the same generator are merged,
    and cancellations are propagated (a stack does this in one pass).
    Idempotent, and compatible with concatenation.
    """
    stack: list[Syllable] = []
    for g, e in raw:
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            merged = stack[-1][1] + e
            if merged == 0:
                stack.pop()
            else:
                stack[-1] = (g, merged)
        else:
            stack.append((g, e))
    return Word(tuple(stack))


def cyclic_reduce(w: Word) -> Word:
    """Cyclically reduce ``w`` and pick a canonical rotation.

    Conjugate first and last syllables are merged until the word is
    cyclically reduced, then the lexicographically least rotation (by
    syllable tuples) is returned.  The result is conjugate to ``w``.
    """
    syl = list(w.syllables)
    while len(syl) >= 2 and syl[0][0] == syl[-1][0]:
        g, first = syl[0]
        last = syl[-1][1]
        merged = first + last
        syl = syl[1:-1]
        if merged != 0:
            syl.append((g, merged))
    if len(syl) <= 1:
        return Word(tuple(syl))
    rotations = (tuple(syl[i:] + syl[:i]) for i in range(len(syl)))
    return Word(min(rotations))


@dataclass(frozen=True)
class Presentation:
    """A finite presentation.

    Generator names are unique identifiers; relators are normalized at
    construction (freely reduced, cyclically reduced, least rotation)
    and empty relators are dropped.
    """

    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        names = tuple(self.generators)
        seen = set()
        for name in names:
            if not _IDENT_RE.match(name):
                raise ValueError(f"invalid generator name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate generator name {name!r}")
            seen.add(name)
        normalized = []
        for rel in self.relators:
            rel = cyclic_reduce(free_reduce(rel.syllables))
            if not rel:
                continue
            if rel.max_generator() >= len(names):
                raise ValueError(
                    f"relator uses generator index {rel.max_generator()} "
                    f"but only {len(names)} generators are declared"
                )
            normalized.append(rel)
        object.__setattr__(self, "generators", names)
        object.__setattr__(self, "relators", tuple(normalized))


def format_word(w: Word, names: tuple[str, ...]) -> str:
    return "*".join(
        names[g] if e == 1 else f"{names[g]}^{e}" for g, e in w.syllables
    )


def print_presentation(p: Presentation) -> str:
    """Canonical one-line text form; inverse of parse_presentation."""
    gens = ", ".join(p.generators)
    rels = ", ".join(format_word(r, p.generators) for r in p.relators)
    return f"< {gens} | {rels} >"


def free_product_presentation(
    free_rank: int, cyclic_orders: Iterable[int]
) -> Presentation:
    """Presentation of F_r * Z_{m1} * ... * Z_{mn}.

    Free generators are named x1..xr, torsion generators t1..tn with
    single relators ti^mi.  Every cyclic order must be at least 2.
    """
    if free_rank < 0:
        raise ValueError("free rank must be non-negative")
    orders = tuple(cyclic_orders)
    for m in orders:
        if m < 2:
            raise ValueError(f"cyclic order {m} is less than 2")
    names = tuple(
        [f"x{i + 1}" for i in range(free_rank)]
        + [f"t{j + 1}" for j in range(len(orders))]
    )
    relators = tuple(gen(free_rank + j, m) for j, m in enumerate(orders))
    return Presentation(names, relators)


class ParseError(ValueError):
    """Syntax or scope error in presentation text, with position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


_PUNCT = "<>|,*^=()"


def _tokenize(text: str) -> list[tuple[str, str, int, int]]:
    """Lex into (kind, value, line, column) tokens plus a final 'end'."""
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append((ch, ch, line, col))
            i += 1
            col += 1
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isdigit() or ch == "-":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if text[i:j] == "-":
                raise ParseError("expected digits after '-'", line, col)
            tokens.append(("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(
                f"expected {kind!r}, found {tok[1] or 'end of input'!r}",
                tok[2],
                tok[3],
            )
        return tok

    def fail(self, message):
        tok = self.peek()
        raise ParseError(message, tok[2], tok[3])

    def presentation(self) -> Presentation:
        self.expect("<")
        names = []
        index = {}
        if self.peek()[0] == "ident":
            while True:
                tok = self.expect("ident")
                if tok[1] in index:
                    raise ParseError(
                        f"duplicate generator name {tok[1]!r}", tok[2], tok[3]
                    )
                index[tok[1]] = len(names)
                names.append(tok[1])
                if self.peek()[0] != ",":
                    break
                self.next()
        self.expect("|")
        relators = []
        if self.peek()[0] != ">":
            while True:
                relators.append(self.relator(index))
                if self.peek()[0] != ",":
                    break
                self.next()
        self.expect(">")
        self.expect("end")
        return Presentation(tuple(names), tuple(relators))

    def relator(self, index) -> Word:
        left = self.word(index)
        if self.peek()[0] == "=":
            self.next()
            right = self.word(index)
            return free_reduce(left) * ~free_reduce(right)
        return free_reduce(left)

    def word(self, index) -> list[Syllable]:
        syllables = list(self.factor(index))
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.next()
                syllables.extend(self.factor(index))
            elif kind in ("ident", "("):
                syllables.extend(self.factor(index))
            else:
                return syllables

    def factor(self, index) -> list[Syllable]:
        tok = self.peek()
        if tok[0] == "ident":
            self.next()
            if tok[1] not in index:
                raise ParseError(
                    f"unknown generator {tok[1]!r}", tok[2], tok[3]
                )
            g = index[tok[1]]
            return [(g, self.exponent())]
        if tok[0] == "(":
            self.next()
            inner = self.word(index)
            self.expect(")")
            e = self.exponent()
            base = free_reduce(inner)
            return list((base**e).syllables)
        self.fail(f"expected a generator or '(', found {tok[1] or 'end of input'!r}")

    def exponent(self) -> int:
        if self.peek()[0] != "^":
            return 1
        self.next()
        tok = self.expect("int")
        value = int(tok[1])
        if value == 0:
            raise ParseError("exponent must be nonzero", tok[2], tok[3])
        return value


def parse_presentation(text: str) -> Presentation:
    """Parse presentation text; relators come out normalized.

    Raises ParseError (with line/column) on syntax errors, unknown
    generator names, and duplicate generator names.
    """
    return _Parser(_tokenize(text)).presentation()
