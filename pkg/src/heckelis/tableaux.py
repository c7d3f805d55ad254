"""Young diagrams, tableau families, and exact enumeration.

Counts provided here:

* ``count_increasing(shape, q)``: strictly increasing fillings with entries
  at most ``q`` (memoized row-by-row backtracking; no product formula is
  known, and large prime factors in small cases suggest none exists).
* ``count_set_valued_standard(shape, n)``: standard set-valued fillings on
  the labels ``1..n``, by recursion on the largest label.
* ``count_standard(shape)``: hook-length formula.
* ``count_semistandard(shape, q)``: hook-content formula.

All counting is exact integer or rational arithmetic; no floats appear in
any enumeration path.  Boxes are addressed (row, column), 1-based, English
orientation, everywhere in the package and in serialized formats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial


@dataclass(frozen=True)
class YoungDiagram:
    """A partition: weakly decreasing sequence of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        for i, p in enumerate(self.parts):
            if p <= 0:
                raise ValueError(f"parts must be positive, got {self.parts}")
            if i and self.parts[i - 1] < p:
                raise ValueError(f"parts must weakly decrease, got {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def nrows(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def contains(self, other: "YoungDiagram") -> bool:
        """Containment of diagrams: every row of ``other`` fits inside us."""
        if len(other.parts) > len(self.parts):
            return False
        return all(o <= s for o, s in zip(other.parts, self.parts))

    def boxes(self):
        """All (row, col) boxes, 1-based, row-major."""
        for r, part in enumerate(self.parts, start=1):
            for c in range(1, part + 1):
                yield (r, c)


EMPTY_DIAGRAM = YoungDiagram(())


def conjugate(shape: YoungDiagram) -> YoungDiagram:
    parts = shape.parts
    if not parts:
        return EMPTY_DIAGRAM
    return YoungDiagram(tuple(sum(1 for p in parts if p >= c) for c in range(1, parts[0] + 1)))


def corners(shape: YoungDiagram) -> list[tuple[int, int]]:
    """Removable boxes of the diagram, as 1-based (row, col) pairs."""
    parts = shape.parts
    out = []
    for r, p in enumerate(parts, start=1):
        if r == len(parts) or parts[r] < p:
            out.append((r, p))
    return out


def addable_corners(shape: YoungDiagram) -> list[tuple[int, int]]:
    """Boxes whose addition leaves a Young diagram, 1-based (row, col)."""
    parts = shape.parts
    out = [(1, parts[0] + 1)] if parts else [(1, 1)]
    for r in range(1, len(parts)):
        if parts[r] < parts[r - 1]:
            out.append((r + 1, parts[r] + 1))
    if parts:
        out.append((len(parts) + 1, 1))
    return out


def remove_corner(shape: YoungDiagram, corner: tuple[int, int]) -> YoungDiagram:
    r, c = corner
    parts = list(shape.parts)
    if not (1 <= r <= len(parts)) or parts[r - 1] != c or (corner not in corners(shape)):
        raise ValueError(f"{corner} is not a corner of {shape.parts}")
    parts[r - 1] -= 1
    if parts[r - 1] == 0:
        parts.pop()
    return YoungDiagram(tuple(parts))


def add_corner(shape: YoungDiagram, corner: tuple[int, int]) -> YoungDiagram:
    r, c = corner
    if corner not in addable_corners(shape):
        raise ValueError(f"cannot add box {corner} to {shape.parts}")
    parts = list(shape.parts)
    if r == len(parts) + 1:
        parts.append(1)
    else:
        parts[r - 1] += 1
    return YoungDiagram(tuple(parts))


def staircase(q: int) -> YoungDiagram:
    """The staircase ``(q, q-1, ..., 2, 1)``."""
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    return YoungDiagram(tuple(range(q, 0, -1)))


def partitions_in_staircase(q: int, max_size: int):
    """All partitions contained in ``staircase(q)`` with at most ``max_size``
    boxes, in lexicographic order on the parts tuples."""
    found: list[YoungDiagram] = []

    def extend(prefix: list[int], row: int, used: int):
        found.append(YoungDiagram(tuple(prefix)))
        if row > q:
            return
        cap = min(q - row + 1, prefix[-1] if prefix else q, max_size - used)
        for p in range(1, cap + 1):
            prefix.append(p)
            extend(prefix, row + 1, used + p)
            prefix.pop()

    extend([], 1, 0)
    return sorted(found, key=lambda d: d.parts)


@dataclass(frozen=True)
class IncreasingTableau:
    """Filling strictly increasing along rows and down columns."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        widths = [len(r) for r in rows]
        if any(w == 0 for w in widths) or any(
            widths[i] < widths[i + 1] for i in range(len(widths) - 1)
        ):
            raise ValueError(f"rows {widths} do not form a Young diagram")
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                if c and not row[c - 1] < x:
                    raise ValueError(f"row {r + 1} not strictly increasing: {row}")
                if r and not rows[r - 1][c] < x:
                    raise ValueError(f"column {c + 1} not strictly increasing")

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram(tuple(len(r) for r in self.rows))

    @property
    def max_entry(self) -> int:
        return max((x for row in self.rows for x in row), default=0)


EMPTY_INCREASING = IncreasingTableau(())


@dataclass(frozen=True)
class SetValuedStandardTableau:
    """Boxes hold disjoint nonempty sets partitioning ``{1..n}``; the max of
    each box is smaller than the min of the boxes directly right and below."""

    rows: tuple[tuple[frozenset[int], ...], ...]
    n: int

    def __post_init__(self):
        rows = tuple(tuple(frozenset(s) for s in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        widths = [len(r) for r in rows]
        if any(w == 0 for w in widths) or any(
            widths[i] < widths[i + 1] for i in range(len(widths) - 1)
        ):
            raise ValueError(f"rows {widths} do not form a Young diagram")
        seen: set[int] = set()
        total = 0
        for row in rows:
            for s in row:
                if not s:
                    raise ValueError("boxes must be nonempty")
                seen |= s
                total += len(s)
        if total != self.n or seen != set(range(1, self.n + 1)):
            raise ValueError(f"box sets do not partition 1..{self.n}")
        for r, row in enumerate(rows):
            for c, s in enumerate(row):
                if c and not max(row[c - 1]) < min(s):
                    raise ValueError(f"row {r + 1} violates max < min at column {c + 1}")
                if r and not max(rows[r - 1][c]) < min(s):
                    raise ValueError(f"column {c + 1} violates max < min at row {r + 1}")

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram(tuple(len(r) for r in self.rows))


EMPTY_SET_VALUED = SetValuedStandardTableau((), 0)


@dataclass(frozen=True)
class SemistandardTableau:
    """Weakly increasing along rows, strictly increasing down columns."""

    rows: tuple[tuple[int, ...], ...]
    alphabet_size: int

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        widths = [len(r) for r in rows]
        if any(w == 0 for w in widths) or any(
            widths[i] < widths[i + 1] for i in range(len(widths) - 1)
        ):
            raise ValueError(f"rows {widths} do not form a Young diagram")
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                if not 1 <= x <= self.alphabet_size:
                    raise ValueError(f"entry {x} outside 1..{self.alphabet_size}")
                if c and not row[c - 1] <= x:
                    raise ValueError(f"row {r + 1} not weakly increasing: {row}")
                if r and not rows[r - 1][c] < x:
                    raise ValueError(f"column {c + 1} not strictly increasing")

    @property
    def shape(self) -> YoungDiagram:
        return YoungDiagram(tuple(len(r) for r in self.rows))


def count_increasing(shape: YoungDiagram, q: int) -> int:
    """Number of increasing tableaux of ``shape`` with entries at most ``q``.

    Row-major backtracking: each row is filled left to right with entries
    strictly greater than the left and upper neighbours, pruned when the
    remaining cells of the row can no longer fit below ``q``.  Completed
    rows are memoized, keyed by the filled row, since the continuation
    count depends only on it.
    """
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    parts = shape.parts
    if not parts:
        return 1
    if len(parts) > q or parts[0] > q:
        return 0

    @lru_cache(maxsize=None)
    def complete(r: int, above: tuple[int, ...]) -> int:
        if r == len(parts):
            return 1
        width = parts[r]
        total = 0
        row = [0] * width

        def fill(c: int):
            nonlocal total
            if c == width:
                total += complete(r + 1, tuple(row))
                return
            lo = 1 if c == 0 else row[c - 1] + 1
            if above:
                lo = max(lo, above[c] + 1)
            for v in range(lo, q - (width - 1 - c) + 1):
                row[c] = v
                fill(c + 1)

        fill(0)
        return total

    return complete(0, ())


@lru_cache(maxsize=None)
def _count_set_valued(parts: tuple[int, ...], n: int) -> int:
    if n == 0:
        return 1 if not parts else 0
    if not parts or sum(parts) > n:
        return 0
    shape = YoungDiagram(parts)
    cs = corners(shape)
    total = len(cs) * _count_set_valued(parts, n - 1)
    for corner in cs:
        total += _count_set_valued(remove_corner(shape, corner).parts, n - 1)
    return total


def count_set_valued_standard(shape: YoungDiagram, n: int) -> int:
    """Number of standard set-valued tableaux of ``shape`` on labels 1..n.

    Recursion on the largest label: it sits in a corner box, either joining
    the labels already there or occupying the corner alone.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return _count_set_valued(shape.parts, n)


def hooks(shape: YoungDiagram) -> dict[tuple[int, int], int]:
    """Hook length of every box: arm + leg + 1."""
    parts = shape.parts
    conj = conjugate(shape).parts
    return {
        (r, c): (parts[r - 1] - c) + (conj[c - 1] - r) + 1
        for (r, c) in shape.boxes()
    }


def count_standard(shape: YoungDiagram) -> int:
    """Number of standard Young tableaux, by the hook-length formula."""
    if not shape.parts:
        raise ValueError("count_standard requires a nonempty shape")
    denom = 1
    for h in hooks(shape).values():
        denom *= h
    num, rem = divmod(factorial(shape.size), denom)
    if rem:
        raise ArithmeticError(f"hook-length formula non-integral for {shape.parts}")
    return num


def count_semistandard(shape: YoungDiagram, q: int) -> int:
    """Number of semistandard tableaux with entries at most ``q``, by the
    hook-content formula.  Evaluated in exact rationals; a non-integral
    product indicates a bug and raises."""
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    value = Fraction(1)
    hook = hooks(shape)
    for (r, c) in shape.boxes():
        content = c - r
        if q + content == 0:
            return 0
        value *= Fraction(q + content, hook[(r, c)])
    if value.denominator != 1:
        raise ArithmeticError(f"hook-content product non-integral for {shape.parts}, q={q}")
    return int(value)


def reading_word(t: IncreasingTableau, alphabet_size: int | None = None):
    """Row reading word: rows left to right, bottom row first."""
    from .words import Word

    letters = tuple(x for row in reversed(t.rows) for x in row)
    if alphabet_size is None:
        alphabet_size = max(letters, default=1)
    return Word(letters, alphabet_size)


def superstandard(shape: YoungDiagram) -> IncreasingTableau:
    """Standard tableau filling the rows of ``shape`` with consecutive
    integers, first row first."""
    rows = []
    nxt = 1
    for p in shape.parts:
        rows.append(tuple(range(nxt, nxt + p)))
        nxt += p
    return IncreasingTableau(tuple(rows))


def antidiagonal_cells(w) -> dict[tuple[int, int], int]:
    """The skew tableau placing ``w`` on the antidiagonal of ``staircase(n)``,
    southwest to northeast: letter ``w_i`` at box ``(n - i + 1, i)``."""
    n = len(w.letters)
    return {(n - i, i + 1): x for i, x in enumerate(w.letters)}


# --- JSON-facing serialization -------------------------------------------

def diagram_to_json(shape: YoungDiagram) -> list[int]:
    return list(shape.parts)


def diagram_from_json(parts) -> YoungDiagram:
    return YoungDiagram(tuple(parts))


def increasing_to_json(t: IncreasingTableau) -> list[list[int]]:
    return [list(row) for row in t.rows]


def set_valued_to_json(t: SetValuedStandardTableau) -> list[list[list[int]]]:
    return [[sorted(s) for s in row] for row in t.rows]
