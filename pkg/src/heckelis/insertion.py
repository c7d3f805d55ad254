"""Hecke insertion, its inverse, and classical RSK baselines.

Inserting a letter into an increasing tableau either bumps entries down a
chain of rows or terminates: the terminal step adjoins a box (flag 1) or
leaves the tableau's shape untouched (flag 0).  Feeding a whole word through
and recording where each step lands gives the pair ``(P, Q)`` with ``P``
increasing and ``Q`` standard set-valued; the common shape of the pair is
the sampling statistic used throughout the package.

Rows are plain Python lists inside the workers; every public function is a
pure function of its inputs, so calls can run concurrently on distinct
words.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from .tableaux import IncreasingTableau, SetValuedStandardTableau, YoungDiagram
from .words import Permutation, Word


@dataclass(frozen=True)
class InsertionStep:
    """Result of one insertion: the new tableau, the recording corner
    (1-based), and the flag saying whether the corner is a new box."""

    tableau: IncreasingTableau
    corner: tuple[int, int]
    flag: int


@dataclass(frozen=True)
class HeckePair:
    p: IncreasingTableau
    q: SetValuedStandardTableau

    def __post_init__(self):
        if self.p.shape != self.q.shape:
            raise ValueError(
                f"P shape {self.p.shape.parts} differs from Q shape {self.q.shape.parts}"
            )

    @property
    def shape(self) -> YoungDiagram:
        return self.p.shape


def _insert(rows: list[list[int]], x: int) -> tuple[int, int, int]:
    """Insert ``x`` into ``rows`` (mutated).  Returns 0-based (row, col, flag).

    Bumping step: the smallest entry y > x is replaced by x when the left
    and upper neighbours stay smaller (the full increasingness check reduces
    to this local one, since x < y keeps the right and lower neighbours
    safe); either way y drops to the next row.  Terminating step: x >= the
    whole row, so x is adjoined when legal, and otherwise the recording
    corner is the bottom of the column holding the row's last box.
    """
    r = 0
    while True:
        if r == len(rows):
            # A value passed below the last row can always start a new row:
            # the first entry of the row above is strictly smaller.
            rows.append([x])
            return r, 0, 1
        row = rows[r]
        if x >= row[-1]:
            c = len(row)
            if row[-1] < x and (
                r == 0 or (len(rows[r - 1]) > c and rows[r - 1][c] < x)
            ):
                row.append(x)
                return r, c, 1
            col = c - 1
            rr = r
            while rr + 1 < len(rows) and len(rows[rr + 1]) > col:
                rr += 1
            return rr, col, 0
        pos = bisect_right(row, x)
        y = row[pos]
        if (pos == 0 or row[pos - 1] < x) and (r == 0 or rows[r - 1][pos] < x):
            row[pos] = x
        x = y
        r += 1


def hecke_insert(t: IncreasingTableau, x: int) -> InsertionStep:
    """One Hecke insertion of the letter ``x`` into ``t``."""
    if x < 1:
        raise ValueError(f"letters must be positive, got {x}")
    rows = [list(row) for row in t.rows]
    r, c, flag = _insert(rows, x)
    return InsertionStep(IncreasingTableau(tuple(tuple(r_) for r_ in rows)), (r + 1, c + 1), flag)


def hecke(w: Word) -> HeckePair:
    """The full correspondence: insert ``w`` letter by letter, recording the
    label ``j`` at the corner produced by the ``j``-th insertion (a new
    singleton box on flag 1, adjoined to the existing corner set on flag 0)."""
    rows: list[list[int]] = []
    qrows: list[list[set[int]]] = []
    for j, x in enumerate(w.letters, start=1):
        r, c, flag = _insert(rows, x)
        if flag:
            if r == len(qrows):
                qrows.append([])
            qrows[r].append({j})
        else:
            qrows[r][c].add(j)
    p = IncreasingTableau(tuple(tuple(row) for row in rows))
    q = SetValuedStandardTableau(
        tuple(tuple(frozenset(s) for s in row) for row in qrows), len(w)
    )
    return HeckePair(p, q)


def heckeshape(w: Word) -> YoungDiagram:
    """Shape of the insertion tableau of ``w``; skips building Q entirely."""
    rows: list[list[int]] = []
    for x in w.letters:
        _insert(rows, x)
    return YoungDiagram(tuple(len(row) for row in rows))


def _reverse_step(rows: list[list[int]], corner: tuple[int, int], flag: int) -> int:
    """Undo one insertion on mutable ``rows``; returns the recovered letter."""
    r, c = corner[0] - 1, corner[1] - 1
    if not (
        0 <= r < len(rows)
        and len(rows[r]) == c + 1
        and (r + 1 == len(rows) or len(rows[r + 1]) <= c)
    ):
        raise ValueError(f"{corner} is not a corner of the tableau")
    y = rows[r][c]
    if flag:
        rows[r].pop()
        if not rows[r]:
            rows.pop()
    for rr in range(r - 1, -1, -1):
        row = rows[rr]
        pos = bisect_left(row, y) - 1
        if pos < 0:
            raise ValueError("reverse insertion found no smaller entry; "
                             "triple did not arise from a forward step")
        x = row[pos]
        below_ok = rr + 1 >= len(rows) or len(rows[rr + 1]) <= pos or rows[rr + 1][pos] > y
        right_ok = pos + 1 >= len(row) or row[pos + 1] > y
        if below_ok and right_ok:
            row[pos] = y
        y = x
    return y


def reverse_hecke(z: IncreasingTableau, corner: tuple[int, int], flag: int) -> tuple[IncreasingTableau, int]:
    """Reverse insertion applied to ``(z, corner, flag)``: removes the corner
    value when flag is 1, then walks up replacing the largest smaller entry
    of each row whenever the result stays increasing, passing that entry up.
    Returns the modified tableau and the output letter."""
    rows = [list(row) for row in z.rows]
    x = _reverse_step(rows, corner, flag)
    return IncreasingTableau(tuple(tuple(r_) for r_ in rows)), x


def hecke_inverse(pq: HeckePair, alphabet_size: int | None = None) -> Word:
    """Recover the word: repeatedly strip the largest label of Q (flag 1
    exactly when it sits alone in its box) and reverse-insert from there."""
    rows = [list(row) for row in pq.p.rows]
    qrows = [[set(s) for s in row] for row in pq.q.rows]
    n = pq.q.n
    letters: list[int] = []
    for label in range(n, 0, -1):
        hits = [
            (r, c)
            for r, row in enumerate(qrows)
            for c, s in enumerate(row)
            if label in s
        ]
        if len(hits) != 1:
            raise ValueError(f"label {label} appears in {len(hits)} boxes of Q")
        r, c = hits[0]
        flag = 1 if len(qrows[r][c]) == 1 else 0
        letters.append(_reverse_step(rows, (r + 1, c + 1), flag))
        qrows[r][c].discard(label)
        if flag:
            qrows[r].pop()
            if not qrows[r]:
                qrows.pop()
    if rows or qrows:
        raise ValueError("reverse insertion did not empty the pair")
    letters.reverse()
    if alphabet_size is None:
        alphabet_size = max(letters, default=1)
    return Word(tuple(letters), alphabet_size)


def rsk_shape(w: Word) -> YoungDiagram:
    """Shape under classical RSK row insertion (weak rows, strict columns).

    The first row length is the longest weakly increasing subsequence and
    the first column length is the LDS; kept as a contrast baseline and for
    the RSK pushforward measure.
    """
    rows: list[list[int]] = []
    for x in w.letters:
        r = 0
        while True:
            if r == len(rows):
                rows.append([x])
                break
            row = rows[r]
            pos = bisect_right(row, x)
            if pos == len(row):
                row.append(x)
                break
            x, row[pos] = row[pos], x
            r += 1
    return YoungDiagram(tuple(len(row) for row in rows))


def schensted_shape(p: Permutation) -> YoungDiagram:
    """Schensted shape of a permutation; coincides with ``rsk_shape`` on its
    one-line word."""
    return rsk_shape(Word(p.one_line, len(p.one_line)))


def pair_to_json(pq: HeckePair) -> dict:
    from .tableaux import diagram_to_json, increasing_to_json, set_valued_to_json

    return {
        "shape": diagram_to_json(pq.shape),
        "p": increasing_to_json(pq.p),
        "q": set_valued_to_json(pq.q),
    }
