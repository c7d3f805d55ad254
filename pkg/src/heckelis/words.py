"""Words over a bounded alphabet, LIS/LDS oracles, and the 0-Hecke monoid.

A word is a finite sequence over ``{1, ..., q}``.  The Demazure (0-Hecke)
product sends a word to a permutation of ``{1, ..., q+1}``; words are
congruent exactly when they share that permutation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rng import generator


@dataclass(frozen=True)
class Word:
    """A word over the alphabet ``{1, ..., alphabet_size}``."""

    letters: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.alphabet_size < 1:
            raise ValueError(f"alphabet_size must be >= 1, got {self.alphabet_size}")
        for x in self.letters:
            if not 1 <= x <= self.alphabet_size:
                raise ValueError(f"letter {x} outside 1..{self.alphabet_size}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``{1, ..., m}`` in one-line notation."""

    one_line: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "one_line", tuple(int(x) for x in self.one_line))
        m = len(self.one_line)
        if sorted(self.one_line) != list(range(1, m + 1)):
            raise ValueError(f"{self.one_line} is not a permutation of 1..{m}")

    def __len__(self) -> int:
        return len(self.one_line)


def lis(w: Word) -> int:
    """Length of the longest strictly increasing subsequence of ``w``.

    Quadratic dynamic program, deliberately independent of the insertion
    machinery so it can serve as an oracle for it.
    """
    letters = w.letters
    n = len(letters)
    best = [0] * n
    overall = 0
    for j in range(n):
        x = letters[j]
        b = 0
        for i in range(j):
            if letters[i] < x and best[i] > b:
                b = best[i]
        best[j] = b + 1
        if best[j] > overall:
            overall = best[j]
    return overall


def lds(w: Word) -> int:
    """Length of the longest strictly decreasing subsequence of ``w``."""
    q = w.alphabet_size
    flipped = Word(tuple(q + 1 - x for x in w.letters), q)
    return lis(flipped)


def lis_end_positions(w: Word) -> dict[int, int]:
    """Map ``t -> r(w, t)`` for ``1 <= t <= lis(w)``.

    ``r(w, t)`` is the largest (1-based) index such that the longest strictly
    increasing subsequence ending at that position has length ``t``.
    """
    letters = w.letters
    n = len(letters)
    if n == 0:
        raise ValueError("lis_end_positions requires a nonempty word")
    best = [0] * n
    for j in range(n):
        x = letters[j]
        b = 0
        for i in range(j):
            if letters[i] < x and best[i] > b:
                b = best[i]
        best[j] = b + 1
    out: dict[int, int] = {}
    for j, t in enumerate(best):
        out[t] = j + 1
    return {t: out[t] for t in range(1, max(best) + 1)}


def reverse(w: Word) -> Word:
    return Word(w.letters[::-1], w.alphabet_size)


def random_word(n: int, q: int, seed) -> Word:
    """Uniform word of length ``n`` over ``{1, ..., q}``, keyed by ``seed``."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if n == 0:
        return Word((), q)
    rng = generator(seed)
    letters = rng.integers(1, q + 1, size=n)
    return Word(tuple(int(x) for x in letters), q)


def hecke_product(w: Word) -> Permutation:
    """Demazure product of the simple reflections named by ``w``.

    Multiplication is left to right: the running permutation picks up
    ``s_x`` when position ``x`` is an ascent, and is left unchanged
    otherwise.  The result lives in the symmetric group on
    ``alphabet_size + 1`` points.
    """
    perm = list(range(1, w.alphabet_size + 2))
    for x in w.letters:
        if perm[x - 1] < perm[x]:
            perm[x - 1], perm[x] = perm[x], perm[x - 1]
    return Permutation(tuple(perm))


def coxeter_length(p: Permutation) -> int:
    """Number of inversions of the one-line notation."""
    line = p.one_line
    m = len(line)
    return sum(1 for i in range(m) for j in range(i + 1, m) if line[i] > line[j])


def longest_element(q: int) -> Permutation:
    """The order-reversing permutation of ``{1, ..., q+1}``."""
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    return Permutation(tuple(range(q + 1, 0, -1)))


def is_ascent(p: Permutation, i: int) -> bool:
    """Whether ``p(i) < p(i+1)`` (positions are 1-based, ``1 <= i < len(p)``)."""
    return p.one_line[i - 1] < p.one_line[i]
