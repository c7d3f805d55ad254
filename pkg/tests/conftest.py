import sys
from pathlib import Path

import hypothesis.strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from heckelis.tableaux import YoungDiagram
from heckelis.words import Word


@st.composite
def words(draw, max_n=10, max_q=5, min_n=0):
    q = draw(st.integers(1, max_q))
    n = draw(st.integers(min_n, max_n))
    letters = tuple(draw(st.lists(st.integers(1, q), min_size=n, max_size=n)))
    return Word(letters, q)


@st.composite
def partitions(draw, max_size=8):
    remaining = draw(st.integers(0, max_size))
    parts = []
    cap = remaining
    while remaining > 0:
        p = draw(st.integers(1, min(cap, remaining)))
        parts.append(p)
        cap = p
        remaining -= p
    return YoungDiagram(tuple(parts))
