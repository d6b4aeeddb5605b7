"""Shared hypothesis strategies for random graphs."""

import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from graphck import Graph

ENTRY_POOL = [0, 0, 0, 1, 1, 2, "inf"]


@st.composite
def graphs(draw, max_vertices=5, entries=tuple(ENTRY_POOL)):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    rows = [
        [draw(st.sampled_from(entries)) for _ in range(n)] for _ in range(n)
    ]
    return Graph([f"v{i}" for i in range(n)], rows)
