"""Shared hypothesis strategies."""

from __future__ import annotations

from hypothesis import strategies as st

from gapkit import GapSet


def gap_sets(max_element: int = 20, max_size: int = 8):
    return st.builds(
        lambda s: GapSet(tuple(s)),
        st.sets(st.integers(min_value=1, max_value=max_element), max_size=max_size),
    )
