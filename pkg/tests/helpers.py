"""Shared test machinery: family sugar, exhaustive universes, strategies."""

from __future__ import annotations

from hypothesis import strategies as st

from softsets import SoftSet
from softsets.oracle import enumerate_soft_sets

# the universes every exhaustive suite sweeps, smallest first
UNIVERSES = (("e1",), ("e1", "e2"), ("e1", "e2", "e3"))


def fam(*subsets):
    """Family of frozensets from plain iterables."""
    return frozenset(frozenset(s) for s in subsets)


def all_soft_sets(universe, max_width):
    return list(enumerate_soft_sets(universe, max_width))


@st.composite
def soft_sets(draw, max_universe: int = 4, min_width: int = 0, max_width: int = 4):
    size = draw(st.integers(1, max_universe))
    universe = tuple(f"u{i}" for i in range(size))
    width = draw(st.integers(min_width, max_width))
    attributes = tuple(f"a{j}" for j in range(width))
    values = {
        a: frozenset(e for e in universe if draw(st.booleans())) for a in attributes
    }
    return SoftSet(universe, attributes, values)


@st.composite
def soft_set_pairs(draw, max_universe: int = 4, min_width: int = 1, max_width: int = 4):
    """Two independently shaped soft sets over one shared universe."""
    size = draw(st.integers(1, max_universe))
    universe = tuple(f"u{i}" for i in range(size))

    def one(prefix: str) -> SoftSet:
        width = draw(st.integers(min_width, max_width))
        attributes = tuple(f"{prefix}{j}" for j in range(width))
        values = {
            a: frozenset(e for e in universe if draw(st.booleans()))
            for a in attributes
        }
        return SoftSet(universe, attributes, values)

    return one("a"), one("b")
