from __future__ import annotations

import pytest
from hypothesis import strategies as st

from relalg import Carrier, Relation, from_pairs


def pack(na: int, nb: int, pairs, src: str = "A", dst: str = "B") -> Relation:
    """Build a package relation from oracle-style index pairs."""
    return from_pairs(Carrier(src, na), Carrier(dst, nb), sorted(pairs))


def unpack(r: Relation) -> frozenset:
    """Project a package relation down to the oracle representation."""
    return frozenset(r.pairs())


@st.composite
def relations(draw, max_size: int = 4, src: str = "A", dst: str = "B"):
    na = draw(st.integers(min_value=1, max_value=max_size))
    nb = draw(st.integers(min_value=1, max_value=max_size))
    bits = draw(st.integers(min_value=0, max_value=(1 << (na * nb)) - 1))
    pairs = [(k // nb, k % nb) for k in range(na * nb) if (bits >> k) & 1]
    return pack(na, nb, pairs, src=src, dst=dst)


@st.composite
def homogeneous_relations(draw, max_size: int = 4, name: str = "A"):
    n = draw(st.integers(min_value=1, max_value=max_size))
    bits = draw(st.integers(min_value=0, max_value=(1 << (n * n)) - 1))
    pairs = [(k // n, k % n) for k in range(n * n) if (bits >> k) & 1]
    return pack(n, n, pairs, src=name, dst=name)


@pytest.fixture
def block():
    """Two-block difunction: a 2x2 full block plus an isolated loop."""
    return pack(3, 3, [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)])
