"""Sombor index and degree data."""

from __future__ import annotations

import math
from collections import Counter
from typing import NamedTuple

from .graph import Graph

ABS_TOL = 1e-9
STRICT_MARGIN = 1e-6


class IndexValue(NamedTuple):
    value: float
    term_count: int


def edge_term(du: int, dv: int) -> float:
    if du < 1 or dv < 1:
        raise ValueError(f"edge endpoints have degree >= 1, got ({du}, {dv})")
    return math.sqrt(du * du + dv * dv)


def degree_pair_histogram(g: Graph) -> Counter[tuple[int, int]]:
    deg = g.degrees()
    return Counter((min(deg[u], deg[v]), max(deg[u], deg[v])) for u, v in g.edges())


def sombor_index(g: Graph) -> IndexValue:
    """Sum of ``sqrt(deg(u)^2 + deg(v)^2)`` over the edges of ``g``.

    Terms are grouped by degree pair and accumulated in ascending pair order,
    so relabeling the graph cannot change a single bit of the result. The
    compiled scan kernels use the same order.
    """
    hist = degree_pair_histogram(g)
    total = 0.0
    for (a, b) in sorted(hist):
        total += hist[a, b] * edge_term(a, b)
    return IndexValue(total, g.size)


def sombor(g: Graph) -> float:
    return sombor_index(g).value


def degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(g.degrees(), reverse=True))
