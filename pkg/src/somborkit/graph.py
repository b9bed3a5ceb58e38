"""Immutable simple undirected graphs on vertices ``0..n-1``.

Adjacency is stored as one integer bitset per vertex. Every edit returns a
new :class:`Graph`; nothing mutates in place.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_ORDER = 64


class GraphError(ValueError):
    """Raised for invalid graph construction or edits."""


@dataclass(frozen=True)
class Graph:
    order: int
    rows: tuple[int, ...]
    size: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        n = self.order
        if not 1 <= n <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {n}")
        if len(self.rows) != n:
            raise GraphError("one adjacency row per vertex required")
        full = (1 << n) - 1
        total = 0
        for u, row in enumerate(self.rows):
            if row & ~full or row < 0:
                raise GraphError(f"vertex {u} has an out-of-range neighbour")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs = row
            while nbrs:
                low = nbrs & -nbrs
                v = low.bit_length() - 1
                if not self.rows[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
                nbrs ^= low
            total += row.bit_count()
        object.__setattr__(self, "size", total // 2)

    # -- construction -------------------------------------------------
    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 1 <= n <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {n}")
        rows = [0] * n
        for u, v in edges:
            _check_pair(n, u, v)
            if rows[u] >> v & 1:
                raise GraphError(f"duplicate edge {u}-{v}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    # -- queries ------------------------------------------------------
    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.order) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    def min_degree(self) -> int:
        return min(self.degrees())

    # -- edits --------------------------------------------------------
    def add_edge(self, u: int, v: int) -> Graph:
        _check_pair(self.order, u, v)
        if self.has_edge(u, v):
            raise GraphError(f"edge {u}-{v} already present")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.order, tuple(rows))

    def remove_edge(self, u: int, v: int) -> Graph:
        _check_pair(self.order, u, v)
        if not self.has_edge(u, v):
            raise GraphError(f"edge {u}-{v} not present")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.order, tuple(rows))

    def rewire(self, remove: Iterable[tuple[int, int]] = (), add: Iterable[tuple[int, int]] = ()) -> Graph:
        """Remove then add edges in one step; each edit is checked."""
        g = self
        for u, v in remove:
            g = g.remove_edge(u, v)
        for u, v in add:
            g = g.add_edge(u, v)
        return g

    def relabel(self, perm: list[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.order)):
            raise GraphError("relabeling must be a permutation of the vertices")
        return Graph.from_edges(self.order, ((perm[u], perm[v]) for u, v in self.edges()))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"vertex label out of range for order {n}: {u}, {v}")
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# -- constructors -------------------------------------------------------
def make_empty(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"a graph needs at least one vertex, got {n}")
    return Graph(n, (0,) * n)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    return g.add_edge(u, v)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    return g.remove_edge(u, v)


def build_path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def build_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def build_star(n: int) -> Graph:
    """Star with centre 0 and ``n - 1`` leaves."""
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Union with ``h`` relabeled by offset ``g.order``."""
    off = g.order
    return Graph(g.order + h.order, g.rows + tuple(row << off for row in h.rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts."""
    off = g.order
    g_all = (1 << off) - 1
    h_all = ((1 << h.order) - 1) << off
    rows = tuple(row | h_all for row in g.rows) + tuple((row << off) | g_all for row in h.rows)
    return Graph(g.order + h.order, rows)


def is_connected(g: Graph) -> bool:
    return component_of(g, 0) == (1 << g.order) - 1


def component_of(g: Graph, start: int, blocked: int = 0) -> int:
    """Bitset of vertices reachable from ``start`` avoiding ``blocked``."""
    seen = 1 << start
    queue = deque([start])
    while queue:
        u = queue.popleft()
        fresh = g.rows[u] & ~seen & ~blocked
        seen |= fresh
        queue.extend(_bits(fresh))
    return seen


# -- edge-mask encoding used by the enumerator ------------------------
def pair_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 bit order: column-major upper triangle."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def from_mask(n: int, mask: int) -> Graph:
    rows = [0] * n
    for bit, (i, j) in enumerate(pair_order(n)):
        if mask >> bit & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def to_mask(g: Graph) -> int:
    mask = 0
    for bit, (i, j) in enumerate(pair_order(g.order)):
        if g.rows[i] >> j & 1:
            mask |= 1 << bit
    return mask
