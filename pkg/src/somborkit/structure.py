"""Structural classification: bridges, connectivity, cycles, isomorphism."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import asdict, dataclass

from .graph import Graph, _bits, component_of, is_connected

ISO_MAX_ORDER = 10


@dataclass(frozen=True)
class ClassSignature:
    connected: bool
    bridges: int
    kappa: int
    lam: int
    unicyclic: bool
    cycle_len: int | None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["lambda"] = d.pop("lam")
        return d


# -- bridges ------------------------------------------------------------
def bridges(g: Graph) -> list[tuple[int, int]]:
    """All bridges, via one iterative DFS with low-link values per component."""
    n = g.order
    disc = [-1] * n
    low = [0] * n
    found = []
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        # (vertex, parent, remaining neighbours)
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, u, iter(g.neighbors(w))))
                    advanced = True
                    break
                low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if low[u] > disc[parent]:
                    found.append((min(u, parent), max(u, parent)))
    return sorted(found)


def count_bridges(g: Graph) -> int:
    return len(bridges(g))


# -- max-flow -----------------------------------------------------------
def _max_flow(cap: list[dict[int, int]], s: int, t: int, limit: int | None = None) -> int:
    """Edmonds-Karp on a residual-capacity adjacency map (modified in place)."""
    flow = 0
    while limit is None or flow < limit:
        prev = {s: s}
        queue = deque([s])
        while queue and t not in prev:
            u = queue.popleft()
            for w, c in cap[u].items():
                if c > 0 and w not in prev:
                    prev[w] = u
                    queue.append(w)
        if t not in prev:
            break
        w = t
        while w != s:
            u = prev[w]
            cap[u][w] -= 1
            cap[w][u] = cap[w].get(u, 0) + 1
            w = u
        flow += 1
    return flow


def local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally disjoint ``s``-``t`` paths (``s``, ``t`` non-adjacent)."""
    if g.has_edge(s, t):
        raise ValueError("local vertex connectivity needs non-adjacent vertices")
    n = g.order
    big = n
    # vertex v -> in-node 2v, out-node 2v+1
    cap: list[dict[int, int]] = [dict() for _ in range(2 * n)]
    for v in range(n):
        cap[2 * v][2 * v + 1] = big if v in (s, t) else 1
    for u, v in g.edges():
        cap[2 * u + 1][2 * v] = big
        cap[2 * v + 1][2 * u] = big
    return _max_flow(cap, 2 * s + 1, 2 * t)


def local_edge_connectivity(g: Graph, s: int, t: int) -> int:
    cap: list[dict[int, int]] = [dict() for _ in range(g.order)]
    for u, v in g.edges():
        cap[u][v] = 1
        cap[v][u] = 1
    return _max_flow(cap, s, t)


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertex cut size; ``n - 1`` for complete graphs, 0 if disconnected.

    Only pairs seeded at a minimum-degree vertex ``v`` are examined: ``v``
    against every non-neighbour, and non-adjacent pairs inside ``N(v)``.
    """
    n = g.order
    if n < 2:
        raise ValueError("vertex connectivity needs order >= 2")
    if not is_connected(g):
        return 0
    deg = g.degrees()
    if min(deg) == n - 1:
        return n - 1
    v = deg.index(min(deg))
    best = deg[v]
    closed = g.rows[v] | 1 << v
    for t in range(n):
        if not closed >> t & 1:
            best = min(best, local_vertex_connectivity(g, v, t))
    nbrs = g.neighbors(v)
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            if not g.has_edge(x, y):
                best = min(best, local_vertex_connectivity(g, x, y))
    return best


def edge_connectivity(g: Graph) -> int:
    n = g.order
    if n < 2:
        raise ValueError("edge connectivity needs order >= 2")
    if not is_connected(g):
        return 0
    return min(local_edge_connectivity(g, 0, t) for t in range(1, n))


# -- cycles -------------------------------------------------------------
def unique_cycle(g: Graph) -> list[int] | None:
    """The cycle of a connected unicyclic graph, else ``None``.

    Degree-1 vertices are stripped until none remain; what is left is the
    cycle, listed from its smallest vertex towards the smaller neighbour.
    """
    if g.size != g.order or not is_connected(g):
        return None
    deg = g.degrees()
    alive = (1 << g.order) - 1
    leaves = deque(v for v in range(g.order) if deg[v] == 1)
    while leaves:
        v = leaves.popleft()
        alive &= ~(1 << v)
        for w in _bits(g.rows[v] & alive):
            deg[w] -= 1
            if deg[w] == 1:
                leaves.append(w)
    start = (alive & -alive).bit_length() - 1
    cycle = [start]
    prev, cur = start, min(_bits(g.rows[start] & alive))
    while cur != start:
        cycle.append(cur)
        nxt = [w for w in _bits(g.rows[cur] & alive) if w != prev]
        prev, cur = cur, nxt[0]
    return cycle


def cycle_rank(g: Graph) -> int:
    """Number of independent cycles: ``m - n + components``."""
    seen = 0
    comps = 0
    for v in range(g.order):
        if not seen >> v & 1:
            seen |= component_of(g, v)
            comps += 1
    return g.size - g.order + comps


def is_tree(g: Graph) -> bool:
    return g.size == g.order - 1 and is_connected(g)


# -- isomorphism --------------------------------------------------------
def _vertex_keys(g: Graph) -> list[tuple]:
    deg = g.degrees()
    return [(deg[v], tuple(sorted(deg[w] for w in g.neighbors(v)))) for v in range(g.order)]


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking search with degree and neighbour-degree pruning (order <= 10)."""
    if max(g.order, h.order) > ISO_MAX_ORDER:
        raise ValueError(f"isomorphism test limited to order {ISO_MAX_ORDER}")
    if g.order != h.order or g.size != h.size:
        return False
    kg, kh = _vertex_keys(g), _vertex_keys(h)
    if Counter(kg) != Counter(kh):
        return False
    n = g.order
    # most constrained first: high degree, then BFS-adjacent to mapped vertices
    order: list[int] = []
    placed = 0
    while len(order) < n:
        frontier = [v for v in range(n) if not placed >> v & 1 and g.rows[v] & placed]
        pool = frontier or [v for v in range(n) if not placed >> v & 1]
        v = max(pool, key=lambda x: ((g.rows[x] & placed).bit_count(), kg[x][0], -x))
        order.append(v)
        placed |= 1 << v
    candidates = [[w for w in range(n) if kh[w] == kg[v]] for v in order]
    mapping = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in candidates[i]:
            if used >> w & 1:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if g.has_edge(v, u) != h.has_edge(w, mapping[u]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(i + 1):
                return True
            used &= ~(1 << w)
            mapping[v] = -1
        return False

    return extend(0)


def classify(g: Graph) -> ClassSignature:
    connected = is_connected(g)
    cyc = unique_cycle(g) if connected else None
    if g.order >= 2:
        kappa, lam = vertex_connectivity(g), edge_connectivity(g)
    else:
        kappa = lam = 0
    return ClassSignature(
        connected=connected,
        bridges=count_bridges(g),
        kappa=kappa,
        lam=lam,
        unicyclic=cyc is not None,
        cycle_len=len(cyc) if cyc is not None else None,
    )
