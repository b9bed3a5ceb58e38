"""Sombor-decreasing switching operations.

Each operation rewires a host graph around an explicit *witness*: an
assignment of host vertices to the roles of the local pattern. Witnesses are
validated before rewiring and a :class:`WitnessError` names the first
violated condition.

Pattern roles use 0-based positions in the witness vertex lists, so e.g.
``path[0]`` plays the first path vertex.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Union

from .graph import Graph, is_connected
from .invariants import sombor
from .structure import is_tree

MAX_INSTANCE_ORDER = 20
KINDS = ("tau", "alpha", "beta", "gamma", "delta")


class WitnessError(ValueError):
    """The supplied vertex roles do not form the operation's pattern."""


@dataclass(frozen=True)
class TauWitness:
    path: tuple[int, ...]
    branch: int  # index in path of the degree-4 vertex
    x1: int  # root of the subtree that moves to path[-1]
    y1: int


@dataclass(frozen=True)
class AlphaWitness:
    cycle_u: tuple[int, ...]
    cycle_v: tuple[int, ...]
    bridge_path: tuple[int, ...]


@dataclass(frozen=True)
class BetaWitness:
    cycle: tuple[int, ...]
    path_v: tuple[int, ...]  # hangs at cycle[1]
    path_w: tuple[int, ...]  # hangs at cycle[0]


@dataclass(frozen=True)
class GammaWitness:
    outer_cycle: tuple[int, ...]
    inner_path: tuple[int, ...]  # from a neighbour of outer_cycle[branch] to a neighbour of outer_cycle[0]
    branch: int


@dataclass(frozen=True)
class DeltaWitness:
    cycle: tuple[int, ...]
    stem: tuple[int, ...]
    branch_v: tuple[int, ...]
    branch_w: tuple[int, ...]


Witness = Union[TauWitness, AlphaWitness, BetaWitness, GammaWitness, DeltaWitness]


# -- validation helpers ---------------------------------------------------
def _require(cond: bool, message: str) -> None:
    if not cond:
        raise WitnessError(message)


def _distinct(g: Graph, verts: list[int]) -> None:
    for v in verts:
        _require(0 <= v < g.order, f"vertex {v} out of range")
    _require(len(set(verts)) == len(verts), "pattern vertices overlap")


def _walk(g: Graph, seq, name: str, closed: bool = False) -> None:
    for a, b in zip(seq, seq[1:]):
        _require(g.has_edge(a, b), f"{name}: {a}-{b} is not an edge")
    if closed:
        _require(g.has_edge(seq[-1], seq[0]), f"{name}: {seq[-1]}-{seq[0]} does not close the cycle")


def _degree(g: Graph, v: int, want: int, role: str) -> None:
    _require(g.degree(v) == want, f"{role} (vertex {v}) has degree {g.degree(v)}, pattern needs {want}")


# -- tau ------------------------------------------------------------------
def validate_tau(t: Graph, w: TauWitness) -> None:
    path, b = w.path, w.branch
    _require(len(path) >= 3, "tau: path needs at least 3 vertices")
    _require(0 < b < len(path) - 1, "tau: branch vertex must be interior to the path")
    _distinct(t, list(path) + [w.x1, w.y1])
    _require(is_tree(t), "tau: host is not a tree")
    _walk(t, path, "tau path")
    _degree(t, path[0], 1, "tau: first path vertex")
    _degree(t, path[-1], 1, "tau: last path vertex")
    hub = path[b]
    want = {path[b - 1], path[b + 1], w.x1, w.y1}
    _require(set(t.neighbors(hub)) == want,
             f"tau: branch vertex {hub} must be adjacent to exactly {sorted(want)}")
    for i in range(1, len(path) - 1):
        if i != b:
            _degree(t, path[i], 2, "tau: interior path vertex")


def tau_switch(t: Graph, w: TauWitness) -> Graph:
    """Move the subtree rooted at ``x1`` from the branch vertex to the path end."""
    validate_tau(t, w)
    return t.rewire(remove=[(w.path[w.branch], w.x1)], add=[(w.path[-1], w.x1)])


# -- alpha ----------------------------------------------------------------
def validate_alpha(g: Graph, w: AlphaWitness) -> None:
    cu, cv, p = w.cycle_u, w.cycle_v, w.bridge_path
    _require(len(cu) >= 3 and len(cv) >= 3, "alpha: cycles need at least 3 vertices")
    _require(len(p) >= 1, "alpha: connecting path needs at least one vertex")
    _distinct(g, list(cu) + list(cv) + list(p))
    _require(is_connected(g), "alpha: host is disconnected")
    _walk(g, cu, "alpha cycle_u", closed=True)
    _walk(g, cv, "alpha cycle_v", closed=True)
    _walk(g, p, "alpha bridge_path")
    _require(g.has_edge(cu[0], p[0]), "alpha: cycle_u[0] is not adjacent to bridge_path[0]")
    _require(g.has_edge(cv[0], p[-1]), "alpha: cycle_v[0] is not adjacent to bridge_path[-1]")
    _degree(g, cu[0], 3, "alpha: cycle_u[0]")
    _degree(g, cv[0], 3, "alpha: cycle_v[0]")
    for v in cu[1:] + cv[1:] + p:
        _degree(g, v, 2, "alpha: pattern vertex")


def alpha_switch(g: Graph, w: AlphaWitness) -> Graph:
    """Merge two cycles joined by a path into one cycle with a pendant path."""
    validate_alpha(g, w)
    u, v = w.cycle_u, w.cycle_v
    return g.rewire(remove=[(u[0], u[1]), (v[0], v[1]), (v[0], v[-1])], add=[(u[1], v[1]), (u[0], v[-1])])


# -- beta -----------------------------------------------------------------
def validate_beta(g: Graph, w: BetaWitness) -> None:
    c, pv, pw = w.cycle, w.path_v, w.path_w
    _require(len(c) >= 3, "beta: cycle needs at least 3 vertices")
    _require(len(pv) >= 1 and len(pw) >= 1, "beta: both pendant paths need at least one vertex")
    _distinct(g, list(c) + list(pv) + list(pw))
    _require(is_connected(g), "beta: host is disconnected")
    _walk(g, c, "beta cycle", closed=True)
    _require(g.has_edge(c[1], pv[0]), "beta: path_v[0] is not adjacent to cycle[1]")
    _require(g.has_edge(c[0], pw[0]), "beta: path_w[0] is not adjacent to cycle[0]")
    _walk(g, pv, "beta path_v")
    _walk(g, pw, "beta path_w")
    _degree(g, c[0], 3, "beta: cycle[0]")
    _degree(g, c[1], 3, "beta: cycle[1]")
    for v in c[2:]:
        _degree(g, v, 2, "beta: cycle vertex")
    _degree(g, pv[-1], 1, "beta: end of path_v")
    _degree(g, pw[-1], 1, "beta: end of path_w")
    for v in pv[:-1] + pw[:-1]:
        _degree(g, v, 2, "beta: interior path vertex")


def beta_switch(g: Graph, w: BetaWitness) -> Graph:
    """Re-hang ``path_v`` from the end of ``path_w``."""
    validate_beta(g, w)
    return g.rewire(remove=[(w.cycle[1], w.path_v[0])], add=[(w.path_w[-1], w.path_v[0])])


# -- gamma ----------------------------------------------------------------
def validate_gamma(g: Graph, w: GammaWitness) -> None:
    u, p, r = w.outer_cycle, w.inner_path, w.branch
    _require(len(u) >= 4, "gamma: outer cycle needs at least 4 vertices")
    _require(2 <= r <= len(u) - 2, "gamma: branch index must lie in 2..len(outer_cycle)-2")
    _require(len(p) >= 1, "gamma: inner path needs at least one vertex")
    _distinct(g, list(u) + list(p))
    _require(is_connected(g), "gamma: host is disconnected")
    _walk(g, u, "gamma outer_cycle", closed=True)
    _require(g.has_edge(u[r], p[0]), "gamma: inner_path[0] is not adjacent to the branch vertex")
    _walk(g, p, "gamma inner_path")
    _require(g.has_edge(p[-1], u[0]), "gamma: inner_path[-1] is not adjacent to outer_cycle[0]")
    _require(not g.has_edge(u[r - 1], u[-1]), f"gamma: edge {u[r - 1]}-{u[-1]} to be added is already present")
    _degree(g, u[0], 3, "gamma: outer_cycle[0]")
    _degree(g, u[r], 3, "gamma: branch vertex")
    for i, v in enumerate(u):
        if i not in (0, r):
            _degree(g, v, 2, "gamma: outer cycle vertex")
    for v in p:
        _degree(g, v, 2, "gamma: inner path vertex")


def gamma_switch(g: Graph, w: GammaWitness) -> Graph:
    """Open the two nested cycles into one spanning cycle (one edge fewer)."""
    validate_gamma(g, w)
    u, r = w.outer_cycle, w.branch
    return g.rewire(remove=[(u[r - 1], u[r]), (u[0], u[-1])], add=[(u[r - 1], u[-1])])


# -- delta ----------------------------------------------------------------
def validate_delta(g: Graph, w: DeltaWitness) -> None:
    c, s, bv, bw = w.cycle, w.stem, w.branch_v, w.branch_w
    _require(len(c) >= 3, "delta: cycle needs at least 3 vertices")
    _require(len(bv) >= 1, "delta: branch_v needs at least one vertex")
    _require(len(bw) >= 1, "delta: branch_w needs at least one vertex")
    _distinct(g, list(c) + list(s) + list(bv) + list(bw))
    _require(is_connected(g), "delta: host is disconnected")
    _walk(g, c, "delta cycle", closed=True)
    if s:
        _require(g.has_edge(c[0], s[0]), "delta: stem[0] is not adjacent to cycle[0]")
        _walk(g, s, "delta stem")
    hub = s[-1] if s else c[0]
    _require(g.has_edge(hub, bv[0]), "delta: branch_v[0] is not adjacent to the attachment vertex")
    _require(g.has_edge(hub, bw[0]), "delta: branch_w[0] is not adjacent to the attachment vertex")
    _walk(g, bv, "delta branch_v")
    _walk(g, bw, "delta branch_w")
    _degree(g, bv[-1], 1, "delta: end of branch_v")
    _degree(g, bw[-1], 1, "delta: end of branch_w")
    for v in bv[:-1] + bw[:-1]:
        _degree(g, v, 2, "delta: interior branch vertex")
    _degree(g, c[0], 3 if s else 4, "delta: cycle[0]")
    for v in c[1:]:
        _degree(g, v, 2, "delta: cycle vertex")
    for v in s[:-1]:
        _degree(g, v, 2, "delta: stem vertex")
    if s:
        _degree(g, s[-1], 3, "delta: attachment vertex")


def delta_switch(g: Graph, w: DeltaWitness) -> Graph:
    """Concatenate the two branches: ``branch_w`` moves to the end of ``branch_v``."""
    validate_delta(g, w)
    hub = w.stem[-1] if w.stem else w.cycle[0]
    return g.rewire(remove=[(hub, w.branch_w[0])], add=[(w.branch_v[-1], w.branch_w[0])])


SWITCHES: dict[str, Callable[[Graph, Witness], Graph]] = {
    "tau": tau_switch,  # type: ignore[dict-item]
    "alpha": alpha_switch,  # type: ignore[dict-item]
    "beta": beta_switch,  # type: ignore[dict-item]
    "gamma": gamma_switch,  # type: ignore[dict-item]
    "delta": delta_switch,  # type: ignore[dict-item]
}


def apply_switch(kind: str, g: Graph, w: Witness) -> Graph:
    if kind not in SWITCHES:
        raise ValueError(f"unknown operation {kind!r}; choose from {', '.join(KINDS)}")
    return SWITCHES[kind](g, w)


# -- instance generation --------------------------------------------------
class _Builder:
    def __init__(self) -> None:
        self.n = 0
        self.edges: list[tuple[int, int]] = []

    def vertices(self, count: int) -> tuple[int, ...]:
        out = tuple(range(self.n, self.n + count))
        self.n += count
        return out

    def walk(self, seq, closed: bool = False) -> None:
        self.edges += list(zip(seq, seq[1:]))
        if closed:
            self.edges.append((seq[-1], seq[0]))

    def random_tree(self, size: int, rng: random.Random) -> int:
        """Random recursive tree on ``size`` fresh vertices; returns its root."""
        vs = self.vertices(size)
        for i in range(1, size):
            self.edges.append((vs[rng.randrange(i)], vs[i]))
        return vs[0]


def _order(kind: str, p: dict) -> int:
    if kind == "tau":
        return p["l"] + p["t0"] + p["t1"]
    if kind == "alpha":
        return p["r"] + p["l"] + p["path"]
    if kind == "beta":
        return p["r"] + p["l"] + p["xi"]
    if kind == "gamma":
        return p["l"] + p["m"] - p["r"]
    return p["r"] + p["s"] + p["l"] + p["xi"]


def _check_params(kind: str, p: dict) -> None:
    def need(cond: bool, msg: str) -> None:
        if not cond:
            raise ValueError(f"{kind}: {msg} (got {p})")

    if kind == "tau":
        need(p["l"] >= 3 and p["t0"] >= 1 and p["t1"] >= 1, "need l >= 3, t0 >= 1, t1 >= 1")
        need(p.get("r") is None or 1 < p["r"] < p["l"], "need 1 < r < l")
    elif kind == "alpha":
        need(p["r"] >= 3 and p["l"] >= 3 and p["path"] >= 1, "need r >= 3, l >= 3, path >= 1")
    elif kind == "beta":
        need(p["r"] >= 3 and p["l"] >= 1 and p["xi"] >= 1, "need r >= 3, l >= 1, xi >= 1")
    elif kind == "gamma":
        need(p["l"] >= 4 and 3 <= p["r"] <= p["l"] - 1 and p["m"] >= p["r"] + 1,
             "need l >= 4, 3 <= r <= l-1, m >= r+1")
    elif kind == "delta":
        need(p["r"] >= 3 and p["s"] >= 0 and p["l"] >= 1 and p["xi"] >= 1, "need r >= 3, s >= 0, l >= 1, xi >= 1")
    else:
        raise ValueError(f"unknown operation {kind!r}; choose from {', '.join(KINDS)}")
    need(_order(kind, p) <= MAX_INSTANCE_ORDER, f"instance order exceeds {MAX_INSTANCE_ORDER}")


def generate_instance(kind: str, params: dict, seed: int = 0) -> tuple[Graph, Witness]:
    """Build a host graph carrying the ``kind`` pattern, plus its witness.

    Size parameters (vertex counts):

    * ``tau``: ``l`` path vertices, subtrees of ``t0`` and ``t1`` vertices,
      optional ``r`` (1-based branch position, ``1 < r < l``; random if absent)
    * ``alpha``: cycles of ``r`` and ``l`` vertices, ``path`` connecting vertices
    * ``beta``: cycle of ``r``, pendant paths of ``l`` and ``xi``
    * ``gamma``: outer cycle of ``l``, branch at 1-based ``r``, inner path
      numbered ``r+1..m`` (so ``m - r`` inner vertices)
    * ``delta``: cycle of ``r``, stem of ``s``, branches of ``l`` and ``xi``

    The same ``seed`` always yields the same labeled graph; labels are a
    seeded random permutation of the construction order.
    """
    p = dict(params)
    _check_params(kind, p)
    rng = random.Random(seed)
    b = _Builder()
    w: Witness
    if kind == "tau":
        r = p.get("r") or rng.randrange(2, p["l"])
        path = b.vertices(p["l"])
        b.walk(path)
        x1 = b.random_tree(p["t0"], rng)
        y1 = b.random_tree(p["t1"], rng)
        b.edges += [(path[r - 1], x1), (path[r - 1], y1)]
        w = TauWitness(path, r - 1, x1, y1)
    elif kind == "alpha":
        cu, cv, wp = b.vertices(p["r"]), b.vertices(p["l"]), b.vertices(p["path"])
        b.walk(cu, closed=True)
        b.walk(cv, closed=True)
        b.walk(wp)
        b.edges += [(cu[0], wp[0]), (cv[0], wp[-1])]
        w = AlphaWitness(cu, cv, wp)
    elif kind == "beta":
        c, pv, pw = b.vertices(p["r"]), b.vertices(p["l"]), b.vertices(p["xi"])
        b.walk(c, closed=True)
        b.walk(pv)
        b.walk(pw)
        b.edges += [(c[1], pv[0]), (c[0], pw[0])]
        w = BetaWitness(c, pv, pw)
    elif kind == "gamma":
        u, inner = b.vertices(p["l"]), b.vertices(p["m"] - p["r"])
        br = p["r"] - 1
        b.walk(u, closed=True)
        b.walk(inner)
        b.edges += [(u[br], inner[0]), (inner[-1], u[0])]
        w = GammaWitness(u, inner, br)
    else:
        c, s = b.vertices(p["r"]), b.vertices(p["s"])
        bv, bw = b.vertices(p["l"]), b.vertices(p["xi"])
        b.walk(c, closed=True)
        b.walk(s)
        hub = s[-1] if s else c[0]
        if s:
            b.edges.append((c[0], s[0]))
        b.walk(bv)
        b.walk(bw)
        b.edges += [(hub, bv[0]), (hub, bw[0])]
        w = DeltaWitness(c, s, bv, bw)

    perm = list(range(b.n))
    rng.shuffle(perm)
    host = Graph.from_edges(b.n, ((perm[x], perm[y]) for x, y in b.edges))
    return host, _relabel_witness(w, perm)


def _relabel_witness(w: Witness, perm: list[int]) -> Witness:
    def m(seq):
        return tuple(perm[v] for v in seq)

    if isinstance(w, TauWitness):
        return TauWitness(m(w.path), w.branch, perm[w.x1], perm[w.y1])
    if isinstance(w, AlphaWitness):
        return AlphaWitness(m(w.cycle_u), m(w.cycle_v), m(w.bridge_path))
    if isinstance(w, BetaWitness):
        return BetaWitness(m(w.cycle), m(w.path_v), m(w.path_w))
    if isinstance(w, GammaWitness):
        return GammaWitness(m(w.outer_cycle), m(w.inner_path), w.branch)
    return DeltaWitness(m(w.cycle), m(w.stem), m(w.branch_v), m(w.branch_w))


def random_size_params(kind: str, rng: random.Random, max_order: int = MAX_INSTANCE_ORDER) -> dict:
    """Draw size parameters for ``kind`` with instance order at most ``max_order``."""
    while True:
        if kind == "tau":
            l = rng.randint(3, max_order - 2)
            p = {"l": l, "t0": rng.randint(1, max_order - l - 1), "t1": rng.randint(1, max_order - l - 1),
                 "r": rng.randint(2, l - 1)}
        elif kind == "alpha":
            p = {"r": rng.randint(3, max_order - 4), "l": rng.randint(3, max_order - 4),
                 "path": rng.randint(1, max_order - 6)}
        elif kind == "beta":
            p = {"r": rng.randint(3, max_order - 2), "l": rng.randint(1, max_order - 4),
                 "xi": rng.randint(1, max_order - 4)}
        elif kind == "gamma":
            l = rng.randint(4, max_order - 1)
            r = rng.randint(3, l - 1)
            p = {"l": l, "r": r, "m": rng.randint(r + 1, r + max_order - l)}
        elif kind == "delta":
            p = {"r": rng.randint(3, max_order - 2), "s": rng.randint(0, max_order - 5),
                 "l": rng.randint(1, max_order - 4), "xi": rng.randint(1, max_order - 4)}
        else:
            raise ValueError(f"unknown operation {kind!r}; choose from {', '.join(KINDS)}")
        if _order(kind, p) <= max_order:
            return p


def lemma_trials(kind: str, trials: int, seed: int = 0, max_order: int = MAX_INSTANCE_ORDER) -> list[dict]:
    """Apply ``kind`` to ``trials`` random instances; one record per trial."""
    records = []
    for i in range(trials):
        trial_seed = seed * 1_000_003 + i
        params = random_size_params(kind, random.Random(trial_seed), max_order)
        host, w = generate_instance(kind, params, seed=trial_seed)
        out = apply_switch(kind, host, w)
        before, after = sombor(host), sombor(out)
        records.append({
            "trial": i,
            "operation": kind,
            "n": host.order,
            "params": params,
            "host_so": before,
            "result_so": after,
            "margin": before - after,
        })
    return records
