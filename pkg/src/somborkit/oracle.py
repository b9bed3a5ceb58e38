"""Exhaustive certification of the extremal results on small graphs.

Scans walk every labeled connected graph of a given order (as edge masks,
through the compiled kernels) and reduce per class to the extreme Sombor
values plus every graph attaining them. Work is split into mask-range shards
whose results merge associatively, so any worker count yields the same report.
"""

from __future__ import annotations

import csv
import json
import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator

from . import kernels
from .extremal import ClassError, build_pnk, max_connectivity_bound, min_bridges_bound, split_join_extremal
from .formats import to_graph6
from .graph import Graph, from_mask, is_connected, to_mask
from .invariants import ABS_TOL, degree_sequence, sombor
from .structure import ClassSignature, are_isomorphic, classify, count_bridges, edge_connectivity, unique_cycle
from .structure import vertex_connectivity

log = logging.getLogger(__name__)

CLASS_KINDS = ("bridges", "vertex_connectivity", "edge_connectivity_at_most")
_KIND_CODE = {
    "bridges": kernels.KIND_BRIDGES,
    "vertex_connectivity": kernels.KIND_KAPPA,
    "edge_connectivity_at_most": kernels.KIND_LAMBDA,
}
MIN_SCAN_ORDER, MAX_SCAN_ORDER = 2, 8
SHARD_BITS = 16

__all__ = [
    "CLASS_KINDS",
    "ClassExtrema",
    "ClassSignature",
    "VerificationReport",
    "classify",
    "enumerate_connected",
    "extremal_scan",
    "scan_classes",
    "scan_graphs",
    "verify_max_connectivity",
    "verify_min_bridges",
    "verify_unique_cycle_lemma",
    "write_reports",
]


@dataclass
class ClassExtrema:
    """Reduced scan result for one class: size and both extremes with their hits."""

    count: int = 0
    lo: float = math.inf
    lo_hits: list[tuple[float, int]] = field(default_factory=list)
    hi: float = -math.inf
    hi_hits: list[tuple[float, int]] = field(default_factory=list)

    @classmethod
    def from_kernel(cls, row: list) -> ClassExtrema:
        return cls(row[0], row[1], list(row[2]), row[3], list(row[4]))

    def merge(self, other: ClassExtrema, tol: float = ABS_TOL) -> ClassExtrema:
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        return ClassExtrema(
            self.count + other.count,
            lo,
            sorted({h for h in self.lo_hits + other.lo_hits if h[0] <= lo + tol}, key=lambda h: h[1]),
            hi,
            sorted({h for h in self.hi_hits + other.hi_hits if h[0] >= hi - tol}, key=lambda h: h[1]),
        )

    def hits(self, direction: str) -> list[tuple[float, int]]:
        return self.lo_hits if direction == "min" else self.hi_hits

    def extreme(self, direction: str) -> float:
        return self.lo if direction == "min" else self.hi


@dataclass
class VerificationReport:
    n: int
    class_kind: str
    k: int
    direction: str
    bound_value: float | None
    achieved_value: float | None
    witness_graphs: list[str]
    family_graph: str | None
    family_match: bool | None
    class_size: int
    status: str  # certified | mismatch | empty_class | explored

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @property
    def ok(self) -> bool:
        return self.status != "mismatch"


# -- enumeration ----------------------------------------------------------
def _check_scan_order(n: int, hi: int = MAX_SCAN_ORDER) -> None:
    if not MIN_SCAN_ORDER <= n <= hi:
        raise ValueError(f"order must be in {MIN_SCAN_ORDER}..{hi}, got {n}")


def _shards(n: int) -> list[tuple[int, int]]:
    total = 1 << (n * (n - 1) // 2)
    step = min(total, 1 << SHARD_BITS)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Every labeled connected graph on ``n`` vertices, in edge-mask order."""
    _check_scan_order(n)
    for lo, hi in _shards(n):
        for mask in kernels.connected_masks(n, lo, hi):
            yield from_mask(n, mask)


# -- scanning -------------------------------------------------------------
def _scan_shard(args: tuple[int, int, int, int, int]) -> list[list]:
    n, lo, hi, code, kmin = args
    return kernels.scan_range(n, lo, hi, code, kmin, ABS_TOL)


def _reduce(parts: Iterable[list[list]], n: int) -> list[ClassExtrema]:
    acc = [ClassExtrema() for _ in range(n)]
    for part in parts:
        acc = [a.merge(ClassExtrema.from_kernel(row)) for a, row in zip(acc, part)]
    return acc


def resolve_parallelism(parallelism: int | None) -> int:
    if parallelism is None:
        parallelism = int(os.environ.get("SOMBOR_PARALLELISM", "1"))
    if parallelism < 1:
        raise ValueError(f"parallelism must be >= 1, got {parallelism}")
    return parallelism


@lru_cache(maxsize=64)
def _scan_cached(n: int, code: int, kmin: int, parallelism: int) -> tuple[ClassExtrema, ...]:
    jobs = [(n, lo, hi, code, kmin) for lo, hi in _shards(n)]
    if parallelism == 1 or len(jobs) == 1:
        parts = map(_scan_shard, jobs)
        return tuple(_reduce(parts, n))
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        return tuple(_reduce(pool.map(_scan_shard, jobs), n))


def scan_classes(n: int, class_kind: str, kmin: int = 0, parallelism: int | None = None) -> list[ClassExtrema]:
    """Per-class extrema over all labeled connected graphs of order ``n``.

    Index ``c`` of the result is the class with exactly ``c`` bridges, vertex
    connectivity ``c`` or edge connectivity ``c``. For vertex connectivity,
    ``kmin`` skips graphs whose minimum degree is below it; only classes
    ``>= kmin`` are then complete.
    """
    _check_scan_order(n)
    if class_kind not in _KIND_CODE:
        raise ValueError(f"class kind must be one of {CLASS_KINDS}, got {class_kind!r}")
    kmin = kmin if class_kind == "vertex_connectivity" else 0
    return list(_scan_cached(n, _KIND_CODE[class_kind], kmin, resolve_parallelism(parallelism)))


def scan_graphs(graphs: Iterable[Graph], class_kind: str) -> dict[int, ClassExtrema]:
    """Reference scan over an explicit graph stream using the structure module.

    Intended for isomorphism-free graph6 streams (orders up to 10) produced
    by an external generator. Disconnected graphs are skipped.
    """
    classify_fn = {
        "bridges": count_bridges,
        "vertex_connectivity": vertex_connectivity,
        "edge_connectivity_at_most": edge_connectivity,
    }[class_kind]
    out: dict[int, ClassExtrema] = {}
    for g in graphs:
        if g.order < 2 or not is_connected(g):
            continue
        c = classify_fn(g)
        value = sombor(g)
        one = ClassExtrema(1, value, [(value, to_mask(g))], value, [(value, to_mask(g))])
        out[c] = out[c].merge(one) if c in out else one
    return out


# -- witnesses ------------------------------------------------------------
def witness_classes(n: int, hits: list[tuple[float, int]]) -> list[Graph]:
    """One representative per isomorphism class: the smallest mask seen."""
    reps: list[tuple[tuple, Graph]] = []
    for _, mask in sorted(hits, key=lambda h: h[1]):
        g = from_mask(n, mask)
        key = degree_sequence(g)
        if any(k == key and are_isomorphic(g, r) for k, r in reps):
            continue
        reps.append((key, g))
    return [g for _, g in reps]


def _report(
    n: int,
    class_kind: str,
    k: int,
    direction: str,
    ext: ClassExtrema,
    bound: float | None,
    family: Graph | None,
    family_in_class: bool,
) -> VerificationReport:
    if ext.count == 0:
        return VerificationReport(n, class_kind, k, direction, bound, None, [], _g6(family), None, 0, "empty_class")
    reps = witness_classes(n, ext.hits(direction))
    achieved = ext.extreme(direction)
    match = None
    if family is not None:
        match = family_in_class and all(are_isomorphic(g, family) for g in reps)
    if bound is None:
        status = "explored"
    else:
        status = "certified" if abs(achieved - bound) <= ABS_TOL and match else "mismatch"
    return VerificationReport(
        n, class_kind, k, direction, bound, achieved, [to_graph6(g) for g in reps], _g6(family), match, ext.count, status
    )


def _g6(g: Graph | None) -> str | None:
    return to_graph6(g) if g is not None else None


def _in_class(g: Graph, class_kind: str, k: int) -> bool:
    if not is_connected(g):
        return False
    c = kernels.mask_class(g.order, to_mask(g), _KIND_CODE[class_kind])
    return c <= k if class_kind == "edge_connectivity_at_most" else c == k


# -- certification --------------------------------------------------------
def verify_min_bridges(n: int, k: int, parallelism: int | None = None) -> VerificationReport:
    """Minimum Sombor index among connected graphs with exactly ``k`` bridges."""
    if not 3 <= n <= MAX_SCAN_ORDER:
        raise ValueError(f"bridge certification needs 3 <= n <= {MAX_SCAN_ORDER}, got {n}")
    if not 0 <= k <= n - 1:
        raise ValueError(f"bridge count must lie in 0..n-1, got {k}")
    ext = scan_classes(n, "bridges", parallelism=parallelism)[k]
    if k == n - 2:
        rep = _report(n, "bridges", k, "min", ext, None, None, False)
        if ext.count:
            rep.status = "mismatch"
        return rep
    family = build_pnk(n, k)
    return _report(n, "bridges", k, "min", ext, min_bridges_bound(n, k), family, _in_class(family, "bridges", k))


def verify_max_connectivity(n: int, k: int, parallelism: int | None = None) -> VerificationReport:
    """Maximum Sombor index among connected graphs with vertex connectivity ``k``."""
    if not 3 <= n <= 7:
        raise ValueError(f"connectivity certification needs 3 <= n <= 7, got {n}")
    if not 1 <= k <= n - 1:
        raise ValueError(f"vertex connectivity must lie in 1..n-1, got {k}")
    ext = scan_classes(n, "vertex_connectivity", kmin=k, parallelism=parallelism)[k]
    family = split_join_extremal(n, k)
    return _report(
        n, "vertex_connectivity", k, "max", ext, max_connectivity_bound(n, k), family,
        _in_class(family, "vertex_connectivity", k),
    )


def verify_unique_cycle_lemma(n: int, k: int, parallelism: int | None = None) -> bool:
    """True iff every minimiser with ``k`` bridges is unicyclic with cycle length ``n - k``.

    An empty class (``k = n - 2``) holds vacuously.
    """
    if not 3 <= n <= MAX_SCAN_ORDER:
        raise ValueError(f"needs 3 <= n <= {MAX_SCAN_ORDER}, got {n}")
    if not 0 <= k < n - 1:
        raise ValueError(f"needs 0 <= k < n-1, got k={k}")
    ext = scan_classes(n, "bridges", parallelism=parallelism)[k]
    for g in witness_classes(n, ext.lo_hits):
        cyc = unique_cycle(g)
        if cyc is None or len(cyc) != n - k:
            return False
    return True


def extremal_scan(
    n: int, class_kind: str, k: int, direction: str, parallelism: int | None = None
) -> VerificationReport:
    """Bound-free exploration of one class; notes any match with a known family."""
    _check_scan_order(n)
    if direction not in ("min", "max"):
        raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")
    if class_kind not in CLASS_KINDS:
        raise ValueError(f"class kind must be one of {CLASS_KINDS}, got {class_kind!r}")
    if not 0 <= k <= n - 1:
        raise ValueError(f"class parameter must lie in 0..n-1, got {k}")

    family: Graph | None = None
    if class_kind == "bridges":
        ext = scan_classes(n, class_kind, parallelism=parallelism)[k]
        if direction == "min":
            family = _try(lambda: build_pnk(n, k))
    elif class_kind == "vertex_connectivity":
        ext = scan_classes(n, class_kind, kmin=k, parallelism=parallelism)[k]
        if direction == "max" and k >= 1:
            family = split_join_extremal(n, k)
    else:
        ext = ClassExtrema()
        for part in scan_classes(n, class_kind, parallelism=parallelism)[: k + 1]:
            ext = ext.merge(part)
        if direction == "max" and k >= 1:
            family = split_join_extremal(n, k)
    in_class = family is not None and _in_class(family, class_kind, k)
    return _report(n, class_kind, k, direction, ext, None, family, in_class)


def _try(build) -> Graph | None:
    try:
        return build()
    except ClassError:
        return None


# -- output ---------------------------------------------------------------
SUMMARY_FIELDS = ["n", "class_kind", "k", "direction", "bound_value", "achieved_value",
                  "class_size", "witnesses", "family_match", "status"]


def summary_row(rep: VerificationReport) -> dict:
    row = {f: getattr(rep, f) for f in SUMMARY_FIELDS if f != "witnesses"}
    row["witnesses"] = len(rep.witness_graphs)
    for f in ("bound_value", "achieved_value"):
        if row[f] is not None:
            row[f] = f"{row[f]:.9f}"
    return row


def write_reports(reports: list[VerificationReport], out_dir: str | Path) -> Path:
    """One JSON file per report plus ``summary.csv``; returns the summary path."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for rep in reports:
        name = f"{rep.class_kind}_n{rep.n}_k{rep.k}_{rep.direction}.json"
        (out / name).write_text(rep.to_json() + "\n")
    summary = out / "summary.csv"
    with summary.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=SUMMARY_FIELDS)
        writer.writeheader()
        for rep in reports:
            writer.writerow(summary_row(rep))
    log.info("wrote %d reports to %s", len(reports), out)
    return summary
