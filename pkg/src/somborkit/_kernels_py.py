"""Pure-Python scan kernels.

Same contract and arithmetic as the compiled ``_kernels`` extension; used
when the extension is unavailable or ``SOMBORKIT_PURE=1`` is set.

A scan walks edge masks ``lo <= mask < hi`` (bit ``b`` is the ``b``-th pair
of :func:`somborkit.graph.pair_order`), keeps connected graphs, assigns each
one a class value, and reduces per class to::

    [count, min_value, min_hits, max_value, max_hits]

where ``*_hits`` lists ``(value, mask)`` for every graph within ``tol`` of
the extremum seen so far.
"""

from __future__ import annotations

import math

KIND_BRIDGES = 0
KIND_KAPPA = 1
KIND_LAMBDA = 2
MAX_SCAN_ORDER = 10

IMPLEMENTATION = "python"


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def _rows(n: int, mask: int, pairs) -> list[int]:
    rows = [0] * n
    b = 0
    while mask:
        if mask & 1:
            i, j = pairs[b]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        mask >>= 1
        b += 1
    return rows


def _closure(rows: list[int], start: int, allowed: int) -> int:
    seen = frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _count_bridges(rows: list[int], deg: list[int], n: int, full: int) -> int:
    count = 0
    for u in range(n):
        nb = rows[u] >> (u + 1)
        v = u + 1
        while nb:
            if nb & 1:
                if deg[u] == 1 or deg[v] == 1:
                    count += 1
                else:
                    rows[u] ^= 1 << v
                    rows[v] ^= 1 << u
                    if not _closure(rows, 1 << u, full) >> v & 1:
                        count += 1
                    rows[u] ^= 1 << v
                    rows[v] ^= 1 << u
            nb >>= 1
            v += 1
    return count


_SUBSETS: dict[int, list[int]] = {}


def _subsets_by_size(n: int) -> list[int]:
    if n not in _SUBSETS:
        _SUBSETS[n] = sorted(range(1 << n), key=lambda s: (s.bit_count(), s))
    return _SUBSETS[n]


def _kappa(rows: list[int], n: int, full: int, mindeg: int) -> int:
    if mindeg == n - 1:
        return n - 1
    for s in _subsets_by_size(n):
        size = s.bit_count()
        if size >= mindeg:
            break
        allowed = full & ~s
        if _closure(rows, allowed & -allowed, allowed) != allowed:
            return size
    return mindeg


def _lambda(rows: list[int], n: int, full: int, mindeg: int) -> int:
    best = mindeg
    # side containing vertex 0; bits 1..n-1 free, complement nonempty
    for rest in range(0, (1 << (n - 1)) - 1):
        side = (rest << 1) | 1
        cut = 0
        f = side
        while f and cut < best:
            low = f & -f
            cut += (rows[low.bit_length() - 1] & ~side).bit_count()
            f ^= low
        if cut < best:
            best = cut
    return best


def _sombor(rows: list[int], deg: list[int], n: int) -> float:
    hist = {}
    for u in range(n):
        nb = rows[u] >> (u + 1)
        v = u + 1
        while nb:
            if nb & 1:
                a, b = deg[u], deg[v]
                key = (a, b) if a <= b else (b, a)
                hist[key] = hist.get(key, 0) + 1
            nb >>= 1
            v += 1
    total = 0.0
    for a, b in sorted(hist):
        total += hist[a, b] * math.sqrt(a * a + b * b)
    return total


def mask_sombor(n: int, mask: int) -> float:
    rows = _rows(n, mask, _pairs(n))
    return _sombor(rows, [r.bit_count() for r in rows], n)


def mask_class(n: int, mask: int, kind: int) -> int:
    """Class value of one connected mask (bridges, kappa or lambda)."""
    rows = _rows(n, mask, _pairs(n))
    deg = [r.bit_count() for r in rows]
    full = (1 << n) - 1
    if kind == KIND_BRIDGES:
        return _count_bridges(rows, deg, n, full)
    if kind == KIND_KAPPA:
        return _kappa(rows, n, full, min(deg))
    return _lambda(rows, n, full, min(deg))


def connected_masks(n: int, lo: int, hi: int) -> list[int]:
    _check_order(n)
    pairs = _pairs(n)
    full = (1 << n) - 1
    out = []
    for mask in range(lo, hi):
        rows = _rows(n, mask, pairs)
        if _closure(rows, 1, full) == full:
            out.append(mask)
    return out


def _push(entry: list, value: float, mask: int, tol: float) -> None:
    entry[0] += 1
    if value < entry[1] - tol:
        entry[1] = value
        entry[2] = [(value, mask)]
    elif value <= entry[1] + tol:
        entry[2].append((value, mask))
        if value < entry[1]:
            entry[1] = value
            entry[2] = [h for h in entry[2] if h[0] <= value + tol]
    if value > entry[3] + tol:
        entry[3] = value
        entry[4] = [(value, mask)]
    elif value >= entry[3] - tol:
        entry[4].append((value, mask))
        if value > entry[3]:
            entry[3] = value
            entry[4] = [h for h in entry[4] if h[0] >= value - tol]


def scan_range(n: int, lo: int, hi: int, kind: int, kmin: int = 0, tol: float = 1e-9) -> list[list]:
    """Per-class reduction over connected masks in ``[lo, hi)``.

    With ``kind == KIND_KAPPA``, graphs of minimum degree below ``kmin`` are
    skipped (their connectivity is below ``kmin``), so only classes
    ``>= kmin`` are complete.
    """
    _check_order(n)
    pairs = _pairs(n)
    full = (1 << n) - 1
    classes = [[0, math.inf, [], -math.inf, []] for _ in range(n)]
    for mask in range(lo, hi):
        rows = _rows(n, mask, pairs)
        if _closure(rows, 1, full) != full:
            continue
        deg = [r.bit_count() for r in rows]
        mindeg = min(deg)
        if kind == KIND_BRIDGES:
            c = _count_bridges(rows, deg, n, full)
        elif kind == KIND_KAPPA:
            if mindeg < kmin:
                continue
            c = _kappa(rows, n, full, mindeg)
        elif kind == KIND_LAMBDA:
            c = _lambda(rows, n, full, mindeg)
        else:
            raise ValueError(f"unknown scan kind {kind}")
        _push(classes[c], _sombor(rows, deg, n), mask, tol)
    return classes


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_SCAN_ORDER:
        raise ValueError(f"scan order must be in 1..{MAX_SCAN_ORDER}, got {n}")
