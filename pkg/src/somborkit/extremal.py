"""Extremal graph families and the closed-form Sombor bounds they attain."""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb

from .graph import Graph, build_complete, build_path, disjoint_union, join

SQRT2 = math.sqrt(2.0)


class ClassError(ValueError):
    """Parameters that name an empty or undefined graph class."""


def admissible_bridge_counts(n: int) -> list[int]:
    """Bridge counts realised by connected graphs of order ``n`` (``n >= 3``)."""
    return list(range(0, n - 2)) + [n - 1]


def _check_bridge_class(n: int, k: int) -> None:
    if n < 3:
        raise ClassError(f"bridge classes need n >= 3, got n={n}")
    if k == n - 2:
        raise ClassError(f"no connected graph of order {n} has exactly {k} = n-2 bridges")
    if not (0 <= k <= n - 3 or k == n - 1):
        raise ClassError(f"bridge count must satisfy 0 <= k <= n-3 or k = n-1, got n={n}, k={k}")


def build_pnk(n: int, k: int) -> Graph:
    """Cycle ``C_{n-k}`` on vertices ``0..n-k-1`` with a pendant path of ``k``
    edges hung at vertex 0; ``k = n-1`` gives the path ``P_n``."""
    _check_bridge_class(n, k)
    if k == n - 1:
        return build_path(n)
    r = n - k
    edges = [(i, (i + 1) % r) for i in range(r)]
    prev = 0
    for v in range(r, n):
        edges.append((prev, v))
        prev = v
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    k: int
    k1: int | None = None
    k2: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "pendant_cycle":
            _check_bridge_class(self.n, self.k)
        elif self.kind == "split_join":
            n, k = self.n, self.k
            if not 1 <= k <= n - 1:
                raise ClassError(f"connectivity must satisfy 1 <= k <= n-1, got n={n}, k={k}")
            if k < n - 1:
                k1, k2 = self.k1, self.k2
                if k1 is None or k2 is None:
                    raise ClassError("split_join needs k1 and k2 when k < n-1")
                if not k1 >= k2 >= 1 or k1 + k2 != n - k:
                    raise ClassError(f"need k1 >= k2 >= 1 and k1 + k2 = n - k, got k1={k1}, k2={k2}")
        else:
            raise ClassError(f"unknown family kind {self.kind!r}")


def build_split_join(spec: FamilySpec) -> Graph:
    """``(K_k1 + K_k2) v K_k``; the whole of ``K_n`` when ``k = n-1``."""
    if spec.kind != "split_join":
        raise ClassError("build_split_join needs a split_join spec")
    if spec.k == spec.n - 1:
        return build_complete(spec.n)
    assert spec.k1 is not None and spec.k2 is not None
    return join(disjoint_union(build_complete(spec.k1), build_complete(spec.k2)), build_complete(spec.k))


def split_join_extremal(n: int, k: int) -> Graph:
    """The connectivity-``k`` maximiser ``(K_{n-k-1} + K_1) v K_k``."""
    if k == n - 1:
        return build_split_join(FamilySpec("split_join", n, k))
    return build_split_join(FamilySpec("split_join", n, k, n - k - 1, 1))


def build_family(spec: FamilySpec) -> Graph:
    if spec.kind == "pendant_cycle":
        return build_pnk(spec.n, spec.k)
    return build_split_join(spec)


def min_bridges_bound(n: int, k: int) -> float:
    """Smallest Sombor index over connected order-``n`` graphs with ``k`` bridges."""
    _check_bridge_class(n, k)
    if k == 0:
        return math.sqrt(8.0) * n
    if k == n - 1:
        return 2 * (n - 3) * SQRT2 + 2 * math.sqrt(5.0)
    if k == 1:
        return 2 * (n - 3) * SQRT2 + math.sqrt(10.0) + 2 * math.sqrt(13.0)
    # 2 <= k <= n-3, so n >= 5 here
    return 2 * (n - 4) * SQRT2 + math.sqrt(5.0) + 3 * math.sqrt(13.0)


def f_value(n: int, k: int, k1: int, k2: int) -> float:
    """Sombor index of ``(K_k1 + K_k2) v K_k`` written as a closed form."""
    if k < 1 or k1 < k2 or k2 < 1 or k1 + k2 + k != n:
        raise ClassError(f"need k >= 1, k1 >= k2 >= 1, k1 + k2 + k = n; got n={n}, k={k}, k1={k1}, k2={k2}")
    return (
        SQRT2 * comb(k1, 2) * (k + k1 - 1)
        + SQRT2 * comb(k, 2) * (n - 1)
        + SQRT2 * comb(k2, 2) * (k + k2 - 1)
        + k * k1 * math.sqrt((n - 1) ** 2 + (k + k1 - 1) ** 2)
        + k * k2 * math.sqrt((n - 1) ** 2 + (k + k2 - 1) ** 2)
    )


def max_connectivity_bound(n: int, k: int) -> float:
    """Largest Sombor index over connected order-``n`` graphs of vertex connectivity ``k``."""
    if n < 2 or not 1 <= k <= n - 1:
        raise ClassError(f"connectivity must satisfy 1 <= k <= n-1, got n={n}, k={k}")
    return (
        SQRT2 * comb(n - k - 1, 2) * (n - 2)
        + SQRT2 * comb(k, 2) * (n - 1)
        + k * (n - k - 1) * math.sqrt((n - 1) ** 2 + (n - 2) ** 2)
        + k * math.sqrt((n - 1) ** 2 + k ** 2)
    )


def split_shift_gain(n: int, k: int, k1: int, k2: int) -> float:
    """``f(k1+1, k2-1) - f(k1, k2)``: gain from moving one vertex to the larger clique."""
    return f_value(n, k, k1 + 1, k2 - 1) - f_value(n, k, k1, k2)


def product_gap(n: int, k: int, k1: int, k2: int) -> int:
    """Squared form of the radical-product inequality used for the shift gain.

    Returns ``[(n-1)^2+(k+k1)^2][(n-1)^2+(k+k2-2)^2]
    - [(n-1)^2+(k+k2-1)^2][(n-1)^2+(k+k1-1)^2]`` in exact integers.
    """
    a = (n - 1) ** 2
    return (a + (k + k1) ** 2) * (a + (k + k2 - 2) ** 2) - (a + (k + k2 - 1) ** 2) * (a + (k + k1 - 1) ** 2)


def radical_step_gap(n: int, k: int, k1: int, k2: int) -> float:
    """Unit step of ``sqrt((n-1)^2 + x^2)`` at ``x = k+k1-1`` minus the step at ``x = k+k2-2``."""
    a = (n - 1) ** 2
    return (math.sqrt(a + (k + k1) ** 2) - math.sqrt(a + (k + k1 - 1) ** 2)) - (
        math.sqrt(a + (k + k2 - 1) ** 2) - math.sqrt(a + (k + k2 - 2) ** 2)
    )
