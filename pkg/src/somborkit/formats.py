"""graph6 and edge-list text formats.

graph6 follows McKay's encoding: a size prefix, then the upper triangle of
the adjacency matrix in column order packed six bits per printable byte.
The edge-list format is ``n m`` on one line followed by ``m`` lines ``u v``;
several graphs may follow one another in one file.
"""

from __future__ import annotations

from typing import Iterator

from .graph import Graph, GraphError, pair_order

HEADER = ">>graph6<<"


class ParseError(ValueError):
    """Malformed graph text. ``line`` is 1-based; ``offset`` is a byte index within it."""

    def __init__(self, message: str, line: int, offset: int | None = None):
        where = f"line {line}" if offset is None else f"line {line}, byte {offset}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.offset = offset


def to_graph6(g: Graph) -> str:
    n = g.order
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~"] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    bits = [1 if g.has_edge(i, j) else 0 for i, j in pair_order(n)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def from_graph6(text: str, line: int = 1) -> Graph:
    s = text.strip()
    start = 0
    if s.startswith(HEADER):
        start = len(HEADER)
    for pos in range(start, len(s)):
        if not 63 <= ord(s[pos]) <= 126:
            raise ParseError(f"invalid graph6 character {s[pos]!r}", line, pos)
    if start >= len(s):
        raise ParseError("empty graph6 record", line, start)
    if s[start] == "~":
        if len(s) < start + 4 or s[start + 1] == "~":
            raise ParseError("unsupported or truncated graph6 size field", line, start)
        n = 0
        for ch in s[start + 1:start + 4]:
            n = (n << 6) | (ord(ch) - 63)
        body = start + 4
    else:
        n = ord(s[start]) - 63
        body = start + 1
    pairs = pair_order(n)
    need = (len(pairs) + 5) // 6
    if len(s) - body != need:
        raise ParseError(f"expected {need} data bytes for order {n}, found {len(s) - body}", line, body)
    edges = []
    for bit, (i, j) in enumerate(pairs):
        byte = ord(s[body + bit // 6]) - 63
        if byte >> (5 - bit % 6) & 1:
            edges.append((i, j))
    # padding bits must be zero
    tail = len(pairs) % 6
    if tail and (ord(s[-1]) - 63) & ((1 << (6 - tail)) - 1):
        raise ParseError("nonzero padding bits", line, len(s) - 1)
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc), line, start) from exc


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.order} {g.size}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def iter_edge_list(text: str) -> Iterator[Graph]:
    rows = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines())]
    rows = [(no, toks) for no, toks in rows if toks and not toks[0].startswith("#")]
    pos = 0
    while pos < len(rows):
        no, toks = rows[pos]
        n, m = _int_pair(toks, no)
        pos += 1
        edges = []
        for _ in range(m):
            if pos >= len(rows):
                raise ParseError(f"graph declared {m} edges but input ended", no)
            eno, etoks = rows[pos]
            edges.append(_int_pair(etoks, eno))
            pos += 1
        try:
            yield Graph.from_edges(n, edges)
        except GraphError as exc:
            raise ParseError(str(exc), no) from exc


def _int_pair(toks: list[str], line: int) -> tuple[int, int]:
    if len(toks) != 2:
        raise ParseError(f"expected two integers, got {' '.join(toks)!r}", line)
    try:
        return int(toks[0]), int(toks[1])
    except ValueError:
        raise ParseError(f"expected two integers, got {' '.join(toks)!r}", line) from None


def iter_graph6(text: str) -> Iterator[Graph]:
    for i, ln in enumerate(text.splitlines()):
        if ln.strip():
            yield from_graph6(ln, line=i + 1)


def detect_format(text: str) -> str:
    """``edgelist`` if the first non-blank line holds integers, else ``graph6``."""
    for ln in text.splitlines():
        toks = ln.split()
        if not toks or toks[0].startswith("#"):
            continue
        return "edgelist" if all(t.lstrip("-").isdigit() for t in toks) else "graph6"
    return "graph6"


def iter_graphs(text: str, fmt: str = "auto") -> Iterator[Graph]:
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "graph6":
        return iter_graph6(text)
    if fmt == "edgelist":
        return iter_edge_list(text)
    raise ValueError(f"unknown graph format {fmt!r}")
