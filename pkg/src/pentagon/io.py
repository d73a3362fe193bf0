"""graph6, edge-list, and DOT formats."""

from __future__ import annotations

import os
from pathlib import Path
from typing import Iterable, Iterator, Optional, Union

from .graph import Graph, GraphError

GRAPH6_HEADER = b">>graph6<<"
MAX_GRAPH6_ORDER = 68719476735  # 36-bit size field


class Graph6Error(GraphError):
    pass


class BadChar(Graph6Error):
    pass


class Truncated(Graph6Error):
    pass


class BadHeader(Graph6Error):
    pass


def _as_bytes(line: Union[str, bytes]) -> bytes:
    if isinstance(line, str):
        line = line.encode("ascii", errors="strict")
    return line.strip(b" \t\r\n")


def _decode_order(data: bytes) -> tuple[int, int]:
    """Return ``(n, bytes consumed)`` for the size prefix."""
    if not data:
        raise Truncated("missing size field")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Truncated("8-byte size field cut short")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Truncated("4-byte size field cut short")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= MAX_GRAPH6_ORDER:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise Graph6Error(f"order {n} too large for graph6")


def parse_graph6(line: Union[str, bytes]) -> Graph:
    """Decode one graph6 record.

    The upper triangle is read column by column: bit ``x(i, j)`` for
    ``0 <= i < j`` in the order (0,1), (0,2), (1,2), (0,3), ... Padding bits
    in the final byte are ignored.
    """
    data = _as_bytes(line)
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    elif data.startswith(b">>"):
        raise BadHeader(f"unrecognized header in {data[:16]!r}")
    if data[:1] in (b":", b";", b"&"):
        raise BadHeader("sparse6/digraph6 records are not graph6")
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise BadChar(f"byte {b} at offset {pos} outside 63..126")
    n, used = _decode_order(data)
    payload = data[used:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(payload) < need:
        raise Truncated(f"need {need} data bytes for order {n}, got {len(payload)}")
    if len(payload) > need:
        raise Graph6Error(f"{len(payload) - need} unexpected trailing bytes")
    edges = []
    i, j = 0, 1
    done = 0
    for b in payload:
        val = b - 63
        for shift in range(5, -1, -1):
            if done == nbits:
                break
            if (val >> shift) & 1:
                edges.append((i, j))
            done += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> bytes:
    """graph6 bytes without header or newline."""
    n = g.order
    out = bytearray(_encode_order(n))
    acc = 0
    filled = 0
    for j in range(1, n):
        col = g.neighbor_bits(j)
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            filled += 1
            if filled == 6:
                out.append(acc + 63)
                acc = filled = 0
    if filled:
        out.append((acc << (6 - filled)) + 63)
    return bytes(out)


def read_graph6_file(path: Union[str, os.PathLike]) -> Iterator[tuple[str, Graph]]:
    """Yield ``(record, graph)`` for every non-blank line."""
    with open(path, "rb") as fh:
        for raw in fh:
            line = raw.strip()
            if not line:
                continue
            rec = line[len(GRAPH6_HEADER):] if line.startswith(GRAPH6_HEADER) else line
            yield rec.decode("ascii"), parse_graph6(line)


def write_graph6_file(path: Union[str, os.PathLike], graphs: Iterable[Graph]) -> None:
    with open(path, "wb") as fh:
        for g in graphs:
            fh.write(write_graph6(g) + b"\n")


def parse_edge_list(text: str) -> Graph:
    """Whitespace-separated ``u v`` lines; ``#`` starts a comment. An
    optional ``order N`` line fixes the vertex count (isolated vertices)."""
    order: Optional[int] = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "order" and len(parts) == 2:
            order = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if order is None:
        order = 1 + max((max(e) for e in edges), default=-1)
    return Graph(order, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"order {g.order}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _dot_id(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def write_dot(g: Graph, highlight: Optional[Iterable[int]] = None, name: str = "G") -> str:
    """DOT ``graph`` block; highlighted vertices are filled red."""
    marked = set(highlight or ())
    lines = [f"graph {name} {{"]
    for v in g.vertices():
        attrs = [f"label={_dot_id(g.label(v))}"]
        if v in marked:
            attrs.append('style=filled, fillcolor="red"')
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_graph(spec: str) -> Graph:
    """Resolve a ``--graph`` value: a zoo name, or a file when the value has
    a path separator or ends in ``.g6``. graph6 files use their first
    record; anything else is read as an edge list."""
    from .zoo import from_name

    if os.sep in spec or "/" in spec or spec.endswith(".g6"):
        path = Path(spec)
        if spec.endswith(".g6"):
            for _, g in read_graph6_file(path):
                return g
            raise GraphError(f"{spec}: no graph6 records")
        return parse_edge_list(path.read_text())
    return from_name(spec)
