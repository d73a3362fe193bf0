"""Immutable simple undirected graphs on dense integer vertices."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Optional, Sequence


class GraphError(ValueError):
    """Base class for graph construction and query errors."""


class OutOfRange(GraphError):
    pass


class SelfLoop(GraphError):
    pass


def _bits_to_list(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def _rows_to_bits(indptr, targets, order: int) -> list[int]:
    """Bitsets from CSR rows, packing a block of dense rows at a time."""
    import numpy as np

    out = []
    block = max(1, (1 << 24) // max(order, 1))
    for start in range(0, order, block):
        stop = min(order, start + block)
        dense = np.zeros((stop - start, order), dtype=bool)
        lo, hi = indptr[start], indptr[stop]
        rows = np.repeat(np.arange(stop - start), np.diff(indptr[start:stop + 1]))
        dense[rows, targets[lo:hi]] = True
        packed = np.packbits(dense, axis=1, bitorder="little")
        out.extend(int.from_bytes(row.tobytes(), "little") for row in packed)
    return out


class Graph:
    """Simple undirected graph with vertices ``0 .. order-1``.

    Adjacency is held twice: as sorted neighbor tuples (ascending
    iteration) and as Python-int bitsets (membership and intersection).
    Instances are immutable; every modification builds a new graph.

    Parameters
    ----------
    order : int
        Number of vertices.
    edges : iterable of pairs
        Duplicate pairs collapse to a single edge.
    labels : sequence of str, optional
        Display names, one per vertex. Purely cosmetic.
    """

    __slots__ = ("_order", "_nbrs", "_bits", "_size", "_labels", "_csr")

    def __init__(
        self,
        order: int,
        edges: Iterable[Sequence[int]] = (),
        labels: Optional[Sequence[str]] = None,
    ) -> None:
        if order < 0:
            raise OutOfRange(f"negative order {order}")
        bits = [0] * order
        for pair in edges:
            u, v = int(pair[0]), int(pair[1])
            if not (0 <= u < order and 0 <= v < order):
                raise OutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{order - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != order:
                raise GraphError(f"expected {order} labels, got {len(labels)}")
        self._order = order
        self._bits = tuple(bits)
        self._nbrs = tuple(tuple(_bits_to_list(b)) for b in bits)
        self._size = sum(len(n) for n in self._nbrs) // 2
        self._labels = labels
        self._csr = None

    @classmethod
    def from_edge_array(cls, order: int, pairs, labels: Optional[Sequence[str]] = None) -> "Graph":
        """Vectorized constructor for an ``(m, 2)`` integer array of edges.

        Equivalent to ``Graph(order, pairs, labels)`` but fast for large,
        dense edge sets such as operator outputs.
        """
        import numpy as np

        arr = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        if order < 0:
            raise OutOfRange(f"negative order {order}")
        if arr.size and (arr.min() < 0 or arr.max() >= order):
            raise OutOfRange(f"an edge has an endpoint outside 0..{order - 1}")
        if np.any(arr[:, 0] == arr[:, 1]):
            raise SelfLoop("self-loop in edge array")
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != order:
                raise GraphError(f"expected {order} labels, got {len(labels)}")
        src = np.concatenate([arr[:, 0], arr[:, 1]])
        dst = np.concatenate([arr[:, 1], arr[:, 0]])
        keys = np.unique(src * max(order, 1) + dst)
        src, dst = np.divmod(keys, max(order, 1))
        indptr = np.zeros(order + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=order), out=indptr[1:])
        g = cls.__new__(cls)
        g._order = order
        g._bits = tuple(_rows_to_bits(indptr, dst, order))
        flat = dst.tolist()
        bounds = indptr.tolist()
        g._nbrs = tuple(tuple(flat[bounds[v]:bounds[v + 1]]) for v in range(order))
        g._size = len(flat) // 2
        g._labels = labels
        g._csr = (indptr.astype(np.int32), dst.astype(np.int32))
        return g

    @classmethod
    def _from_bits(cls, bits: Sequence[int], labels=None) -> "Graph":
        g = cls.__new__(cls)
        g._order = len(bits)
        g._bits = tuple(bits)
        g._nbrs = tuple(tuple(_bits_to_list(b)) for b in bits)
        g._size = sum(len(n) for n in g._nbrs) // 2
        g._labels = tuple(labels) if labels is not None else None
        g._csr = None
        return g

    # -- basic queries -------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    @property
    def size(self) -> int:
        return self._size

    @property
    def labels(self) -> Optional[tuple[str, ...]]:
        return self._labels

    def __len__(self) -> int:
        return self._order

    def vertices(self) -> range:
        return range(self._order)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of ``v`` in ascending order."""
        self._check(v)
        return self._nbrs[v]

    def neighbor_bits(self, v: int) -> int:
        self._check(v)
        return self._bits[v]

    def adjacency(self, v: int) -> frozenset[int]:
        return frozenset(self.neighbors(v))

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def degrees(self) -> list[int]:
        return [len(n) for n in self._nbrs]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool((self._bits[u] >> v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(min, max)`` pairs in lexicographic order."""
        for u, nb in enumerate(self._nbrs):
            for v in nb:
                if v > u:
                    yield (u, v)

    def label(self, v: int) -> str:
        self._check(v)
        return self._labels[v] if self._labels is not None else str(v)

    def index_of(self, label: str) -> int:
        """Vertex id carrying display label ``label``."""
        if self._labels is not None and label in self._labels:
            return self._labels.index(label)
        raise KeyError(label)

    def csr(self):
        """``(indptr, indices)`` int32 arrays with neighbors sorted per row."""
        if self._csr is None:
            import numpy as np

            indptr = np.zeros(self._order + 1, dtype=np.int32)
            indptr[1:] = np.cumsum([len(n) for n in self._nbrs], dtype=np.int64)
            flat = [v for nb in self._nbrs for v in nb]
            indices = np.asarray(flat, dtype=np.int32)
            self._csr = (indptr, indices)
        return self._csr

    def _check(self, v: int) -> None:
        if not 0 <= v < self._order:
            raise OutOfRange(f"vertex {v} outside 0..{self._order - 1}")

    # -- comparison ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        # labels are cosmetic and do not take part in equality
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self._order, self._bits))

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, size={self._size})"

    # -- derived graphs ------------------------------------------------

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self._order)):
            raise GraphError("relabeling is not a permutation")
        edges = [(perm[u], perm[v]) for u, v in self.edges()]
        labels = None
        if self._labels is not None:
            labels = [""] * self._order
            for v, lab in enumerate(self._labels):
                labels[perm[v]] = lab
        return Graph(self._order, edges, labels)

    def with_labels(self, labels: Optional[Sequence[str]]) -> "Graph":
        return Graph._from_bits(self._bits, labels)

    def check_invariants(self) -> None:
        """Raise ``AssertionError`` if symmetry or loop-freedom is violated."""
        total = 0
        for v, nb in enumerate(self._nbrs):
            assert v not in nb, f"loop at {v}"
            for u in nb:
                assert u < self._order
                assert (self._bits[u] >> v) & 1, f"asymmetric edge {v}-{u}"
            total += len(nb)
        assert total == 2 * self._size


def graph_from_edge_list(order: int, edges: Iterable[Sequence[int]], labels=None) -> Graph:
    return Graph(order, edges, labels)


def empty_graph() -> Graph:
    return Graph(0)


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    """Subgraph induced by ``vs``, relabeled by ascending original id."""
    keep = sorted(set(vs))
    for v in keep:
        if not 0 <= v < g.order:
            raise OutOfRange(f"vertex {v} outside 0..{g.order - 1}")
    pos = {v: i for i, v in enumerate(keep)}
    mask = 0
    for v in keep:
        mask |= 1 << v
    edges = []
    for v in keep:
        for u in _bits_to_list(g.neighbor_bits(v) & mask):
            if u > v:
                edges.append((pos[v], pos[u]))
    labels = [g.labels[v] for v in keep] if g.labels is not None else None
    return Graph(len(keep), edges, labels)


def delete_vertices(g: Graph, vs: Iterable[int]) -> Graph:
    drop = set(vs)
    return induced_subgraph(g, [v for v in g.vertices() if v not in drop])


def bfs_distances(g: Graph, source: int) -> list[Optional[int]]:
    """Distances from ``source``; ``None`` marks unreachable vertices."""
    g._check(source)
    dist: list[Optional[int]] = [None] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if dist[u] is None:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def distance(g: Graph, u: int, v: int) -> Optional[int]:
    """Shortest-path length between ``u`` and ``v``, or ``None`` if unreachable."""
    g._check(v)
    return bfs_distances(g, u)[v]


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    return all(d is not None for d in bfs_distances(g, 0))


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, ``None`` for forests."""
    best = None
    for s in g.vertices():
        dist = [-1] * g.order
        parent = [-1] * g.order
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    c = dist[u] + dist[v] + 1
                    if best is None or c < best:
                        best = c
    return best


def copolar_pairs(g: Graph) -> set[tuple[int, int]]:
    """Pairs ``(x, y)`` with ``x < y`` at distance 3, each the only vertex at
    distance 3 from the other."""
    far = []
    for x in g.vertices():
        dist = bfs_distances(g, x)
        far.append([y for y, d in enumerate(dist) if d == 3])
    pairs = set()
    for x, ys in enumerate(far):
        if len(ys) == 1:
            y = ys[0]
            if far[y] == [x] and x < y:
                pairs.add((x, y))
    return pairs


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.order
    edges = list(g.edges()) + [(u + shift, v + shift) for u, v in h.edges()]
    return Graph(g.order + h.order, edges)


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph._from_bits([(full ^ b) & ~(1 << v) for v, b in enumerate(g._bits)])
