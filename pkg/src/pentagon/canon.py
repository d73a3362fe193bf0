"""Canonical labeling, isomorphism testing, and automorphism orbits.

Color refinement followed by an individualization-refinement search tree.
The canonical form is the lexicographically least sorted edge list over
all leaves; automorphisms discovered at leaves prune the tree.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, GraphError


class TooLarge(GraphError):
    pass


DEFAULT_ORBIT_BOUND = 64


@dataclass(frozen=True)
class CanonicalCertificate:
    canonical_edges: bytes
    relabeling: tuple[int, ...]  # original id -> canonical id
    hash: int

    @property
    def hex(self) -> str:
        return self.canonical_edges.hex()

    def __eq__(self, other):
        if not isinstance(other, CanonicalCertificate):
            return NotImplemented
        return self.canonical_edges == other.canonical_edges

    def __hash__(self):
        return self.hash


@dataclass(frozen=True)
class OrbitPartition:
    orbit_id: tuple[int, ...]
    orbit_count: int

    def orbits(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.orbit_count)]
        for v, o in enumerate(self.orbit_id):
            out[o].append(v)
        return out


# -- refinement -----------------------------------------------------------


def _rank(keys):
    order = {key: i for i, key in enumerate(sorted(set(keys)))}
    return [order[key] for key in keys], len(order)


def refine(nbrs, colors):
    """Coarsest stable refinement of ``colors`` (1-WL). New colors are ranks
    of ``(old color, sorted neighbor colors)``, so the result does not depend
    on vertex names."""
    colors, count = _rank(colors)
    n = len(colors)
    while True:
        sigs = [(colors[v], tuple(sorted([colors[u] for u in nbrs[v]]))) for v in range(n)]
        new, new_count = _rank(sigs)
        if new_count == count:
            return new
        colors, count = new, new_count


def refinement_signature(g: Graph, colors: Optional[Sequence[int]] = None):
    """Isomorphism invariant built from the stable coloring."""
    nbrs = g._nbrs
    stable = refine(nbrs, colors if colors is not None else [0] * g.order)
    return (g.order, g.size, tuple(sorted(
        (stable[v], tuple(sorted(stable[u] for u in nbrs[v]))) for v in range(g.order)
    )))


def invariant_hash(g: Graph) -> int:
    digest = hashlib.blake2b(repr(refinement_signature(g)).encode(), digest_size=8)
    return int.from_bytes(digest.digest(), "big")


def _individualize(colors, w):
    return [2 * c + (0 if v == w else 1) for v, c in enumerate(colors)]


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


class _Search:
    def __init__(self, g: Graph):
        self.nbrs = g._nbrs
        self.n = g.order
        self.edges = list(g.edges())
        self.first = None  # (code, labeling, path)
        self.best = None
        self.orbits: list[_UnionFind] = []
        self.automorphisms = 0
        self.leaves = 0

    def code(self, lab):
        return tuple(sorted((lab[u], lab[v]) if lab[u] < lab[v] else (lab[v], lab[u])
                            for u, v in self.edges))

    def run(self, colors):
        self._node(colors, [])
        return self.best

    def _node(self, colors, path):
        colors = refine(self.nbrs, colors)
        if len(set(colors)) == self.n:
            return self._leaf(colors, path)
        counts = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, m in counts.items() if m > 1)
        cell = [v for v in range(self.n) if colors[v] == target]
        depth = len(path)
        explored = []
        for w in cell:
            if self.first is not None and path == self.first[2][:depth]:
                uf = self.orbits[depth]
                rw = uf.find(w)
                if any(uf.find(x) == rw for x in explored):
                    continue
            explored.append(w)
            jump = self._node(_individualize(colors, w), path + [w])
            if jump is not None and jump < depth:
                return jump
        return None

    def _leaf(self, lab, path):
        self.leaves += 1
        code = self.code(lab)
        if self.first is None:
            self.first = self.best = (code, lab, path)
            self.orbits = [_UnionFind(self.n) for _ in range(len(path) + 1)]
            return None
        if code == self.first[0]:
            self._record(self.first[1], lab)
            return _common_prefix(path, self.first[2])
        if code < self.best[0]:
            self.best = (code, lab, path)
            return None
        if code == self.best[0]:
            self._record(self.best[1], lab)
            return _common_prefix(path, self.best[2])
        return None

    def _record(self, lab_a, lab_b):
        # automorphism sending the vertex at canonical slot i under lab_a to
        # the vertex at the same slot under lab_b
        inv_b = [0] * self.n
        for v, c in enumerate(lab_b):
            inv_b[c] = v
        gamma = [inv_b[lab_a[v]] for v in range(self.n)]
        self.automorphisms += 1
        first_path = self.first[2]
        for j, uf in enumerate(self.orbits):
            if any(gamma[x] != x for x in first_path[:j]):
                break
            for v in range(self.n):
                uf.union(v, gamma[v])


def _common_prefix(a, b):
    i = 0
    while i < len(a) and i < len(b) and a[i] == b[i]:
        i += 1
    return i


def _encode(order: int, code, class_sizes=None) -> bytes:
    if order == 0 and not class_sizes:
        return b""
    parts = [order.to_bytes(4, "big")]
    if class_sizes:
        parts.append(len(class_sizes).to_bytes(4, "big"))
        parts.extend(s.to_bytes(4, "big") for s in class_sizes)
    for u, v in code:
        parts.append(u.to_bytes(4, "big"))
        parts.append(v.to_bytes(4, "big"))
    return b"".join(parts)


def canonical_certificate(g: Graph, colors: Optional[Sequence[int]] = None) -> CanonicalCertificate:
    """Certificate that is byte-identical for isomorphic graphs.

    ``colors`` optionally fixes an initial vertex coloring; color values are
    only compared by order, and the certificate then also encodes the sizes
    of the color classes, so it certifies color-preserving isomorphism.
    """
    n = g.order
    class_sizes = None
    if colors is not None:
        if len(colors) != n:
            raise GraphError("one color per vertex required")
        ranked, _ = _rank(list(colors))
        sizes = {}
        for c in ranked:
            sizes[c] = sizes.get(c, 0) + 1
        class_sizes = [sizes[c] for c in sorted(sizes)]
        start = ranked
    else:
        start = [0] * n
    if n == 0:
        code, lab = (), ()
    else:
        code, lab, _ = _Search(g).run(start)
    data = _encode(n, code, class_sizes)
    digest = int.from_bytes(hashlib.blake2b(data, digest_size=8).digest(), "big")
    return CanonicalCertificate(data, tuple(lab), digest)


def canonical_form(g: Graph) -> Graph:
    cert = canonical_certificate(g)
    return g.relabeled(cert.relabeling).with_labels(None) if g.order else g


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_certificate(g).canonical_edges == canonical_certificate(h).canonical_edges


def orbit_partition(g: Graph, bound: int = DEFAULT_ORBIT_BOUND) -> OrbitPartition:
    """Vertices ``u`` and ``v`` share an orbit when the graph with ``u``
    marked and the graph with ``v`` marked have equal certificates."""
    if g.order > bound:
        raise TooLarge(f"orbit computation limited to {bound} vertices, graph has {g.order}")
    stable = refine(g._nbrs, [0] * g.order)
    ids: dict[bytes, int] = {}
    orbit = []
    for v in g.vertices():
        # the mark is the primary key, so the marked vertex always takes the
        # last canonical slot; the stable coloring only shortens the search
        top = max(stable, default=0) + 1
        marked = [c + (top if u == v else 0) for u, c in enumerate(stable)]
        key = canonical_certificate(g, marked).canonical_edges
        orbit.append(ids.setdefault(key, len(ids)))
    return OrbitPartition(tuple(orbit), len(ids))


def is_vertex_transitive(g: Graph, bound: int = DEFAULT_ORBIT_BOUND) -> bool:
    return g.order >= 1 and orbit_partition(g, bound).orbit_count == 1
