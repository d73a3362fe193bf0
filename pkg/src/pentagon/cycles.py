"""Induced (chordless) k-cycle enumeration plus a brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Optional

from . import _backend
from .graph import Graph, GraphError


class KTooSmall(GraphError):
    pass


class CycleLimitExceeded(GraphError):
    """More induced cycles exist than the caller allowed."""

    def __init__(self, limit: int, k: int):
        super().__init__(f"more than {limit} induced {k}-cycles")
        self.limit = limit
        self.k = k


def _check_k(k: int) -> None:
    if k < 3:
        raise KTooSmall(f"cycle length must be at least 3, got {k}")


def edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, order=True)
class InducedCycle:
    """A chordless cycle, stored with its minimum vertex first and the
    smaller of the two neighbors of that vertex second."""

    vertices: tuple[int, ...]
    _edges: frozenset = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        vs = tuple(self.vertices)
        object.__setattr__(self, "vertices", vs)
        k = len(vs)
        object.__setattr__(
            self, "_edges", frozenset(edge(vs[i], vs[(i + 1) % k]) for i in range(k))
        )

    @property
    def k(self) -> int:
        return len(self.vertices)

    @property
    def edges(self) -> frozenset:
        return self._edges

    @cached_property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def label(self, g: Optional[Graph] = None) -> str:
        """Concatenated vertex names, e.g. ``"bc{10}98"``."""
        parts = []
        for v in self.vertices:
            name = g.label(v) if g is not None else str(v)
            parts.append(name if len(name) == 1 else "{" + name + "}")
        return "".join(parts)

    def bracket(self, g: Optional[Graph] = None) -> str:
        """Closed-walk notation ``[v,4,5,6,b,v]``."""
        names = [g.label(v) if g is not None else str(v) for v in self.vertices]
        return "[" + ",".join(names + names[:1]) + "]"


def canonical_orientation(seq) -> tuple[int, ...]:
    """Rotate/reflect a cyclic vertex sequence into canonical form."""
    seq = list(seq)
    k = len(seq)
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if k > 2 and rot[1] > rot[-1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


def cycle_from_walk(g: Graph, walk) -> InducedCycle:
    """Build an :class:`InducedCycle` from any rotation/direction of it,
    checking that it is chordless in ``g``."""
    cyc = InducedCycle(canonical_orientation(walk))
    check_induced_cycle(g, cyc)
    return cyc


def check_induced_cycle(g: Graph, cyc: InducedCycle) -> None:
    vs = cyc.vertices
    k = len(vs)
    if len(set(vs)) != k:
        raise GraphError(f"repeated vertex in {vs}")
    if canonical_orientation(vs) != vs:
        raise GraphError(f"{vs} is not in canonical orientation")
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(vs[i], vs[j]) != consecutive:
                kind = "missing cycle edge" if consecutive else "chord"
                raise GraphError(f"{kind} {vs[i]}-{vs[j]} in {vs}")


def raw_induced_cycles(g: Graph, k: int = 5, backend: Optional[str] = None,
                       limit: Optional[int] = None) -> list[tuple[int, ...]]:
    """Like :func:`enumerate_induced_cycles` but returns bare tuples."""
    _check_k(k)
    cycles, _, complete = _backend.induced_cycles(g, k, backend, limit)
    if not complete:
        raise CycleLimitExceeded(limit, k)
    return cycles


def enumerate_induced_cycles(g: Graph, k: int = 5, backend: Optional[str] = None,
                             limit: Optional[int] = None) -> list[InducedCycle]:
    """All induced ``k``-cycles of ``g``, sorted by vertex sequence.

    Uses anchored path extension with incremental chord rejection; see
    ``pentagon._fallback.induced_cycles`` for the algorithm. ``backend``
    forces ``"python"`` or ``"cython"`` kernels. Raises
    :class:`CycleLimitExceeded` when more than ``limit`` cycles exist.
    """
    return [InducedCycle(c) for c in raw_induced_cycles(g, k, backend, limit)]


def count_induced_cycles(g: Graph, k: int = 5, backend: Optional[str] = None,
                         limit: Optional[int] = None) -> int:
    _check_k(k)
    _, count, complete = _backend.induced_cycles(g, k, backend, limit, count_only=True)
    if not complete:
        raise CycleLimitExceeded(limit, k)
    return count


def oracle_induced_cycles(g: Graph, k: int = 5) -> list[InducedCycle]:
    """Reference enumeration by testing every ``k``-subset of vertices.

    A subset qualifies when its induced subgraph is 2-regular and
    connected. Exponential; intended for graphs of about 14 vertices or
    fewer.
    """
    _check_k(k)
    found = []
    for subset in combinations(range(g.order), k):
        inner = {v: [u for u in subset if u != v and g.has_edge(u, v)] for v in subset}
        if any(len(nb) != 2 for nb in inner.values()):
            continue
        start = subset[0]
        walk = [start, min(inner[start])]
        while len(walk) < k:
            a, b = inner[walk[-1]]
            nxt = a if a != walk[-2] else b
            if nxt == start:
                break
            walk.append(nxt)
        if len(walk) != k:
            continue  # disjoint union of shorter cycles
        found.append(InducedCycle(tuple(walk)))
    found.sort()
    return found


def cycles_share_edge(a: InducedCycle, b: InducedCycle) -> bool:
    return not a.edges.isdisjoint(b.edges)


def shared_edges(a: InducedCycle, b: InducedCycle) -> frozenset:
    return a.edges & b.edges
