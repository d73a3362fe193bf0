"""The cycle operator: edge-intersection graph of induced k-cycles."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from . import _backend
from .cycles import InducedCycle, edge, enumerate_induced_cycles, raw_induced_cycles
from .graph import Graph, GraphError, OutOfRange


class NotAnEdge(GraphError):
    pass


@dataclass(frozen=True)
class OperatorResult:
    output: Graph
    provenance: tuple[InducedCycle, ...]
    k: int
    source: Optional[Graph] = None

    def cycle(self, u: int) -> InducedCycle:
        if not 0 <= u < self.output.order:
            raise OutOfRange(f"vertex {u} outside 0..{self.output.order - 1}")
        return self.provenance[u]

    def find(self, walk) -> int:
        """Output vertex whose provenance cycle is ``walk`` (any rotation or
        direction; entries may be source labels or ids)."""
        ids = [self.source.index_of(x) if isinstance(x, str) else x for x in walk]
        target = frozenset(ids)
        for u, cyc in enumerate(self.provenance):
            if cyc.vertex_set == target and cyc.edges == InducedCycle(tuple(ids)).edges:
                return u
        raise KeyError(walk)

    def to_json(self) -> str:
        src = self.source
        return json.dumps(
            {
                "k": self.k,
                "order": self.output.order,
                "size": self.output.size,
                "provenance": [
                    {"vertex": u, "cycle": list(c.vertices), "label": c.label(src)}
                    for u, c in enumerate(self.provenance)
                ],
                "edges": [list(e) for e in self.output.edges()],
            }
        )


def cycle_operator(g: Graph, k: int = 5, backend: Optional[str] = None,
                   max_order: Optional[int] = None) -> OperatorResult:
    """Build the graph whose vertices are the induced ``k``-cycles of ``g``,
    two cycles adjacent when they share an edge.

    Vertex ``i`` of the output is the ``i``-th cycle in enumeration order.
    An input without induced ``k``-cycles yields the order-0 graph. With
    ``max_order`` set, :class:`~pentagon.cycles.CycleLimitExceeded` is raised
    as soon as the output would have more vertices.
    """
    raw = raw_induced_cycles(g, k, backend, max_order)
    pairs = _backend.intersection_pairs(raw, max(g.order, 1), backend)
    cycles = tuple(InducedCycle(c) for c in raw)
    labels = [c.label(g) for c in cycles] if g.labels is not None else None
    out = Graph.from_edge_array(len(cycles), pairs, labels)
    return OperatorResult(out, cycles, k, g)


def apply(g: Graph, k: int = 5) -> Graph:
    return cycle_operator(g, k).output


def hat_neighbors(res: OperatorResult, hat_vertex: int) -> list[tuple[int, str]]:
    """Neighbors of an output vertex, each paired with its provenance label."""
    nbrs = res.output.neighbors(hat_vertex)
    return [(u, res.provenance[u].label(res.source)) for u in nbrs]


def edge_pentagon_count(res: OperatorResult, u: int, v: int) -> int:
    """Number of induced 5-cycles of the output graph that use edge ``uv``."""
    out = res.output
    if not (0 <= u < out.order and 0 <= v < out.order) or not out.has_edge(u, v):
        raise NotAnEdge(f"{u}-{v} is not an edge of the operator output")
    e = edge(u, v)
    return sum(1 for c in enumerate_induced_cycles(out, 5) if e in c.edges)


def edge_cycle_counts(g: Graph, k: int = 5) -> dict[tuple[int, int], int]:
    """Map each edge of ``g`` to the number of induced ``k``-cycles through it."""
    counts = {e: 0 for e in g.edges()}
    for c in enumerate_induced_cycles(g, k):
        for e in c.edges:
            counts[e] += 1
    return counts
