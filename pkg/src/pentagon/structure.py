"""Induced-copy search and recognition of icosahedra carrying tadpole hats."""

from __future__ import annotations

from collections import deque
from typing import Optional

from .graph import Graph, induced_subgraph
from .zoo import _is_tadpole_set, icosahedron


def _search_order(pattern: Graph) -> list[int]:
    """BFS order from vertex 0 so each vertex after the first has an
    already-placed neighbor (per component)."""
    seen = [False] * pattern.order
    order = []
    for root in pattern.vertices():
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in pattern.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    return order


def find_induced_copy(pattern: Graph, host: Graph, max_nodes: int = 1_000_000) -> Optional[list[int]]:
    """Injective map ``pattern -> host`` preserving adjacency and
    non-adjacency, as a list indexed by pattern vertex; ``None`` if none.

    Plain backtracking; ``max_nodes`` bounds the number of partial maps
    tried, after which ``None`` is returned as well.
    """
    order = _search_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    anchor = []
    for v in order:
        placed = [u for u in pattern.neighbors(v) if pos[u] < pos[v]]
        anchor.append(min(placed, key=pos.get) if placed else None)
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    mapping = [-1] * pattern.order
    used = set()
    budget = [max_nodes]

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        budget[0] -= 1
        if budget[0] < 0:
            return False
        p = order[i]
        a = anchor[i]
        cands = host.neighbors(mapping[a]) if a is not None else host.vertices()
        for c in cands:
            if c in used or hdeg[c] < pdeg[p]:
                continue
            ok = True
            for j in range(i):
                q = order[j]
                if pattern.has_edge(p, q) != host.has_edge(c, mapping[q]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[p] = c
            used.add(c)
            if extend(i + 1):
                return True
            used.discard(c)
            mapping[p] = -1
        return False

    if pattern.order > host.order:
        return None
    return list(mapping) if extend(0) else None


def find_icosahedron(host: Graph, max_nodes: int = 1_000_000) -> Optional[list[int]]:
    """Host vertices of an induced icosahedron, indexed like ``icosahedron()``."""
    return find_induced_copy(icosahedron(), host, max_nodes)


def tadpole_hats(host: Graph, core) -> list[int]:
    """Vertices outside ``core`` whose neighbors inside ``core`` are exactly
    four vertices inducing T(3,1)."""
    core_set = set(core)
    mask = 0
    for v in core_set:
        mask |= 1 << v
    hats = []
    for v in host.vertices():
        if v in core_set:
            continue
        inside = host.neighbor_bits(v) & mask
        if bin(inside).count("1") != 4:
            continue
        vs = [u for u in core_set if (inside >> u) & 1]
        if _is_tadpole_set(host, vs) is not None:
            hats.append(v)
    return hats


def match_hatted_icosahedron(g: Graph, max_nodes: int = 1_000_000) -> Optional[int]:
    """Number of hats ``h >= 1`` if ``g`` is an icosahedron plus ``h``
    pairwise nonadjacent tadpole hats, else ``None``."""
    h = g.order - 12
    if h < 1 or g.size != 30 + 4 * h:
        return None
    core = find_icosahedron(g, max_nodes)
    if core is None:
        return None
    hats = tadpole_hats(g, core)
    if len(hats) != h:
        return None
    if induced_subgraph(g, hats).size != 0:
        return None
    return h
