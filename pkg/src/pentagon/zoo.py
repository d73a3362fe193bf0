"""Named graphs: cycles, complete graphs, Petersen, the dodecahedron and
icosahedron with their customary labels, the tadpole T(3,1), and icosahedra
carrying tadpole hats."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, induced_subgraph


class TooSmall(GraphError):
    pass


class TooManyHats(GraphError):
    pass


class UnknownName(GraphError):
    pass


def _labeled(labels, edge_names) -> Graph:
    idx = {name: i for i, name in enumerate(labels)}
    return Graph(len(labels), [(idx[a], idx[b]) for a, b in edge_names], labels)


def cycle(n: int) -> Graph:
    if n < 3:
        raise TooSmall(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


# Face list of the dodecahedron as printed on the vertices of its pentagon
# graph; consecutive entries are adjacent and each edge lies on two faces.
DODECAHEDRON_FACES = (
    ("1", "2", "3", "4", "5"),
    ("a", "b", "c", "d", "e"),
    ("b", "c", "10", "9", "8"),
    ("1", "2", "9", "8", "7"),
    ("a", "b", "8", "7", "6"),
    ("5", "1", "7", "6", "15"),
    ("e", "a", "6", "15", "14"),
    ("4", "5", "15", "14", "13"),
    ("d", "e", "14", "13", "12"),
    ("3", "4", "13", "12", "11"),
    ("c", "d", "12", "11", "10"),
    ("2", "3", "11", "10", "9"),
)

DODECAHEDRON_LABELS = tuple(str(i) for i in range(1, 16)) + tuple("abcde")


def dodecahedron() -> Graph:
    """Order 20, labels ``1..15`` then ``a..e``."""
    edges = set()
    for face in DODECAHEDRON_FACES:
        for i in range(5):
            a, b = face[i], face[(i + 1) % 5]
            edges.add((a, b) if (a, b) < (b, a) else (b, a))
    return _labeled(DODECAHEDRON_LABELS, sorted(edges))


ICOSAHEDRON_LABELS = ("a",) + tuple(str(i) for i in range(1, 11)) + ("b",)

# apex a over the pentagon 1-2-3-4-5, apex b under 6-7-8-9-10, and the
# antiprism band 6-5-10-4-9-3-8-2-7-1-6 between them
_ICOSA_EDGES = (
    [("a", str(i)) for i in range(1, 6)]
    + [("b", str(i)) for i in range(6, 11)]
    + [(str(i), str(i % 5 + 1)) for i in range(1, 6)]
    + [(str(i), str((i - 5) % 5 + 6)) for i in range(6, 11)]
    + [("6", "5"), ("5", "10"), ("10", "4"), ("4", "9"), ("9", "3"),
       ("3", "8"), ("8", "2"), ("2", "7"), ("7", "1"), ("1", "6")]
)


def icosahedron() -> Graph:
    """Order 12, labels ``a, 1..10, b`` so that vertex id ``i`` is label ``i``
    for ``1 <= i <= 10``."""
    return _labeled(ICOSAHEDRON_LABELS, _ICOSA_EDGES)


def tadpole31() -> Graph:
    """Triangle 0-1-2 with pendant vertex 3 on vertex 2."""
    return Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


@dataclass(frozen=True, order=True)
class Tadpole:
    vertices: tuple[int, int, int, int]  # sorted
    pendant: int

    @property
    def triangle(self) -> tuple[int, int, int]:
        return tuple(v for v in self.vertices if v != self.pendant)


def _is_tadpole_set(g: Graph, vs) -> int | None:
    """Pendant vertex if ``vs`` induces T(3,1), else ``None``."""
    deg = {v: sum(1 for u in vs if u != v and g.has_edge(u, v)) for v in vs}
    if sorted(deg.values()) != [1, 2, 2, 3]:
        return None
    return next(v for v, d in deg.items() if d == 1)


def enumerate_induced_tadpoles(g: Graph) -> list[Tadpole]:
    """Every 4-set inducing T(3,1), sorted by its sorted vertex tuple.

    Found by growing each triangle with a vertex adjacent to exactly one of
    its corners.
    """
    seen = {}
    for x in g.vertices():
        for y in g.neighbors(x):
            if y <= x:
                continue
            common = g.neighbor_bits(x) & g.neighbor_bits(y)
            for z in g.neighbors(x):
                if z <= y or not (common >> z) & 1:
                    continue
                tri = (x, y, z)
                for corner in tri:
                    others = [t for t in tri if t != corner]
                    for u in g.neighbors(corner):
                        if u in tri:
                            continue
                        if g.has_edge(u, others[0]) or g.has_edge(u, others[1]):
                            continue
                        key = tuple(sorted(tri + (u,)))
                        seen[key] = u
    return [Tadpole(key, seen[key]) for key in sorted(seen)]


def brute_force_tadpoles(g: Graph) -> list[Tadpole]:
    """Reference: test all 4-subsets."""
    out = []
    for vs in combinations(range(g.order), 4):
        p = _is_tadpole_set(g, vs)
        if p is not None:
            out.append(Tadpole(vs, p))
    return out


def add_hats(base: Graph, hat_sets, labels=None) -> Graph:
    """``base`` plus one new vertex per entry of ``hat_sets``, each joined to
    exactly the vertices of that entry. Hats are mutually nonadjacent."""
    n = base.order
    edges = list(base.edges())
    for i, vs in enumerate(hat_sets):
        edges.extend((v, n + i) for v in vs)
    if labels is None and base.labels is not None:
        if len(hat_sets) == 1:
            labels = list(base.labels) + ["v"]
        else:
            labels = list(base.labels) + [f"v{i + 1}" for i in range(len(hat_sets))]
    return Graph(n + len(hat_sets), edges, labels)


def hatted_icosahedron(h: int) -> Graph:
    """Icosahedron with hats on the ``h`` lexicographically smallest induced
    tadpoles. ``h == 0`` gives the icosahedron itself."""
    ico = icosahedron()
    tads = enumerate_induced_tadpoles(ico)
    if h < 0:
        raise GraphError("hat count must be nonnegative")
    if h > len(tads):
        raise TooManyHats(f"icosahedron has {len(tads)} induced tadpoles, asked for {h} hats")
    if h == 0:
        return ico
    return add_hats(ico, [t.vertices for t in tads[:h]])


I1_PAPER_HAT = ("3", "4", "9", "b")


def i1_paper() -> Graph:
    """The reference one-hat icosahedron: hat ``v`` on the
    tadpole with triangle 3-4-9 and pendant b."""
    ico = icosahedron()
    hat = [ico.index_of(x) for x in I1_PAPER_HAT]
    if _is_tadpole_set(ico, hat) is None:
        raise AssertionError("reference hat set is not an induced tadpole")
    return add_hats(ico, [sorted(hat)])


def hat_vertices(g: Graph, base_order: int = 12) -> list[int]:
    return list(range(base_order, g.order))


def strip_hats(g: Graph, base_order: int = 12) -> Graph:
    return induced_subgraph(g, range(base_order))


_FIXED = {
    "dodecahedron": dodecahedron,
    "icosahedron": icosahedron,
    "petersen": petersen,
    "tadpole31": tadpole31,
    "I1-paper": i1_paper,
    "empty": lambda: Graph(0),
    "K1": lambda: Graph(1),
}

_PARAM = {
    "cycle": cycle,
    "complete": complete,
    "path": path,
    "hatted-icosahedron": hatted_icosahedron,
}


def zoo_names() -> list[str]:
    return sorted(_FIXED) + [f"{p}:<n>" for p in sorted(_PARAM)]


def from_name(name: str) -> Graph:
    """Resolve ``"icosahedron"``, ``"cycle:5"``, ``"hatted-icosahedron:3"``..."""
    if name in _FIXED:
        return _FIXED[name]()
    base, sep, arg = name.partition(":")
    if sep and base in _PARAM:
        try:
            n = int(arg)
        except ValueError:
            raise UnknownName(f"bad parameter in {name!r}") from None
        return _PARAM[base](n)
    raise UnknownName(f"unknown graph name {name!r}; known: {', '.join(zoo_names())}")


def is_zoo_name(name: str) -> bool:
    base = name.partition(":")[0]
    return name in _FIXED or base in _PARAM
