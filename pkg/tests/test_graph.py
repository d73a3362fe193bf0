import pytest

from pentagon.graph import (
    Graph,
    GraphError,
    OutOfRange,
    SelfLoop,
    bfs_distances,
    complement,
    copolar_pairs,
    delete_vertices,
    disjoint_union,
    distance,
    girth,
    induced_subgraph,
    is_connected,
)
from pentagon import zoo


def test_basic_accessors():
    g = Graph(4, [(0, 1), (2, 1), (1, 0)])
    assert g.order == 4 and g.size == 2
    assert list(g.edges()) == [(0, 1), (1, 2)]
    assert g.neighbors(1) == (0, 2)
    assert g.degrees() == [1, 2, 1, 0]
    assert g.has_edge(2, 1) and not g.has_edge(0, 2)
    g.check_invariants()


def test_errors():
    with pytest.raises(SelfLoop):
        Graph(2, [(1, 1)])
    with pytest.raises(OutOfRange):
        Graph(2, [(0, 2)])
    with pytest.raises(OutOfRange):
        Graph(-1)
    with pytest.raises(GraphError):
        Graph(2, [], labels=["a"])
    with pytest.raises(OutOfRange):
        Graph(2).neighbors(5)


def test_equality_ignores_labels():
    a = Graph(3, [(0, 1)], labels="xyz")
    b = Graph(3, [(1, 0)])
    assert a == b and hash(a) == hash(b)
    assert a.label(2) == "z" and b.label(2) == "2"
    assert a.index_of("y") == 1


def test_induced_subgraph_relabels_ascending():
    g = zoo.cycle(6)
    h = induced_subgraph(g, [4, 0, 5])
    assert h.order == 3
    assert list(h.edges()) == [(0, 2), (1, 2)]
    assert delete_vertices(g, [0]) == zoo.path(5)


def test_relabeled_is_permutation():
    g = zoo.path(4)
    h = g.relabeled([3, 2, 1, 0])
    assert list(h.edges()) == [(0, 1), (1, 2), (2, 3)]
    with pytest.raises(GraphError):
        g.relabeled([0, 0, 1, 2])


def test_distances_and_connectivity():
    g = disjoint_union(zoo.path(3), zoo.complete(2))
    assert bfs_distances(g, 0) == [0, 1, 2, None, None]
    assert distance(g, 0, 4) is None
    assert not is_connected(g)
    assert is_connected(zoo.petersen())
    assert is_connected(Graph(0))


def test_girth():
    assert girth(zoo.petersen()) == 5
    assert girth(zoo.dodecahedron()) == 5
    assert girth(zoo.icosahedron()) == 3
    assert girth(zoo.path(5)) is None


def test_complement():
    assert complement(zoo.complete(5)).size == 0
    assert complement(zoo.cycle(5)) != zoo.cycle(5)
    assert complement(complement(zoo.petersen())) == zoo.petersen()


def test_copolar_pairs_icosahedron():
    ico = zoo.icosahedron()
    pairs = copolar_pairs(ico)
    assert len(pairs) == 6
    seen = set()
    for x, y in pairs:
        assert x < y
        seen |= {x, y}
    assert seen == set(ico.vertices())


def test_csr_matches_neighbors():
    g = zoo.petersen()
    indptr, indices = g.csr()
    for v in g.vertices():
        assert tuple(indices[indptr[v]:indptr[v + 1]]) == g.neighbors(v)


def test_from_edge_array_matches_constructor():
    import random

    import numpy as np

    rng = random.Random(12)
    for n in (0, 1, 5, 70, 300):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.2]
        pairs += pairs[: len(pairs) // 3]  # duplicates collapse
        fast = Graph.from_edge_array(n, np.array(pairs, dtype=np.int64).reshape(-1, 2))
        slow = Graph(n, pairs)
        assert fast == slow and fast.size == slow.size
        assert all(fast.neighbors(v) == slow.neighbors(v) for v in range(n))
        fi, fj = fast.csr()
        si, sj = Graph(n, pairs).csr()
        assert (fi == si).all() and (fj == sj).all()
    with pytest.raises(SelfLoop):
        Graph.from_edge_array(3, [(1, 1)])
    with pytest.raises(OutOfRange):
        Graph.from_edge_array(3, [(0, 3)])
