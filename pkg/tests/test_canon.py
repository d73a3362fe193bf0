import random

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from pentagon import zoo
from pentagon.canon import (
    TooLarge,
    canonical_certificate,
    canonical_form,
    invariant_hash,
    is_isomorphic,
    is_vertex_transitive,
    orbit_partition,
)
from pentagon.graph import Graph, complement, disjoint_union

from conftest import random_graph


def to_nx(g):
    G = nx.Graph(list(g.edges()))
    G.add_nodes_from(range(g.order))
    return G


def nx_orbits(g):
    """Orbits from networkx's automorphism enumeration."""
    G = to_nx(g)
    parent = list(range(g.order))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for m in GraphMatcher(G, G).isomorphisms_iter():
        for a, b in m.items():
            parent[find(a)] = find(b)
    groups = {}
    for v in range(g.order):
        groups.setdefault(find(v), []).append(v)
    return sorted(sorted(x) for x in groups.values())


def test_empty_and_tiny():
    assert canonical_certificate(Graph(0)).canonical_edges == b""
    assert canonical_certificate(Graph(1)).hex == "00000001"
    assert canonical_certificate(Graph(2)) != canonical_certificate(Graph(2, [(0, 1)]))


def test_random_pairs_agree_with_networkx():
    rng = random.Random(1)
    for _ in range(300):
        n = rng.randint(1, 9)
        p = rng.random()
        g = random_graph(rng, n, p)
        h = random_graph(rng, n, p) if rng.random() < 0.5 else g.relabeled(rng.sample(range(n), n))
        assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_permutation_fuzz():
    rng = random.Random(2)
    for _ in range(300):
        n = rng.randint(0, 16)
        g = random_graph(rng, n, rng.random())
        perm = rng.sample(range(n), n)
        assert canonical_certificate(g) == canonical_certificate(g.relabeled(perm))
        assert invariant_hash(g) == invariant_hash(g.relabeled(perm))


def test_regular_hard_cases():
    # same degree sequence, 1-WL cannot split them; individualization must
    a = disjoint_union(zoo.cycle(3), zoo.cycle(3))
    b = zoo.cycle(6)
    assert invariant_hash(a) == invariant_hash(b)
    assert not is_isomorphic(a, b)
    assert not is_isomorphic(zoo.petersen(), complement(disjoint_union(zoo.cycle(5), zoo.cycle(5))))
    assert is_isomorphic(zoo.petersen(), zoo.petersen().relabeled([9, 8, 7, 6, 5, 4, 3, 2, 1, 0]))
    c12 = zoo.cycle(12)
    assert is_isomorphic(c12, c12.relabeled(list(range(1, 12)) + [0]))


def test_canonical_form_is_a_relabeling():
    g = zoo.i1_paper()
    f = canonical_form(g)
    assert is_isomorphic(f, g)
    assert canonical_form(g.relabeled(list(reversed(range(g.order))))) == f


def test_colored_certificates():
    p = zoo.path(3)
    ends = canonical_certificate(p, [1, 0, 1])
    assert ends == canonical_certificate(p, [5, 2, 5])
    assert ends != canonical_certificate(p, [0, 1, 0])
    assert canonical_certificate(p, [0, 0, 1]) == canonical_certificate(p, [1, 0, 0][::-1])


@pytest.mark.parametrize("name", ["tadpole31", "petersen", "path:5", "I1-paper", "hatted-icosahedron:2",
                                  "complete:4", "cycle:7"])
def test_orbits_match_networkx(name):
    g = zoo.from_name(name)
    assert orbit_partition(g).orbits() == nx_orbits(g)


def test_orbits_random():
    rng = random.Random(4)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        assert orbit_partition(g).orbits() == nx_orbits(g)


def test_vertex_transitive():
    assert is_vertex_transitive(zoo.icosahedron())
    assert is_vertex_transitive(zoo.dodecahedron())
    assert is_vertex_transitive(zoo.petersen())
    assert not is_vertex_transitive(zoo.tadpole31())
    assert not is_vertex_transitive(Graph(0))
    with pytest.raises(TooLarge):
        orbit_partition(zoo.cycle(70))
