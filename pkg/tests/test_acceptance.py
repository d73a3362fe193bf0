"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line
that the terminal summary prints (see conftest.py). Runnable directly with
``python3 tests/test_acceptance.py`` as well."""

import contextlib
import itertools
import json
import random
import time

import numpy as np
import pytest

from pentagon import zoo
from pentagon.canon import canonical_certificate, is_isomorphic, is_vertex_transitive
from pentagon.cli import main as cli_main
from pentagon.cycles import enumerate_induced_cycles, oracle_induced_cycles
from pentagon.dynamics import EventuallyPeriodic, Vanishing, classify, iterate
from pentagon.graph import Graph, copolar_pairs, distance, induced_subgraph
from pentagon.io import parse_graph6, write_graph6
from pentagon.operator import cycle_operator, edge_pentagon_count

from conftest import DATA, load_corpus, random_graph

RESULTS = {}


@contextlib.contextmanager
def criterion(n, what):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        RESULTS[n] = f"criterion {n:2d} FAIL  {what}  ({type(exc).__name__}: {exc})"
        print(RESULTS[n])
        raise
    RESULTS[n] = f"criterion {n:2d} PASS  {what}  ({time.perf_counter() - start:.2f}s)"
    print(RESULTS[n])


def brute_canonical(g):
    """Largest upper-triangle bit string over all vertex permutations."""
    n = g.order
    if n <= 1:
        return (n, 0)
    a = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    perms = np.array(list(itertools.permutations(range(n))))
    sub = a[perms[:, :, None], perms[:, None, :]]
    iu, ju = np.triu_indices(n, 1)
    bits = sub[:, iu, ju]
    weights = 1 << np.arange(bits.shape[1], dtype=np.int64)
    return (n, int((bits @ weights).max()))


def test_c01_dodecahedron(capsys):
    with criterion(1, "dodecahedron: 12 induced pentagons, C5(D) = I"):
        start = time.perf_counter()
        assert cli_main(["enumerate", "--graph", "dodecahedron"]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "induced 5-cycles: 12"
        out = cycle_operator(zoo.dodecahedron(), 5).output
        assert (out.order, out.size) == (12, 30)
        assert set(out.degrees()) == {5}
        assert is_isomorphic(out, zoo.icosahedron())
        assert time.perf_counter() - start < 1.0


def test_c02_icosahedron_fixed_point():
    with criterion(2, "icosahedron: C5(I) = I, periodic m=0 p=1"):
        start = time.perf_counter()
        ico = zoo.icosahedron()
        assert is_isomorphic(cycle_operator(ico, 5).output, ico)
        o = classify(ico).outcome
        assert o == EventuallyPeriodic(0, 1)
        assert time.perf_counter() - start < 1.0


def test_c03_dodecahedron_periodic():
    with criterion(3, "dodecahedron: eventually periodic m=1 p=1"):
        assert classify(zoo.dodecahedron()).outcome == EventuallyPeriodic(1, 1)


def test_c04_vanishing_chain():
    with criterion(4, "vanishing: C5 -> K1 -> empty, K4 and order 0 vanish at step 1"):
        assert iterate(zoo.cycle(5)).orders == [5, 1, 0]
        assert classify(zoo.cycle(5)).outcome == Vanishing(2)
        assert classify(zoo.complete(4)).outcome == Vanishing(1)
        assert classify(Graph(0)).outcome == Vanishing(1)


def test_c05_hatted_icosahedron_one_step():
    with criterion(5, "I1 one step: order 14, hat cycles p q adjacent, pq in one pentagon, T31 sides"):
        i1 = zoo.i1_paper()
        ico = zoo.icosahedron()
        v = i1.index_of("v")
        res = cycle_operator(i1, 5)
        assert res.output.order == 14
        through = [u for u, c in enumerate(res.provenance) if v in c.vertex_set]
        assert len(through) == 2
        p, q = through
        assert res.output.has_edge(p, q)
        assert edge_pentagon_count(res, p, q) == 1
        for a, b in ((p, q), (q, p)):
            others = [u for u in res.output.neighbors(a) if u != b]
            assert len(others) == 4
            # the neighbors come from pentagons of I itself (they avoid v)
            assert all(v not in res.provenance[u].vertex_set for u in others)
            # and induce T(3,1) inside the copy of C5(I) = I
            assert is_isomorphic(induced_subgraph(res.output, others), zoo.tadpole31())
        core = [u for u in res.output.vertices() if u not in (p, q)]
        assert is_isomorphic(induced_subgraph(res.output, core), ico)


def test_c06_growth_bound(golden):
    with criterion(6, "I1 growth: |C5^k(I1)| >= 12 + 2^k, strictly increasing, < 60 s"):
        start = time.perf_counter()
        t = iterate(zoo.i1_paper(), 5, max_steps=3, max_order=20000)
        orders = t.orders
        assert len(orders) == 4
        assert all(orders[k] >= 12 + 2 ** k for k in (1, 2, 3))
        assert all(a < b for a, b in zip(orders, orders[1:]))
        assert orders == golden["I1-paper"]
        assert time.perf_counter() - start < 60.0


def test_c07_oracle_equivalence(all_le7, all_8):
    with criterion(7, "enumeration = brute force, k=3..6, all graphs of order <= 8 + 300 random"):
        rng = random.Random(7)
        graphs = all_le7 + all_8
        graphs += [random_graph(rng, rng.randint(9, 12), rng.choice((0.3, 0.5))) for _ in range(300)]
        assert len(graphs) == 1253 + 12346 + 300
        for g in graphs:
            for k in (3, 4, 5, 6):
                assert enumerate_induced_cycles(g, k) == oracle_induced_cycles(g, k), (write_graph6(g), k)


def test_c08_isomorphism_soundness(all_le7):
    with criterion(8, "certificates = brute-force isomorphism on order <= 7, 1000-trial fuzz"):
        by_cert = {}
        by_brute = {}
        for i, g in enumerate(all_le7):
            by_cert.setdefault(canonical_certificate(g).canonical_edges, set()).add(i)
            by_brute.setdefault(brute_canonical(g), set()).add(i)
        # the atlas has one graph per class, so both partitions are singletons
        assert sorted(map(sorted, by_cert.values())) == sorted(map(sorted, by_brute.values()))
        assert len(by_cert) == len(all_le7)
        # relabeled copies pair with their source under both tests
        rng = random.Random(8)
        for g in rng.sample(all_le7, 200):
            perm = list(range(g.order))
            rng.shuffle(perm)
            h = g.relabeled(perm)
            assert brute_canonical(h) == brute_canonical(g)
            assert canonical_certificate(h) == canonical_certificate(g)
        failures = 0
        for _ in range(1000):
            n = rng.randint(0, 12)
            g = random_graph(rng, n, rng.random())
            perm = list(range(n))
            rng.shuffle(perm)
            failures += canonical_certificate(g) != canonical_certificate(g.relabeled(perm))
        assert failures == 0


def test_c09_side_facts():
    with criterion(9, "copolar pairs, vertex transitivity, 60 tadpoles with unique completion"):
        ico = zoo.icosahedron()
        pairs = copolar_pairs(ico)
        assert len(pairs) == 6
        assert all(distance(ico, x, y) == 3 for x, y in pairs)
        assert is_vertex_transitive(ico)
        tads = zoo.enumerate_induced_tadpoles(ico)
        assert len(tads) == 60
        completions = {}
        for t in tads:
            tri = tuple(sorted(t.triangle))
            corner = next(x for x in tri if ico.has_edge(x, t.pendant))
            completions.setdefault((tri, corner), []).append(t.pendant)
        triangles = [c.vertex_set for c in enumerate_induced_cycles(ico, 3)]
        assert len(completions) == 3 * len(triangles)
        assert all(len(us) == 1 for us in completions.values())


def test_c10_survey_partition(tmp_path):
    with criterion(10, "survey of connected graphs of order <= 7: one outcome each, deterministic"):
        start = time.perf_counter()
        src = DATA / "connected_le7.g6"
        outs = []
        for jobs in (1, 4):
            out = tmp_path / f"jobs{jobs}.jsonl"
            assert cli_main(["survey", "--in", str(src), "--out", str(out), "--jobs", str(jobs)]) == 0
            outs.append([json.loads(line) for line in out.read_text().splitlines()])
        for rows in outs:
            for r in rows:
                r.pop("wall_time_ms")
        assert outs[0] == outs[1]
        rows = outs[0]
        graphs = load_corpus("connected_le7.g6")
        assert len(rows) == len(graphs) == 996
        outcomes = {"Vanishing", "EventuallyPeriodic", "ExpandingSuspected"}
        for r, g in zip(rows, graphs):
            assert r["outcome"] in outcomes
            assert "error" not in r
            assert ("vanish_step" in r) == (r["outcome"] == "Vanishing")
            assert ("period" in r) == (r["outcome"] == "EventuallyPeriodic")
            if r["outcome"] == "EventuallyPeriodic":
                t = iterate(g)
                m, p = r["preperiod"], r["period"]
                assert is_isomorphic(t.iterates[m], t.iterates[m + p])
                assert r["periodic_verified"]
        assert time.perf_counter() - start < 300


def test_c11_graph6_round_trip():
    with criterion(11, "graph6 round trip on 1000 random graphs and the zoo"):
        rng = random.Random(11)
        graphs = [random_graph(rng, rng.randint(0, 50), rng.random()) for _ in range(1000)]
        graphs += [zoo.from_name(n) for n in ("dodecahedron", "icosahedron", "petersen", "tadpole31",
                                              "I1-paper", "empty", "K1")]
        graphs += [zoo.hatted_icosahedron(h) for h in (1, 2, 3)]
        graphs += [zoo.cycle(5), zoo.path(7), zoo.complete(9)]
        for g in graphs:
            data = write_graph6(g)
            back = parse_graph6(data)
            assert back.order == g.order
            assert list(back.edges()) == list(g.edges())
            assert write_graph6(back) == data


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
