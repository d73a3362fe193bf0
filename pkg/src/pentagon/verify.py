"""Golden checks for every published fact about the pentagon operator that
this package can compute. ``run_all`` drives the ``verify-paper`` command."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import zoo
from .canon import is_isomorphic, is_vertex_transitive
from .cycles import InducedCycle, canonical_orientation, enumerate_induced_cycles
from .dynamics import EventuallyPeriodic, Vanishing, classify, iterate
from .graph import Graph, copolar_pairs, distance, induced_subgraph
from .operator import cycle_operator, edge_pentagon_count
from .structure import find_icosahedron, find_induced_copy, tadpole_hats


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


_CHECKS: list[tuple[str, Callable[[], tuple[bool, str]]]] = []


def check(name):
    def wrap(fn):
        _CHECKS.append((name, fn))
        return fn
    return wrap


def _walk(g: Graph, names) -> InducedCycle:
    return InducedCycle(canonical_orientation([g.index_of(x) for x in names]))


def _i1_pieces():
    i1 = zoo.i1_paper()
    res = cycle_operator(i1)
    p = res.find(["v", "4", "5", "6", "b"])
    q = res.find(["v", "3", "2", "7", "b"])
    return i1, res, p, q


@check("dodecahedron has exactly 12 induced pentagons")
def _():
    n = len(enumerate_induced_cycles(zoo.dodecahedron(), 5))
    return n == 12, f"count={n}"


@check("pentagons of the dodecahedron are its 12 faces")
def _():
    d = zoo.dodecahedron()
    got = {c.vertex_set for c in enumerate_induced_cycles(d, 5)}
    want = {frozenset(d.index_of(x) for x in face) for face in zoo.DODECAHEDRON_FACES}
    return got == want, f"{len(got & want)}/12 faces matched"


@check("C5(D) is isomorphic to the icosahedron")
def _():
    out = cycle_operator(zoo.dodecahedron()).output
    ok = is_isomorphic(out, zoo.icosahedron())
    return ok, f"order={out.order} size={out.size} degrees={sorted(set(out.degrees()))}"


@check("icosahedron has exactly 12 induced pentagons")
def _():
    n = len(enumerate_induced_cycles(zoo.icosahedron(), 5))
    return n == 12, f"count={n}"


@check("induced pentagons of I are exactly the neighborhoods N(x)")
def _():
    ico = zoo.icosahedron()
    pents = {c.vertex_set for c in enumerate_induced_cycles(ico, 5)}
    nbhd = {frozenset(ico.neighbors(x)) for x in ico.vertices()}
    each_c5 = all(
        is_isomorphic(induced_subgraph(ico, ico.neighbors(x)), zoo.cycle(5)) for x in ico.vertices()
    )
    return pents == nbhd and each_c5, f"neighborhood pentagons={len(pents & nbhd)}"


@check("C5(I) is isomorphic to I")
def _():
    out = cycle_operator(zoo.icosahedron()).output
    return is_isomorphic(out, zoo.icosahedron()), f"order={out.order} size={out.size}"


@check("dodecahedron is eventually pentagon-periodic (m=1, p=1)")
def _():
    o = classify(zoo.dodecahedron()).outcome
    ok = isinstance(o, EventuallyPeriodic) and (o.preperiod, o.period) == (1, 1)
    return ok, repr(o)


@check("icosahedron is pentagon-periodic (m=0, p=1)")
def _():
    o = classify(zoo.icosahedron()).outcome
    ok = isinstance(o, EventuallyPeriodic) and (o.preperiod, o.period) == (0, 1)
    return ok, repr(o)


@check("vanishing chain C5 -> K1 -> empty")
def _():
    t = iterate(zoo.cycle(5))
    o = classify(zoo.cycle(5)).outcome
    ok = t.orders == [5, 1, 0] and isinstance(o, Vanishing) and o.vanish_step == 2
    return ok, f"orders={t.orders}"


@check("a graph whose pentagon graph is C5 vanishes at step 3")
def _():
    g = _c5_preimage()
    t = iterate(g)
    first = cycle_operator(g).output
    ok = is_isomorphic(first, zoo.cycle(5)) and t.orders[1:] == [5, 1, 0]
    return ok, f"orders={t.orders}"


@check("icosahedron has 6 co-polar pairs {a,b},{1,9},{2,10},{3,6},{4,7},{5,8}")
def _():
    ico = zoo.icosahedron()
    got = {frozenset((ico.label(x), ico.label(y))) for x, y in copolar_pairs(ico)}
    want = {frozenset(p) for p in [("a", "b"), ("1", "9"), ("2", "10"), ("3", "6"), ("4", "7"), ("5", "8")]}
    dist_ok = all(distance(ico, x, y) == 3 for x, y in copolar_pairs(ico))
    return got == want and dist_ok, f"pairs={sorted(sorted(p) for p in got)}"


@check("icosahedron is vertex-transitive")
def _():
    return is_vertex_transitive(zoo.icosahedron()), "one orbit"


@check("each (triangle, corner) of I has a unique tadpole-completing neighbor")
def _():
    ico = zoo.icosahedron()
    tri = [c for c in enumerate_induced_cycles(ico, 3)]
    bad = 0
    for t in tri:
        for x in t.vertices:
            others = [y for y in t.vertices if y != x]
            us = [u for u in ico.neighbors(x) if u not in t.vertices
                  and not ico.has_edge(u, others[0]) and not ico.has_edge(u, others[1])]
            bad += len(us) != 1
    tads = zoo.enumerate_induced_tadpoles(ico)
    return bad == 0 and len(tads) == 60, f"triangles={len(tri)} tadpoles={len(tads)}"


@check("co-polar vertex of a tadpole's pendant is adjacent to the two far triangle corners")
def _():
    ico = zoo.icosahedron()
    mate = {}
    for x, y in copolar_pairs(ico):
        mate[x], mate[y] = y, x
    bad = 0
    for t in zoo.enumerate_induced_tadpoles(ico):
        u = t.pendant
        far = [y for y in t.triangle if not ico.has_edge(u, y)]
        bad += not all(ico.has_edge(mate[u], y) for y in far)
    return bad == 0, f"violations={bad}"


@check("hat v sits on the induced tadpole {3,4,9,b}")
def _():
    i1 = zoo.i1_paper()
    v = i1.index_of("v")
    names = sorted(i1.label(u) for u in i1.neighbors(v))
    return names == sorted(zoo.I1_PAPER_HAT), f"N(v)={names}"


@check("v lies in exactly two induced pentagons p=[v,4,5,6,b,v], q=[v,3,2,7,b,v]")
def _():
    i1 = zoo.i1_paper()
    v = i1.index_of("v")
    through = [c for c in enumerate_induced_cycles(i1, 5) if v in c.vertices]
    want = {_walk(i1, ["v", "4", "5", "6", "b"]), _walk(i1, ["v", "3", "2", "7", "b"])}
    return set(through) == want and len(through) == 2, ", ".join(c.bracket(i1) for c in through)


@check("p and q are adjacent in C5(I1) and [p,q] lies in exactly one induced pentagon")
def _():
    _, res, p, q = _i1_pieces()
    adj = res.output.has_edge(p, q)
    cnt = edge_pentagon_count(res, p, q) if adj else -1
    return adj and cnt == 1, f"adjacent={adj} pentagons through pq={cnt}"


@check("neighbors of p are p1..p4 and induce T(3,1)")
def _():
    i1, res, p, q = _i1_pieces()
    want = {_walk(i1, w) for w in (["1", "2", "3", "4", "5"], ["1", "2", "8", "b", "6"],
                                    ["4", "5", "6", "b", "9"], ["6", "7", "2", "a", "5"])}
    others = [u for u in res.output.neighbors(p) if u != q]
    got = {res.provenance[u] for u in others}
    tad = is_isomorphic(induced_subgraph(res.output, others), zoo.tadpole31())
    return got == want and tad, ", ".join(res.provenance[u].bracket(i1) for u in others)


@check("neighbors of q are q1..q4 and induce T(3,1)")
def _():
    i1, res, p, q = _i1_pieces()
    # the printed q4 repeats p4 with a typo in its closing vertex
    want = {_walk(i1, w) for w in (["1", "2", "3", "4", "5"], ["1", "7", "b", "10", "5"],
                                    ["2", "3", "9", "b", "7"], ["6", "7", "2", "a", "5"])}
    others = [u for u in res.output.neighbors(q) if u != p]
    got = {res.provenance[u] for u in others}
    tad = is_isomorphic(induced_subgraph(res.output, others), zoo.tadpole31())
    return got == want and tad, ", ".join(res.provenance[u].bracket(i1) for u in others)


@check("C5(I1) is an icosahedron with two adjacent tadpole hats p, q")
def _():
    _, res, p, q = _i1_pieces()
    out = res.output
    core = [u for u in out.vertices() if u not in (p, q)]
    ico_ok = is_isomorphic(induced_subgraph(out, core), zoo.icosahedron())
    hats = tadpole_hats(out, core)
    return ico_ok and sorted(hats) == sorted([p, q]), f"order={out.order} hats={len(hats)}"


@check("C5(I2) is an induced subgraph of C5^2(I1) and is I with 4 hats")
def _():
    _, res, p, q = _i1_pieces()
    out = res.output
    i2 = Graph(out.order, [e for e in out.edges() if set(e) != {p, q}])
    c_i2 = cycle_operator(i2).output
    c2 = cycle_operator(out).output
    embedded = find_induced_copy(c_i2, c2) is not None
    core = find_icosahedron(c_i2)
    h = len(tadpole_hats(c_i2, core)) if core is not None else None
    whole = core is not None and h == c_i2.order - 12
    return embedded and h == 4 and whole, f"|C5(I2)|={c_i2.order} |C5^2(I1)|={c2.order} hats={h}"


@check("|V(C5^k(I1))| >= 12 + 2^k for k = 1, 2, 3, strictly increasing")
def _():
    t = iterate(zoo.i1_paper(), max_steps=3, max_order=20000)
    o = t.orders
    ok = len(o) == 4 and all(o[k] >= 12 + 2 ** k for k in (1, 2, 3))
    ok = ok and all(a < b for a, b in zip(o, o[1:]))
    return ok, f"orders={o}"


@check("icosahedra with h = 1, 2, 3 hats grow for three steps")
def _():
    rows = []
    ok = True
    for h in (1, 2, 3):
        t = iterate(zoo.hatted_icosahedron(h), max_steps=3, max_order=20000)
        o = t.orders
        ok = ok and len(o) == 4 and all(a < b for a, b in zip(o, o[1:]))
        ok = ok and all(o[k] >= 12 + h * 2 ** k for k in range(4))
        rows.append(f"h={h}:{o}")
    return ok, " ".join(rows)


@check("trichotomy: zoo graphs receive exactly one outcome")
def _():
    names = ["empty", "K1", "cycle:5", "cycle:6", "complete:4", "complete:5", "petersen",
             "dodecahedron", "icosahedron", "I1-paper", "tadpole31"]
    seen = []
    for name in names:
        c = classify(zoo.from_name(name), max_steps=4, max_order=20000)
        seen.append(f"{name}={c.name}")
    return len(seen) == len(names), " ".join(seen)


def _c5_preimage() -> Graph:
    """Hub joined to every third vertex of a 15-cycle. Its only induced
    pentagons are hub-r-x-y-r'-hub for consecutive spokes r, r', and
    consecutive ones share a spoke, so its pentagon graph is C5."""
    ring = [(i, i % 15 + 1) for i in range(1, 16)]
    spokes = [(0, r) for r in (1, 4, 7, 10, 13)]
    return Graph(16, ring + spokes)


def run_all() -> list[CheckResult]:
    results = []
    for name, fn in _CHECKS:
        start = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(ok), detail, time.perf_counter() - start))
    return results
