"""Regenerate the graph6 corpora under tests/data.

Orders 0..7 come from the networkx graph atlas. Order 8 is built by adding
one vertex to every order-7 graph in all possible ways and keeping one
representative per canonical certificate; the count is checked against the
known number of graphs on 8 vertices.
"""

import argparse
from pathlib import Path

import networkx as nx

from pentagon.canon import canonical_certificate
from pentagon.graph import Graph, is_connected
from pentagon.io import write_graph6_file

# unlabeled graphs on n vertices, OEIS A000088
GRAPH_COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044, 12346]


def atlas_graphs():
    for nxg in nx.graph_atlas_g():
        yield Graph(nxg.number_of_nodes(), nxg.edges())


def extend_by_one(graphs):
    seen = {}
    for g in graphs:
        n = g.order
        base = list(g.edges())
        for mask in range(1 << n):
            h = Graph(n + 1, base + [(i, n) for i in range(n) if mask >> i & 1])
            cert = canonical_certificate(h)
            if cert.canonical_edges not in seen:
                seen[cert.canonical_edges] = h
    return list(seen.values())


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parents[1] / "tests" / "data"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    small = list(atlas_graphs())
    for n in range(8):
        got = sum(g.order == n for g in small)
        assert got == GRAPH_COUNTS[n], (n, got)
    write_graph6_file(out / "all_le7.g6", small)
    connected = [g for g in small if g.order >= 1 and is_connected(g)]
    write_graph6_file(out / "connected_le7.g6", connected)

    eight = extend_by_one([g for g in small if g.order == 7])
    assert len(eight) == GRAPH_COUNTS[8], len(eight)
    write_graph6_file(out / "all_8.g6", eight)
    print(f"all_le7: {len(small)}  connected_le7: {len(connected)}  all_8: {len(eight)}")


if __name__ == "__main__":
    main()
