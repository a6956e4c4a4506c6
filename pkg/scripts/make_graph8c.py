#!/usr/bin/env python3
"""Regenerate tests/data/graph8c.g6: every connected 8-vertex simple
graph, one graph6 record per line, exactly one representative per
isomorphism class.

Enumerates isomorphism classes by vertex augmentation: all classes on
k+1 vertices arise from a class on k vertices plus a new vertex joined
to some subset. Class counts at every level are asserted against the
published sequences (all graphs: 1, 2, 4, 11, 34, 156, 1044, 12346;
connected on 8 vertices: 11117), so a canonicalization bug cannot slip
through silently.

Run from the repository root:  python3 scripts/make_graph8c.py
"""

from __future__ import annotations

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from _canonical import canonical_key, key_to_edges

from igel import Graph, parse_graph6, write_graph6

# Numbers of isomorphism classes of simple graphs on 1..8 vertices,
# and of connected ones on 8 vertices.
ALL_GRAPH_COUNTS = [1, 2, 4, 11, 34, 156, 1044, 12346]
CONNECTED_8 = 11117

OUT_PATH = Path(__file__).resolve().parent.parent / "tests" / "data" / "graph8c.g6"


def augment(keys: set[tuple[int, int]], k: int) -> set[tuple[int, int]]:
    """All classes on k+1 vertices from the classes on k vertices."""
    out: set[tuple[int, int]] = set()
    for key in keys:
        n, edges = key_to_edges(key)
        base_adj: list[list[int]] = [[] for _ in range(n + 1)]
        for u, v in edges:
            base_adj[u].append(v)
            base_adj[v].append(u)
        for subset in range(1 << k):
            adj = [list(nbrs) for nbrs in base_adj]
            for w in range(k):
                if (subset >> w) & 1:
                    adj[w].append(n)
                    adj[n].append(w)
            out.add(canonical_key(n + 1, [tuple(a) for a in adj]))
    return out


def is_connected(n: int, edges: list[tuple[int, int]]) -> bool:
    if n <= 1:
        return True
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def spot_check(records: list[str]) -> None:
    """Independent sanity checks on the finished list."""
    import networkx as nx

    rng = random.Random(20240801)
    graphs = [parse_graph6(r) for r in records]
    # Round-trip through the package parser.
    for g, rec in zip(graphs, records):
        assert write_graph6(g) == rec
    # Random pairs must be non-isomorphic (VF2 is the independent oracle).
    for _ in range(100):
        i, j = rng.sample(range(len(graphs)), 2)
        g1 = nx.Graph(list(graphs[i].edges()))
        g1.add_nodes_from(range(8))
        g2 = nx.Graph(list(graphs[j].edges()))
        g2.add_nodes_from(range(8))
        assert not nx.is_isomorphic(g1, g2), (i, j)
    # Random relabelings must keep the canonical key fixed.
    for _ in range(50):
        g = graphs[rng.randrange(len(graphs))]
        perm = list(range(8))
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert canonical_key(8, h.adj) == canonical_key(8, g.adj)


def main() -> None:
    t0 = time.time()
    keys: set[tuple[int, int]] = {canonical_key(1, [()])}
    for k in range(1, 8):
        keys = augment(keys, k)
        expected = ALL_GRAPH_COUNTS[k]
        assert len(keys) == expected, f"level {k + 1}: {len(keys)} != {expected}"
        print(f"n={k + 1}: {len(keys)} classes  [{time.time() - t0:.1f}s]")

    connected = sorted(key for key in keys if is_connected(*key_to_edges(key)))
    assert len(connected) == CONNECTED_8, f"connected: {len(connected)} != {CONNECTED_8}"

    records = []
    for key in connected:
        n, edges = key_to_edges(key)
        records.append(write_graph6(Graph.from_edges(n, edges)))
    assert len(set(records)) == len(records)

    spot_check(records)

    OUT_PATH.parent.mkdir(parents=True, exist_ok=True)
    OUT_PATH.write_text("".join(r + "\n" for r in records))
    print(f"wrote {len(records)} graphs to {OUT_PATH}  [{time.time() - t0:.1f}s]")


if __name__ == "__main__":
    main()
