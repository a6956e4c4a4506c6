#!/usr/bin/env python3
"""Regenerate tests/data/sr25.g6: the 15 pairwise non-isomorphic
strongly regular graphs with parameters (25, 12, 5, 6), one graph6
record per line.

Construction: seed with the Paley graph over GF(25) and with the
Latin-square graphs of every reduced order-5 Latin square, then close
the set under complementation and Godsil-McKay switching (switching
sets of size 4, then 6 if needed). A graph cospectral with a connected
strongly regular graph is again strongly regular with the same
parameters, so every switch lands in the same family; the script checks
the parameters of every candidate anyway.

Certification: the known classification says there are exactly 15 such
graphs. The script requires (a) every output has parameters
(25, 12, 5, 6) and (b) all 15 carry pairwise distinct isomorphism
invariants (per-vertex clique profiles, then subset-seeded refinement
fingerprints), which proves pairwise non-isomorphism without any
canonical-labeling oracle.

Run from the repository root:  python3 scripts/make_sr25.py
"""

from __future__ import annotations

import sys
import time
from itertools import combinations, permutations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from _canonical import clique_fingerprint, subset_seeded_fingerprint

from igel import Graph, srg_params, write_graph6

TARGET = (25, 12, 5, 6)
TARGET_COUNT = 15
OUT_PATH = Path(__file__).resolve().parent.parent / "tests" / "data" / "sr25.g6"


# ---------------------------------------------------------------------------
# Seed constructions
# ---------------------------------------------------------------------------


def paley_25() -> Graph:
    """Paley graph over GF(25) = F5[x]/(x^2 - 2); u ~ v iff u - v is a
    nonzero square."""
    elements = [(a, b) for a in range(5) for b in range(5)]
    index = {e: i for i, e in enumerate(elements)}

    def mul(x, y):
        a1, b1 = x
        a2, b2 = y
        return ((a1 * a2 + 2 * b1 * b2) % 5, (a1 * b2 + a2 * b1) % 5)

    squares = {mul(e, e) for e in elements if e != (0, 0)}
    assert len(squares) == 12
    edges = []
    for x, y in combinations(elements, 2):
        diff = ((x[0] - y[0]) % 5, (x[1] - y[1]) % 5)
        if diff in squares:
            edges.append((index[x], index[y]))
    return Graph.from_edges(25, edges)


def reduced_latin_squares(order: int) -> list[list[list[int]]]:
    """All Latin squares with first row and first column 0..order-1."""
    first_row = list(range(order))
    squares: list[list[list[int]]] = []

    def fill(rows: list[list[int]]) -> None:
        r = len(rows)
        if r == order:
            squares.append([list(row) for row in rows])
            return
        used_in_col = [set(row[c] for row in rows) for c in range(order)]
        for perm in permutations(range(order)):
            if perm[0] != r:
                continue
            if any(perm[c] in used_in_col[c] for c in range(order)):
                continue
            rows.append(list(perm))
            fill(rows)
            rows.pop()

    fill([first_row])
    return squares


def latin_square_graph(square: list[list[int]]) -> Graph:
    """Cells of the square, adjacent iff same row, column, or symbol."""
    k = len(square)
    cells = [(r, c) for r in range(k) for c in range(k)]
    edges = []
    for (r1, c1), (r2, c2) in combinations(cells, 2):
        if r1 == r2 or c1 == c2 or square[r1][c1] == square[r2][c2]:
            edges.append((r1 * k + c1, r2 * k + c2))
    return Graph.from_edges(k * k, edges)


# ---------------------------------------------------------------------------
# Godsil-McKay switching
# ---------------------------------------------------------------------------


def gm_switches(graph: Graph, set_size: int) -> list[Graph]:
    """All valid one-block GM switches of the given switching-set size.

    A set C qualifies when the subgraph induced on C is regular and every
    outside vertex has 0, |C|/2, or |C| neighbors in C; switching
    complements the C-edges of each outside vertex with exactly |C|/2.
    """
    n = graph.n
    nbr = [set(graph.adj[v]) for v in range(n)]
    half = set_size // 2
    out: list[Graph] = []
    base_edges = set(graph.edges())
    for C in combinations(range(n), set_size):
        cset = set(C)
        inner = [len(nbr[c] & cset) for c in C]
        if len(set(inner)) != 1:
            continue
        flip_vertices = []
        ok = True
        for v in range(n):
            if v in cset:
                continue
            k = len(nbr[v] & cset)
            if k == half:
                flip_vertices.append(v)
            elif k != 0 and k != set_size:
                ok = False
                break
        if not ok or not flip_vertices:
            continue
        edges = set(base_edges)
        for v in flip_vertices:
            for c in C:
                key = (v, c) if v < c else (c, v)
                if key in edges:
                    edges.remove(key)
                else:
                    edges.add(key)
        out.append(Graph.from_edges(n, edges))
    return out


def complement(graph: Graph) -> Graph:
    present = set(graph.edges())
    edges = [e for e in combinations(range(graph.n), 2) if e not in present]
    return Graph.from_edges(graph.n, edges)


def descendants(graph: Graph) -> list[Graph]:
    """All descendants of the two-graph extension of `graph`.

    Appending an isolated vertex and taking the Seidel switching class
    gives a two-graph on n+1 points, regular because the input is a
    conference graph. Its descendant at point p (switch p isolated, then
    delete p) is again strongly regular with the same parameters; ranging
    over all points walks the whole switching class.
    """
    n = graph.n
    nbr = [set(graph.adj[v]) for v in range(n)]
    out: list[Graph] = []
    inf = n  # the appended isolated vertex
    for p in range(n):
        switch = nbr[p]  # isolates p in the extended graph
        nodes = [v for v in range(n + 1) if v != p]
        remap = {v: i for i, v in enumerate(nodes)}
        edges = []
        for u, v in combinations(nodes, 2):
            orig = v in nbr[u] if u != inf and v != inf else False
            if orig != ((u in switch) != (v in switch)):
                edges.append((remap[u], remap[v]))
        out.append(Graph.from_edges(n, edges))
    return out


# ---------------------------------------------------------------------------
# Search
# ---------------------------------------------------------------------------


def main() -> None:
    t0 = time.time()
    seeds: list[Graph] = [paley_25()]
    for square in reduced_latin_squares(5):
        seeds.append(latin_square_graph(square))
    print(f"{len(seeds)} seed graphs  [{time.time() - t0:.1f}s]")

    classes: dict[tuple, Graph] = {}

    def consider(g: Graph) -> bool:
        params = srg_params(g)
        assert params is not None and params.as_tuple() == TARGET, params
        fp = clique_fingerprint(g.n, g.adj)
        if fp in classes:
            return False
        classes[fp] = g
        return True

    for g in seeds:
        consider(g)
    print(f"{len(classes)} classes from seeds  [{time.time() - t0:.1f}s]")

    # Closure: cheap moves (two-graph descendants, complement) on every
    # class; Godsil-McKay switching sets, escalating in size only when
    # the search stalls below the known count.
    gm_sizes = [4, 6, 8]
    max_size_used = 0
    while True:
        frontier = list(classes.values())
        progress = False
        while frontier:
            g = frontier.pop()
            candidates = descendants(g) + [complement(g)]
            for size in gm_sizes[: max_size_used + 1]:
                candidates.extend(gm_switches(g, size))
            for h in candidates:
                if consider(h):
                    frontier.append(h)
                    progress = True
                    print(f"  -> {len(classes)} classes  [{time.time() - t0:.1f}s]")
        if len(classes) >= TARGET_COUNT:
            break
        if max_size_used + 1 < len(gm_sizes):
            max_size_used += 1
            print(
                f"stalled at {len(classes)}; enabling switching sets of size "
                f"{gm_sizes[max_size_used]}"
            )
        elif not progress:
            break

    assert len(classes) >= TARGET_COUNT, (
        f"only {len(classes)} classes found; enlarge the switching search"
    )
    assert len(classes) == TARGET_COUNT, (
        f"{len(classes)} distinct clique fingerprints exceeds the known "
        f"classification; fingerprint or construction bug"
    )

    graphs = list(classes.values())

    # Independent certification: the pair (clique profile, subset-seeded
    # refinement fingerprint) must be pairwise distinct; each component is
    # an isomorphism invariant, so distinct pairs prove non-isomorphism.
    strong = []
    for g in graphs:
        strong.append(subset_seeded_fingerprint(g.n, g.adj, 3))
        print(f"  strong fingerprint {len(strong)}/15  [{time.time() - t0:.1f}s]")
    combined = [
        (fp, clique_fingerprint(g.n, g.adj)) for fp, g in zip(strong, graphs)
    ]
    assert len(set(combined)) == TARGET_COUNT, "certification invariants collide"

    ordered = sorted(zip(strong, graphs))
    records = [write_graph6(g) for _, g in ordered]
    OUT_PATH.parent.mkdir(parents=True, exist_ok=True)
    OUT_PATH.write_text("".join(r + "\n" for r in records))
    print(f"wrote {len(records)} graphs to {OUT_PATH}  [{time.time() - t0:.1f}s]")


if __name__ == "__main__":
    main()
