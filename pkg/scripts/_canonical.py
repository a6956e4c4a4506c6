"""Canonical forms and isomorphism-invariant fingerprints used by the
dataset-regeneration scripts (not part of the installed package).

canonical_key works for small graphs (it enumerates orderings within the
stable refinement cells, so highly symmetric graphs cost up to n!); the
seeded fingerprints scale to medium graphs where full canonicalization
would be too slow.
"""

from __future__ import annotations

import hashlib
import struct
from itertools import combinations, permutations, product


def refine_canonical(n: int, adj: list[tuple[int, ...]], seed: tuple[int, ...] | None = None):
    """Color refinement with canonical ids: each round relabels by the
    sorted distinct (own color, neighbor multiset) keys, so the final
    colors do not depend on the input vertex order."""
    if seed is None:
        keys = [len(adj[v]) for v in range(n)]
    else:
        keys = [(seed[v], len(adj[v])) for v in range(n)]
    rank = {k: i for i, k in enumerate(sorted(set(keys)))}
    colors = [rank[k] for k in keys]
    num = len(rank)
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)
        ]
        rank = {k: i for i, k in enumerate(sorted(set(keys)))}
        colors = [rank[k] for k in keys]
        if len(rank) == num:
            return colors, num
        num = len(rank)


def _order_bits(order: list[int], masks: list[int]) -> int:
    bits = 0
    for i in range(len(order)):
        mi = masks[order[i]]
        for j in range(i + 1, len(order)):
            bits = (bits << 1) | ((mi >> order[j]) & 1)
    return bits


def canonical_key(n: int, adj: list[tuple[int, ...]]) -> tuple[int, int]:
    """Exact canonical form (n, bits): bits is the maximum upper-triangle
    adjacency bitstring over all orderings compatible with the stable
    refinement coloring. Equal keys <=> isomorphic graphs."""
    if n == 0:
        return (0, 0)
    colors, _ = refine_canonical(n, adj)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    ordered_cells = [cells[c] for c in sorted(cells)]
    masks = [0] * n
    for v in range(n):
        for w in adj[v]:
            masks[v] |= 1 << w
    best = -1
    for perms in product(*(permutations(cell) for cell in ordered_cells)):
        order = [v for cell in perms for v in cell]
        bits = _order_bits(order, masks)
        if bits > best:
            best = bits
    return (n, best)


def key_to_edges(key: tuple[int, int]) -> tuple[int, list[tuple[int, int]]]:
    """Invert canonical_key's bit layout back into an edge list."""
    n, bits = key
    edges = []
    pos = n * (n - 1) // 2
    for i in range(n):
        for j in range(i + 1, n):
            pos -= 1
            if (bits >> pos) & 1:
                edges.append((i, j))
    return n, edges


def subset_seeded_fingerprint(
    n: int, adj: list[tuple[int, ...]], subset_size: int
) -> str:
    """Isomorphism-invariant fingerprint: refine with every size-k subset
    marked by a shared fresh color, collect the canonical stable
    histograms, and hash the sorted multiset. Distinct fingerprints prove
    non-isomorphism; equal fingerprints prove nothing."""
    profiles = []
    for subset in combinations(range(n), subset_size):
        seed = [0] * n
        for v in subset:
            seed[v] = 1
        colors, _ = refine_canonical(n, adj, seed=tuple(seed))
        hist: dict[int, int] = {}
        for c in colors:
            hist[c] = hist.get(c, 0) + 1
        profiles.append(tuple(sorted(hist.items())))
    profiles.sort()
    h = hashlib.blake2b(digest_size=16)
    for prof in profiles:
        h.update(struct.pack("<Q", len(prof)))
        for c, m in prof:
            h.update(struct.pack("<QQ", c, m))
    return h.hexdigest()


def clique_fingerprint(n: int, adj: list[tuple[int, ...]]) -> tuple:
    """Cheap invariant: per-vertex 4-clique counts (sorted) plus the
    global 4- and 5-clique totals."""
    nbr = [set(a) for a in adj]
    k4_per_vertex = [0] * n
    k4_total = 0
    k5_total = 0
    for u in range(n):
        higher = [w for w in adj[u] if w > u]
        for i, v in enumerate(higher):
            common_uv = nbr[u] & nbr[v]
            for w in higher[i + 1 :]:
                if w not in common_uv:
                    continue
                common3 = common_uv & nbr[w]
                for x in common3:
                    if x > w:
                        k4_total += 1
                        for y in (u, v, w, x):
                            k4_per_vertex[y] += 1
                        for y in common3 & nbr[x]:
                            if y > x:
                                k5_total += 1
    return (k4_total, k5_total, tuple(sorted(k4_per_vertex)))
