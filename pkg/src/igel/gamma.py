"""Layer-degree extension of the ego-network encoding.

Plain encodings record one degree per ego-network vertex and cannot see
how edges split across distance layers. Here each vertex u in the
ego-network of root v is recorded as a (distance, d0, d1) triple, where
d0 counts u's edges to vertices at the same distance from v and d1
counts u's edges to vertices one hop further out (both restricted to the
ego-network). Edges back toward the root layer are not recorded. At the
outermost layer d1 is 0 by construction, and the root is always
(0, 0, degree).
"""

from __future__ import annotations

import struct
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .encode import GraphEncoding, SparseVector, _check_alpha, _ego_distances
from .graph import Graph, GraphError


@dataclass(frozen=True, slots=True)
class GammaVertexEncoding:
    """Multiset of (distance, same-layer degree, outward-layer degree)
    triples with counts; entries are sorted 4-tuples."""

    alpha: int
    entries: tuple[tuple[int, int, int, int], ...]

    @classmethod
    def from_counts(cls, alpha: int, counts: Counter) -> "GammaVertexEncoding":
        entries = tuple((*key, counts[key]) for key in sorted(counts))
        return cls(alpha=alpha, entries=entries)

    def as_dict(self) -> dict[tuple[int, int, int], int]:
        return {(lam, d0, d1): count for lam, d0, d1, count in self.entries}

    def total(self) -> int:
        return sum(count for *_, count in self.entries)

    def to_bytes(self) -> bytes:
        head = struct.pack("<Q", len(self.entries))
        return head + b"".join(struct.pack("<4Q", *e) for e in self.entries)


def rel_degree(graph: Graph, u: int, v: int, p: int, alpha: int) -> int:
    """Number of edges from u, inside the depth-alpha ego-network of v,
    to vertices whose distance from v exceeds u's by p (p in {0, 1})."""
    _check_alpha(alpha)
    if p not in (0, 1):
        raise ValueError(f"relative distance must be 0 or 1, got {p}")
    graph._check_vertex(u)
    graph._check_vertex(v)
    dist = _ego_distances(graph.adj, v, alpha)
    if u not in dist:
        raise GraphError(f"vertex {u} outside the depth-{alpha} ego-network of {v}")
    target = dist[u] + p
    return sum(1 for w in graph.adj[u] if dist.get(w) == target)


def _gamma_counts(adj, root: int, alpha: int) -> Counter:
    dist = _ego_distances(adj, root, alpha)
    counts: Counter = Counter()
    for u, du in dist.items():
        d0 = 0
        d1 = 0
        for w in adj[u]:
            dw = dist.get(w)
            if dw == du:
                d0 += 1
            elif dw == du + 1:
                d1 += 1
        counts[(du, d0, d1)] += 1
    return counts


def gamma_encode_vertex(graph: Graph, v: int, alpha: int) -> GammaVertexEncoding:
    """Encode one vertex with per-layer degree triples."""
    _check_alpha(alpha)
    graph._check_vertex(v)
    return GammaVertexEncoding.from_counts(alpha, _gamma_counts(graph.adj, v, alpha))


def _gamma_chunk(graph: Graph, alpha: int, start: int, stop: int):
    adj = graph.adj
    return [
        GammaVertexEncoding.from_counts(alpha, _gamma_counts(adj, v, alpha))
        for v in range(start, stop)
    ]


def gamma_encode_all(graph: Graph, alpha: int, workers: int = 1) -> list[GammaVertexEncoding]:
    """Encode every vertex; element v corresponds to vertex v."""
    _check_alpha(alpha)
    if workers <= 1 or graph.n < 2 * workers:
        return _gamma_chunk(graph, alpha, 0, graph.n)
    bounds = [graph.n * i // workers for i in range(workers + 1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_gamma_chunk, graph, alpha, bounds[i], bounds[i + 1])
            for i in range(workers)
        ]
        out: list[GammaVertexEncoding] = []
        for fut in futures:
            out.extend(fut.result())
    return out


def gamma_encode_graph(graph: Graph, alpha: int, workers: int = 1) -> GraphEncoding:
    """Canonical sorted multiset of the per-vertex triples encodings."""
    return GraphEncoding.from_vertex_encodings(alpha, gamma_encode_all(graph, alpha, workers))


def gamma_equivalent(g1: Graph, g2: Graph, alpha: int) -> bool:
    """True iff the layer-degree graph encodings agree at this depth."""
    return gamma_encode_graph(g1, alpha) == gamma_encode_graph(g2, alpha)


def vectorize_gamma(enc: GammaVertexEncoding, d_cap: int) -> SparseVector:
    """Sparse vector form of a triples encoding: index is
    (distance*(d_cap+1) + min(d0, d_cap))*(d_cap+1) + min(d1, d_cap),
    capping d0 and d1 independently."""
    if d_cap < 1:
        raise ValueError(f"d_cap must be >= 1, got {d_cap}")
    width = d_cap + 1
    agg: Counter = Counter()
    for lam, d0, d1, count in enc.entries:
        agg[(lam * width + min(d0, d_cap)) * width + min(d1, d_cap)] += count
    return SparseVector(
        dim=(enc.alpha + 1) * width * width,
        d_cap=d_cap,
        entries=tuple(sorted(agg.items())),
    )
