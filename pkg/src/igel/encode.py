"""Ego-network structural encodings.

A vertex v is encoded by the multiset of (distance, degree) pairs over
its depth-alpha ego-network: for every vertex u within alpha hops of v,
the pair holds the hop distance from v and the degree of u inside the
induced ego-network. The whole multiset comes out of a single BFS pass
that counts, per visited vertex, only edges whose endpoints both lie
within alpha hops. Edges between two vertices both at distance exactly
alpha are part of the induced subgraph and are counted.

Graph-level encodings are canonically sorted multisets of the vertex
encodings, with a byte-stable serialization for hashing and equality.
"""

from __future__ import annotations

import hashlib
import struct
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError


def _check_alpha(alpha: int) -> None:
    # Depth 0 is rejected: the root would have to carry its global degree
    # while its induced ego-degree is 0, so no single degree semantics fits.
    if not isinstance(alpha, int) or isinstance(alpha, bool) or alpha < 1:
        raise ValueError(f"alpha must be an integer >= 1, got {alpha!r}")


def _ego_distances(adj, root: int, alpha: int) -> dict[int, int]:
    """BFS distances from root, restricted to vertices within alpha hops."""
    dist = {root: 0}
    order = [root]
    head = 0
    while head < len(order):
        u = order[head]
        head += 1
        du = dist[u]
        if du == alpha:
            break  # BFS order: everything after this is at distance >= alpha
        for w in adj[u]:
            if w not in dist:
                dist[w] = du + 1
                order.append(w)
    return dist


def _ego_pairs(adj, root: int, alpha: int) -> Counter:
    """Single-pass BFS producing the (distance, ego-degree) multiset.

    Only vertices within alpha hops ever enter `dist`, so any seen
    neighbor is inside the ego-network and counts toward the degree.
    """
    dist = {root: 0}
    order = [root]
    head = 0
    pairs: Counter = Counter()
    while head < len(order):
        u = order[head]
        head += 1
        du = dist[u]
        expand = du < alpha
        deg = 0
        for w in adj[u]:
            if w in dist:
                deg += 1
            elif expand:
                dist[w] = du + 1
                order.append(w)
                deg += 1
        pairs[(du, deg)] += 1
    return pairs


@dataclass(frozen=True, slots=True)
class VertexEncoding:
    """Multiset of (distance, ego-degree) pairs with counts, plus the
    encoding depth used. Entries are sorted (distance, degree, count)
    triples, one per distinct pair."""

    alpha: int
    entries: tuple[tuple[int, int, int], ...]

    @classmethod
    def from_counts(cls, alpha: int, counts: Counter) -> "VertexEncoding":
        entries = tuple(
            (lam, deg, counts[(lam, deg)]) for lam, deg in sorted(counts)
        )
        return cls(alpha=alpha, entries=entries)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(lam, deg): count for lam, deg, count in self.entries}

    def total(self) -> int:
        """Number of vertices in the ego-network (root included)."""
        return sum(count for _, _, count in self.entries)

    def degree_sum(self) -> int:
        """Sum of degree * count; equals twice the ego-network edge count."""
        return sum(deg * count for _, deg, count in self.entries)

    def layer_sizes(self) -> dict[int, int]:
        """Vertex count per distance layer."""
        sizes: dict[int, int] = {}
        for lam, _, count in self.entries:
            sizes[lam] = sizes.get(lam, 0) + count
        return sizes

    def to_bytes(self) -> bytes:
        head = struct.pack("<Q", len(self.entries))
        return head + b"".join(struct.pack("<3Q", *e) for e in self.entries)


@dataclass(frozen=True, slots=True)
class SparseVector:
    """Sparse feature vector with dimension (alpha+1)*(d_cap+1); entry
    index for a (distance, degree) pair is distance*(d_cap+1) + degree,
    with degrees above d_cap capped to d_cap."""

    dim: int
    d_cap: int
    entries: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def to_dense(self) -> list[int]:
        out = [0] * self.dim
        for idx, val in self.entries:
            out[idx] = val
        return out


@dataclass(frozen=True, slots=True)
class GraphEncoding:
    """Canonical multiset of vertex encodings: vertices are stored sorted,
    so any relabeling of the source graph produces an equal object and
    byte-identical serialization."""

    alpha: int
    vertices: tuple

    @classmethod
    def from_vertex_encodings(cls, alpha: int, encodings) -> "GraphEncoding":
        ordered = tuple(sorted(encodings, key=lambda e: e.entries))
        return cls(alpha=alpha, vertices=ordered)

    def to_bytes(self) -> bytes:
        head = struct.pack("<QQ", self.alpha, len(self.vertices))
        return head + b"".join(enc.to_bytes() for enc in self.vertices)

    def hash_hex(self) -> str:
        return hashlib.blake2b(self.to_bytes(), digest_size=16).hexdigest()

    def aggregate_counts(self) -> Counter:
        """Entry counts summed over all vertices; useful for witnesses."""
        agg: Counter = Counter()
        for enc in self.vertices:
            for entry in enc.entries:
                agg[entry[:-1]] += entry[-1]
        return agg


@dataclass(frozen=True, slots=True)
class ConcatGraphEncoding:
    """Tuple of graph encodings at several depths; equal iff every
    component is equal."""

    parts: tuple[GraphEncoding, ...]

    def alphas(self) -> tuple[int, ...]:
        return tuple(p.alpha for p in self.parts)

    def to_bytes(self) -> bytes:
        head = struct.pack("<Q", len(self.parts))
        blobs = []
        for p in self.parts:
            blob = p.to_bytes()
            blobs.append(struct.pack("<Q", len(blob)) + blob)
        return head + b"".join(blobs)

    def hash_hex(self) -> str:
        return hashlib.blake2b(self.to_bytes(), digest_size=16).hexdigest()


def encode_vertex(graph: Graph, v: int, alpha: int) -> VertexEncoding:
    """Encode one vertex over its depth-alpha ego-network."""
    _check_alpha(alpha)
    graph._check_vertex(v)
    return VertexEncoding.from_counts(alpha, _ego_pairs(graph.adj, v, alpha))


def _encode_chunk(graph: Graph, alpha: int, start: int, stop: int):
    adj = graph.adj
    return [VertexEncoding.from_counts(alpha, _ego_pairs(adj, v, alpha)) for v in range(start, stop)]


def encode_all(graph: Graph, alpha: int, workers: int = 1) -> list[VertexEncoding]:
    """Encode every vertex; element v corresponds to vertex v.

    Encodings are pure per-vertex functions of the immutable graph, so
    with workers > 1 vertex ranges are farmed out to worker processes and
    reassembled by vertex id; results are identical to the serial run.
    """
    _check_alpha(alpha)
    if workers <= 1 or graph.n < 2 * workers:
        return _encode_chunk(graph, alpha, 0, graph.n)
    bounds = [graph.n * i // workers for i in range(workers + 1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_encode_chunk, graph, alpha, bounds[i], bounds[i + 1])
            for i in range(workers)
        ]
        out: list[VertexEncoding] = []
        for fut in futures:
            out.extend(fut.result())
    return out


def encode_graph(graph: Graph, alpha: int, workers: int = 1) -> GraphEncoding:
    """Canonical graph-level encoding: sorted multiset of vertex encodings."""
    return GraphEncoding.from_vertex_encodings(alpha, encode_all(graph, alpha, workers))


def encode_graph_concat(graph: Graph, alphas: Sequence[int], workers: int = 1) -> ConcatGraphEncoding:
    """Concatenation of graph encodings at several depths."""
    if not alphas:
        raise ValueError("alphas must be non-empty")
    return ConcatGraphEncoding(
        parts=tuple(encode_graph(graph, a, workers) for a in alphas)
    )


def igel_equivalent(g1: Graph, g2: Graph, alpha: int) -> bool:
    """True iff the canonical graph encodings agree at this depth."""
    return encode_graph(g1, alpha) == encode_graph(g2, alpha)


def vectorize(enc: VertexEncoding, d_cap: int) -> SparseVector:
    """Sparse vector form of a vertex encoding with degree capping.

    Each (distance, degree, count) contributes count at index
    distance*(d_cap+1) + min(degree, d_cap); entries that collide after
    capping are summed.
    """
    if d_cap < 1:
        raise ValueError(f"d_cap must be >= 1, got {d_cap}")
    agg: Counter = Counter()
    for lam, deg, count in enc.entries:
        agg[lam * (d_cap + 1) + min(deg, d_cap)] += count
    return SparseVector(
        dim=(enc.alpha + 1) * (d_cap + 1),
        d_cap=d_cap,
        entries=tuple(sorted(agg.items())),
    )
