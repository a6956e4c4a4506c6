"""Immutable simple undirected graphs, edge-list and graph6 ingestion.

Vertex ids are dense integers 0..n-1. Adjacency is stored as per-vertex
sorted tuples, which makes traversal order deterministic and the whole
structure safe to share across threads and processes.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph data (self-loops, bad vertex ids, broken invariants)."""


class GraphFormatError(GraphError):
    """Malformed input text (edge list or graph6). Carries a line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph: no self-loops, no duplicate edges.

    `adj[v]` is the sorted tuple of neighbors of v; `m` counts each
    undirected edge once, so sum(len(adj[v])) == 2*m.
    """

    n: int
    m: int
    adj: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph on vertices 0..n-1; duplicate edges collapse.

        Raises GraphError on self-loops or out-of-range endpoints.
        """
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            seen.add((u, v) if u < v else (v, u))
        lists: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            lists[u].append(v)
            lists[v].append(u)
        return cls(n=n, m=len(seen), adj=tuple(tuple(sorted(l)) for l in lists))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adj[v]

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        nbrs = self.adj[u]
        lo, hi = 0, len(nbrs)
        while lo < hi:  # binary search, neighbor tuples are sorted
            mid = (lo + hi) // 2
            if nbrs[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(nbrs) and nbrs[lo] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each undirected edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def bfs_distances(self, source: int) -> dict[int, int]:
        """Hop distances from `source` to every reachable vertex."""
        self._check_vertex(source)
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            du = dist[u]
            for w in self.adj[u]:
                if w not in dist:
                    dist[w] = du + 1
                    queue.append(w)
        return dist

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return len(self.bfs_distances(0)) == self.n

    def diameter(self) -> int | float:
        """Exact diameter via all-pairs BFS; math.inf when disconnected."""
        if self.n <= 1:
            return 0
        best = 0
        for v in range(self.n):
            dist = self.bfs_distances(v)
            if len(dist) < self.n:
                return math.inf
            best = max(best, max(dist.values()))
        return best

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Apply a permutation: vertex v of self becomes perm[v] of the result."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel requires a permutation of 0..n-1")
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def validate(self) -> None:
        """Check structural invariants; raises GraphError on violation."""
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        total = 0
        for v, nbrs in enumerate(self.adj):
            total += len(nbrs)
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"neighbors of {v} not sorted and distinct")
            for w in nbrs:
                if w == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if not 0 <= w < self.n:
                    raise GraphError(f"neighbor {w} of {v} out of range")
                if v not in self.adj[w]:
                    raise GraphError(f"edge ({v}, {w}) not symmetric")
        if total != 2 * self.m:
            raise GraphError("degree sum does not equal 2m")

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")


@dataclass(frozen=True, slots=True)
class GraphCollection:
    """Ordered list of graphs with optional unique labels and a provenance string."""

    graphs: tuple[Graph, ...]
    labels: tuple[str, ...] | None = None
    source: str = ""

    def __post_init__(self) -> None:
        if self.labels is not None:
            if len(self.labels) != len(self.graphs):
                raise GraphError("labels must match graph count")
            if len(set(self.labels)) != len(self.labels):
                raise GraphError("labels must be unique")

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.graphs)

    def __getitem__(self, i: int) -> Graph:
        return self.graphs[i]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)


# ---------------------------------------------------------------------------
# Edge-list format: one "u v" pair per line, '#' starts a comment,
# blank lines skipped. Sparse ids are re-indexed to dense 0..n-1.
# ---------------------------------------------------------------------------


def parse_edge_list_mapped(
    text: str, *, zero_indexed: bool = True
) -> tuple[Graph, tuple[int, ...]]:
    """Parse an edge list; also return the original id of each dense vertex.

    Returns (graph, ids) where ids[v] is the id vertex v carried in the
    input. Ids are re-indexed in sorted order, so the mapping is
    deterministic.
    """
    lowest = 0 if zero_indexed else 1
    raw_edges: list[tuple[int, int]] = []
    ids: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(
                f"expected two integer tokens, got {len(tokens)}", line=lineno
            )
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"non-integer token in {line!r}", line=lineno) from None
        if u < lowest or v < lowest:
            kind = "zero" if zero_indexed else "one"
            raise GraphFormatError(
                f"vertex id below {lowest} in {kind}-indexed input", line=lineno
            )
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", line=lineno)
        raw_edges.append((u, v))
        ids.add(u)
        ids.add(v)
    order = sorted(ids)
    remap = {orig: dense for dense, orig in enumerate(order)}
    graph = Graph.from_edges(len(order), [(remap[u], remap[v]) for u, v in raw_edges])
    return graph, tuple(order)


def parse_edge_list(text: str, *, zero_indexed: bool = True) -> Graph:
    """Parse an edge list into a validated Graph (see parse_edge_list_mapped)."""
    graph, _ = parse_edge_list_mapped(text, zero_indexed=zero_indexed)
    return graph


def write_edge_list(graph: Graph) -> str:
    """Zero-indexed edge list, one edge per line, lexicographic order."""
    return "".join(f"{u} {v}\n" for u, v in graph.edges())


# ---------------------------------------------------------------------------
# graph6 format. A record is a size field N(n) followed by the upper
# triangle of the adjacency matrix, column by column (x01, x02, x12,
# x03, ...), packed big-endian into 6-bit groups, each stored as one
# printable byte in [63, 126] (value + 63). Padding bits must be zero.
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_size_field(record: str, lineno: int | None) -> tuple[int, int]:
    """Decode N(n); returns (n, offset of first payload char)."""
    if not record:
        raise GraphFormatError("empty graph6 record", line=lineno)
    b0 = ord(record[0])
    if not 63 <= b0 <= 126:
        raise GraphFormatError(f"byte {b0} outside graph6 range [63, 126]", line=lineno)
    if b0 != 126:
        return b0 - 63, 1
    # 126 escapes to a 3-byte (18-bit) size; a second 126 to 6 bytes (36-bit).
    if len(record) >= 2 and ord(record[1]) == 126:
        count, start = 6, 2
    else:
        count, start = 3, 1
    if len(record) < start + count:
        raise GraphFormatError("truncated graph6 size field", line=lineno)
    n = 0
    for ch in record[start : start + count]:
        b = ord(ch)
        if not 63 <= b <= 126:
            raise GraphFormatError(f"byte {b} outside graph6 range [63, 126]", line=lineno)
        n = (n << 6) | (b - 63)
    return n, start + count


def parse_graph6(record: str, *, lineno: int | None = None) -> Graph:
    """Decode one graph6 record (an optional '>>graph6<<' prefix is accepted)."""
    record = record.strip()
    if record.startswith(_G6_HEADER):
        record = record[len(_G6_HEADER) :]
    n, offset = _g6_size_field(record, lineno)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = record[offset:]
    if len(payload) < nbytes:
        raise GraphFormatError(
            f"truncated graph6 record: need {nbytes} payload bytes, got {len(payload)}",
            line=lineno,
        )
    if len(payload) > nbytes:
        raise GraphFormatError(
            f"trailing characters after graph6 record (n={n})", line=lineno
        )
    edges: list[tuple[int, int]] = []
    bit = 0
    u, v = 0, 1  # current upper-triangle cell, column-major
    for ch in payload:
        b = ord(ch)
        if not 63 <= b <= 126:
            raise GraphFormatError(f"byte {b} outside graph6 range [63, 126]", line=lineno)
        group = b - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                if (group >> k) & 1:
                    raise GraphFormatError("nonzero padding bits", line=lineno)
                continue
            if (group >> k) & 1:
                edges.append((u, v))
            bit += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return Graph.from_edges(n, edges)


def write_graph6(graph: Graph) -> str:
    """Encode a graph as a graph6 record (no header, no newline)."""
    n = graph.n
    if n <= 62:
        size = chr(n + 63)
    elif n <= 258047:
        size = chr(126) + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    elif n <= 68719476735:
        size = chr(126) * 2 + "".join(
            chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0)
        )
    else:
        raise GraphError(f"graph too large for graph6: n={n}")
    out: list[str] = [size]
    nbr_sets = [set(nbrs) for nbrs in graph.adj]
    group = 0
    filled = 0
    for v in range(1, n):
        row = nbr_sets[v]
        for u in range(v):
            group = (group << 1) | (1 if u in row else 0)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group, filled = 0, 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


def parse_graph6_collection(text: str, *, source: str = "") -> GraphCollection:
    """Parse one graph6 record per line; blank lines are skipped.

    Any malformed line rejects the whole input (no partial loads).
    """
    graphs: list[Graph] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        graphs.append(parse_graph6(line, lineno=lineno))
    return GraphCollection(graphs=tuple(graphs), source=source)
