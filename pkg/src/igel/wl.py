"""1-WL color refinement with joint refinement over graph collections.

Colors start from vertex degrees. Each round maps the pair (own color,
sorted multiset of neighbor colors) to a fresh dense id through an
injective dictionary, so the vertex partition can only split, never
merge. In joint mode the dictionary is shared across graphs, which makes
color histograms directly comparable between them.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True, slots=True)
class Coloring:
    """Result of color refinement on one graph.

    colors maps vertex -> dense color id; histogram counts vertices per
    color; iterations is the number of refinement rounds executed
    (including the final round that confirmed stability); stabilized is
    False when an iteration cap stopped refinement early.
    """

    colors: tuple[int, ...]
    histogram: dict[int, int]
    iterations: int
    stabilized: bool

    def num_colors(self) -> int:
        return len(self.histogram)

    def histogram_key(self) -> tuple[tuple[int, int], ...]:
        """Sorted (color, count) pairs; comparable across jointly refined graphs."""
        return tuple(sorted(self.histogram.items()))

    def class_sizes(self) -> tuple[int, ...]:
        """Histogram as a sorted multiset of counts; permutation-invariant."""
        return tuple(sorted(self.histogram.values()))


def _init_colors(graphs: list[Graph], table: dict) -> list[list[int]]:
    out = []
    for g in graphs:
        out.append([table.setdefault(len(g.adj[v]), len(table)) for v in range(g.n)])
    return out


def _refine_round(
    graphs: list[Graph], colors: list[list[int]], table: dict
) -> list[list[int]]:
    out = []
    for g, cols in zip(graphs, colors):
        new = []
        for v in range(g.n):
            key = (cols[v], tuple(sorted(cols[w] for w in g.adj[v])))
            new.append(table.setdefault(key, len(table)))
        out.append(new)
    return out


def _refine_all(
    graphs: list[Graph], max_iters: int | None
) -> tuple[list[list[int]], int, bool]:
    """Shared-dictionary refinement of several graphs until the combined
    partition stabilizes (or max_iters rounds). Returns (colors per graph,
    iterations, stabilized)."""
    total_vertices = sum(g.n for g in graphs)
    if total_vertices == 0:
        return [[] for _ in graphs], 0, True
    table: dict = {}
    colors = _init_colors(graphs, table)
    num_classes = len(table)
    iterations = 0
    stabilized = False
    while max_iters is None or iterations < max_iters:
        table = {}
        colors = _refine_round(graphs, colors, table)
        iterations += 1
        if len(table) == num_classes:
            stabilized = True
            break
        num_classes = len(table)
    return colors, iterations, stabilized


def _coloring(colors: list[int], iterations: int, stabilized: bool) -> Coloring:
    return Coloring(
        colors=tuple(colors),
        histogram=dict(Counter(colors)),
        iterations=iterations,
        stabilized=stabilized,
    )


def wl_refine(graph: Graph, max_iters: int | None = None) -> Coloring:
    """Refine a single graph until its partition stops splitting.

    max_iters=None runs to stabilization, which takes at most n rounds.
    """
    colors, iterations, stabilized = _refine_all([graph], max_iters)
    return _coloring(colors[0], iterations, stabilized)


def wl_joint_refine(
    g1: Graph, g2: Graph, max_iters: int | None = None
) -> tuple[Coloring, Coloring, int | None]:
    """Jointly refine two graphs with one shared color dictionary.

    Returns (coloring1, coloring2, distinguished_at) where
    distinguished_at is the smallest iteration at which the per-graph
    color histograms differ (iteration 0 is the initial degree coloring),
    or None when refinement stabilizes with equal histograms. Refinement
    stops as soon as the verdict is known.
    """
    graphs = [g1, g2]
    table: dict = {}
    colors = _init_colors(graphs, table)
    iterations = 0
    if Counter(colors[0]) != Counter(colors[1]):
        return (
            _coloring(colors[0], 0, False),
            _coloring(colors[1], 0, False),
            0,
        )
    num_classes = len(table)
    distinguished_at: int | None = None
    stabilized = False
    while max_iters is None or iterations < max_iters:
        table = {}
        colors = _refine_round(graphs, colors, table)
        iterations += 1
        if Counter(colors[0]) != Counter(colors[1]):
            distinguished_at = iterations
            break
        if len(table) == num_classes:
            stabilized = True
            break
        num_classes = len(table)
    return (
        _coloring(colors[0], iterations, stabilized),
        _coloring(colors[1], iterations, stabilized),
        distinguished_at,
    )


def wl_collection_keys(graphs: list[Graph], max_iters: int | None = None):
    """Stable histogram key per graph after joint refinement of the whole
    collection; equal keys mean the graphs are indistinguishable by the
    refinement test."""
    colors, _, _ = _refine_all(graphs, max_iters)
    return [tuple(sorted(Counter(c).items())) for c in colors]
