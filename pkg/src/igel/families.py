"""Deterministic graph generators, an SRG parameter checker, and a
brute-force isomorphism oracle for small graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError

#: Hard cap for the exact isomorphism search.
ISO_MAX_N = 12


def gen_path(n: int) -> Graph:
    """Path on n >= 1 vertices: 0-1-2-...-(n-1)."""
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_complete(n: int) -> Graph:
    """Complete graph on n >= 1 vertices."""
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def gen_star(leaves: int) -> Graph:
    """Star with the given number of leaves; vertex 0 is the center."""
    if leaves < 1:
        raise GraphError(f"star needs >= 1 leaf, got {leaves}")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def gen_disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; vertices of g2 are shifted by g1.n."""
    shift = g1.n
    edges = list(g1.edges()) + [(u + shift, v + shift) for u, v in g2.edges()]
    return Graph.from_edges(g1.n + g2.n, edges)


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic for a fixed seed."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise GraphError(f"bad G(n, p) parameters: n={n}, p={p}")
    rng = random.Random(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def gen_random_regular(n: int, d: int, seed: int, *, max_restarts: int = 100_000) -> Graph:
    """Random d-regular graph via the pairing model with restarts.

    Restarts whenever the pairing produces a loop or duplicate edge, so
    the output is uniform over simple pairings. Raises GraphError when
    (n, d) is infeasible or the restart budget runs out.
    """
    if d < 0 or n < 0:
        raise GraphError(f"bad regular-graph parameters: n={n}, d={d}")
    if d >= n and not (n == 0 and d == 0):
        raise GraphError(f"degree {d} impossible with {n} vertices")
    if (n * d) % 2 != 0:
        raise GraphError(f"n*d must be even, got n={n}, d={d}")
    if d == 0:
        return Graph.from_edges(n, [])
    rng = random.Random(seed)
    points = [v for v in range(n) for _ in range(d)]
    for _ in range(max_restarts):
        rng.shuffle(points)
        edges: set[tuple[int, int]] = set()
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            if u == v:
                ok = False
                break
            key = (u, v) if u < v else (v, u)
            if key in edges:
                ok = False
                break
            edges.add(key)
        if ok:
            return Graph.from_edges(n, edges)
    raise GraphError(f"no simple {d}-regular pairing found after {max_restarts} restarts")


def gen_rook(k: int) -> Graph:
    """Rook's graph on a k x k grid: cells adjacent iff same row or column.

    For k >= 2 this is SRG(k^2, 2(k-1), k-2, 2).
    """
    if k < 2:
        raise GraphError(f"rook graph needs k >= 2, got {k}")
    edges = []
    for r in range(k):
        for c1, c2 in combinations(range(k), 2):
            edges.append((r * k + c1, r * k + c2))  # same row
            edges.append((c1 * k + r, c2 * k + r))  # same column
    return Graph.from_edges(k * k, edges)


def gen_shrikhande() -> Graph:
    """Shrikhande graph: Cayley graph on Z4 x Z4 with connection set
    {+-(1,0), +-(0,1), +-(1,1)}; SRG(16, 6, 2, 2)."""
    deltas = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    edges = []
    for a in range(4):
        for b in range(4):
            for da, db in deltas:
                u = 4 * a + b
                v = 4 * ((a + da) % 4) + ((b + db) % 4)
                if u < v:
                    edges.append((u, v))
    return Graph.from_edges(16, edges)


def gen_petersen() -> Graph:
    """Petersen graph as Kneser(5, 2): 2-subsets of {0..4}, adjacent iff
    disjoint; SRG(10, 3, 0, 1)."""
    subsets = list(combinations(range(5), 2))
    index = {s: i for i, s in enumerate(subsets)}
    edges = [
        (index[a], index[b])
        for a, b in combinations(subsets, 2)
        if not set(a) & set(b)
    ]
    return Graph.from_edges(10, edges)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def gen_paley(q: int) -> Graph:
    """Paley graph on Z_q for prime q with q = 1 (mod 4): u ~ v iff u - v
    is a nonzero quadratic residue; SRG(q, (q-1)/2, (q-5)/4, (q-1)/4)."""
    if not _is_prime(q):
        raise GraphError(f"paley graph needs a prime modulus, got {q}")
    if q % 4 != 1:
        raise GraphError(f"paley graph needs q = 1 (mod 4), got {q}")
    residues = {(x * x) % q for x in range(1, q)}
    edges = [(u, v) for u, v in combinations(range(q), 2) if (v - u) % q in residues]
    return Graph.from_edges(q, edges)


@dataclass(frozen=True, slots=True)
class SrgParams:
    """Strong-regularity parameters: every adjacent pair shares beta
    neighbors, every non-adjacent pair shares gamma. gamma_vacuous marks
    complete graphs, where no non-adjacent pair exists."""

    n: int
    d: int
    beta: int
    gamma: int
    gamma_vacuous: bool = False

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.d, self.beta, self.gamma)


def srg_params(graph: Graph) -> SrgParams | None:
    """Return the SRG parameters of `graph`, or None if it is not strongly
    regular (non-regular, or common-neighbor counts not constant)."""
    n = graph.n
    if n == 0:
        return None
    degs = {graph.degree(v) for v in range(n)}
    if len(degs) != 1:
        return None
    d = degs.pop()
    nbr_sets = [set(graph.adj[v]) for v in range(n)]
    beta: int | None = None
    gamma: int | None = None
    for u, v in combinations(range(n), 2):
        common = len(nbr_sets[u] & nbr_sets[v])
        if v in nbr_sets[u]:
            if beta is None:
                beta = common
            elif beta != common:
                return None
        else:
            if gamma is None:
                gamma = common
            elif gamma != common:
                return None
    return SrgParams(
        n=n,
        d=d,
        beta=beta if beta is not None else 0,
        gamma=gamma if gamma is not None else 0,
        gamma_vacuous=gamma is None,
    )


def brute_force_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by backtracking over degree-compatible
    assignments with adjacency-consistency pruning.

    Only for small graphs (n <= 12); larger inputs raise GraphError and
    should be screened with encodings instead.
    """
    if max(g1.n, g2.n) > ISO_MAX_N:
        raise GraphError(
            f"isomorphism oracle capped at n <= {ISO_MAX_N}; "
            "use encoding-based screening for larger graphs"
        )
    if g1.n != g2.n or g1.m != g2.m:
        return False
    n = g1.n
    if n == 0:
        return True
    deg1 = [g1.degree(v) for v in range(n)]
    deg2 = [g2.degree(v) for v in range(n)]
    if sorted(deg1) != sorted(deg2):
        return False

    mask1 = [sum(1 << w for w in g1.adj[v]) for v in range(n)]
    mask2 = [sum(1 << w for w in g2.adj[v]) for v in range(n)]

    # Order g1's vertices so each one touches as many placed vertices as
    # possible; this keeps the adjacency constraints tight early.
    order: list[int] = []
    placed = set()
    while len(order) < n:
        best = max(
            (v for v in range(n) if v not in placed),
            key=lambda v: (len(placed & set(g1.adj[v])), deg1[v], -v),
        )
        order.append(best)
        placed.add(best)

    image = [-1] * n  # image[i] = g2 vertex assigned to order[i]
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or deg2[w] != deg1[v]:
                continue
            ok = True
            for j in range(i):
                if ((mask1[v] >> order[j]) & 1) != ((mask2[w] >> image[j]) & 1):
                    ok = False
                    break
            if ok:
                image[i] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
        return False

    return extend(0)
