"""Collection-level distinguishability surveys.

Every graph in a collection is encoded under a chosen method, bucketed
by a 128-bit hash of its canonical encoding (with full-byte confirmation
inside each bucket, so hash collisions cannot fake indistinguishability),
and colliding pairs are reported. Small collisions can optionally be
verified with the exact isomorphism oracle.
"""

from __future__ import annotations

import hashlib
import struct
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from . import encode as _encode
from . import gamma as _gamma
from .families import ISO_MAX_N, brute_force_isomorphic
from .graph import Graph, GraphCollection, GraphError
from .wl import wl_collection_keys, wl_joint_refine

METHODS = ("wl", "igel", "igel_concat", "gamma")


@dataclass(frozen=True, slots=True)
class EncoderSpec:
    """Which encoder a survey runs: method plus its depth parameter(s).

    alpha is a single depth for igel/gamma, a sequence of depths for
    igel_concat, and ignored for wl (which takes wl_max_iters instead).
    """

    method: str
    alpha: int | tuple[int, ...] | None = None
    wl_max_iters: int | None = None

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if self.method in ("igel", "gamma"):
            if not isinstance(self.alpha, int) or self.alpha < 1:
                raise ValueError(f"method {self.method!r} needs a single alpha >= 1")
        elif self.method == "igel_concat":
            alphas = self.alpha
            if isinstance(alphas, int):
                object.__setattr__(self, "alpha", (alphas,))
                alphas = self.alpha
            if (
                not isinstance(alphas, tuple)
                or not alphas
                or not all(isinstance(a, int) and a >= 1 for a in alphas)
            ):
                raise ValueError("method 'igel_concat' needs a non-empty tuple of alphas >= 1")

    def alphas(self) -> tuple[int, ...]:
        if self.method == "igel_concat":
            return self.alpha  # type: ignore[return-value]
        if isinstance(self.alpha, int):
            return (self.alpha,)
        return ()


@dataclass(slots=True)
class SurveyReport:
    """Collision structure of a collection under one encoder."""

    collection: str
    method: str
    alpha: int | tuple[int, ...] | None
    size: int
    buckets: dict[str, list[int]]
    indistinguishable_pairs: int
    verified_isomorphic_pairs: int | None
    elapsed_ms: float

    def summary(self) -> dict:
        """JSON-ready one-object summary."""
        alpha = list(self.alpha) if isinstance(self.alpha, tuple) else self.alpha
        return {
            "collection": self.collection,
            "method": self.method,
            "alpha": alpha,
            "graphs": self.size,
            "buckets": len(self.buckets),
            "indistinguishable_pairs": self.indistinguishable_pairs,
            "verified_isomorphic_pairs": self.verified_isomorphic_pairs,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def collision_buckets(self) -> dict[str, list[int]]:
        return {h: idxs for h, idxs in self.buckets.items() if len(idxs) > 1}


def _encode_key(graph: Graph, spec: EncoderSpec) -> bytes:
    if spec.method == "igel":
        return _encode.encode_graph(graph, spec.alpha).to_bytes()
    if spec.method == "igel_concat":
        return _encode.encode_graph_concat(graph, spec.alphas()).to_bytes()
    if spec.method == "gamma":
        return _gamma.gamma_encode_graph(graph, spec.alpha).to_bytes()
    raise ValueError(f"no per-graph key for method {spec.method!r}")


def _encode_key_chunk(graphs: tuple[Graph, ...], spec: EncoderSpec) -> list[bytes]:
    return [_encode_key(g, spec) for g in graphs]


def _collection_keys(
    coll: GraphCollection, spec: EncoderSpec, workers: int
) -> list[bytes]:
    graphs = list(coll.graphs)
    if spec.method == "wl":
        # Joint refinement over the whole collection keeps color ids
        # comparable across graphs; its dictionary is inherently serial.
        keys = wl_collection_keys(graphs, spec.wl_max_iters)
        return [
            struct.pack("<Q", len(k)) + b"".join(struct.pack("<QQ", c, m) for c, m in k)
            for k in keys
        ]
    if workers <= 1 or len(graphs) < 2 * workers:
        return [_encode_key(g, spec) for g in graphs]
    bounds = [len(graphs) * i // workers for i in range(workers + 1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_encode_key_chunk, tuple(graphs[bounds[i] : bounds[i + 1]]), spec)
            for i in range(workers)
        ]
        out: list[bytes] = []
        for fut in futures:
            out.extend(fut.result())
    return out


def _hash_hex(blob: bytes) -> str:
    return hashlib.blake2b(blob, digest_size=16).hexdigest()


def run_survey(
    coll: GraphCollection,
    spec: EncoderSpec,
    verify: bool = False,
    workers: int = 1,
) -> SurveyReport:
    """Bucket a collection by canonical encoding and count colliding pairs.

    With verify=True every colliding pair is run through the exact
    isomorphism oracle (all graphs must satisfy its size cap).
    """
    if len(coll) == 0:
        raise GraphError("survey needs a non-empty collection")
    start = time.perf_counter()
    keys = _collection_keys(coll, spec, workers)

    buckets: dict[str, list[int]] = {}
    bucket_bytes: dict[str, bytes] = {}
    for idx, blob in enumerate(keys):
        h = _hash_hex(blob)
        # Full-byte confirmation: a 128-bit hash collision between
        # different encodings must not merge buckets.
        while h in bucket_bytes and bucket_bytes[h] != blob:
            h += "+"
        buckets.setdefault(h, []).append(idx)
        bucket_bytes[h] = blob

    pairs = sum(len(idxs) * (len(idxs) - 1) // 2 for idxs in buckets.values())

    verified: int | None = None
    if verify:
        too_big = [i for i, g in enumerate(coll.graphs) if g.n > ISO_MAX_N]
        if too_big:
            raise GraphError(
                f"verification needs n <= {ISO_MAX_N}; offending graphs: {too_big}"
            )
        verified = 0
        for idxs in buckets.values():
            for i, j in combinations(idxs, 2):
                if brute_force_isomorphic(coll.graphs[i], coll.graphs[j]):
                    verified += 1

    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return SurveyReport(
        collection=coll.source,
        method=spec.method,
        alpha=spec.alpha if spec.method != "wl" else None,
        size=len(coll),
        buckets=buckets,
        indistinguishable_pairs=pairs,
        verified_isomorphic_pairs=verified,
        elapsed_ms=elapsed_ms,
    )


@dataclass(frozen=True, slots=True)
class CompareResult:
    """Pairwise verdict with a human-readable witness on distinction."""

    equivalent: bool
    method: str
    distinguished_at: int | None = None
    witness: str | None = None

    def verdict(self) -> str:
        return "equivalent" if self.equivalent else "distinguished"


def _multiset_witness(enc1, enc2) -> str:
    agg1 = enc1.aggregate_counts()
    agg2 = enc2.aggregate_counts()
    for key in sorted(set(agg1) | set(agg2)):
        a, b = agg1.get(key, 0), agg2.get(key, 0)
        if a != b:
            return f"entry {key}: count {a} vs {b}"
    # Aggregates agree but the per-vertex multisets differ; point at the
    # first vertex-level encoding that appears a different number of times.
    c1 = Counter(enc.entries for enc in enc1.vertices)
    c2 = Counter(enc.entries for enc in enc2.vertices)
    for entries in sorted(set(c1) | set(c2)):
        a, b = c1.get(entries, 0), c2.get(entries, 0)
        if a != b:
            return f"vertex encoding {entries}: multiplicity {a} vs {b}"
    return "encodings differ"


def pairwise_compare(g1: Graph, g2: Graph, spec: EncoderSpec) -> CompareResult:
    """Compare two graphs under one encoder, with a witness when they differ."""
    if spec.method == "wl":
        _, _, k = wl_joint_refine(g1, g2, spec.wl_max_iters)
        witness = None if k is None else f"color histograms differ at iteration {k}"
        return CompareResult(
            equivalent=k is None,
            method=spec.method,
            distinguished_at=k,
            witness=witness,
        )
    if spec.method == "igel_concat":
        c1 = _encode.encode_graph_concat(g1, spec.alphas())
        c2 = _encode.encode_graph_concat(g2, spec.alphas())
        if c1 == c2:
            return CompareResult(equivalent=True, method=spec.method)
        for p1, p2 in zip(c1.parts, c2.parts):
            if p1 != p2:
                witness = f"alpha={p1.alpha}: {_multiset_witness(p1, p2)}"
                return CompareResult(equivalent=False, method=spec.method, witness=witness)
        return CompareResult(equivalent=False, method=spec.method, witness="encodings differ")
    if spec.method == "igel":
        e1 = _encode.encode_graph(g1, spec.alpha)
        e2 = _encode.encode_graph(g2, spec.alpha)
    else:
        e1 = _gamma.gamma_encode_graph(g1, spec.alpha)
        e2 = _gamma.gamma_encode_graph(g2, spec.alpha)
    if e1 == e2:
        return CompareResult(equivalent=True, method=spec.method)
    return CompareResult(
        equivalent=False, method=spec.method, witness=_multiset_witness(e1, e2)
    )
