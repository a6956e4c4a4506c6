"""scikit-learn style transformer turning graphs into sparse vertex features.

The encoder is a preprocessing step: fit() learns the collection-wide
degree cap (so feature indices stay comparable across a dataset) and
transform() stacks one sparse feature row per vertex. It follows the
fit/transform/get_params contract, so it composes with pipelines and
other ecosystem tooling, except that X is a sequence of Graph objects
rather than a numeric array.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np
from scipy import sparse
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .encode import encode_all, vectorize
from .gamma import gamma_encode_all, vectorize_gamma
from .graph import Graph, GraphCollection

_METHODS = ("igel", "gamma")


def as_graph_list(X) -> list[Graph]:
    """Validate transformer input: a Graph, a GraphCollection, or an
    iterable of Graph objects."""
    if isinstance(X, Graph):
        return [X]
    if isinstance(X, GraphCollection):
        return list(X.graphs)
    if isinstance(X, Iterable):
        graphs = list(X)
        bad = [type(g).__name__ for g in graphs if not isinstance(g, Graph)]
        if bad:
            raise TypeError(f"expected Graph objects, got {sorted(set(bad))}")
        return graphs
    raise TypeError(f"cannot interpret {type(X).__name__} as a graph collection")


class IgelEncoder(TransformerMixin, BaseEstimator):
    """Encode every vertex of every input graph as a sparse feature row.

    Parameters
    ----------
    alpha : int, default=1
        Ego-network depth; must be >= 1.
    method : {'igel', 'gamma'}, default='igel'
        'igel' uses (distance, degree) pairs with feature index
        distance*(cap+1) + min(degree, cap); 'gamma' uses per-layer
        (distance, d0, d1) triples with both degrees capped independently.
    degree_cap : 'auto' or int, default='auto'
        Degree cap for vectorization. 'auto' uses the largest degree seen
        across the graphs given to fit (at least 1), which keeps feature
        indices comparable across the whole collection.
    workers : int, default=1
        Worker processes for per-vertex encoding of large graphs.

    Attributes
    ----------
    degree_cap_ : int
        Resolved degree cap.
    n_features_ : int
        Feature dimension: (alpha+1)*(cap+1) for 'igel',
        (alpha+1)*(cap+1)^2 for 'gamma'.

    Examples
    --------
    >>> from igel import gen_cycle
    >>> from igel.features import IgelEncoder
    >>> X = [gen_cycle(6), gen_cycle(5)]
    >>> enc = IgelEncoder(alpha=1).fit(X)
    >>> enc.transform(X).shape
    (11, 6)
    """

    def __init__(self, alpha: int = 1, method: str = "igel", degree_cap="auto", workers: int = 1):
        self.alpha = alpha
        self.method = method
        self.degree_cap = degree_cap
        self.workers = workers

    def _validate_params(self) -> None:
        if not isinstance(self.alpha, int) or isinstance(self.alpha, bool) or self.alpha < 1:
            raise ValueError(f"alpha must be an integer >= 1, got {self.alpha!r}")
        if self.method not in _METHODS:
            raise ValueError(f"method must be one of {_METHODS}, got {self.method!r}")
        if self.degree_cap != "auto":
            if not isinstance(self.degree_cap, int) or self.degree_cap < 1:
                raise ValueError(
                    f"degree_cap must be 'auto' or an integer >= 1, got {self.degree_cap!r}"
                )

    def fit(self, X, y=None):
        self._validate_params()
        graphs = as_graph_list(X)
        if self.degree_cap == "auto":
            self.degree_cap_ = max(1, max((g.max_degree() for g in graphs), default=1))
        else:
            self.degree_cap_ = self.degree_cap
        width = self.degree_cap_ + 1
        if self.method == "igel":
            self.n_features_ = (self.alpha + 1) * width
        else:
            self.n_features_ = (self.alpha + 1) * width * width
        return self

    def _vectorize_graph(self, graph: Graph):
        if self.method == "igel":
            encodings = encode_all(graph, self.alpha, self.workers)
            return [vectorize(e, self.degree_cap_) for e in encodings]
        encodings = gamma_encode_all(graph, self.alpha, self.workers)
        return [vectorize_gamma(e, self.degree_cap_) for e in encodings]

    def transform_per_graph(self, X) -> list[sparse.csr_matrix]:
        """One sparse matrix per input graph, rows indexed by vertex id."""
        check_is_fitted(self, "degree_cap_")
        self._validate_params()
        out = []
        for graph in as_graph_list(X):
            vectors = self._vectorize_graph(graph)
            data, indices, indptr = [], [], [0]
            for vec in vectors:
                for idx, val in vec.entries:
                    indices.append(idx)
                    data.append(val)
                indptr.append(len(indices))
            out.append(
                sparse.csr_matrix(
                    (
                        np.asarray(data, dtype=np.int64),
                        np.asarray(indices, dtype=np.int64),
                        np.asarray(indptr, dtype=np.int64),
                    ),
                    shape=(graph.n, self.n_features_),
                )
            )
        return out

    def transform(self, X) -> sparse.csr_matrix:
        """Stack the per-graph matrices; rows follow input graph order."""
        mats = self.transform_per_graph(X)
        if not mats:
            return sparse.csr_matrix((0, self.n_features_), dtype=np.int64)
        return sparse.vstack(mats, format="csr")
