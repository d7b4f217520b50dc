"""scikit-learn style estimators wrapping spectral and exhaustive bisection."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .bisect import bisection_from_sets, median, sign_partition, spectral_bisection
from .eigen import eigendecompose, fiedler_space
from .graph import Graph, GraphError, graph_from_laplacian, laplacian
from .oracle import MAX_ORACLE_N, MAX_SWEEP_ZEROS, optimal_bisection, zero_completions


def check_graph(X) -> Graph:
    """Coerce ``X`` to a :class:`Graph`.

    Accepts a Graph or a square symmetric 0/1 adjacency matrix with an empty
    diagonal.
    """
    if isinstance(X, Graph):
        return X
    a = check_array(X, dtype=None, ensure_min_samples=1, ensure_min_features=1)
    if a.shape[0] != a.shape[1]:
        raise GraphError(f"adjacency matrix must be square, got shape {a.shape}")
    if not np.all((a == 0) | (a == 1)):
        raise GraphError("adjacency entries must be 0 or 1")
    if np.any(np.diag(a)):
        raise GraphError("adjacency matrix has self-loops")
    if not np.array_equal(a, a.T):
        raise GraphError("adjacency matrix is not symmetric")
    a = a.astype(np.int64)
    return graph_from_laplacian(np.diag(a.sum(axis=1)) - a)


class SpectralBisection(ClusterMixin, BaseEstimator):
    """Median-cut spectral bisection of a connected graph.

    Parameters
    ----------
    zero_assignment : {"rule", "best"}
        How vertices at the median of the Fiedler vector are split. ``"rule"``
        hands them out in index order to the smaller side; ``"best"`` tries
        every split (at most ``max_sweep_zeros`` such vertices) and keeps the
        smallest cut.
    max_sweep_zeros : int
        Cap on the zero set size for ``zero_assignment="best"``.

    Attributes
    ----------
    graph_, laplacian_, spectrum_ : fitted graph data
    algebraic_connectivity_ : float
    fiedler_basis_ : ndarray of shape (n, multiplicity)
    fiedler_vector_ : ndarray of shape (n,)
        The basis vector that produced the chosen bisection.
    bisection_ : Bisection
    cut_ : int
    labels_ : ndarray of shape (n,)
        1 for vertices on the ``floor(n/2)`` side, else 0.
    """

    def __init__(self, zero_assignment="rule", max_sweep_zeros=MAX_SWEEP_ZEROS):
        self.zero_assignment = zero_assignment
        self.max_sweep_zeros = max_sweep_zeros

    def _bisect(self, g, y):
        if self.zero_assignment == "rule":
            return spectral_bisection(g, y)
        p = sign_partition(y - median(y))
        candidates = (bisection_from_sets(g, s) for s in zero_completions(g, p, self.max_sweep_zeros))
        return min(candidates, key=lambda b: b.cut)

    def fit(self, X, y=None):
        if self.zero_assignment not in ("rule", "best"):
            raise ValueError(f"zero_assignment must be 'rule' or 'best', got {self.zero_assignment!r}")
        g = check_graph(X)
        lap = laplacian(g)
        spectrum = eigendecompose(lap)
        space = fiedler_space(lap, spectrum)
        results = [(self._bisect(g, v), k) for k, v in enumerate(space.basis.T)]
        best, k = min(results, key=lambda r: (r[0].cut, r[1]))

        self.graph_ = g
        self.laplacian_ = lap
        self.spectrum_ = spectrum
        self.algebraic_connectivity_ = space.eigenvalue
        self.fiedler_basis_ = space.basis
        self.fiedler_vector_ = space.basis[:, k]
        self.bisection_ = best
        self.cut_ = best.cut
        self.labels_ = best.labels()
        self.n_features_in_ = g.n
        return self

    def score(self, X=None, y=None):
        """Negative cut size, so larger is better."""
        check_is_fitted(self, "bisection_")
        return -float(self.cut_)


class OptimalBisection(ClusterMixin, BaseEstimator):
    """Exact minimum bisection by exhaustive enumeration (small graphs only)."""

    def __init__(self, max_n=MAX_ORACLE_N, n_jobs=1):
        self.max_n = max_n
        self.n_jobs = n_jobs

    def fit(self, X, y=None):
        g = check_graph(X)
        result = optimal_bisection(g, max_n=self.max_n, n_jobs=self.n_jobs)
        self.graph_ = g
        self.result_ = result
        self.bisection_ = bisection_from_sets(g, result.best_set)
        self.cut_ = result.best_cut
        self.labels_ = self.bisection_.labels()
        self.n_features_in_ = g.n
        return self

    def score(self, X=None, y=None):
        check_is_fitted(self, "bisection_")
        return -float(self.cut_)
