from __future__ import annotations

import numpy as np
from numba import njit

from .._parallel import parallel_map
from ..data import TimeSeries
from ._base import BaseTSER

METRICS = ("euclidean", "dtw")


@njit(cache=True, nogil=True)
def _dtw(x, y):
    d, m = x.shape
    n = y.shape[1]
    prev = np.full(n + 1, np.inf)
    cur = np.full(n + 1, np.inf)
    prev[0] = 0.0
    for i in range(1, m + 1):
        cur[0] = np.inf
        for j in range(1, n + 1):
            c = 0.0
            for k in range(d):
                diff = x[k, i - 1] - y[k, j - 1]
                c += diff * diff
            best = prev[j - 1]
            if prev[j] < best:
                best = prev[j]
            if cur[j - 1] < best:
                best = cur[j - 1]
            cur[j] = c + best
        prev, cur = cur, prev
    return prev[n]


@njit(cache=True, nogil=True)
def _sq_euclidean(x, y):
    s = 0.0
    for k in range(x.shape[0]):
        for t in range(x.shape[1]):
            diff = x[k, t] - y[k, t]
            s += diff * diff
    return s


@njit(cache=True, nogil=True)
def _distances(A, B, use_dtw):
    out = np.empty((A.shape[0], B.shape[0]))
    for i in range(A.shape[0]):
        for j in range(B.shape[0]):
            out[i, j] = _dtw(A[i], B[j]) if use_dtw else _sq_euclidean(A[i], B[j])
    return out


def _as_2d(x) -> np.ndarray:
    v = x.values if isinstance(x, TimeSeries) else np.asarray(x, dtype=np.float64)
    if v.ndim == 1:
        v = v[np.newaxis, :]
    return np.ascontiguousarray(v, dtype=np.float64)


def dtw_distance(x, y) -> float:
    """Dependent DTW with a full window: summed squared channel differences, no square root.

    >>> dtw_distance([0.0, 0.0, 0.0], [1.0, 1.0, 1.0])
    3.0
    """
    a, b = _as_2d(x), _as_2d(y)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(_dtw(a, b))


def pairwise_distances(A, B, metric="euclidean", n_jobs=1) -> np.ndarray:
    """Distances between cases of ``A`` (rows) and ``B`` (columns), both (n, d, m)."""
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}")
    A = np.ascontiguousarray(A, dtype=np.float64)
    B = np.ascontiguousarray(B, dtype=np.float64)
    use_dtw = metric == "dtw"
    chunks = np.array_split(np.arange(A.shape[0]), max(1, min(A.shape[0], 4 * max(1, n_jobs or 1))))
    parts = parallel_map(lambda idx: _distances(A[idx], B, use_dtw), [c for c in chunks if c.size], n_jobs)
    return np.vstack(parts)


class KNeighborsTSER(BaseTSER):
    """k-nearest-neighbour regressor over whole series.

    Predicts the unweighted mean target of the ``k`` nearest training cases;
    equal distances go to the lower training index.
    """

    min_length = 1

    def __init__(self, k=1, metric="euclidean", n_jobs=1):
        self.k = k
        self.metric = metric
        self.n_jobs = n_jobs

    @property
    def name(self):
        return f"{self.k}nn-{'ed' if self.metric == 'euclidean' else self.metric}"

    def _fit(self, X, y):
        if self.metric not in METRICS:
            raise ValueError(f"unknown metric {self.metric!r}")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.k > X.shape[0]:
            raise ValueError(f"k={self.k} exceeds the {X.shape[0]} training cases")
        self.X_ = X
        self.y_ = y

    def kneighbors(self, data) -> np.ndarray:
        D = pairwise_distances(self._check_predict(data), self.X_, self.metric, self.n_jobs)
        return np.argsort(D, axis=1, kind="stable")[:, : self.k]

    def _predict(self, X):
        D = pairwise_distances(X, self.X_, self.metric, self.n_jobs)
        nn = np.argsort(D, axis=1, kind="stable")[:, : self.k]
        return self.y_[nn].mean(axis=1)


def knn_predict(train, test, k=1, metric="euclidean", n_jobs=1) -> np.ndarray:
    return KNeighborsTSER(k, metric, n_jobs).fit(train).predict(test)
