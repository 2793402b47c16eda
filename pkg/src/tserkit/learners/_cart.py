"""CART regression tree.

Splits minimise the summed squared error of the children. Candidate
thresholds are midpoints between consecutive distinct values of a feature;
rows with ``value <= threshold`` go left. A split must improve on the
incumbent by more than a relative 1e-12 to replace it, so exact ties are
resolved towards the lowest feature index and then the lowest threshold.
"""

from __future__ import annotations

import numpy as np
from numba import njit, uint64

_GAMMA = uint64(0x9E3779B97F4A7C15)
_M1 = uint64(0xBF58476D1CE4E5B9)
_M2 = uint64(0x94D049BB133111EB)
_REL_TOL = 1e-12

# node array column layout (float64): feature, threshold, left, right, value
_FEATURE, _THRESHOLD, _LEFT, _RIGHT, _VALUE = range(5)


@njit(cache=True, nogil=True)
def _next_u64(state):
    state[0] += _GAMMA
    z = state[0]
    z = (z ^ (z >> uint64(30))) * _M1
    z = (z ^ (z >> uint64(27))) * _M2
    return z ^ (z >> uint64(31))


@njit(cache=True, nogil=True)
def _below(state, bound):
    b = uint64(bound)
    threshold = (uint64(0) - b) % b
    while True:
        v = _next_u64(state)
        if v >= threshold:
            return np.int64(v % b)


@njit(cache=True, nogil=True)
def _best_split_on(Xf, y, idx, lo, hi, min_leaf, total):
    """Best split of rows ``idx[lo:hi]`` on one feature column.

    Returns ``(score, threshold, n_left)``; score is ``-inf`` when the
    feature admits no valid split.
    """
    n = hi - lo
    vals = np.empty(n)
    for i in range(n):
        vals[i] = Xf[idx[lo + i]]
    order = np.argsort(vals, kind="mergesort")
    best = -np.inf
    best_thr = 0.0
    best_left = 0
    sl = 0.0
    for i in range(n - 1):
        sl += y[idx[lo + order[i]]]
        n_left = i + 1
        a = vals[order[i]]
        b = vals[order[i + 1]]
        if not a < b:
            continue
        if n_left < min_leaf or n - n_left < min_leaf:
            continue
        sr = total - sl
        score = sl * sl / n_left + sr * sr / (n - n_left)
        if best_left == 0 or score > best + _REL_TOL * abs(best):
            thr = a * 0.5 + b * 0.5
            if not thr < b:
                thr = a
            best = score
            best_thr = thr
            best_left = n_left
    return best, best_thr, best_left


@njit(cache=True, nogil=True)
def _is_constant_column(Xf, idx, lo, hi):
    v0 = Xf[idx[lo]]
    for i in range(lo + 1, hi):
        if Xf[idx[i]] != v0:
            return False
    return True


@njit(cache=True, nogil=True)
def cart_build(X, y, sample_idx, max_depth, min_split, min_leaf, mtry, seed):
    """Grow a tree on rows ``sample_idx`` (repeats allowed) of ``X``.

    ``X`` is laid out feature-major, shape ``(n_features, n_rows)``.
    ``max_depth < 0`` means unbounded; ``mtry >= n_features`` evaluates every
    feature in index order, otherwise features are visited in a random order
    until ``mtry`` non-constant ones have been evaluated.
    """
    p = X.shape[0]
    n = sample_idx.shape[0]
    idx = sample_idx.copy()
    cap = 2 * n + 1
    nodes = np.zeros((cap, 5))
    state = np.empty(1, dtype=np.uint64)
    state[0] = seed
    feats = np.arange(p)

    # explicit stack of (node id, lo, hi, depth)
    stack = np.empty((cap, 4), dtype=np.int64)
    top = 0
    stack[0, 0] = 0
    stack[0, 1] = 0
    stack[0, 2] = n
    stack[0, 3] = 0
    top = 1
    n_nodes = 1
    while top > 0:
        top -= 1
        node = stack[top, 0]
        lo = stack[top, 1]
        hi = stack[top, 2]
        depth = stack[top, 3]
        cnt = hi - lo
        total = 0.0
        for i in range(lo, hi):
            total += y[idx[i]]
        mean = total / cnt
        nodes[node, _FEATURE] = -1.0
        nodes[node, _VALUE] = mean
        nodes[node, _LEFT] = -1.0
        nodes[node, _RIGHT] = -1.0

        pure = True
        y0 = y[idx[lo]]
        for i in range(lo + 1, hi):
            if y[idx[i]] != y0:
                pure = False
                break
        if pure or cnt < min_split or cnt < 2 * min_leaf:
            continue
        if max_depth >= 0 and depth >= max_depth:
            continue

        if mtry < p:
            for i in range(p - 1, 0, -1):
                j = _below(state, i + 1)
                t = feats[i]
                feats[i] = feats[j]
                feats[j] = t
        best = -np.inf
        best_f = -1
        best_thr = 0.0
        evaluated = 0
        for fi in range(p):
            f = feats[fi] if mtry < p else fi
            if _is_constant_column(X[f], idx, lo, hi):
                continue
            score, thr, n_left = _best_split_on(X[f], y, idx, lo, hi, min_leaf, total)
            evaluated += 1
            if n_left > 0:
                if best_f < 0 or score > best + _REL_TOL * abs(best):
                    better = True
                elif score >= best - _REL_TOL * abs(best):
                    better = f < best_f
                else:
                    better = False
                if better:
                    best = score
                    best_f = f
                    best_thr = thr
            if evaluated >= mtry:
                break
        if best_f < 0:
            continue

        # partition idx[lo:hi] in place, stable
        Xf = X[best_f]
        left_buf = np.empty(cnt, dtype=np.int64)
        right_buf = np.empty(cnt, dtype=np.int64)
        nl = 0
        nr = 0
        for i in range(lo, hi):
            r = idx[i]
            if Xf[r] <= best_thr:
                left_buf[nl] = r
                nl += 1
            else:
                right_buf[nr] = r
                nr += 1
        for i in range(nl):
            idx[lo + i] = left_buf[i]
        for i in range(nr):
            idx[lo + nl + i] = right_buf[i]

        left = n_nodes
        right = n_nodes + 1
        n_nodes += 2
        nodes[node, _FEATURE] = best_f
        nodes[node, _THRESHOLD] = best_thr
        nodes[node, _LEFT] = left
        nodes[node, _RIGHT] = right
        # push right first so the left subtree is grown first
        stack[top, 0] = right
        stack[top, 1] = lo + nl
        stack[top, 2] = hi
        stack[top, 3] = depth + 1
        top += 1
        stack[top, 0] = left
        stack[top, 1] = lo
        stack[top, 2] = lo + nl
        stack[top, 3] = depth + 1
        top += 1
    return nodes[:n_nodes].copy()


@njit(cache=True, nogil=True)
def cart_apply(nodes, X):
    """Predict rows of ``X`` (shape ``(n_rows, n_features)``)."""
    n = X.shape[0]
    out = np.empty(n)
    for i in range(n):
        k = 0
        while nodes[k, _FEATURE] >= 0:
            if X[i, int(nodes[k, _FEATURE])] <= nodes[k, _THRESHOLD]:
                k = int(nodes[k, _LEFT])
            else:
                k = int(nodes[k, _RIGHT])
        out[i] = nodes[k, _VALUE]
    return out


def check_Xy(X, y=None):
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2:
        raise ValueError(f"expected a 2-d feature matrix, got shape {X.shape}")
    if X.shape[0] < 1 or X.shape[1] < 1:
        raise ValueError("feature matrix must have at least one row and one column")
    if not np.isfinite(X).all():
        raise ValueError("feature matrix contains non-finite values")
    if y is None:
        return X
    y = np.asarray(y, dtype=np.float64)
    if y.ndim != 1 or y.shape[0] != X.shape[0]:
        raise ValueError(f"targets of shape {y.shape} do not match {X.shape[0]} rows")
    if not np.isfinite(y).all():
        raise ValueError("targets contain non-finite values")
    return X, y


class CartRegressor:
    """Regression tree.

    Parameters
    ----------
    max_depth : int or None
        ``None`` grows until purity or the sample bounds stop it.
    min_samples_split, min_samples_leaf : int
    mtry : int or None
        Features examined per split; ``None`` examines all of them.
    seed : int
        Drives the feature visiting order when ``mtry`` is set.
    """

    def __init__(self, max_depth=None, min_samples_split=2, min_samples_leaf=1, mtry=None, seed=0):
        self.max_depth = max_depth
        self.min_samples_split = min_samples_split
        self.min_samples_leaf = min_samples_leaf
        self.mtry = mtry
        self.seed = seed

    def fit(self, X, y, sample_idx=None):
        X, y = check_Xy(X, y)
        if self.min_samples_split < 2 or self.min_samples_leaf < 1:
            raise ValueError("min_samples_split must be >= 2 and min_samples_leaf >= 1")
        p = X.shape[1]
        mtry = p if self.mtry is None else int(self.mtry)
        if mtry < 1:
            raise ValueError("mtry must be at least 1")
        if sample_idx is None:
            sample_idx = np.arange(X.shape[0], dtype=np.int64)
        self.n_features_in_ = p
        self.nodes_ = cart_build(
            np.ascontiguousarray(X.T),
            y,
            np.asarray(sample_idx, dtype=np.int64),
            -1 if self.max_depth is None else int(self.max_depth),
            int(self.min_samples_split),
            int(self.min_samples_leaf),
            min(mtry, p),
            np.uint64(int(self.seed) & 0xFFFFFFFFFFFFFFFF),
        )
        return self

    @property
    def n_nodes(self) -> int:
        return self.nodes_.shape[0]

    @property
    def n_leaves(self) -> int:
        return int((self.nodes_[:, _FEATURE] < 0).sum())

    def predict(self, X):
        X = check_Xy(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"expected {self.n_features_in_} features, got {X.shape[1]}")
        return cart_apply(self.nodes_, np.ascontiguousarray(X))


def cart_fit(X, y, max_depth=None, min_samples_split=2, min_samples_leaf=1) -> CartRegressor:
    return CartRegressor(max_depth, min_samples_split, min_samples_leaf).fit(X, y)


def cart_predict(tree: CartRegressor, X) -> np.ndarray:
    return tree.predict(X)
