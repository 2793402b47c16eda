from __future__ import annotations

import numpy as np

from .._parallel import parallel_map
from .._random import generator, member_seed
from ._cart import CartRegressor, check_Xy
from ._pca import pca_fit


def rotation_matrix(X, rng: np.random.Generator, group_size=3, subsample=0.75) -> np.ndarray:
    """Block-diagonal rotation from PCA on random feature groups.

    Features are permuted and cut into groups of ``group_size`` (the last
    group may be smaller). Each group's PCA is fitted on a ``subsample``
    fraction of the rows drawn without replacement. Columns that are constant
    in that subsample pass through unrotated.
    """
    n, p = X.shape
    perm = rng.permutation(p)
    R = np.zeros((p, p))
    n_sub = min(n, max(2, int(round(subsample * n))))
    for g in range(0, p, group_size):
        cols = perm[g : g + group_size]
        rows = np.sort(rng.choice(n, size=n_sub, replace=False))
        block = X[np.ix_(rows, cols)]
        varying = block.max(axis=0) > block.min(axis=0) if n_sub >= 2 else np.zeros(len(cols), bool)
        for c in cols[~varying]:
            R[c, c] = 1.0
        active = cols[varying]
        if active.size:
            comps, _ = pca_fit(block[:, varying])
            R[np.ix_(active, active)] = comps
    return R


class RotationForestRegressor:
    """Rotation forest for regression: PCA-rotated feature groups feeding CART.

    Parameters
    ----------
    n_estimators : int, default=500
    group_size : int, default=3
    subsample : float, default=0.75
        Fraction of rows used to fit each group's PCA.
    seed : int
    n_jobs : int
    """

    def __init__(self, n_estimators=500, group_size=3, subsample=0.75, seed=0, n_jobs=1):
        self.n_estimators = n_estimators
        self.group_size = group_size
        self.subsample = subsample
        self.seed = seed
        self.n_jobs = n_jobs

    def fit(self, X, y):
        X, y = check_Xy(X, y)
        if self.n_estimators < 1:
            raise ValueError("n_estimators must be at least 1")
        if self.group_size < 1 or not 0 < self.subsample <= 1:
            raise ValueError("group_size must be >= 1 and subsample in (0, 1]")

        def fit_one(i):
            rng = generator(member_seed(self.seed, i))
            R = rotation_matrix(X, rng, self.group_size, self.subsample)
            tree = CartRegressor().fit(X @ R, y)
            return R, tree

        self.estimators_ = parallel_map(fit_one, range(self.n_estimators), self.n_jobs)
        self.n_features_in_ = X.shape[1]
        return self

    def predict_members(self, X) -> np.ndarray:
        X = check_Xy(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"expected {self.n_features_in_} features, got {X.shape[1]}")
        return np.stack(parallel_map(lambda m: m[1].predict(X @ m[0]), self.estimators_, self.n_jobs))

    def predict(self, X) -> np.ndarray:
        return self.predict_members(X).mean(axis=0)


def rotation_forest_fit(X, y, r=500, G=3, rho=0.75, seed=0, n_jobs=1) -> RotationForestRegressor:
    return RotationForestRegressor(r, G, rho, seed, n_jobs).fit(X, y)
