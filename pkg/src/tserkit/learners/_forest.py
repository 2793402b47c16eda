from __future__ import annotations

import numpy as np

from .._parallel import parallel_map
from .._random import generator, member_seed
from ._cart import CartRegressor, check_Xy


class RandomForestRegressor:
    """Bagged CART ensemble with per-split feature subsampling.

    Parameters
    ----------
    n_estimators : int, default=500
    mtry : int or None
        Features tried per split, default ``max(1, p // 3)``.
    bootstrap : bool, default=True
        ``False`` fits every tree on the full training set.
    seed : int
    n_jobs : int
        Threads used to fit trees; results do not depend on it.
    """

    def __init__(self, n_estimators=500, mtry=None, bootstrap=True, max_depth=None, seed=0, n_jobs=1):
        self.n_estimators = n_estimators
        self.mtry = mtry
        self.bootstrap = bootstrap
        self.max_depth = max_depth
        self.seed = seed
        self.n_jobs = n_jobs

    def fit(self, X, y):
        X, y = check_Xy(X, y)
        if self.n_estimators < 1:
            raise ValueError("n_estimators must be at least 1")
        n, p = X.shape
        mtry = max(1, p // 3) if self.mtry is None else int(self.mtry)
        Xt = np.ascontiguousarray(X)

        def fit_one(i):
            s = member_seed(self.seed, i)
            if self.bootstrap:
                idx = generator(s).integers(0, n, size=n)
            else:
                idx = np.arange(n)
            tree = CartRegressor(max_depth=self.max_depth, mtry=mtry, seed=s)
            return tree.fit(Xt, y, sample_idx=idx)

        self.estimators_ = parallel_map(fit_one, range(self.n_estimators), self.n_jobs)
        self.n_features_in_ = p
        return self

    def predict_members(self, X) -> np.ndarray:
        """Per-tree predictions, shape ``(n_estimators, n_rows)``."""
        X = check_Xy(X)
        return np.stack(parallel_map(lambda t: t.predict(X), self.estimators_, self.n_jobs))

    def predict(self, X) -> np.ndarray:
        return self.predict_members(X).mean(axis=0)


def random_forest_fit(X, y, r=500, mtry=None, seed=0, n_jobs=1, bootstrap=True) -> RandomForestRegressor:
    return RandomForestRegressor(r, mtry, bootstrap, seed=seed, n_jobs=n_jobs).fit(X, y)
