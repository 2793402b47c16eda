from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .._parallel import parallel_map
from .._random import generator, member_seed
from ..features._pool import N_CATCH22
from ..learners import CartRegressor
from ..transforms import sample_interval
from ._base import EnsembleTSER
from ._intervals import interval_transform

# mean, std and slope in the interval feature pool
TSF_ATTRIBUTES = np.array([N_CATCH22, N_CATCH22 + 1, N_CATCH22 + 2], dtype=np.int64)


@dataclass
class TSFTree:
    intervals: tuple
    tree: CartRegressor


class TimeSeriesForest(EnsembleTSER):
    """Time Series Forest regressor.

    Each tree sees ``floor(sqrt(m))`` random intervals of the series, each
    on a random channel, summarised by mean, standard deviation and slope.
    """

    name = "tsf"
    min_length = 6

    def __init__(self, n_estimators=500, n_intervals=None, seed=0, n_jobs=1):
        self.n_estimators = n_estimators
        self.n_intervals = n_intervals
        self.seed = seed
        self.n_jobs = n_jobs

    def _fit(self, X, y):
        if self.n_estimators < 1:
            raise ValueError("n_estimators must be at least 1")
        n, d, m = X.shape
        k = math.isqrt(m) if self.n_intervals is None else int(self.n_intervals)
        if k < 1:
            raise ValueError("n_intervals must be positive")
        self.n_intervals_ = k
        reps = {"base": X}

        def fit_one(i):
            rng = generator(member_seed(self.seed, i))
            intervals = tuple(sample_interval(rng, m, d, "base") for _ in range(k))
            Xt = interval_transform(reps, intervals, TSF_ATTRIBUTES)
            return TSFTree(intervals, CartRegressor().fit(Xt, y))

        self.estimators_ = parallel_map(fit_one, range(self.n_estimators), self.n_jobs)

    def _predict_members(self, X):
        reps = {"base": X}
        return np.stack(
            parallel_map(
                lambda m: m.tree.predict(interval_transform(reps, m.intervals, TSF_ATTRIBUTES)),
                self.estimators_,
                self.n_jobs,
            )
        )


def tsf_fit(train, r=500, seed=0, n_jobs=1) -> TimeSeriesForest:
    return TimeSeriesForest(r, seed=seed, n_jobs=n_jobs).fit(train)
