from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .._parallel import parallel_map
from .._random import generator, member_seed
from ..features import N_POOL
from ..learners import CartRegressor
from ..transforms import REPRESENTATIONS, IntervalSpec, representation_arrays, sample_interval
from ._base import EnsembleTSER
from ._intervals import interval_transform


def default_n_intervals(d: int, rep_len: int) -> int:
    """``4 + floor(sqrt(d) * sqrt(rep_len) / 3)``, evaluated in exact integer arithmetic.

    >>> default_n_intervals(1, 144), default_n_intervals(3, 144)
    (8, 10)
    """
    return 4 + math.isqrt(d * rep_len // 9)


@dataclass
class DrCIFTree:
    attributes: np.ndarray
    intervals: tuple
    tree: CartRegressor

    @property
    def width(self) -> int:
        return len(self.attributes) * len(self.intervals)


class DrCIF(EnsembleTSER):
    """Diverse Representation Canonical Interval Forest regressor.

    Each tree draws ``n_attributes`` features from the 29-feature pool
    (catch22 plus seven summary statistics), then ``k`` random intervals
    from each of the base series, its first differences and its
    periodogram, and fits a CART on the interval features.

    Parameters
    ----------
    n_estimators : int, default=500
    n_attributes : int, default=10
    n_intervals : int, sequence of 3 ints, or None
        Intervals per representation. ``None`` uses
        ``4 + floor(sqrt(d) * sqrt(rep_len) / 3)`` with each
        representation's own length.
    seed : int
    n_jobs : int
        Worker threads; predictions do not depend on it.
    """

    name = "drcif"
    min_length = 8

    def __init__(self, n_estimators=500, n_attributes=10, n_intervals=None, seed=0, n_jobs=1):
        self.n_estimators = n_estimators
        self.n_attributes = n_attributes
        self.n_intervals = n_intervals
        self.seed = seed
        self.n_jobs = n_jobs

    def _intervals_per_rep(self, d, lengths):
        if self.n_intervals is None:
            return tuple(default_n_intervals(d, L) for L in lengths)
        if np.ndim(self.n_intervals) == 0:
            return (int(self.n_intervals),) * len(lengths)
        ks = tuple(int(k) for k in self.n_intervals)
        if len(ks) != len(lengths):
            raise ValueError(f"n_intervals needs {len(lengths)} entries, got {len(ks)}")
        return ks

    def _fit(self, X, y):
        if self.n_estimators < 1:
            raise ValueError("n_estimators must be at least 1")
        if not 1 <= self.n_attributes <= N_POOL:
            raise ValueError(f"n_attributes must be in [1, {N_POOL}]")
        reps = representation_arrays(X)
        d = X.shape[1]
        lengths = [reps[r].shape[2] for r in REPRESENTATIONS]
        self.n_intervals_ = self._intervals_per_rep(d, lengths)
        if min(self.n_intervals_) < 1:
            raise ValueError("n_intervals must be positive")

        def fit_one(i):
            rng = generator(member_seed(self.seed, i))
            attributes = rng.choice(N_POOL, size=self.n_attributes, replace=False)
            intervals = tuple(
                sample_interval(rng, L, d, rep)
                for rep, L, k in zip(REPRESENTATIONS, lengths, self.n_intervals_)
                for _ in range(k)
            )
            Xt = interval_transform(reps, intervals, attributes)
            return DrCIFTree(attributes, intervals, CartRegressor().fit(Xt, y))

        self.estimators_ = parallel_map(fit_one, range(self.n_estimators), self.n_jobs)

    def _predict_members(self, X):
        reps = representation_arrays(X)
        return np.stack(
            parallel_map(
                lambda m: m.tree.predict(interval_transform(reps, m.intervals, m.attributes)),
                self.estimators_,
                self.n_jobs,
            )
        )


def drcif_fit(train, r=500, a=10, k=None, seed=0, n_jobs=1) -> DrCIF:
    return DrCIF(r, a, k, seed, n_jobs).fit(train)


__all__ = ["DrCIF", "DrCIFTree", "IntervalSpec", "default_n_intervals", "drcif_fit"]
