from __future__ import annotations

import numpy as np

from ..features import FRESH_NAMES, fresh_transform
from ..learners import RotationForestRegressor
from ._base import EnsembleTSER


def fresh_channels(X) -> np.ndarray:
    """Catalogue features of every channel, channel blocks side by side."""
    return np.hstack([fresh_transform(X[:, c, :]) for c in range(X.shape[1])])


class FreshPRINCE(EnsembleTSER):
    """Fresh-style feature transform followed by a rotation forest.

    No supervised feature selection is applied.
    """

    name = "freshprince"
    min_length = 4

    def __init__(self, n_estimators=500, group_size=3, subsample=0.75, seed=0, n_jobs=1):
        self.n_estimators = n_estimators
        self.group_size = group_size
        self.subsample = subsample
        self.seed = seed
        self.n_jobs = n_jobs

    @property
    def feature_names_(self):
        return [f"ch{c}.{name}" for c in range(self.n_channels_) for name in FRESH_NAMES]

    def transform(self, data) -> np.ndarray:
        return fresh_channels(self._check_predict(data))

    def _fit(self, X, y):
        Xt = fresh_channels(X)
        self.rotf_ = RotationForestRegressor(
            self.n_estimators, self.group_size, self.subsample, self.seed, self.n_jobs
        ).fit(Xt, y)

    def _predict_members(self, X):
        return self.rotf_.predict_members(fresh_channels(X))


def freshprince_fit(train, r=500, seed=0, n_jobs=1) -> FreshPRINCE:
    return FreshPRINCE(r, seed=seed, n_jobs=n_jobs).fit(train)
