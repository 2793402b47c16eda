"""Tabular learners applied to flattened series."""

from __future__ import annotations

from ..learners import RandomForestRegressor, RidgeRegressor, RotationForestRegressor
from ..learners._ridge import DEFAULT_ALPHAS
from ._base import BaseTSER, EnsembleTSER, flatten


class FlatRandomForest(EnsembleTSER):
    name = "randf"

    def __init__(self, n_estimators=500, mtry=None, seed=0, n_jobs=1):
        self.n_estimators = n_estimators
        self.mtry = mtry
        self.seed = seed
        self.n_jobs = n_jobs

    def _fit(self, X, y):
        self.model_ = RandomForestRegressor(
            self.n_estimators, self.mtry, seed=self.seed, n_jobs=self.n_jobs
        ).fit(flatten(X), y)

    def _predict_members(self, X):
        return self.model_.predict_members(flatten(X))


class FlatRotationForest(EnsembleTSER):
    name = "rotf"

    def __init__(self, n_estimators=500, group_size=3, subsample=0.75, seed=0, n_jobs=1):
        self.n_estimators = n_estimators
        self.group_size = group_size
        self.subsample = subsample
        self.seed = seed
        self.n_jobs = n_jobs

    def _fit(self, X, y):
        self.model_ = RotationForestRegressor(
            self.n_estimators, self.group_size, self.subsample, self.seed, self.n_jobs
        ).fit(flatten(X), y)

    def _predict_members(self, X):
        return self.model_.predict_members(flatten(X))


class FlatRidge(BaseTSER):
    name = "ridge"

    def __init__(self, alphas=DEFAULT_ALPHAS):
        self.alphas = alphas

    def _fit(self, X, y):
        self.model_ = RidgeRegressor(self.alphas).fit(flatten(X), y)

    def _predict(self, X):
        return self.model_.predict(flatten(X))
