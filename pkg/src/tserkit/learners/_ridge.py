from __future__ import annotations

import numpy as np

from ._cart import check_Xy

DEFAULT_ALPHAS = tuple(10.0**k for k in range(-4, 5))


class RidgeRegressor:
    """Ridge regression on standardised features with an unpenalised intercept.

    ``alpha`` is chosen from ``alphas`` by exact leave-one-out error, which
    follows in closed form from the diagonal of the hat matrix; the smallest
    alpha wins ties.
    """

    def __init__(self, alphas=DEFAULT_ALPHAS):
        self.alphas = alphas

    def fit(self, X, y):
        X, y = check_Xy(X, y)
        alphas = np.asarray(self.alphas, dtype=np.float64).ravel()
        if alphas.size == 0 or (alphas <= 0).any():
            raise ValueError("alphas must be a non-empty grid of positive values")
        n = X.shape[0]
        self.mean_ = X.mean(axis=0)
        scale = X.std(axis=0)
        scale[scale == 0] = 1.0
        self.scale_ = scale
        Z = (X - self.mean_) / scale
        y_mean = y.mean()
        yc = y - y_mean
        U, s, Vt = np.linalg.svd(Z, full_matrices=False)
        Uty = U.T @ yc
        s2 = s**2
        loo = np.empty(alphas.size)
        for k, a in enumerate(alphas):
            shrink = s2 / (s2 + a)
            fitted = U @ (shrink * Uty)
            h = 1.0 / n + (U**2) @ shrink
            with np.errstate(divide="ignore", invalid="ignore"):
                r = (yc - fitted) / (1.0 - h)
            err = np.mean(r**2)
            loo[k] = err if np.isfinite(err) else np.inf
        best = int(np.argmin(loo))
        self.alpha_ = float(alphas[best])
        self.loo_errors_ = loo
        self.coef_ = Vt.T @ (s / (s2 + self.alpha_) * Uty)
        self.intercept_ = float(y_mean)
        self.n_features_in_ = X.shape[1]
        return self

    def predict(self, X) -> np.ndarray:
        X = check_Xy(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"expected {self.n_features_in_} features, got {X.shape[1]}")
        return ((X - self.mean_) / self.scale_) @ self.coef_ + self.intercept_


def ridge_fit(X, y, alphas=DEFAULT_ALPHAS) -> RidgeRegressor:
    return RidgeRegressor(alphas).fit(X, y)
