from __future__ import annotations

import numpy as np

from ..data import TimeSeriesDataset


def flatten(X) -> np.ndarray:
    """Channel-major concatenation: channel 0's values, then channel 1's, ...

    Examples
    --------
    >>> flatten(np.array([[[1, 2, 3], [4, 5, 6]]], dtype=float))
    array([[1., 2., 3., 4., 5., 6.]])
    """
    X = np.asarray(X, dtype=np.float64)
    return X.reshape(X.shape[0], -1)


def as_case_array(data, y=None):
    """Validate fit/predict input and return ``(X, y)`` with ``X`` of shape (n, d, m).

    ``data`` is a preprocessed :class:`TimeSeriesDataset` (targets taken from
    it unless ``y`` is given) or an array of shape (n, m) or (n, d, m).
    """
    if isinstance(data, TimeSeriesDataset):
        if not data.equal_length:
            raise ValueError("dataset is not preprocessed: series lengths differ (truncate first)")
        if data.has_missing:
            raise ValueError("dataset is not preprocessed: missing values present (interpolate first)")
        X = data.to_numpy()
        if y is None:
            y = data.targets
    else:
        X = np.asarray(data, dtype=np.float64)
        if X.ndim == 2:
            X = X[:, np.newaxis, :]
        if X.ndim != 3:
            raise ValueError(f"expected an array of shape (n, m) or (n, d, m), got {X.shape}")
        if not np.isfinite(X).all():
            raise ValueError("input contains missing or non-finite values; preprocess first")
    if X.shape[0] < 1:
        raise ValueError("no cases")
    if y is not None:
        y = np.asarray(y, dtype=np.float64)
        if y.shape != (X.shape[0],):
            raise ValueError(f"{y.shape[0] if y.ndim else 0} targets for {X.shape[0]} cases")
        if not np.isfinite(y).all():
            raise ValueError("targets must be finite")
    return np.ascontiguousarray(X), y


class BaseTSER:
    """Common contract: ``fit(data, y=None)`` then ``predict(data)``.

    Subclasses implement ``_fit(X, y)`` and ``_predict(X)`` on validated
    ``(n, d, m)`` arrays.
    """

    name = "base"
    min_length = 1

    def fit(self, data, y=None):
        X, y = as_case_array(data, y)
        if y is None:
            raise ValueError("targets are required to fit")
        if X.shape[2] < self.min_length:
            raise ValueError(f"{self.name} needs series of length >= {self.min_length}, got {X.shape[2]}")
        self.n_channels_ = X.shape[1]
        self.length_ = X.shape[2]
        self._fit(X, y)
        return self

    def _check_predict(self, data) -> np.ndarray:
        if not hasattr(self, "length_"):
            raise RuntimeError(f"{type(self).__name__} is not fitted")
        X, _ = as_case_array(data)
        if X.shape[1] != self.n_channels_:
            raise ValueError(f"fitted on {self.n_channels_} channels, got {X.shape[1]}")
        if X.shape[2] != self.length_:
            raise ValueError(f"fitted on series of length {self.length_}, got {X.shape[2]}")
        return X

    def predict(self, data) -> np.ndarray:
        return self._predict(self._check_predict(data))

    def get_params(self) -> dict:
        return {k: v for k, v in vars(self).items() if not k.endswith("_") and not k.startswith("_")}

    def __repr__(self) -> str:
        args = ", ".join(f"{k}={v!r}" for k, v in self.get_params().items())
        return f"{type(self).__name__}({args})"


class EnsembleTSER(BaseTSER):
    """Ensembles predict with the exact mean of their members."""

    def predict_members(self, data) -> np.ndarray:
        """Member predictions, shape ``(n_members, n_cases)``."""
        return self._predict_members(self._check_predict(data))

    def _predict(self, X):
        return self._predict_members(X).mean(axis=0)
