from __future__ import annotations

import numpy as np


def rmse(pred, actual) -> float:
    """Root mean squared error.

    >>> round(rmse([2, 2, 2], [1, 2, 3]), 5)
    0.8165
    """
    p = np.asarray(pred, dtype=np.float64).ravel()
    a = np.asarray(actual, dtype=np.float64).ravel()
    if p.shape != a.shape:
        raise ValueError(f"length mismatch: {p.size} predictions for {a.size} targets")
    if p.size == 0:
        raise ValueError("rmse of an empty sequence")
    return float(np.sqrt(np.mean((p - a) ** 2)))


def relative_rmse(rmse_by_regressor: dict) -> dict:
    """``rmse / (rmse + median rmse)`` for each regressor on one dataset.

    The regressor at the median maps to 0.5, better ones fall below it. When
    both terms are zero the value is 0.5.
    """
    if len(rmse_by_regressor) < 2:
        raise ValueError("relative RMSE needs at least two regressors")
    med = float(np.median(list(rmse_by_regressor.values())))
    out = {}
    for name, r in rmse_by_regressor.items():
        den = r + med
        out[name] = 0.5 if den == 0 else float(r / den)
    return out
