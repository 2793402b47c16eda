"""The seven summary statistics used alongside catch22 in interval forests."""

from __future__ import annotations

import math

import numpy as np
from numba import njit

SUMMARY_NAMES = ("mean", "std", "slope", "median", "iqr", "min", "max")

_JIT = dict(cache=True, nogil=True)


@njit(**_JIT)
def _mean(x):
    s = 0.0
    for i in range(x.shape[0]):
        s += x[i]
    return s / x.shape[0]


@njit(**_JIT)
def _std(x):
    n = x.shape[0]
    if n < 2:
        return 0.0
    m = _mean(x)
    s = 0.0
    for i in range(n):
        s += (x[i] - m) * (x[i] - m)
    return math.sqrt(s / (n - 1))


@njit(**_JIT)
def _slope(x):
    n = x.shape[0]
    if n < 2:
        return 0.0
    tm = (n - 1) / 2.0
    xm = _mean(x)
    num = 0.0
    den = 0.0
    for i in range(n):
        dt = i - tm
        num += dt * (x[i] - xm)
        den += dt * dt
    return num / den


@njit(**_JIT)
def _quantile7(s, q):
    # s sorted ascending
    h = (s.shape[0] - 1) * q
    lo = int(math.floor(h))
    hi = min(lo + 1, s.shape[0] - 1)
    return s[lo] + (h - lo) * (s[hi] - s[lo])


@njit(**_JIT)
def summary_feature(k, x):
    """Summary statistic ``k`` (index into ``SUMMARY_NAMES``) of ``x``."""
    if k == 0:
        return _mean(x)
    if k == 1:
        return _std(x)
    if k == 2:
        return _slope(x)
    if k == 5:
        v = x[0]
        for i in range(1, x.shape[0]):
            if x[i] < v:
                v = x[i]
        return v
    if k == 6:
        v = x[0]
        for i in range(1, x.shape[0]):
            if x[i] > v:
                v = x[i]
        return v
    s = np.sort(x)
    if k == 3:
        return _quantile7(s, 0.5)
    if k == 4:
        return _quantile7(s, 0.75) - _quantile7(s, 0.25)
    return np.nan


def _as_series(values, min_length: int, what: str) -> np.ndarray:
    x = np.ascontiguousarray(values, dtype=np.float64)
    if x.ndim != 1:
        raise ValueError(f"{what} expects a 1-d sequence, got shape {x.shape}")
    if x.shape[0] < min_length:
        raise ValueError(f"{what} needs at least {min_length} values, got {x.shape[0]}")
    if not np.isfinite(x).all():
        raise ValueError(f"{what} input contains non-finite values")
    return x


def summary_stat(name: str, values) -> float:
    """One of the summary statistics ``mean, std, slope, median, iqr, min, max``.

    ``std`` uses the ``n - 1`` divisor and ``iqr`` uses linear-interpolation
    quantiles. ``std`` and ``slope`` of a single value are 0.

    Examples
    --------
    >>> summary_stat("iqr", [1, 2, 3, 4, 5, 6, 7, 8])
    3.5
    """
    try:
        k = SUMMARY_NAMES.index(name)
    except ValueError:
        raise ValueError(f"unknown summary statistic {name!r}") from None
    return float(summary_feature(k, _as_series(values, 1, "summary_stat")))


def summary_stats(values) -> np.ndarray:
    """All seven summary statistics in ``SUMMARY_NAMES`` order."""
    x = _as_series(values, 1, "summary_stats")
    return np.array([summary_feature(k, x) for k in range(len(SUMMARY_NAMES))])
