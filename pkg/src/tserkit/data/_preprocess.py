from __future__ import annotations

import numpy as np

from .._random import fisher_yates
from ._dataset import SplitPair, TimeSeries, TimeSeriesDataset


def _interpolate_channel(x: np.ndarray) -> np.ndarray:
    missing = np.isnan(x)
    if not missing.any():
        return x.copy()
    valid = np.flatnonzero(~missing)
    if valid.size == 0:
        raise ValueError("cannot interpolate a channel with no observed values")
    # np.interp holds the end values constant outside the observed range
    out = x.copy()
    out[missing] = np.interp(np.flatnonzero(missing), valid, x[valid])
    return out


def interpolate_missing(series: TimeSeries) -> TimeSeries:
    """Fill NaNs by linear interpolation between the nearest observed values.

    Leading and trailing gaps take the nearest observed value.
    """
    if not series.has_missing:
        return series
    return TimeSeries(np.stack([_interpolate_channel(ch) for ch in series.values]))


def truncate_to_min(dataset: TimeSeriesDataset) -> TimeSeriesDataset:
    """Cut every series to the shortest length in the dataset, keeping the prefix."""
    if dataset.equal_length:
        out = dataset.with_series(dataset.series)
    else:
        m = int(dataset.lengths.min())
        out = dataset.with_series(TimeSeries(s.values[:, :m]) for s in dataset.series)
    out.metadata["equal_length"] = True
    return out


def preprocess(dataset: TimeSeriesDataset, length: int | None = None) -> TimeSeriesDataset:
    """Interpolate missing values, then truncate to ``length`` (default: the minimum)."""
    ds = dataset.with_series(interpolate_missing(s) for s in dataset.series)
    if length is None:
        ds = truncate_to_min(ds)
    else:
        if int(ds.lengths.min()) < length:
            raise ValueError(f"cannot truncate to {length}: shortest series is {ds.lengths.min()}")
        ds = ds.with_series(TimeSeries(s.values[:, :length]) for s in ds.series)
    ds.metadata["equal_length"] = True
    ds.metadata["missing"] = False
    return ds


def preprocess_split(train: TimeSeriesDataset, test: TimeSeriesDataset):
    """Preprocess a train/test pair to a common (minimum) length."""
    m = int(min(train.lengths.min(), test.lengths.min()))
    return preprocess(train, m), preprocess(test, m)


def resample_split(train: TimeSeriesDataset, test: TimeSeriesDataset, seed: int) -> SplitPair:
    """Pool train and test and re-partition them with the original sizes.

    Seed 0 returns the supplied split. Any other seed shuffles the pooled case
    indices (train cases first, then test) with a SplitMix64-driven
    Fisher-Yates shuffle; the first ``len(train)`` shuffled cases form the
    new training set.
    """
    if seed < 0:
        raise ValueError("seed must be non-negative")
    if seed == 0:
        return SplitPair(train, test, 0)
    n_train = train.n_cases
    series = train.series + test.series
    targets = np.concatenate([train.targets, test.targets])
    perm = fisher_yates(len(series), seed)
    tr, te = perm[:n_train], perm[n_train:]
    new_train = TimeSeriesDataset(
        tuple(series[i] for i in tr), targets[tr], train.problem_name, dict(train.metadata)
    )
    new_test = TimeSeriesDataset(
        tuple(series[i] for i in te), targets[te], test.problem_name, dict(test.metadata)
    )
    return SplitPair(new_train, new_test, int(seed))
