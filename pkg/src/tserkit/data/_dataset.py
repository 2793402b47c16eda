from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np


class TimeSeries:
    """One case: ``d`` channels of equal length, stored as a ``(d, m)`` array.

    Missing observations are NaN.
    """

    __slots__ = ("_values",)

    def __init__(self, channels):
        values = np.array(channels, dtype=np.float64, copy=True)
        if values.ndim == 1:
            values = values[np.newaxis, :]
        if values.ndim != 2:
            raise ValueError("a series must be 1D (univariate) or 2D (channels x length)")
        if values.shape[0] < 1:
            raise ValueError("a series needs at least one channel")
        if values.shape[1] < 1:
            raise ValueError("empty channel")
        values.flags.writeable = False
        self._values = values

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def n_channels(self) -> int:
        return self._values.shape[0]

    @property
    def length(self) -> int:
        return self._values.shape[1]

    @property
    def has_missing(self) -> bool:
        return bool(np.isnan(self._values).any())

    def channel(self, k: int) -> np.ndarray:
        return self._values[k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TimeSeries):
            return NotImplemented
        return self._values.shape == other._values.shape and bool(
            np.array_equal(self._values, other._values, equal_nan=True)
        )

    def __hash__(self):
        return hash((self._values.shape, self._values.tobytes()))

    def __repr__(self) -> str:
        return f"TimeSeries(d={self.n_channels}, m={self.length})"


@dataclass(frozen=True)
class TimeSeriesDataset:
    """``n`` cases with continuous targets.

    Parameters
    ----------
    series : sequence of TimeSeries
        All cases must have the same number of channels; lengths may differ.
    targets : array-like of float
        One finite response per case.
    problem_name : str
    """

    series: tuple
    targets: np.ndarray
    problem_name: str = "unnamed"
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        series = tuple(s if isinstance(s, TimeSeries) else TimeSeries(s) for s in self.series)
        targets = np.array(self.targets, dtype=np.float64, copy=True).reshape(-1)
        if len(series) == 0:
            raise ValueError("dataset must contain at least one case")
        if len(series) != targets.shape[0]:
            raise ValueError(
                f"{len(series)} series but {targets.shape[0]} targets"
            )
        if not np.all(np.isfinite(targets)):
            raise ValueError("targets must be finite")
        d = series[0].n_channels
        for i, s in enumerate(series):
            if s.n_channels != d:
                raise ValueError(f"case {i} has {s.n_channels} channels, expected {d}")
        targets.flags.writeable = False
        object.__setattr__(self, "series", series)
        object.__setattr__(self, "targets", targets)

    @classmethod
    def from_numpy(cls, X, y, problem_name: str = "unnamed") -> "TimeSeriesDataset":
        X = np.asarray(X, dtype=np.float64)
        if X.ndim == 2:
            X = X[:, np.newaxis, :]
        if X.ndim != 3:
            raise ValueError("X must have shape (n_cases, n_channels, n_timepoints)")
        return cls(tuple(TimeSeries(x) for x in X), y, problem_name)

    def __len__(self) -> int:
        return len(self.series)

    @property
    def n_cases(self) -> int:
        return len(self.series)

    @property
    def n_channels(self) -> int:
        return self.series[0].n_channels

    @property
    def lengths(self) -> np.ndarray:
        return np.array([s.length for s in self.series], dtype=np.int64)

    @property
    def equal_length(self) -> bool:
        lengths = self.lengths
        return bool(np.all(lengths == lengths[0]))

    @property
    def has_missing(self) -> bool:
        return any(s.has_missing for s in self.series)

    @property
    def is_preprocessed(self) -> bool:
        return self.equal_length and not self.has_missing

    def to_numpy(self) -> np.ndarray:
        """Stack into a ``(n_cases, n_channels, n_timepoints)`` array."""
        if not self.equal_length:
            raise ValueError("unequal-length dataset; call truncate_to_min first")
        return np.stack([s.values for s in self.series])

    def subset(self, indices: Sequence[int], problem_name: str | None = None) -> "TimeSeriesDataset":
        idx = [int(i) for i in indices]
        return TimeSeriesDataset(
            tuple(self.series[i] for i in idx),
            self.targets[idx],
            self.problem_name if problem_name is None else problem_name,
            dict(self.metadata),
        )

    def with_series(self, series) -> "TimeSeriesDataset":
        return replace(self, series=tuple(series), metadata=dict(self.metadata))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TimeSeriesDataset):
            return NotImplemented
        return (
            self.series == other.series
            and np.array_equal(self.targets, other.targets)
        )

    def __repr__(self) -> str:
        lengths = self.lengths
        lo, hi = int(lengths.min()), int(lengths.max())
        m = str(lo) if lo == hi else f"{lo}-{hi}"
        return (
            f"TimeSeriesDataset({self.problem_name!r}, n={self.n_cases}, "
            f"d={self.n_channels}, m={m})"
        )


@dataclass(frozen=True)
class SplitPair:
    train: TimeSeriesDataset
    test: TimeSeriesDataset
    seed: int = 0
