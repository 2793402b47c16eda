"""Series representations and random intervals for interval ensembles.

Three representations of each case are used: the base series, its first
order differences and its periodogram. Arrays follow the
``(n_cases, n_channels, length)`` layout throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .data import TimeSeries

REPRESENTATIONS = ("base", "diff", "pgram")

# shortest representation an interval can be drawn from: b in [0, L-4], l >= 3
MIN_INTERVAL_SOURCE = 4


def _values(x) -> np.ndarray:
    if isinstance(x, TimeSeries):
        return x.values
    return np.asarray(x, dtype=np.float64)


def first_difference(series):
    """Per-channel first differences ``x[t+1] - x[t]``.

    Accepts a :class:`TimeSeries` (returning one) or an array whose last
    axis is time.
    """
    v = _values(series)
    if v.shape[-1] < 2:
        raise ValueError("first differences need a series of length >= 2")
    out = np.diff(v, axis=-1)
    return TimeSeries(out) if isinstance(series, TimeSeries) else out


def periodogram(series):
    """Per-channel ``|X_f|^2`` for ``f = 1 .. floor(m/2)``.

    ``X`` is the unnormalised DFT of the raw channel; no detrending or
    window is applied and the DC bin is dropped.
    """
    v = _values(series)
    m = v.shape[-1]
    if m < 4:
        raise ValueError("the periodogram needs a series of length >= 4")
    F = np.fft.rfft(v, axis=-1)[..., 1 : m // 2 + 1]
    out = F.real**2 + F.imag**2
    return TimeSeries(out) if isinstance(series, TimeSeries) else out


@dataclass(frozen=True)
class RepresentationSet:
    """Base series, first differences and periodogram of one case."""

    base: TimeSeries
    diff: TimeSeries
    pgram: TimeSeries

    @classmethod
    def of(cls, series: TimeSeries) -> "RepresentationSet":
        return cls(series, first_difference(series), periodogram(series))

    def get(self, name: str) -> TimeSeries:
        if name not in REPRESENTATIONS:
            raise ValueError(f"unknown representation {name!r}")
        return getattr(self, name)


def representation_arrays(X: np.ndarray) -> dict[str, np.ndarray]:
    """All three representations of a 3-d case array, as contiguous arrays."""
    X = np.ascontiguousarray(X, dtype=np.float64)
    return {
        "base": X,
        "diff": np.ascontiguousarray(first_difference(X)),
        "pgram": np.ascontiguousarray(periodogram(X)),
    }


@dataclass(frozen=True)
class IntervalSpec:
    """Interval ``[start, start + length)`` of ``channel`` in ``representation``."""

    representation: str
    start: int
    length: int
    channel: int

    def __post_init__(self):
        if self.representation not in REPRESENTATIONS:
            raise ValueError(f"unknown representation {self.representation!r}")
        if self.start < 0 or self.length < 3 or self.channel < 0:
            raise ValueError(f"invalid interval {self}")

    @property
    def stop(self) -> int:
        return self.start + self.length


def sample_interval(rng: np.random.Generator, rep_len: int, d: int, representation: str = "base") -> IntervalSpec:
    """Draw a random interval of a representation of length ``rep_len``.

    The start is uniform on ``[0, rep_len - 4]``, the length uniform on
    ``[3, max(3, rep_len // 2)]`` and the channel uniform on ``[0, d - 1]``,
    drawn in that order. A length running past the end is clamped to it.

    Examples
    --------
    >>> s = sample_interval(np.random.default_rng(0), 10, 1)
    >>> 0 <= s.start <= 6 and 3 <= s.length <= 5 and s.channel == 0
    True
    """
    if rep_len < MIN_INTERVAL_SOURCE:
        raise ValueError(f"cannot draw an interval from a representation of length {rep_len}")
    if d < 1:
        raise ValueError("d must be at least 1")
    b = int(rng.integers(0, rep_len - 3))
    length = int(rng.integers(3, max(3, rep_len // 2) + 1))
    o = int(rng.integers(0, d))
    return IntervalSpec(representation, b, min(length, rep_len - b), o)


def extract_interval(rep, spec: IntervalSpec) -> np.ndarray:
    """The slice ``[b, b + l)`` of channel ``o`` of the named representation."""
    series = rep.get(spec.representation) if isinstance(rep, RepresentationSet) else rep
    v = _values(series)
    if v.ndim == 1:
        v = v[None, :]
    if spec.channel >= v.shape[0]:
        raise IndexError(f"channel {spec.channel} out of range for {v.shape[0]} channels")
    if spec.stop > v.shape[1]:
        raise IndexError(f"interval [{spec.start}, {spec.stop}) exceeds length {v.shape[1]}")
    return v[spec.channel, spec.start : spec.stop]
