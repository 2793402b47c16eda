"""Seeded synthetic regression problems with known generating rules."""

from __future__ import annotations

import numpy as np

from .._random import generator
from ._dataset import TimeSeriesDataset

PROBLEMS = ("interval-mean", "dominant-frequency", "trend-slope")


def hidden_window(m: int) -> tuple[int, int]:
    """The ``[start, stop)`` window whose mean is the interval-mean target."""
    return m // 4, m // 2


def synth_generate(
    problem: str,
    n: int,
    m: int,
    d: int = 1,
    noise: float = 0.1,
    seed: int = 0,
) -> TimeSeriesDataset:
    """Generate a synthetic dataset whose target is recoverable from channel 0.

    ``interval-mean``
        Standard normal series; channel 0 carries a case-specific level
        ``U(-2, 2)`` plus ``noise`` inside the hidden window
        ``[m//4, m//2)``. The target is the exact mean of that window.
    ``dominant-frequency``
        Channel 0 is ``sin(2 pi f t / m + phase)`` plus ``noise``, with the
        integer frequency ``f`` uniform on ``[1, m//4]``; the target is ``f``.
    ``trend-slope``
        Channel 0 is ``slope * t + intercept`` plus ``noise`` with
        ``slope ~ U(-1, 1)`` and ``intercept ~ N(0, 1)``; the target is the
        slope.

    Channels other than 0 are standard normal noise.
    """
    if problem not in PROBLEMS:
        raise ValueError(f"unknown problem {problem!r}; expected one of {PROBLEMS}")
    if n < 10:
        raise ValueError("n must be at least 10")
    if m < 16:
        raise ValueError("m must be at least 16")
    if d < 1:
        raise ValueError("d must be at least 1")
    if noise < 0:
        raise ValueError("noise must be non-negative")

    rng = generator(seed)
    X = rng.standard_normal((n, d, m))
    t = np.arange(m, dtype=np.float64)
    if problem == "interval-mean":
        lo, hi = hidden_window(m)
        level = rng.uniform(-2.0, 2.0, size=n)
        X[:, 0, lo:hi] = level[:, None] + noise * rng.standard_normal((n, hi - lo))
        y = X[:, 0, lo:hi].mean(axis=1)
    elif problem == "dominant-frequency":
        f = rng.integers(1, m // 4 + 1, size=n)
        phase = rng.uniform(0.0, 2.0 * np.pi, size=n)
        X[:, 0, :] = np.sin(2.0 * np.pi * f[:, None] * t / m + phase[:, None])
        X[:, 0, :] += noise * rng.standard_normal((n, m))
        y = f.astype(np.float64)
    else:
        slope = rng.uniform(-1.0, 1.0, size=n)
        intercept = rng.standard_normal(n)
        X[:, 0, :] = slope[:, None] * t + intercept[:, None]
        X[:, 0, :] += noise * rng.standard_normal((n, m))
        y = slope
    name = f"synth-{problem}"
    ds = TimeSeriesDataset.from_numpy(X, y, name)
    ds.metadata.update({"problem": problem, "noise": noise, "seed": seed})
    return ds


def train_test_split(dataset: TimeSeriesDataset, train_fraction: float = 0.7):
    """Deterministic head/tail split (cases are already in random order)."""
    n_train = int(round(train_fraction * dataset.n_cases))
    idx = np.arange(dataset.n_cases)
    return dataset.subset(idx[:n_train]), dataset.subset(idx[n_train:])
