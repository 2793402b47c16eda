"""Numba transform from stored intervals and attribute ids to a feature matrix."""

from __future__ import annotations

import numpy as np
from numba import njit

from ..features._pool import pool_features_of
from ..transforms import REPRESENTATIONS, IntervalSpec

_REP_CODE = {name: i for i, name in enumerate(REPRESENTATIONS)}


@njit(cache=True, nogil=True)
def _transform(base, diff, pgram, reps, starts, lengths, channels, ks):
    n = base.shape[0]
    n_int = reps.shape[0]
    a = ks.shape[0]
    out = np.empty((n, n_int * a))
    for j in range(n_int):
        buf = np.empty(lengths[j])
        for i in range(n):
            c = channels[j]
            s = starts[j]
            for t in range(lengths[j]):
                if reps[j] == 0:
                    buf[t] = base[i, c, s + t]
                elif reps[j] == 1:
                    buf[t] = diff[i, c, s + t]
                else:
                    buf[t] = pgram[i, c, s + t]
            vals = pool_features_of(buf, ks)
            for q in range(a):
                out[i, j * a + q] = vals[q]
    return out


def interval_transform(reps: dict, intervals, attributes) -> np.ndarray:
    """Features ``attributes`` of every interval; column ``a * j + c``.

    ``reps`` maps representation names to ``(n, d, length)`` arrays; a
    missing representation is never referenced by ``intervals``.
    """
    base = reps["base"]
    empty = np.zeros((base.shape[0], base.shape[1], 1))
    intervals = list(intervals)
    code = np.array([_REP_CODE[s.representation] for s in intervals], dtype=np.int64)
    return _transform(
        base,
        reps.get("diff", empty),
        reps.get("pgram", empty),
        code,
        np.array([s.start for s in intervals], dtype=np.int64),
        np.array([s.length for s in intervals], dtype=np.int64),
        np.array([s.channel for s in intervals], dtype=np.int64),
        np.asarray(attributes, dtype=np.int64),
    )


__all__ = ["IntervalSpec", "interval_transform"]
