"""The 29-feature candidate pool of interval forests: catch22 then the summaries."""

from __future__ import annotations

import numpy as np
from numba import njit

from ._catch22 import catch22_feature, catch22_raw, is_constant, zscore
from ._summary import _as_series, summary_feature

N_CATCH22 = 22
N_POOL = 29


def catch22(values) -> np.ndarray:
    """The 22 catch22 features of ``values`` (at least 3 values).

    Features are computed on the z-normalised series, so a constant input
    has no defined value; like every other non-finite result it is
    imputed as 0.

    Examples
    --------
    >>> t = np.arange(64)
    >>> float(catch22(np.cos(2 * np.pi * t / 8))[3])  # CO_FirstMin_ac
    4.0
    """
    x = _as_series(values, 3, "catch22")
    out = catch22_raw(x)
    out[~np.isfinite(out)] = 0.0
    return out


@njit(cache=True, nogil=True)
def pool_feature(k, x, z, constant):
    """Pool feature ``k`` of raw ``x`` given its z-normalisation ``z``."""
    if k < N_CATCH22:
        if constant:
            return 0.0
        v = catch22_feature(k, z)
    else:
        v = summary_feature(k - N_CATCH22, x)
    if not np.isfinite(v):
        return 0.0
    return v


@njit(cache=True, nogil=True)
def pool_features_of(x, ks):
    """Selected pool features of one interval; non-finite values become 0."""
    out = np.empty(ks.shape[0])
    constant = is_constant(x)
    need_z = False
    for j in range(ks.shape[0]):
        if ks[j] < N_CATCH22:
            need_z = True
    z = zscore(x) if need_z and not constant else x
    for j in range(ks.shape[0]):
        out[j] = pool_feature(ks[j], x, z, constant)
    return out
