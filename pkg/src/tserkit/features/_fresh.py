"""A fixed catalogue of 87 TSFresh-style features.

The definitions follow the corresponding ``tsfresh.feature_extraction``
calculators (population variance where tsfresh uses it, bias-corrected
skewness and kurtosis as in pandas). All functions operate row-wise on a
2-d array of equal-length series so a whole channel is transformed at once.
"""

from __future__ import annotations

import numpy as np

_ACF_LAGS = tuple(range(1, 11))
_C3_LAGS = (1, 2, 3)
_FFT_BINS = tuple(range(1, 11))
_QUANTILES = (0.1, 0.25, 0.75, 0.9)
_SIGMAS = (1, 2, 3)


def _catalogue():
    rows = [
        ("mean", "moments", "arithmetic mean"),
        ("variance", "moments", "population variance"),
        ("skewness", "moments", "bias-corrected sample skewness (G1)"),
        ("kurtosis", "moments", "bias-corrected sample excess kurtosis (G2)"),
        ("median", "order", "median"),
        ("minimum", "order", "minimum"),
        ("maximum", "order", "maximum"),
    ]
    rows += [(f"quantile_q{q}", "order", f"{q} quantile, linear interpolation") for q in _QUANTILES]
    rows += [
        ("abs_energy", "change", "sum of squared values"),
        ("mean_abs_change", "change", "mean absolute first difference"),
        ("mean_change", "change", "mean first difference"),
        ("zero_crossings", "change", "number of sign changes across zero"),
        ("count_above_mean", "counts", "values strictly above the mean"),
        ("count_below_mean", "counts", "values strictly below the mean"),
        ("longest_strike_above_mean", "counts", "longest run strictly above the mean"),
        ("longest_strike_below_mean", "counts", "longest run strictly below the mean"),
        ("first_location_of_maximum", "location", "relative position of the first maximum"),
        ("last_location_of_maximum", "location", "relative position after the last maximum"),
        ("first_location_of_minimum", "location", "relative position of the first minimum"),
        ("last_location_of_minimum", "location", "relative position after the last minimum"),
    ]
    rows += [(f"autocorrelation_lag{k}", "autocorrelation", f"autocorrelation at lag {k}") for k in _ACF_LAGS]
    rows += [(f"c3_lag{k}", "nonlinearity", f"mean of x[t] x[t+{k}] x[t+{2 * k}]") for k in _C3_LAGS]
    rows += [
        (f"time_reversal_asymmetry_lag{k}", "nonlinearity", f"time-reversal asymmetry statistic at lag {k}")
        for k in _C3_LAGS
    ]
    rows += [
        ("cid_ce_normalized", "complexity", "complexity estimate of the z-normalised series"),
        ("cid_ce", "complexity", "complexity estimate, sqrt of summed squared differences"),
        ("binned_entropy_10", "complexity", "entropy of a 10-bin equal-width histogram"),
        ("linear_trend_slope", "trend", "least-squares slope against the index"),
        ("linear_trend_intercept", "trend", "least-squares intercept"),
        ("linear_trend_r2", "trend", "squared correlation of the trend fit"),
        ("linear_trend_stderr", "trend", "standard error of the slope"),
    ]
    rows += [
        (f"ratio_beyond_{r}_sigma", "distribution", f"fraction of values more than {r} std from the mean")
        for r in _SIGMAS
    ]
    for part in ("real", "imag", "abs"):
        rows += [(f"fft_coefficient_{k}_{part}", "spectral", f"{part} part of DFT bin {k}") for k in _FFT_BINS]
    rows += [("spectral_centroid", "spectral", "magnitude-weighted mean DFT bin index")]
    rows += [
        ("summary_mean", "summary", "mean"),
        ("summary_std", "summary", "sample standard deviation"),
        ("summary_slope", "summary", "least-squares slope"),
        ("summary_median", "summary", "median"),
        ("summary_iqr", "summary", "interquartile range"),
        ("summary_min", "summary", "minimum"),
        ("summary_max", "summary", "maximum"),
    ]
    return tuple(rows)


FRESH_CATALOGUE = _catalogue()
FRESH_NAMES = tuple(r[0] for r in FRESH_CATALOGUE)


def _longest_run(mask: np.ndarray) -> np.ndarray:
    out = np.zeros(mask.shape[0])
    run = np.zeros(mask.shape[0])
    for t in range(mask.shape[1]):
        run = np.where(mask[:, t], run + 1, 0)
        out = np.maximum(out, run)
    return out


def _safe_div(num, den):
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(den == 0, np.nan, num / np.where(den == 0, 1.0, den))


def fresh_transform(X) -> np.ndarray:
    """Row-wise catalogue features of a ``(n_series, length)`` array.

    Non-finite feature values are replaced by 0.
    """
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2:
        raise ValueError(f"expected a 2-d array, got shape {X.shape}")
    n, m = X.shape
    if m < 4:
        raise ValueError(f"fresh features need series of length >= 4, got {m}")
    if not np.isfinite(X).all():
        raise ValueError("input contains non-finite values")

    cols = []
    mu = X.mean(axis=1)
    xc = X - mu[:, None]
    m2 = (xc**2).mean(axis=1)
    m3 = (xc**3).mean(axis=1)
    m4 = (xc**4).mean(axis=1)
    sd = np.sqrt(m2)
    const = m2 <= 1e-30 * np.maximum(1.0, mu**2)

    g1 = _safe_div(m3, m2**1.5)
    skew = np.sqrt(m * (m - 1.0)) / (m - 2.0) * g1
    g2 = _safe_div(m4, m2**2) - 3.0
    kurt = ((m + 1.0) * g2 + 6.0) * (m - 1.0) / ((m - 2.0) * (m - 3.0))
    cols += [mu, m2, np.where(const, 0.0, skew), np.where(const, 0.0, kurt)]

    S = np.sort(X, axis=1)
    cols += [np.median(X, axis=1), S[:, 0], S[:, -1]]
    cols += [np.quantile(X, q, axis=1) for q in _QUANTILES]

    dX = np.diff(X, axis=1)
    pos = X > 0
    cols += [
        (X**2).sum(axis=1),
        np.abs(dX).mean(axis=1),
        (X[:, -1] - X[:, 0]) / (m - 1),
        (pos[:, 1:] != pos[:, :-1]).sum(axis=1).astype(float),
    ]

    above = X > mu[:, None]
    below = X < mu[:, None]
    cols += [above.sum(axis=1).astype(float), below.sum(axis=1).astype(float)]
    cols += [_longest_run(above), _longest_run(below)]

    cols += [
        np.argmax(X, axis=1) / m,
        1.0 - np.argmax(X[:, ::-1], axis=1) / m,
        np.argmin(X, axis=1) / m,
        1.0 - np.argmin(X[:, ::-1], axis=1) / m,
    ]

    for k in _ACF_LAGS:
        if k >= m:
            cols.append(np.full(n, np.nan))
            continue
        num = (xc[:, : m - k] * xc[:, k:]).sum(axis=1)
        cols.append(_safe_div(num, (m - k) * m2))

    for k in _C3_LAGS:
        if 2 * k >= m:
            cols.append(np.full(n, np.nan))
        else:
            cols.append((X[:, 2 * k :] * X[:, k : m - k] * X[:, : m - 2 * k]).mean(axis=1))
    for k in _C3_LAGS:
        if 2 * k >= m:
            cols.append(np.full(n, np.nan))
        else:
            a, b, c = X[:, 2 * k :], X[:, k : m - k], X[:, : m - 2 * k]
            cols.append((a * a * b - b * c * c).mean(axis=1))

    Z = np.where(const[:, None], 0.0, xc / np.where(const, 1.0, sd)[:, None])
    cols.append(np.sqrt((np.diff(Z, axis=1) ** 2).sum(axis=1)))
    cols.append(np.sqrt((dX**2).sum(axis=1)))

    ent = np.empty(n)
    for i in range(n):
        hist = np.histogram(X[i], bins=10)[0]
        p = hist[hist > 0] / m
        ent[i] = -(p * np.log(p)).sum()
    cols.append(ent)

    t = np.arange(m, dtype=np.float64)
    tc = t - t.mean()
    sxx = (tc**2).sum()
    sxy = xc @ tc
    syy = (xc**2).sum(axis=1)
    slope = sxy / sxx
    r2 = np.where(syy == 0, 0.0, _safe_div(sxy**2, sxx * syy))
    r2 = np.minimum(r2, 1.0)
    stderr = np.sqrt(np.maximum((1.0 - r2) * syy / sxx / (m - 2), 0.0))
    cols += [slope, mu - slope * t.mean(), r2, stderr]

    dev = np.abs(xc)
    cols += [(dev > r * sd[:, None]).mean(axis=1) for r in _SIGMAS]

    F = np.fft.rfft(X, axis=1)
    n_bins = F.shape[1]
    for part in (np.real, np.imag, np.abs):
        for k in _FFT_BINS:
            cols.append(part(F[:, k]) if k < n_bins else np.full(n, np.nan))
    mag = np.abs(F)
    cols.append(_safe_div(mag @ np.arange(n_bins), mag.sum(axis=1)))

    q25, q75 = np.quantile(X, [0.25, 0.75], axis=1)
    cols += [mu, X.std(axis=1, ddof=1), slope, np.median(X, axis=1), q75 - q25, S[:, 0], S[:, -1]]

    out = np.column_stack(cols)
    out[~np.isfinite(out)] = 0.0
    return out


def fresh_features(values) -> np.ndarray:
    """Catalogue features of one series, ordered as ``FRESH_NAMES``.

    Examples
    --------
    >>> float(fresh_features([1.0, -1.0, 1.0, -1.0])[FRESH_NAMES.index("zero_crossings")])
    3.0
    """
    x = np.asarray(values, dtype=np.float64)
    if x.ndim != 1:
        raise ValueError(f"expected a 1-d sequence, got shape {x.shape}")
    return fresh_transform(x[None, :])[0]
