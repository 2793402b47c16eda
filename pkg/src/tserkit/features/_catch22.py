"""The 22 canonical time series characteristics (catch22).

Each feature follows the published C reference implementation, including
its quirks (bin-edge conventions, its own quantile rule, the truncated value
of pi used by the Welch summaries). As in the reference Python wrapper,
every feature is evaluated on the z-normalised series.

Feature order (index: name)::

     0 DN_HistogramMode_5
     1 DN_HistogramMode_10
     2 CO_f1ecac
     3 CO_FirstMin_ac
     4 CO_HistogramAMI_even_2_5
     5 CO_trev_1_num
     6 MD_hrv_classic_pnn40
     7 SB_BinaryStats_mean_longstretch1
     8 SB_TransitionMatrix_3ac_sumdiagcov
     9 PD_PeriodicityWang_th0_01
    10 CO_Embed2_Dist_tau_d_expfit_meandiff
    11 IN_AutoMutualInfoStats_40_gaussian_fmmi
    12 FC_LocalSimple_mean1_tauresrat
    13 DN_OutlierInclude_p_001_mdrmd
    14 DN_OutlierInclude_n_001_mdrmd
    15 SP_Summaries_welch_rect_area_5_1
    16 SB_BinaryStats_diff_longstretch0
    17 SB_MotifThree_quantile_hh
    18 SC_FluctAnal_2_rsrangefit_50_1_logi_prop_r1
    19 SC_FluctAnal_2_dfa_50_1_2_logi_prop_r1
    20 SP_Summaries_welch_rect_centroid
    21 FC_LocalSimple_mean3_stderr
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

CATCH22_NAMES = (
    "DN_HistogramMode_5",
    "DN_HistogramMode_10",
    "CO_f1ecac",
    "CO_FirstMin_ac",
    "CO_HistogramAMI_even_2_5",
    "CO_trev_1_num",
    "MD_hrv_classic_pnn40",
    "SB_BinaryStats_mean_longstretch1",
    "SB_TransitionMatrix_3ac_sumdiagcov",
    "PD_PeriodicityWang_th0_01",
    "CO_Embed2_Dist_tau_d_expfit_meandiff",
    "IN_AutoMutualInfoStats_40_gaussian_fmmi",
    "FC_LocalSimple_mean1_tauresrat",
    "DN_OutlierInclude_p_001_mdrmd",
    "DN_OutlierInclude_n_001_mdrmd",
    "SP_Summaries_welch_rect_area_5_1",
    "SB_BinaryStats_diff_longstretch0",
    "SB_MotifThree_quantile_hh",
    "SC_FluctAnal_2_rsrangefit_50_1_logi_prop_r1",
    "SC_FluctAnal_2_dfa_50_1_2_logi_prop_r1",
    "SP_Summaries_welch_rect_centroid",
    "FC_LocalSimple_mean3_stderr",
)

CATCH22_SHORT_NAMES = (
    "mode_5",
    "mode_10",
    "acf_timescale",
    "acf_first_min",
    "ami2",
    "trev",
    "high_fluctuation",
    "stretch_high",
    "transition_matrix",
    "periodicity",
    "embedding_dist",
    "ami_timescale",
    "whiten_timescale",
    "outlier_timing_pos",
    "outlier_timing_neg",
    "low_freq_power",
    "stretch_decreasing",
    "entropy_pairs",
    "rs_range",
    "dfa",
    "centroid_freq",
    "forecast_error",
)

# numpy error model: 0/0 yields nan as in the C reference instead of raising
_JIT = dict(cache=True, nogil=True, error_model="numpy")

# ---------------------------------------------------------------------------
# basic statistics (same summation order as the reference)


@njit(**_JIT)
def _mean(a):
    s = 0.0
    for i in range(a.shape[0]):
        s += a[i]
    return s / a.shape[0]


@njit(**_JIT)
def _stddev(a):
    m = _mean(a)
    s = 0.0
    for i in range(a.shape[0]):
        s += (a[i] - m) * (a[i] - m)
    return math.sqrt(s / (a.shape[0] - 1))


@njit(**_JIT)
def _min(a):
    m = a[0]
    for i in range(1, a.shape[0]):
        if a[i] < m:
            m = a[i]
    return m


@njit(**_JIT)
def _max(a):
    m = a[0]
    for i in range(1, a.shape[0]):
        if a[i] > m:
            m = a[i]
    return m


@njit(**_JIT)
def _median(a):
    b = np.sort(a)
    n = b.shape[0]
    if n % 2 == 1:
        return b[n // 2]
    return (b[n // 2] + b[n // 2 - 1]) / 2.0


@njit(**_JIT)
def _norm(a):
    s = 0.0
    for i in range(a.shape[0]):
        s += a[i] * a[i]
    return math.sqrt(s)


@njit(**_JIT)
def _linreg(n, x, y):
    sumx = 0.0
    sumx2 = 0.0
    sumxy = 0.0
    sumy = 0.0
    for i in range(n):
        sumx += x[i]
        sumx2 += x[i] * x[i]
        sumxy += x[i] * y[i]
        sumy += y[i]
    denom = n * sumx2 - sumx * sumx
    if denom == 0:
        return 0.0, 0.0
    m = (n * sumxy - sumx * sumy) / denom
    b = (sumy * sumx2 - sumx * sumxy) / denom
    return m, b


@njit(**_JIT)
def _corr(x, y):
    n = x.shape[0]
    mx = _mean(x)
    my = _mean(y)
    nom = 0.0
    dx = 0.0
    dy = 0.0
    for i in range(n):
        nom += (x[i] - mx) * (y[i] - my)
        dx += (x[i] - mx) * (x[i] - mx)
        dy += (y[i] - my) * (y[i] - my)
    return nom / math.sqrt(dx * dy)


@njit(**_JIT)
def zscore(a):
    m = _mean(a)
    sd = _stddev(a)
    out = np.empty_like(a)
    for i in range(a.shape[0]):
        out[i] = (a[i] - m) / sd
    return out


@njit(**_JIT)
def _f_entropy(a):
    f = 0.0
    for i in range(a.shape[0]):
        if a[i] > 0:
            f += a[i] * math.log(a[i])
    return -f


@njit(**_JIT)
def _quantile(y, quant):
    """The reference's quantile: midpoint plotting positions (type 5)."""
    size = y.shape[0]
    tmp = np.sort(y)
    q = 0.5 / size
    if quant < q:
        return tmp[0]
    if quant > 1 - q:
        return tmp[size - 1]
    idx = size * quant - 0.5
    lo = int(math.floor(idx))
    hi = int(math.ceil(idx))
    return tmp[lo] + (idx - lo) * (tmp[hi] - tmp[lo]) / (hi - lo)


@njit(**_JIT)
def _coarsegrain(y, num_groups):
    size = y.shape[0]
    ls = np.empty(num_groups + 1)
    step = 1.0 / num_groups
    start = 0.0
    for i in range(num_groups + 1):
        ls[i] = start
        start += step
    th = np.empty(num_groups + 1)
    for i in range(num_groups + 1):
        th[i] = _quantile(y, ls[i])
    th[0] -= 1
    labels = np.zeros(size, dtype=np.int64)
    for i in range(num_groups):
        for j in range(size):
            if y[j] > th[i] and y[j] <= th[i + 1]:
                labels[j] = i + 1
    return labels


# ---------------------------------------------------------------------------
# FFT and autocorrelation


@njit(**_JIT)
def _nextpow2(n):
    p = 1
    while p < n:
        p <<= 1
    return p


@njit(**_JIT)
def _twiddles(n):
    # the reference uses a truncated pi here; kept for bitwise agreement
    pi_ref = 3.14159265359
    tw = np.empty(n, dtype=np.complex128)
    for i in range(n):
        ang = -(pi_ref * i / n)
        tw[i] = complex(math.cos(ang), math.sin(ang))
    return tw


@njit(**_JIT)
def _fft_pass(dst, src, tw, n, s):
    # one radix-2 Stockham pass, in the reference's operation order
    half = n // 2
    for k in range(n // (2 * s)):
        w = tw[2 * s * k]
        x0 = 2 * s * k
        y0 = x0 + s
        p0 = s * k
        for j in range(s):
            yr = src[y0 + j].real
            yi = src[y0 + j].imag
            tr = w.real * yr - w.imag * yi
            ti = w.real * yi + w.imag * yr
            xr = src[x0 + j].real
            xi = src[x0 + j].imag
            dst[p0 + j] = complex(xr + tr, xi + ti)
            dst[p0 + half + j] = complex(xr - tr, xi - ti)


@njit(**_JIT)
def _fft_top(a, tw, n):
    w = tw[0]
    half = n // 2
    for j in range(half):
        yr = a[half + j].real
        yi = a[half + j].imag
        tr = w.real * yr - w.imag * yi
        ti = w.real * yi + w.imag * yr
        xr = a[j].real
        xi = a[j].imag
        a[j] = complex(xr + tr, xi + ti)
        a[half + j] = complex(xr - tr, xi - ti)


@njit(**_JIT)
def _fft(a):
    """In-place radix-2 FFT (length must be a power of two)."""
    n = a.shape[0]
    if n < 2:
        return
    tw = _twiddles(n)
    levels = 0
    while (n >> levels) > 1:
        levels += 1
    if levels == 1:
        _fft_top(a, tw, n)
        return
    s = n >> 1
    rem = levels
    if levels & 1:
        _fft_top(a, tw, n)
        s >>= 1
        rem = levels - 1
    src = a
    dst = np.empty_like(a)
    while rem > 0:
        _fft_pass(dst, src, tw, n, s)
        src, dst = dst, src
        s >>= 1
        rem -= 1
    # rem was even, so the result is back in ``a``


@njit(**_JIT)
def _autocorrs(y):
    """Normalised autocorrelation at every lag, via zero-padded FFT."""
    size = y.shape[0]
    m = _mean(y)
    n_fft = _nextpow2(size) << 1
    F = np.zeros(n_fft, dtype=np.complex128)
    for i in range(size):
        F[i] = y[i] - m
    _fft(F)
    for i in range(n_fft):
        F[i] = F[i] * np.conj(F[i])
    _fft(F)
    c = F[0].real
    d = F[0].imag
    den = c * c + d * d
    out = np.empty(n_fft)
    for i in range(n_fft):
        out[i] = (F[i].real * c + F[i].imag * d) / den
    return out


@njit(**_JIT)
def _firstzero(ac, maxtau):
    z = 0
    while ac[z] > 0 and z < maxtau:
        z += 1
    return z


@njit(**_JIT)
def _firstzero_of(y):
    return _firstzero(_autocorrs(y), y.shape[0])


# ---------------------------------------------------------------------------
# distribution


@njit(**_JIT)
def _histcounts(y, n_bins):
    lo = np.inf
    hi = -np.inf
    for v in y:
        if v < lo:
            lo = v
        if v > hi:
            hi = v
    step = (hi - lo) / n_bins
    counts = np.zeros(n_bins, dtype=np.int64)
    for v in y:
        k = int((v - lo) / step)
        if k < 0:
            k = 0
        if k >= n_bins:
            k = n_bins - 1
        counts[k] += 1
    edges = np.empty(n_bins + 1)
    for i in range(n_bins + 1):
        edges[i] = i * step + lo
    return counts, edges


@njit(**_JIT)
def dn_histogram_mode(y, n_bins):
    counts, edges = _histcounts(y, n_bins)
    max_count = 0.0
    num_maxs = 1
    out = 0.0
    for i in range(n_bins):
        if counts[i] > max_count:
            max_count = counts[i]
            num_maxs = 1
            out = (edges[i] + edges[i + 1]) * 0.5
        elif counts[i] == max_count:
            num_maxs += 1
            out += (edges[i] + edges[i + 1]) * 0.5
    return out / num_maxs


@njit(**_JIT)
def dn_outlier_include(y, sign):
    size = y.shape[0]
    inc = 0.01
    w = np.empty(size)
    tot = 0
    constant = True
    for i in range(size):
        if y[i] != y[0]:
            constant = False
        w[i] = sign * y[i]
        if w[i] >= 0:
            tot += 1
    if constant:
        return 0.0
    max_val = _max(w)
    if max_val < inc:
        return 0.0
    n_thresh = int(max_val / inc + 1)
    counts = np.zeros(n_thresh, dtype=np.int64)
    for j in range(n_thresh):
        thr = j * inc
        c = 0
        for i in range(size):
            if w[i] >= thr:
                c += 1
        counts[j] = c
    mj = 0
    for j in range(n_thresh):
        if (counts[j] - 1) * 100.0 / tot > 2:
            mj = j
    fbi = n_thresh - 1
    for j in range(n_thresh - 1, -1, -1):
        if counts[j] - 1 == 0:
            fbi = j
    trim = mj if mj < fbi else fbi
    ms = np.empty(trim + 1)
    pos = np.empty(size)
    half = size / 2.0
    for j in range(trim + 1):
        thr = j * inc
        c = 0
        for i in range(size):
            if w[i] >= thr:
                pos[c] = i + 1
                c += 1
        if c % 2 == 1:
            med = pos[c // 2]
        else:
            med = (pos[c // 2] + pos[c // 2 - 1]) / 2.0
        ms[j] = med / half - 1
    return _median(ms)


# ---------------------------------------------------------------------------
# linear autocorrelation


@njit(**_JIT)
def co_f1ecac(y):
    size = y.shape[0]
    ac = _autocorrs(y)
    thresh = 1.0 / math.exp(1)
    for i in range(size - 2):
        if ac[i + 1] < thresh:
            m = ac[i + 1] - ac[i]
            dy = thresh - ac[i]
            return i + dy / m
    return float(size)


@njit(**_JIT)
def co_first_min_ac(y):
    size = y.shape[0]
    ac = _autocorrs(y)
    for i in range(1, size - 1):
        if ac[i] < ac[i - 1] and ac[i] < ac[i + 1]:
            return float(i)
    return float(size)


@njit(**_JIT)
def _splinefit(y):
    """Least-squares cubic spline, C2, one interior knot at ``floor(n/2) - 1``."""
    size = y.shape[0]
    knot = size // 2 - 1
    scale = max(size - 1, 1)
    A = np.empty((size, 5))
    kb = knot / scale
    for i in range(size):
        x = i / scale
        A[i, 0] = 1.0
        A[i, 1] = x
        A[i, 2] = x * x
        A[i, 3] = x * x * x
        t = x - kb
        A[i, 4] = t * t * t if t > 0 else 0.0
    coef = np.linalg.lstsq(A, y.copy())[0]
    return A @ coef


@njit(**_JIT)
def pd_periodicity_wang(y):
    size = y.shape[0]
    th = 0.01
    ysub = y - _splinefit(y)
    acmax = int(math.ceil(size / 3.0))
    acf = np.empty(acmax)
    for tau in range(1, acmax + 1):
        m = size - tau
        acc = 0.0
        for i in range(m):
            acc += ysub[i] * ysub[i + tau]
        acf[tau - 1] = acc / m
    troughs = np.empty(acmax, dtype=np.int64)
    n_troughs = 0
    jt = -1
    for i in range(1, acmax - 1):
        slope_in = acf[i] - acf[i - 1]
        slope_out = acf[i + 1] - acf[i]
        if slope_in < 0 and slope_out > 0:
            troughs[n_troughs] = i
            n_troughs += 1
        elif slope_in > 0 and slope_out < 0:
            while jt + 1 < n_troughs and troughs[jt + 1] < i:
                jt += 1
            if jt == -1:
                continue
            if acf[i] - acf[troughs[jt]] < th:
                continue
            if acf[i] < 0:
                continue
            return float(i)
    return 0.0


# ---------------------------------------------------------------------------
# nonlinear autocorrelation


@njit(**_JIT)
def co_histogram_ami_even_2_5(y):
    size = y.shape[0]
    tau = 2
    nb = 5
    n = size - tau
    max_v = _max(y)
    min_v = _min(y)
    step = (max_v - min_v + 0.2) / 5
    edges = np.empty(nb + 1)
    for i in range(nb + 1):
        edges[i] = min_v + step * i - 0.1
    bins12 = np.empty(n)
    for i in range(n):
        b1 = 0
        for j in range(nb + 1):
            if y[i] < edges[j]:
                b1 = j
                break
        b2 = 0
        for j in range(nb + 1):
            if y[i + tau] < edges[j]:
                b2 = j
                break
        bins12[i] = (b1 - 1) * (nb + 1) + b2
    n_edges = (nb + 1) * (nb + 1)
    joint = np.zeros(n_edges, dtype=np.int64)
    for i in range(n):
        for j in range(n_edges):
            if bins12[i] <= j + 1:
                joint[j] += 1
                break
    pij = np.zeros((nb, nb))
    total = 0
    for i in range(nb):
        for j in range(nb):
            pij[j, i] = joint[i * (nb + 1) + j]
            total += joint[i * (nb + 1) + j]
    for i in range(nb):
        for j in range(nb):
            pij[j, i] /= total
    pi = np.zeros(nb)
    pj = np.zeros(nb)
    for i in range(nb):
        for j in range(nb):
            pi[i] += pij[i, j]
            pj[j] += pij[i, j]
    ami = 0.0
    for i in range(nb):
        for j in range(nb):
            if pij[i, j] > 0:
                ami += pij[i, j] * math.log(pij[i, j] / (pj[j] * pi[i]))
    return ami


@njit(**_JIT)
def co_trev_1_num(y):
    n = y.shape[0] - 1
    s = 0.0
    for i in range(n):
        d = y[i + 1] - y[i]
        s += d * d * d
    return s / n


@njit(**_JIT)
def in_auto_mutual_info_fmmi(y):
    size = y.shape[0]
    tau = 40
    max_tau = (size + 1) // 2
    if tau > max_tau:
        tau = max_tau
    if tau < 3:
        return float(tau)
    ac = _corr(y[: size - 1], y[1:])
    ami_prev = -0.5 * math.log(1.0 - ac * ac)
    ac = _corr(y[: size - 2], y[2:])
    ami_curr = -0.5 * math.log(1.0 - ac * ac)
    for i in range(1, tau - 1):
        lag = i + 2
        ac = _corr(y[: size - lag], y[lag:])
        ami_next = -0.5 * math.log(1.0 - ac * ac)
        if ami_curr < ami_prev and ami_curr < ami_next:
            return float(i)
        ami_prev = ami_curr
        ami_curr = ami_next
    return float(tau)


@njit(**_JIT)
def co_embed2_dist_expfit_meandiff(y):
    size = y.shape[0]
    tau = _firstzero_of(y)
    if tau > size / 10.0:
        tau = int(math.floor(size / 10.0))
    nd = size - tau - 1
    if nd < 2:
        return np.nan
    d = np.empty(nd)
    for i in range(nd):
        a = y[i + 1] - y[i]
        b = y[i + tau] - y[i + tau + 1]
        d[i] = math.sqrt(a * a + b * b)
    ell = _mean(d)
    sd = _stddev(d)
    if sd < 0.001:
        return 0.0
    n_bins = int(math.ceil((_max(d) - _min(d)) / (3.5 * sd / nd ** (1.0 / 3.0))))
    counts, edges = _histcounts(d, n_bins)
    acc = 0.0
    for i in range(n_bins):
        expf = math.exp(-(edges[i] + edges[i + 1]) * 0.5 / ell) / ell
        if expf < 0:
            expf = 0.0
        acc += abs(counts[i] / nd - expf)
    return acc / n_bins


# ---------------------------------------------------------------------------
# successive differences and symbolic


@njit(**_JIT)
def md_hrv_classic_pnn40(y):
    n = y.shape[0] - 1
    c = 0.0
    for i in range(n):
        if abs(y[i + 1] - y[i]) * 1000 > 40:
            c += 1
    return c / n


@njit(**_JIT)
def sb_binary_stats_mean_longstretch1(y):
    size = y.shape[0]
    m = _mean(y)
    best = 0
    last = 0
    for i in range(size - 1):
        b = 0 if y[i] - m <= 0 else 1
        if b == 0 or i == size - 2:
            stretch = i - last
            if stretch > best:
                best = stretch
            last = i
    return float(best)


@njit(**_JIT)
def sb_binary_stats_diff_longstretch0(y):
    size = y.shape[0]
    best = 0
    last = 0
    for i in range(size - 1):
        b = 0 if y[i + 1] - y[i] < 0 else 1
        if b == 1 or i == size - 2:
            stretch = i - last
            if stretch > best:
                best = stretch
            last = i
    return float(best)


@njit(**_JIT)
def sb_transition_matrix_3ac_sumdiagcov(y):
    size = y.shape[0]
    ng = 3
    tau = _firstzero_of(y)
    n_down = (size - 1) // tau + 1
    y_down = np.empty(n_down)
    for i in range(n_down):
        y_down[i] = y[i * tau]
    cg = _coarsegrain(y_down, ng)
    T = np.zeros((ng, ng))
    for j in range(n_down - 1):
        T[cg[j] - 1, cg[j + 1] - 1] += 1
    for i in range(ng):
        for j in range(ng):
            T[i, j] /= n_down - 1
    out = 0.0
    for c in range(ng):
        col = T[:, c]
        m = _mean(col)
        s = 0.0
        for i in range(ng):
            s += (col[i] - m) * (col[i] - m)
        out += s / (ng - 1)
    return out


@njit(**_JIT)
def sb_motif_three_quantile_hh(y):
    size = y.shape[0]
    yt = _coarsegrain(y, 3)
    out2 = np.zeros((3, 3))
    for i in range(3):
        for k in range(size - 1):
            if yt[k] == i + 1:
                out2[i, yt[k + 1] - 1] += 1
    hh = 0.0
    for i in range(3):
        for j in range(3):
            out2[i, j] = out2[i, j] / (size - 1.0)
        hh += _f_entropy(out2[i])
    return hh


# ---------------------------------------------------------------------------
# simple forecasting


@njit(**_JIT)
def _mean_residuals(y, L):
    n = y.shape[0] - L
    res = np.empty(n)
    for i in range(n):
        est = 0.0
        for j in range(L):
            est += y[i + j]
        res[i] = y[i + L] - est / L
    return res


@njit(**_JIT)
def fc_local_simple_mean1_tauresrat(y):
    if y.shape[0] <= 1:
        return np.nan
    res = _mean_residuals(y, 1)
    return _firstzero_of(res) / _firstzero_of(y)


@njit(**_JIT)
def fc_local_simple_mean3_stderr(y):
    if y.shape[0] <= 3:
        return np.nan
    res = _mean_residuals(y, 3)
    if res.shape[0] < 2:
        return np.nan
    return _stddev(res)


# ---------------------------------------------------------------------------
# fluctuation analysis


@njit(**_JIT)
def sc_fluct_anal(y, lag, dfa):
    size = y.shape[0]
    lin_low = math.log(5)
    lin_high = math.log(size // 2)
    n_steps = 50
    step = (lin_high - lin_low) / (n_steps - 1)
    tau = np.empty(n_steps, dtype=np.int64)
    for i in range(n_steps):
        tau[i] = int(math.floor(math.exp(lin_low + i * step) + 0.5))
    n_tau = n_steps
    for i in range(n_steps - 1):
        while tau[i] == tau[i + 1] and i < n_tau - 1:
            for j in range(i + 1, n_steps - 1):
                tau[j] = tau[j + 1]
            n_tau -= 1
    if n_tau < 12:
        return 0.0

    size_cs = size // lag
    ycs = np.empty(size_cs)
    ycs[0] = y[0]
    for i in range(size_cs - 1):
        ycs[i + 1] = ycs[i] + y[(i + 1) * lag]

    F = np.empty(n_tau)
    for i in range(n_tau):
        t = tau[i]
        n_buf = size_cs // t
        sumx = 0.0
        sumx2 = 0.0
        for k in range(t):
            xv = k + 1.0
            sumx += xv
            sumx2 += xv * xv
        denom = t * sumx2 - sumx * sumx
        fi = 0.0
        for j in range(n_buf):
            off = j * t
            sumxy = 0.0
            sumy = 0.0
            for k in range(t):
                xv = k + 1.0
                sumxy += xv * ycs[off + k]
                sumy += ycs[off + k]
            m = 0.0
            b = 0.0
            if denom != 0:
                m = (t * sumxy - sumx * sumy) / denom
                b = (sumy * sumx2 - sumx * sumxy) / denom
            if dfa:
                for k in range(t):
                    r = ycs[off + k] - (m * (k + 1) + b)
                    fi += r * r
            else:
                r = ycs[off] - (m * 1 + b)
                mx = r
                mn = r
                for k in range(1, t):
                    r = ycs[off + k] - (m * (k + 1) + b)
                    if r > mx:
                        mx = r
                    if r < mn:
                        mn = r
                fi += (mx - mn) * (mx - mn)
        if dfa:
            F[i] = math.sqrt(fi / (n_buf * t)) if n_buf > 0 else np.nan
        else:
            F[i] = math.sqrt(fi / n_buf) if n_buf > 0 else np.nan

    ntt = n_tau
    logtt = np.empty(ntt)
    logff = np.empty(ntt)
    for i in range(ntt):
        logtt[i] = math.log(tau[i])
        logff[i] = math.log(F[i]) if F[i] > 0 else (-np.inf if F[i] == 0 else np.nan)
    min_points = 6
    nsserr = ntt - 2 * min_points + 1
    sserr = np.empty(nsserr)
    buf = np.empty(ntt - min_points + 1)
    for i in range(min_points, ntt - min_points + 1):
        m1, b1 = _linreg(i, logtt, logff)
        m2, b2 = _linreg(ntt - i + 1, logtt[i - 1 :], logff[i - 1 :])
        for j in range(i):
            buf[j] = logtt[j] * m1 + b1 - logff[j]
        acc = _norm(buf[:i])
        for j in range(ntt - i + 1):
            buf[j] = logtt[j + i - 1] * m2 + b2 - logff[j + i - 1]
        acc += _norm(buf[: ntt - i + 1])
        sserr[i - min_points] = acc
    first_min = 0.0
    minimum = _min(sserr)
    for i in range(nsserr):
        if sserr[i] == minimum:
            first_min = i + min_points - 1
            break
    return (first_min + 1) / ntt


# ---------------------------------------------------------------------------
# spectral (rectangular-window Welch estimate, single segment)


@njit(**_JIT)
def _welch_rect(y):
    size = y.shape[0]
    n_fft = _nextpow2(size)
    m = _mean(y)
    F = np.zeros(n_fft, dtype=np.complex128)
    for i in range(size):
        F[i] = y[i] - m
    _fft(F)
    n_out = n_fft // 2 + 1
    kmu = float(size)  # one segment, squared norm of the all-ones window
    pi_ref = 3.14159265359
    df = 1.0 / n_fft
    w = np.empty(n_out)
    sw = np.empty(n_out)
    for i in range(n_out):
        p = (F[i].real * F[i].real + F[i].imag * F[i].imag) / kmu
        if 0 < i < n_out - 1:
            p *= 2
        w[i] = 2 * pi_ref * (i * df)
        sw[i] = p / (2 * pi_ref)
    return w, sw


@njit(**_JIT)
def sp_summaries_welch_rect_area_5_1(y):
    w, sw = _welch_rect(y)
    n = w.shape[0]
    for i in range(n):
        if math.isinf(sw[i]):
            return 0.0
    dw = w[1] - w[0]
    area = 0.0
    for i in range(n // 5):
        area += sw[i]
    return area * dw


@njit(**_JIT)
def sp_summaries_welch_rect_centroid(y):
    w, sw = _welch_rect(y)
    n = w.shape[0]
    for i in range(n):
        if math.isinf(sw[i]):
            return 0.0
    cs = np.empty(n)
    cs[0] = sw[0]
    for i in range(1, n):
        cs[i] = cs[i - 1] + sw[i]
    thresh = cs[n - 1] * 0.5
    for i in range(n):
        if cs[i] > thresh:
            return w[i]
    return 0.0


# ---------------------------------------------------------------------------
# dispatch


@njit(**_JIT)
def catch22_feature(k, z):
    """Feature ``k`` of an already z-normalised series ``z`` (may be NaN)."""
    if k == 0:
        return dn_histogram_mode(z, 5)
    if k == 1:
        return dn_histogram_mode(z, 10)
    if k == 2:
        return co_f1ecac(z)
    if k == 3:
        return co_first_min_ac(z)
    if k == 4:
        return co_histogram_ami_even_2_5(z)
    if k == 5:
        return co_trev_1_num(z)
    if k == 6:
        return md_hrv_classic_pnn40(z)
    if k == 7:
        return sb_binary_stats_mean_longstretch1(z)
    if k == 8:
        return sb_transition_matrix_3ac_sumdiagcov(z)
    if k == 9:
        return pd_periodicity_wang(z)
    if k == 10:
        return co_embed2_dist_expfit_meandiff(z)
    if k == 11:
        return in_auto_mutual_info_fmmi(z)
    if k == 12:
        return fc_local_simple_mean1_tauresrat(z)
    if k == 13:
        return dn_outlier_include(z, 1.0)
    if k == 14:
        return dn_outlier_include(z, -1.0)
    if k == 15:
        return sp_summaries_welch_rect_area_5_1(z)
    if k == 16:
        return sb_binary_stats_diff_longstretch0(z)
    if k == 17:
        return sb_motif_three_quantile_hh(z)
    if k == 18:
        return sc_fluct_anal(z, 1, False)
    if k == 19:
        return sc_fluct_anal(z, 2, True)
    if k == 20:
        return sp_summaries_welch_rect_centroid(z)
    if k == 21:
        return fc_local_simple_mean3_stderr(z)
    return np.nan


@njit(**_JIT)
def is_constant(x):
    for i in range(1, x.shape[0]):
        if x[i] != x[0]:
            return False
    return True


@njit(**_JIT)
def catch22_raw(x):
    """All 22 features of ``x`` without imputation; constant input gives NaN."""
    out = np.full(22, np.nan)
    if is_constant(x):
        return out
    z = zscore(x)
    for k in range(22):
        out[k] = catch22_feature(k, z)
    return out
