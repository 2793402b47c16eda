"""Rank-based comparison of regressors over datasets."""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

import numpy as np
from scipy.stats import rankdata

from ._metrics import relative_rmse

EXACT_MAX_N = 25


@dataclass(frozen=True)
class RankTable:
    datasets: tuple
    regressors: tuple
    mean_rmse: dict  # dataset -> regressor -> mean rmse over resamples
    dataset_ranks: dict  # dataset -> regressor -> rank
    mean_ranks: dict  # regressor -> mean rank

    def order(self) -> list:
        """Regressors by ascending mean rank, ties by name."""
        return sorted(self.regressors, key=lambda r: (self.mean_ranks[r], r))


def _field(r, name):
    return r[name] if isinstance(r, dict) else getattr(r, name)


def mean_ranks(results, regressors=None, datasets=None) -> RankTable:
    """Average RMSE over resamples, rank per dataset (1 = lowest), average ranks.

    Raises
    ------
    ValueError
        If some (dataset, regressor) pair has no result.
    """
    acc = defaultdict(list)
    for r in results:
        acc[(_field(r, "dataset"), _field(r, "regressor"))].append(float(_field(r, "rmse")))
    if regressors is None:
        regressors = sorted({k[1] for k in acc})
    if datasets is None:
        datasets = sorted({k[0] for k in acc})
    regressors, datasets = tuple(regressors), tuple(datasets)
    if not regressors or not datasets:
        raise ValueError("no results")
    missing = [(d, g) for d in datasets for g in regressors if (d, g) not in acc]
    if missing:
        names = ", ".join(f"{d}/{g}" for d, g in missing)
        raise ValueError(f"missing results for {names}")
    mean_rmse = {d: {g: float(np.mean(acc[(d, g)])) for g in regressors} for d in datasets}
    dataset_ranks = {}
    for d in datasets:
        ranks = rankdata([mean_rmse[d][g] for g in regressors], method="average")
        dataset_ranks[d] = {g: float(x) for g, x in zip(regressors, ranks)}
    mr = {g: float(np.mean([dataset_ranks[d][g] for d in datasets])) for g in regressors}
    return RankTable(datasets, regressors, mean_rmse, dataset_ranks, mr)


def _exact_lower_tail(doubled_ranks, w2) -> float:
    """P(W+ <= w) under the null, ranks and w given in doubled (integer) units."""
    total = int(sum(doubled_ranks))
    counts = np.zeros(total + 1, dtype=np.float64)
    counts[0] = 1.0
    for r in doubled_ranks:
        shifted = np.zeros_like(counts)
        shifted[r:] = counts[: total + 1 - r]
        counts += shifted
    return float(counts[: w2 + 1].sum() / 2.0 ** len(doubled_ranks))


def wilcoxon_signed_rank(a, b) -> float:
    """Two-sided Wilcoxon signed-rank p-value for paired scores.

    Zero differences are discarded and tied absolute differences get average
    ranks. With at most 25 non-zero differences the p-value is exact; above
    that a normal approximation with tie and continuity corrections is used.

    Examples
    --------
    >>> wilcoxon_signed_rank([1, 2, 3, 4, 5, 6], [0, 0, 0, 0, 0, 0])
    0.03125
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError("paired scores must be 1-d sequences of equal length")
    diff = a - b
    diff = diff[diff != 0]
    n = diff.size
    if n < 5:
        raise ValueError(f"need at least 5 non-zero differences, got {n}")
    ranks = rankdata(np.abs(diff), method="average")
    w_plus = ranks[diff > 0].sum()
    w_minus = ranks[diff < 0].sum()
    w = min(w_plus, w_minus)
    if n <= EXACT_MAX_N:
        doubled = np.rint(2 * ranks).astype(np.int64)
        p = 2.0 * _exact_lower_tail(doubled, int(round(2 * w)))
        return min(1.0, p)
    mu = n * (n + 1) / 4.0
    _, t = np.unique(np.abs(diff), return_counts=True)
    var = n * (n + 1) * (2 * n + 1) / 24.0 - (t**3 - t).sum() / 48.0
    if var <= 0:
        return 1.0
    z = (w - mu + 0.5) / math.sqrt(var)
    return min(1.0, math.erfc(-z / math.sqrt(2.0)))


def holm_reject(pvalues, alpha: float = 0.05) -> list:
    """Holm step-down decisions, aligned with ``pvalues``.

    >>> holm_reject([0.01, 0.02, 0.20])
    [True, True, False]
    """
    p = np.asarray(pvalues, dtype=np.float64)
    m = p.size
    order = np.argsort(p, kind="stable")
    out = [False] * m
    for i, k in enumerate(order):
        if p[k] < alpha / (m - i):
            out[k] = True
        else:
            break
    return out


@dataclass(frozen=True)
class CliqueSet:
    order: tuple
    pairwise_p: dict  # (a, b) -> p or None
    rejected: dict  # (a, b) -> bool
    cliques: tuple  # tuples of regressor names, in rank order


def _pair(pvalues, a, b):
    if (a, b) in pvalues:
        return pvalues[(a, b)]
    if (b, a) in pvalues:
        return pvalues[(b, a)]
    raise KeyError(f"missing p-value for pair {a}/{b}")


def holm_cliques(order, pvalues: dict, alpha: float = 0.05) -> CliqueSet:
    """Holm-adjusted pairwise decisions and the cliques they induce.

    ``order`` lists regressors by mean rank. ``pvalues`` maps unordered
    pairs to p-values; ``None`` marks an untestable pair, which is never
    rejected. Cliques are the maximal runs of consecutive regressors with no
    rejected pair among them.
    """
    order = tuple(order)
    pairs = list(combinations(order, 2))
    ps = {pr: _pair(pvalues, *pr) for pr in pairs}
    testable = [pr for pr in pairs if ps[pr] is not None]
    decisions = holm_reject([ps[pr] for pr in testable], alpha) if testable else []
    rejected = {pr: False for pr in pairs}
    rejected.update(zip(testable, decisions))

    def ok(i, j):
        return not any(rejected[(order[x], order[y])] for x in range(i, j + 1) for y in range(x + 1, j + 1))

    cliques = []
    last_end = -1
    for i in range(len(order)):
        j = i
        while j + 1 < len(order) and ok(i, j + 1):
            j += 1
        if j > last_end:
            cliques.append(order[i : j + 1])
            last_end = j
    return CliqueSet(order, ps, rejected, tuple(cliques))


def statistics_report(results, alpha: float = 0.05, regressors=None, datasets=None) -> dict:
    """JSON-ready comparison: ranks, pairwise Wilcoxon, Holm cliques, relative RMSE."""
    table = mean_ranks(results, regressors, datasets)
    order = table.order()
    pvalues = {}
    notes = []
    for a, b in combinations(order, 2):
        sa = [table.mean_rmse[d][a] for d in table.datasets]
        sb = [table.mean_rmse[d][b] for d in table.datasets]
        try:
            pvalues[(a, b)] = wilcoxon_signed_rank(sa, sb)
        except ValueError as e:
            pvalues[(a, b)] = None
            notes.append(f"{a} vs {b}: not tested ({e})")
    cs = holm_cliques(order, pvalues, alpha)
    report = {
        "alpha": alpha,
        "datasets": list(table.datasets),
        "regressors": order,
        "mean_ranks": {g: table.mean_ranks[g] for g in order},
        "dataset_ranks": table.dataset_ranks,
        "mean_rmse": table.mean_rmse,
        "pairwise_p": [{"a": a, "b": b, "p": p} for (a, b), p in cs.pairwise_p.items()],
        "holm_rejections": [{"a": a, "b": b, "rejected": r} for (a, b), r in cs.rejected.items()],
        "cliques": [list(c) for c in cs.cliques],
        "relative_rmse": (
            {d: relative_rmse(table.mean_rmse[d]) for d in table.datasets} if len(order) >= 2 else {}
        ),
        "relative_rmse_formula": "rmse / (rmse + median rmse over regressors on the dataset)",
        "notes": notes,
    }
    return report
