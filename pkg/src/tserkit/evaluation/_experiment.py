"""Resumable (dataset, regressor, resample) experiment runs with a CSV results store."""

from __future__ import annotations

import csv
import logging
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .._parallel import resolve_n_jobs
from .._random import key_seed
from ..data import preprocess_split, resample_split
from ..regressors import make_regressor
from ._metrics import rmse

logger = logging.getLogger(__name__)

RESULT_COLUMNS = ("dataset", "regressor", "resample", "rmse", "fit_millis", "predict_millis")


@dataclass(frozen=True)
class ExperimentResult:
    dataset: str
    regressor: str
    resample: int
    rmse: float
    fit_millis: float
    predict_millis: float

    @property
    def key(self):
        return self.dataset, self.regressor, self.resample


@dataclass(frozen=True)
class TupleFailure:
    dataset: str
    regressor: str
    resample: int
    error: str


@dataclass
class ExperimentOutcome:
    results: list
    failures: list
    skipped: int = 0


class ResultsFormatError(ValueError):
    def __init__(self, message, line=None, path=None):
        super().__init__(message)
        self.message, self.line, self.path = message, line, path

    def __str__(self):
        where = f"{self.path}:" if self.path else ""
        if self.line is not None:
            where += f"line {self.line}: "
        return where + self.message


def read_results(path) -> list:
    """Parse a results CSV. Malformed content raises :class:`ResultsFormatError`."""
    path = Path(path)
    out = []
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.reader(f)
        try:
            header = next(reader)
        except StopIteration:
            raise ResultsFormatError("empty file", 1, path) from None
        if tuple(h.strip() for h in header) != RESULT_COLUMNS:
            raise ResultsFormatError(f"expected header {','.join(RESULT_COLUMNS)}", 1, path)
        for row in reader:
            line = reader.line_num
            if not row:
                continue
            if len(row) != len(RESULT_COLUMNS):
                raise ResultsFormatError(f"expected {len(RESULT_COLUMNS)} fields, got {len(row)}", line, path)
            try:
                res = ExperimentResult(
                    row[0], row[1], int(row[2]), float(row[3]), float(row[4]), float(row[5])
                )
            except ValueError as e:
                raise ResultsFormatError(f"bad value ({e})", line, path) from None
            if not (math.isfinite(res.rmse) and res.rmse >= 0) or res.resample < 0:
                raise ResultsFormatError("rmse must be finite and >= 0, resample >= 0", line, path)
            out.append(res)
    return out


def _format_row(r: ExperimentResult) -> list:
    return [r.dataset, r.regressor, str(r.resample), repr(r.rmse), f"{r.fit_millis:.3f}", f"{r.predict_millis:.3f}"]


def evaluate_tuple(train, test, dataset, regressor, resample, seed, params=None, timing=True, n_jobs=1):
    """Fit and score one (dataset, regressor, resample) tuple."""
    tr, te = preprocess_split(train, test)
    split = resample_split(tr, te, resample)
    model = make_regressor(regressor, params, key_seed(seed, dataset, regressor, resample), n_jobs)
    t0 = time.perf_counter()
    model.fit(split.train)
    t1 = time.perf_counter()
    pred = model.predict(split.test)
    t2 = time.perf_counter()
    fit_ms, pred_ms = ((t1 - t0) * 1000, (t2 - t1) * 1000) if timing else (0.0, 0.0)
    return ExperimentResult(dataset, regressor, int(resample), rmse(pred, split.test.targets), fit_ms, pred_ms)


def run_experiment(
    problems,
    regressors,
    resamples: int = 30,
    seed: int = 0,
    n_jobs: int = 1,
    out_path=None,
    params: dict | None = None,
    timing: bool = True,
    progress=None,
) -> ExperimentOutcome:
    """Evaluate every (dataset, regressor, resample) tuple.

    Parameters
    ----------
    problems : mapping
        Dataset name to a ``(train, test)`` pair of datasets.
    regressors : sequence of str
        Registered regressor names.
    resamples : int
        Resample ``i`` uses ``resample_split(..., i)``; 0 is the given split.
    seed : int
        Master seed; each tuple's model seed is derived from it and the tuple.
    n_jobs : int
        Tuples evaluated concurrently. Results do not depend on it.
    out_path : path, optional
        Results CSV. Tuples already present are skipped and new rows are
        appended in submission order as they complete.
    params : dict, optional
        Regressor name to hyperparameter overrides.
    progress : callable, optional
        Called with one human-readable line per finished tuple.
    """
    if resamples < 1:
        raise ValueError("resamples must be at least 1")
    params = params or {}
    done = {}
    if out_path is not None and Path(out_path).exists() and os.path.getsize(out_path) > 0:
        for r in read_results(out_path):
            done[r.key] = r
    todo = [
        (d, g, i)
        for d in problems
        for g in regressors
        for i in range(resamples)
        if (d, g, i) not in done
    ]
    results = [done[k] for k in done if k[0] in problems and k[1] in regressors and k[2] < resamples]
    failures = []

    writer = fh = None
    if out_path is not None:
        Path(out_path).parent.mkdir(parents=True, exist_ok=True)
        new_file = not Path(out_path).exists() or os.path.getsize(out_path) == 0
        fh = open(out_path, "a", newline="", encoding="utf-8")
        writer = csv.writer(fh, lineterminator="\n")
        if new_file:
            writer.writerow(RESULT_COLUMNS)
            fh.flush()

    def work(t):
        d, g, i = t
        train, test = problems[d]
        try:
            return evaluate_tuple(train, test, d, g, i, seed, params.get(g), timing)
        except Exception as e:  # noqa: BLE001 - recorded per tuple
            logger.debug("tuple %s failed", t, exc_info=True)
            return TupleFailure(d, g, i, f"{type(e).__name__}: {e}")

    try:
        with ThreadPoolExecutor(max_workers=max(1, min(resolve_n_jobs(n_jobs), len(todo) or 1))) as pool:
            for k, out in enumerate(pool.map(work, todo), start=1):
                tag = f"[{k}/{len(todo)}] {out.dataset} {out.regressor} resample {out.resample}"
                if isinstance(out, TupleFailure):
                    failures.append(out)
                    if progress:
                        progress(f"{tag} FAILED {out.error}")
                    continue
                results.append(out)
                if writer is not None:
                    writer.writerow(_format_row(out))
                    fh.flush()
                if progress:
                    progress(f"{tag} rmse={out.rmse:.6g}")
    finally:
        if fh is not None:
            fh.close()
    results.sort(key=lambda r: (list(problems).index(r.dataset), list(regressors).index(r.regressor), r.resample))
    return ExperimentOutcome(results, failures, skipped=len(done))


__all__ = [
    "ExperimentOutcome",
    "ExperimentResult",
    "RESULT_COLUMNS",
    "ResultsFormatError",
    "TupleFailure",
    "evaluate_tuple",
    "read_results",
    "run_experiment",
]
