"""Datasets, ``.ts`` file IO, preprocessing, resampling and synthetic problems."""

from ._dataset import SplitPair, TimeSeries, TimeSeriesDataset
from ._preprocess import (
    interpolate_missing,
    preprocess,
    preprocess_split,
    resample_split,
    truncate_to_min,
)
from ._synth import PROBLEMS, hidden_window, synth_generate, train_test_split
from ._tsfile import (
    TsParseError,
    dataset_paths,
    format_ts,
    load_problem,
    parse_ts,
    parse_ts_lines,
    write_ts,
)

__all__ = [
    "PROBLEMS",
    "SplitPair",
    "TimeSeries",
    "TimeSeriesDataset",
    "TsParseError",
    "dataset_paths",
    "format_ts",
    "hidden_window",
    "interpolate_missing",
    "load_problem",
    "parse_ts",
    "parse_ts_lines",
    "preprocess",
    "preprocess_split",
    "resample_split",
    "synth_generate",
    "train_test_split",
    "truncate_to_min",
]
