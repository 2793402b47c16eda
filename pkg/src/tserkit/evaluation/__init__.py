"""Metrics, experiment runs and rank statistics."""

from ._experiment import (
    RESULT_COLUMNS,
    ExperimentOutcome,
    ExperimentResult,
    ResultsFormatError,
    TupleFailure,
    evaluate_tuple,
    read_results,
    run_experiment,
)
from ._metrics import relative_rmse, rmse
from ._stats import (
    CliqueSet,
    RankTable,
    holm_cliques,
    holm_reject,
    mean_ranks,
    statistics_report,
    wilcoxon_signed_rank,
)

__all__ = [
    "CliqueSet",
    "ExperimentOutcome",
    "ExperimentResult",
    "RESULT_COLUMNS",
    "RankTable",
    "ResultsFormatError",
    "TupleFailure",
    "evaluate_tuple",
    "holm_cliques",
    "holm_reject",
    "mean_ranks",
    "read_results",
    "relative_rmse",
    "rmse",
    "run_experiment",
    "statistics_report",
    "wilcoxon_signed_rank",
]
