"""Time series regressors behind a common ``fit``/``predict`` contract."""

from ._base import BaseTSER, EnsembleTSER, as_case_array, flatten
from ._drcif import DrCIF, default_n_intervals, drcif_fit
from ._freshprince import FreshPRINCE, fresh_channels, freshprince_fit
from ._knn import KNeighborsTSER, dtw_distance, knn_predict, pairwise_distances
from ._registry import REGISTRY, REGRESSOR_NAMES, RegressorSpec, make_regressor, validate_params
from ._tabular import FlatRandomForest, FlatRidge, FlatRotationForest
from ._tsf import TimeSeriesForest, tsf_fit

__all__ = [
    "BaseTSER",
    "DrCIF",
    "EnsembleTSER",
    "FlatRandomForest",
    "FlatRidge",
    "FlatRotationForest",
    "FreshPRINCE",
    "KNeighborsTSER",
    "REGISTRY",
    "REGRESSOR_NAMES",
    "RegressorSpec",
    "TimeSeriesForest",
    "as_case_array",
    "default_n_intervals",
    "drcif_fit",
    "dtw_distance",
    "flatten",
    "fresh_channels",
    "freshprince_fit",
    "knn_predict",
    "make_regressor",
    "pairwise_distances",
    "tsf_fit",
    "validate_params",
]
