"""Scalar features: summary statistics, catch22 and a Fresh-style catalogue."""

from ._catalogue import ALL_FEATURES, FRESH_FEATURES, POOL_FEATURES, FeatureId, feature_catalogue
from ._catch22 import CATCH22_NAMES, CATCH22_SHORT_NAMES
from ._fresh import FRESH_NAMES, fresh_features, fresh_transform
from ._pool import N_POOL, catch22, pool_features_of
from ._summary import SUMMARY_NAMES, summary_stat, summary_stats

__all__ = [
    "ALL_FEATURES",
    "CATCH22_NAMES",
    "CATCH22_SHORT_NAMES",
    "FRESH_FEATURES",
    "FRESH_NAMES",
    "FeatureId",
    "N_POOL",
    "POOL_FEATURES",
    "SUMMARY_NAMES",
    "catch22",
    "feature_catalogue",
    "fresh_features",
    "fresh_transform",
    "pool_features_of",
    "summary_stat",
    "summary_stats",
]
