"""Tabular regressors: CART, random forest, rotation forest and ridge."""

from ._cart import CartRegressor, cart_fit, cart_predict
from ._forest import RandomForestRegressor, random_forest_fit
from ._pca import pca_fit
from ._ridge import DEFAULT_ALPHAS, RidgeRegressor, ridge_fit
from ._rotation import RotationForestRegressor, rotation_forest_fit, rotation_matrix

__all__ = [
    "CartRegressor",
    "DEFAULT_ALPHAS",
    "RandomForestRegressor",
    "RidgeRegressor",
    "RotationForestRegressor",
    "cart_fit",
    "cart_predict",
    "pca_fit",
    "random_forest_fit",
    "ridge_fit",
    "rotation_forest_fit",
    "rotation_matrix",
]
