from __future__ import annotations

from dataclasses import dataclass, field

from ._drcif import DrCIF
from ._freshprince import FreshPRINCE
from ._knn import KNeighborsTSER
from ._tabular import FlatRandomForest, FlatRidge, FlatRotationForest
from ._tsf import TimeSeriesForest


def _floats(value):
    if isinstance(value, str):
        return tuple(float(v) for v in value.split(",") if v.strip())
    return tuple(float(v) for v in value)


def _optional_int(value):
    if value is None or (isinstance(value, str) and value.lower() == "none"):
        return None
    return int(value)


@dataclass(frozen=True)
class _Entry:
    factory: type
    fixed: dict = field(default_factory=dict)
    schema: dict = field(default_factory=dict)  # name -> converter
    seeded: bool = True
    threaded: bool = True


_ENSEMBLE = {"n_estimators": int}
_ROTATION = {**_ENSEMBLE, "group_size": int, "subsample": float}

REGISTRY = {
    "drcif": _Entry(DrCIF, schema={**_ENSEMBLE, "n_attributes": int, "n_intervals": _optional_int}),
    "freshprince": _Entry(FreshPRINCE, schema=_ROTATION),
    "tsf": _Entry(TimeSeriesForest, schema={**_ENSEMBLE, "n_intervals": _optional_int}),
    "rotf": _Entry(FlatRotationForest, schema=_ROTATION),
    "randf": _Entry(FlatRandomForest, schema={**_ENSEMBLE, "mtry": _optional_int}),
    "ridge": _Entry(FlatRidge, schema={"alphas": _floats}, seeded=False, threaded=False),
    "1nn-ed": _Entry(KNeighborsTSER, {"k": 1, "metric": "euclidean"}, seeded=False),
    "5nn-ed": _Entry(KNeighborsTSER, {"k": 5, "metric": "euclidean"}, seeded=False),
    "1nn-dtw": _Entry(KNeighborsTSER, {"k": 1, "metric": "dtw"}, seeded=False),
    "5nn-dtw": _Entry(KNeighborsTSER, {"k": 5, "metric": "dtw"}, seeded=False),
}

REGRESSOR_NAMES = tuple(REGISTRY)


def validate_params(name: str, params: dict | None) -> dict:
    """Check ``params`` against the schema of ``name`` and convert their values."""
    if name not in REGISTRY:
        raise KeyError(f"unknown regressor {name!r}; choose from {', '.join(REGRESSOR_NAMES)}")
    schema = REGISTRY[name].schema
    out = {}
    for key, value in (params or {}).items():
        if key not in schema:
            allowed = ", ".join(schema) or "none"
            raise ValueError(f"{name} has no hyperparameter {key!r} (allowed: {allowed})")
        try:
            out[key] = schema[key](value)
        except (TypeError, ValueError):
            raise ValueError(f"invalid value {value!r} for {name}.{key}") from None
    return out


@dataclass(frozen=True)
class RegressorSpec:
    """A registered regressor name with hyperparameters and a seed."""

    name: str
    hyperparameters: dict = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "hyperparameters", validate_params(self.name, self.hyperparameters))

    def build(self, n_jobs: int = 1):
        return make_regressor(self.name, self.hyperparameters, self.seed, n_jobs)


def make_regressor(name: str, params: dict | None = None, seed: int = 0, n_jobs: int = 1):
    """Instantiate a registered regressor."""
    params = validate_params(name, params)
    entry = REGISTRY[name]
    kwargs = {**entry.fixed, **params}
    if entry.seeded:
        kwargs["seed"] = seed
    if entry.threaded:
        kwargs["n_jobs"] = n_jobs
    return entry.factory(**kwargs)
