"""Stable identifiers for every feature the package can compute."""

from __future__ import annotations

from dataclasses import dataclass

from ._catch22 import CATCH22_NAMES, CATCH22_SHORT_NAMES
from ._fresh import FRESH_CATALOGUE
from ._summary import SUMMARY_NAMES

_SUMMARY_DESCRIPTIONS = {
    "mean": "arithmetic mean",
    "std": "sample standard deviation (n - 1 divisor)",
    "slope": "least-squares slope against the index",
    "median": "median",
    "iqr": "interquartile range, linear-interpolation quantiles",
    "min": "minimum",
    "max": "maximum",
}


@dataclass(frozen=True, order=True)
class FeatureId:
    """A feature identifier; ids sort by ``(family_rank, position)``."""

    family_rank: int
    position: int
    name: str
    family: str
    description: str

    @property
    def id(self) -> str:
        return f"{self.family}.{self.name}"

    def __str__(self) -> str:
        return self.id


def _build():
    out = []
    for i, (name, short) in enumerate(zip(CATCH22_NAMES, CATCH22_SHORT_NAMES)):
        out.append(FeatureId(0, i, name, "catch22", f"catch22 feature ({short})"))
    for i, name in enumerate(SUMMARY_NAMES):
        out.append(FeatureId(1, i, name, "summary", _SUMMARY_DESCRIPTIONS[name]))
    for i, (name, fam, desc) in enumerate(FRESH_CATALOGUE):
        out.append(FeatureId(2, i, name, "fresh", f"{fam}: {desc}"))
    return tuple(out)


ALL_FEATURES = _build()
POOL_FEATURES = tuple(f for f in ALL_FEATURES if f.family in ("catch22", "summary"))
FRESH_FEATURES = tuple(f for f in ALL_FEATURES if f.family == "fresh")


def feature_catalogue(pool: str = "all") -> tuple[FeatureId, ...]:
    """Feature ids of ``pool``: ``all``, ``interval`` (the 29-feature pool) or ``fresh``."""
    if pool == "all":
        return ALL_FEATURES
    if pool == "interval":
        return POOL_FEATURES
    if pool == "fresh":
        return FRESH_FEATURES
    raise ValueError(f"unknown feature pool {pool!r}")
