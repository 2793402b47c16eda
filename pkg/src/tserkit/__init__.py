"""Time series extrinsic regression: interval forests, baselines and benchmarking."""

__version__ = "0.1.0"
