"""Metric discrepancy theory of lacunary sequences, made executable."""

__version__ = "0.1.0"
