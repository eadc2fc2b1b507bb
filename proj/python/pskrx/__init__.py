"""Exact and Monte Carlo analysis of PSK coherent-state receivers."""

from ._core import (
    ClickPattern,
    DecodeEntry,
    DecodeTable,
    NoiseModel,
    OptimizationResult,
    OptimizerSettings,
    PskAlphabet,
    ReceiverParams,
    TrialPlan,
    TrialReport,
    baselines,
    build_decode_table,
    mean_photon_numbers,
    ml_decode,
    optimize,
    pattern_probability,
    simulate,
    success_probability,
)

__all__ = [
    "ClickPattern",
    "DecodeEntry",
    "DecodeTable",
    "NoiseModel",
    "OptimizationResult",
    "OptimizerSettings",
    "PskAlphabet",
    "ReceiverParams",
    "TrialPlan",
    "TrialReport",
    "baselines",
    "build_decode_table",
    "mean_photon_numbers",
    "ml_decode",
    "optimize",
    "pattern_probability",
    "simulate",
    "success_probability",
]

__version__ = "0.1.0"
