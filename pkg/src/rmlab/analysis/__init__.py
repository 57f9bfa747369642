"""Empirical-vs-analytic comparison tools and experiment sweeps."""

from .compare import (
    ComparisonReport,
    GapResult,
    OutlierResult,
    SlopeFit,
    Tolerances,
    compare,
    detect_atom_zero,
    detect_gap,
    fit_origin_exponent,
    fit_planar_radial_exponent,
    ks_distance,
)
from .sweeps import (
    BbpRow,
    DegeneracyRow,
    PercolationRow,
    sweep_bbp,
    sweep_degeneracy,
    sweep_percolation,
)

__all__ = [
    "BbpRow",
    "ComparisonReport",
    "DegeneracyRow",
    "GapResult",
    "OutlierResult",
    "PercolationRow",
    "SlopeFit",
    "Tolerances",
    "compare",
    "detect_atom_zero",
    "detect_gap",
    "fit_origin_exponent",
    "fit_planar_radial_exponent",
    "ks_distance",
    "sweep_bbp",
    "sweep_degeneracy",
    "sweep_percolation",
]
