"""Quantitative comparison of empirical spectra against analytic laws.

Every tolerance here is an artifact default, not a literature-derived
constant: the comparisons being quantified are visual in origin, so the
thresholds are configurable and recorded in the report.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from ..core.types import EmpiricalSpectrum
from ..laws.base import SpectralLaw

__all__ = [
    "Tolerances",
    "GapResult",
    "OutlierResult",
    "SlopeFit",
    "ComparisonReport",
    "ks_distance",
    "compare",
    "detect_atom_zero",
    "detect_gap",
    "fit_origin_exponent",
    "fit_planar_radial_exponent",
]


@dataclass(frozen=True)
class Tolerances:
    """Comparison thresholds; all fields are artifact defaults."""

    atom_tol: float = 1e-8
    edge_tol: float | None = None  # None: max(0.05, 3 P^(-2/3)) x support width
    min_relative_gap: float = 0.1
    moment_count: int = 6
    slope_window: tuple[float, float] | None = None

    def resolved_edge_tol(self, law: SpectralLaw, sample_count: int) -> float:
        if self.edge_tol is not None:
            return self.edge_tol
        width = law.support_max - law.support_min
        # allow for edge fluctuations on the usual P^(-2/3) scale
        return width * max(0.05, 3.0 * sample_count ** (-2.0 / 3.0))


@dataclass(frozen=True)
class GapResult:
    found: bool
    interval: tuple[float, float] | None


@dataclass(frozen=True)
class OutlierResult:
    count_above: int
    count_below: int
    positions: tuple[float, ...]


@dataclass(frozen=True)
class SlopeFit:
    exponent: float
    stderr: float
    window: tuple[float, float]


@dataclass(frozen=True)
class ComparisonReport:
    """All spectral features the laboratory argues about, in one record."""

    ks_distance: float
    moment_errors: tuple[float, ...]
    atom_zero_weight: float
    law_atom_zero_weight: float
    gap: GapResult
    outliers: OutlierResult
    slope_fit: SlopeFit | None
    law: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        data = asdict(self)
        data["moment_errors"] = list(self.moment_errors)
        data["outliers"]["positions"] = list(self.outliers.positions)
        if self.gap.interval is not None:
            data["gap"]["interval"] = list(self.gap.interval)
        return data


def ks_distance(spectrum: EmpiricalSpectrum, law: SpectralLaw) -> float:
    """Sup distance between the weighted empirical CDF and the law CDF."""
    xs = spectrum.values
    w = spectrum.weight_array()
    cum = np.cumsum(w)
    # tied eigenvalues form one jump: the empirical CDF only takes the
    # cumulative value at the last of each run of duplicates
    unique, start = np.unique(xs, return_index=True)
    last = np.append(start[1:], xs.size) - 1
    cum_right = cum[last]
    cum_left = np.concatenate([[0.0], cum_right[:-1]])
    worst = float(np.max(np.abs(cum_right - law.cdf(unique))))
    worst = max(worst, float(np.max(np.abs(cum_left - law.cdf_left(unique)))))
    for loc, _ in law.atoms:
        at = float(np.sum(w[xs <= loc]))
        before = float(np.sum(w[xs < loc]))
        worst = max(worst, abs(at - law.cdf(loc)), abs(before - law.cdf_left(loc)))
    return worst


def detect_atom_zero(spectrum: EmpiricalSpectrum, atom_tol: float = 1e-8) -> float:
    """Spectral weight within atom_tol of zero."""
    w = spectrum.weight_array()
    return float(np.sum(w[np.abs(spectrum.values) <= atom_tol]))


def detect_gap(
    spectrum: EmpiricalSpectrum,
    min_relative_gap: float = 0.1,
    atom_tol: float = 1e-8,
) -> GapResult:
    """Largest gap between consecutive nonnegative eigenvalues below the bulk.

    The bulk is everything above atom_tol; a gap counts when its left
    endpoint sits at or below the bulk median and its width exceeds
    min_relative_gap times the full spectral range.
    """
    v = spectrum.values
    if v.size < 2:
        return GapResult(False, None)
    bulk = v[v > atom_tol]
    if bulk.size == 0:
        return GapResult(False, None)
    median = float(np.median(bulk))
    spectral_range = float(v[-1] - v[0])
    if spectral_range <= 0.0:
        return GapResult(False, None)
    left = v[:-1]
    right = v[1:]
    eligible = (left >= -atom_tol) & (left <= median)
    if not np.any(eligible):
        return GapResult(False, None)
    gaps = np.where(eligible, right - left, -np.inf)
    best = int(np.argmax(gaps))
    widest = float(gaps[best])
    if widest > min_relative_gap * spectral_range:
        return GapResult(True, (float(left[best]), float(right[best])))
    return GapResult(False, None)


def _log_binned_density(values, window, area, min_per_bin=10):
    lo, hi = window
    inside = values[(values > lo) & (values < hi)]
    if inside.size < 30:
        raise ValueError(
            f"need at least 30 eigenvalues inside the window, found {inside.size}"
        )
    n_bins = int(np.clip(inside.size // min_per_bin, 4, 24))
    edges = np.logspace(math.log10(lo), math.log10(hi), n_bins + 1)
    counts, _ = np.histogram(inside, bins=edges)
    # merge underpopulated bins rightward so every kept bin has enough mass
    merged_counts: list[float] = []
    merged_edges: list[float] = [edges[0]]
    acc = 0.0
    for count, edge in zip(counts, edges[1:]):
        acc += count
        if acc >= min_per_bin:
            merged_counts.append(acc)
            merged_edges.append(edge)
            acc = 0.0
    if acc > 0 and merged_counts:
        merged_counts[-1] += acc
        merged_edges[-1] = edges[-1]
    if len(merged_counts) < 3:
        raise ValueError("too few populated bins for a slope fit")
    lows = np.array(merged_edges[:-1])
    highs = np.array(merged_edges[1:])
    dens = np.array(merged_counts) / (inside.size * area(lows, highs))
    centers = np.sqrt(lows * highs)
    return centers, dens


def _slope_with_stderr(x: np.ndarray, y: np.ndarray) -> tuple[float, float]:
    n = x.size
    xm = x.mean()
    ym = y.mean()
    sxx = float(np.sum((x - xm) ** 2))
    slope = float(np.sum((x - xm) * (y - ym)) / sxx)
    intercept = ym - slope * xm
    resid = y - (intercept + slope * x)
    dof = max(n - 2, 1)
    stderr = math.sqrt(float(np.sum(resid**2)) / dof / sxx)
    return slope, stderr


def fit_origin_exponent(spectrum: EmpiricalSpectrum, window: tuple[float, float]) -> SlopeFit:
    """Power-law exponent of the spectral density near the origin.

    Least-squares slope of log(histogram density) against log(eigenvalue)
    over log-spaced bins inside the window; bins with fewer than 10
    eigenvalues are merged.  The window's lower edge must sit above the
    zero-atom resolution.
    """
    lo, hi = window
    if not 0.0 < lo < hi:
        raise ValueError("window must satisfy 0 < lo < hi")
    if lo <= 1e-8:
        raise ValueError("window must start above the zero-atom resolution 1e-8")
    centers, dens = _log_binned_density(
        spectrum.values, window, area=lambda a, b: (b - a)
    )
    slope, stderr = _slope_with_stderr(np.log(centers), np.log(dens))
    return SlopeFit(exponent=slope, stderr=stderr, window=(lo, hi))


def fit_planar_radial_exponent(moduli, window: tuple[float, float]) -> SlopeFit:
    """Power-law exponent of a planar (complex-spectrum) density vs modulus.

    Same log-binning as :func:`fit_origin_exponent` but with annulus-area
    normalization, so the fitted slope is the planar density exponent.
    """
    lo, hi = window
    if not 0.0 < lo < hi:
        raise ValueError("window must satisfy 0 < lo < hi")
    moduli = np.asarray(moduli, dtype=float)
    centers, dens = _log_binned_density(
        moduli, window, area=lambda a, b: math.pi * (b * b - a * a)
    )
    slope, stderr = _slope_with_stderr(np.log(centers), np.log(dens))
    return SlopeFit(exponent=slope, stderr=stderr, window=(lo, hi))


def compare(
    spectrum: EmpiricalSpectrum,
    law: SpectralLaw,
    tolerances: Tolerances = Tolerances(),
) -> ComparisonReport:
    """Quantify how an empirical spectrum matches a law on every feature.

    Moment errors are relative to max(|law moment|, (second moment)^(k/2)),
    so they stay meaningful for laws whose odd moments vanish.
    """
    if len(spectrum) == 0:
        raise ValueError("spectrum must be nonempty")
    ks = ks_distance(spectrum, law)
    m2 = law.moment(2)
    errors = []
    for k in range(1, tolerances.moment_count + 1):
        m_emp = spectrum.moment(k)
        m_law = law.moment(k)
        scale = max(abs(m_law), m2 ** (k / 2.0), 1e-300)
        errors.append(abs(m_emp - m_law) / scale)
    atom_weight = detect_atom_zero(spectrum, tolerances.atom_tol)
    gap = detect_gap(spectrum, tolerances.min_relative_gap, tolerances.atom_tol)
    edge_tol = tolerances.resolved_edge_tol(law, len(spectrum))
    lo = law.support_min - edge_tol
    hi = law.support_max + edge_tol
    v = spectrum.values
    above = v[v > hi]
    below = v[v < lo]
    outliers = OutlierResult(
        count_above=int(above.size),
        count_below=int(below.size),
        positions=tuple(float(x) for x in np.concatenate([below, above])),
    )
    slope = None
    if tolerances.slope_window is not None:
        slope = fit_origin_exponent(spectrum, tolerances.slope_window)
    return ComparisonReport(
        ks_distance=ks,
        moment_errors=tuple(errors),
        atom_zero_weight=atom_weight,
        law_atom_zero_weight=law.atom_weight_at(0.0, tol=tolerances.atom_tol),
        gap=gap,
        outliers=outliers,
        slope_fit=slope,
        law=law.describe(),
    )
