"""Closed-form limiting laws and analytic spectral predictions."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .base import SpectralLaw

__all__ = [
    "semicircle_law",
    "marcenko_pastur_law",
    "marcenko_pastur_edges",
    "ginibre_product_radial_law",
    "ginibre_product_planar_density",
    "product_wishart_law_L2",
    "product_wishart_planar_density_L2",
    "degeneracy_fraction",
    "SpikedEdges",
    "spiked_edge_prediction",
    "spiked_edge_growth",
    "sparse_extremal_prediction",
    "sparse_tail_density",
]


def semicircle_law(sigma: float) -> SpectralLaw:
    """Semicircle on [-2 sigma, 2 sigma].

    Density sqrt(4 sigma^2 - x^2) / (2 pi sigma^2); the 1/sigma^2 factor is
    the standard unit-mass normalization.
    """
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    s2 = sigma * sigma

    def pdf(x):
        return np.sqrt(np.maximum(4.0 * s2 - x * x, 0.0)) / (2.0 * math.pi * s2)

    return SpectralLaw(
        "semicircle",
        pdf,
        support=[(-2.0 * sigma, 2.0 * sigma)],
        params={"sigma": sigma},
    )


def marcenko_pastur_edges(q: float, sigma: float) -> tuple[float, float]:
    """Bulk support edges sigma^2 (1 -+ sqrt(q))^2."""
    lo = sigma * sigma * (1.0 - math.sqrt(q)) ** 2
    hi = sigma * sigma * (1.0 + math.sqrt(q)) ** 2
    return lo, hi


def marcenko_pastur_law(q: float, sigma: float) -> SpectralLaw:
    """Marcenko-Pastur law with aspect ratio q = P/N and entry scale sigma.

    Bulk density sqrt((hi - x)(x - lo)) / (2 pi x q sigma^2) on [lo, hi];
    for q > 1 the bulk carries mass 1/q and an atom of weight 1 - 1/q sits
    at zero.
    """
    if q <= 0 or sigma <= 0:
        raise ValueError("q and sigma must be positive")
    lo, hi = marcenko_pastur_edges(q, sigma)
    qs2 = q * sigma * sigma

    def pdf(x):
        return np.sqrt(np.maximum((hi - x) * (x - lo), 0.0)) / (2.0 * math.pi * x * qs2)

    atoms = [(0.0, 1.0 - 1.0 / q)] if q > 1.0 else []
    return SpectralLaw(
        "marcenko_pastur",
        pdf,
        support=[(lo, hi)],
        atoms=atoms,
        params={"q": q, "sigma": sigma},
    )


def ginibre_product_planar_density(r, num_factors: int, sigmas) -> np.ndarray:
    """Planar (two-dimensional) density of the square factor-product spectrum.

    (1 / (L pi s^(2/L))) |z|^(2/L - 2) on the disk |z| <= s with
    s = prod(sigmas); reduces to the equal-variance textbook form when all
    factor scales coincide.
    """
    s = _radius(sigmas)
    L = num_factors
    r = np.asarray(r, dtype=float)
    inside = (r > 0) & (r <= s)
    out = np.zeros_like(r)
    out[inside] = r[inside] ** (2.0 / L - 2.0) / (L * math.pi * s ** (2.0 / L))
    return out


def _radius(sigmas) -> float:
    if np.isscalar(sigmas):
        return float(sigmas)
    prod = 1.0
    for s in sigmas:
        prod *= float(s)
    return prod


def ginibre_product_radial_law(num_factors: int, sigmas) -> SpectralLaw:
    """Radial marginal of the square Ginibre-product spectrum.

    The law of the modulus |z|: 2 pi r times the planar density, i.e.
    (2 / (L s^(2/L))) r^(2/L - 1) on [0, s].
    """
    if num_factors < 1:
        raise ValueError("need at least one factor")
    s = _radius(sigmas)
    if s <= 0:
        raise ValueError("sigmas must be positive")
    L = num_factors

    def pdf(r):
        return 2.0 * r ** (2.0 / L - 1.0) / (L * s ** (2.0 / L))

    return SpectralLaw(
        "ginibre_product_radial",
        pdf,
        support=[(0.0, s)],
        params={"num_factors": L, "radius": s},
    )


def product_wishart_planar_density_L2(r, ratio: float, sigma: float) -> np.ndarray:
    """Continuous planar density of the two-factor product law at modulus r."""
    r = np.asarray(r, dtype=float)
    s2 = sigma * sigma
    val = ratio / (math.pi * s2 * np.sqrt((1.0 - ratio) ** 2 + 4.0 * ratio * r * r / s2))
    return np.where(r <= sigma, val, 0.0)


def product_wishart_law_L2(ratio: float, sigma: float) -> SpectralLaw:
    """Two-factor product law over the modulus, with its zero atom.

    ``ratio`` is the smaller-to-larger dimension ratio R of the two factors
    and must satisfy 0 < R <= 1 (the atom weight is 1 - R); for the inverse
    ordering, pass 1/R instead.  The radial marginal is
    2 r R / (sigma^2 sqrt((1-R)^2 + 4 R r^2 / sigma^2)) on [0, sigma].
    """
    if not 0.0 < ratio <= 1.0:
        raise ValueError(
            f"ratio must lie in (0, 1]; got {ratio}. For a ratio above 1, "
            "invert it (swap the two factor dimensions)."
        )
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    s2 = sigma * sigma

    def pdf(r):
        return 2.0 * r * ratio / (s2 * np.sqrt((1.0 - ratio) ** 2 + 4.0 * ratio * r * r / s2))

    atoms = [(0.0, 1.0 - ratio)] if ratio < 1.0 else []
    return SpectralLaw(
        "product_wishart_l2",
        pdf,
        support=[(0.0, sigma)],
        atoms=atoms,
        params={"ratio": ratio, "sigma": sigma},
    )


def degeneracy_fraction(num_factors: int, ratios) -> float:
    """Predicted zero-eigenvalue fraction of a factor-product Gram matrix.

    1 - mean(1/R_l) / L for per-factor dimension ratios R_l >= 1.  The
    expansion behind it assumes R_l >> 1; a warning fires when any ratio
    is below 5.
    """
    if num_factors < 1:
        raise ValueError("need at least one factor")
    ratios = [float(r) for r in ratios]
    if not ratios:
        raise ValueError("need at least one ratio")
    if any(r < 1.0 for r in ratios):
        raise ValueError("all ratios must be at least 1")
    if any(r < 5.0 for r in ratios):
        warnings.warn(
            "degeneracy_fraction assumes large dimension ratios; "
            "values below 5 are outside its derivation regime",
            stacklevel=2,
        )
    mean_inv = sum(1.0 / r for r in ratios) / len(ratios)
    return 1.0 - mean_inv / num_factors


@dataclass(frozen=True)
class SpikedEdges:
    """Predicted extremal eigenvalues of a spiked bulk.

    ``outliers`` maps each spike to its detached eigenvalue, or None when
    the spike is absorbed into the bulk edge.
    """

    top: float
    bottom: float
    outliers: tuple[float | None, ...]


def spiked_edge_prediction(spikes, sigma_eps: float) -> SpikedEdges:
    """Extremal eigenvalues of finite-rank spikes plus a GOE bulk.

    A spike beta detaches iff |beta| > sigma_eps, landing at
    beta + sigma_eps^2 / beta (same formula both signs); otherwise the
    extremes stay at the bulk edges +-2 sigma_eps.
    """
    if sigma_eps <= 0:
        raise ValueError("sigma_eps must be positive")
    spikes = [float(b) for b in spikes]
    outliers: list[float | None] = []
    for beta in spikes:
        if abs(beta) > sigma_eps:
            outliers.append(beta + sigma_eps * sigma_eps / beta)
        else:
            outliers.append(None)
    top = 2.0 * sigma_eps
    bottom = -2.0 * sigma_eps
    for value in outliers:
        if value is not None:
            top = max(top, value)
            bottom = min(bottom, value)
    return SpikedEdges(top=top, bottom=bottom, outliers=tuple(outliers))


def spiked_edge_growth(spike: float, sigma: float, scale_factor: float) -> float:
    """Spiked-edge variant with an explicit dimension-growth scale factor.

    Evaluates spike + scale_factor * sigma / spike past the sqrt(2) bulk
    edge of the unit-variance convention (mirrored for negative spikes),
    else the edge itself.  The caller supplies scale_factor, typically
    sqrt(P / (2 N)); how N should be chosen is deliberately left explicit.
    """
    edge = math.sqrt(2.0)
    if spike > edge:
        return spike + scale_factor * sigma / spike
    if spike < -edge:
        return spike + scale_factor * sigma / spike
    return edge if spike >= 0 else -edge


def sparse_extremal_prediction(p_dim: int, k_index: int, d: float) -> float:
    """Magnitude of the k-th extremal eigenvalue of a very sparse ensemble.

    sqrt(log(P/k) / log(log(P)/d)); requires P >= 3, 1 <= k <= P, and
    log(P)/d > 1 so the denominator is positive.
    """
    if p_dim < 3:
        raise ValueError("p_dim must be at least 3")
    if not 1 <= k_index <= p_dim:
        raise ValueError("k_index must lie in [1, p_dim]")
    if d <= 0 or math.log(p_dim) / d <= 1.0:
        raise ValueError("need log(P)/d > 1")
    return math.sqrt(math.log(p_dim / k_index) / math.log(math.log(p_dim) / d))


def sparse_tail_density(lam: float, p_row: float) -> float:
    """Unnormalized tail estimate (e p / lambda^2)^(lambda^2).

    ``p_row`` is the expected number of nonzero entries per row.  Only the
    shape on a log scale is meaningful; the estimate carries no
    normalization.
    """
    if lam == 0.0:
        raise ValueError("lam must be nonzero")
    if p_row <= 0:
        raise ValueError("p_row must be positive")
    lam2 = lam * lam
    return float((math.e * p_row / lam2) ** lam2)
