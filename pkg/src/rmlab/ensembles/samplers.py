"""Seed-reproducible samplers for every matrix family in the laboratory.

Conventions (fixed here, documented once):

* Wigner-type matrices are returned normalized by 1/sqrt(P): off-diagonal
  entries have variance sigma^2/P, diagonal 2*sigma^2/P, so the limiting
  bulk support is [-2*sigma, 2*sigma].
* Wishart is X X^T / N for a P x N factor with entries of variance
  sigma^2; products of factors are normalized by the product of the inner
  dimensions so the mean eigenvalue stays O(1).
* Every sampler consumes its RngStream in a fixed draw order; reordering
  draws would silently break bit-reproducibility.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..core.types import SymmetricMatrix
from .nonsymmetric import complex_eigenvalues
from .rng import RngStream

__all__ = [
    "sample_goe",
    "sample_wigner_general",
    "sample_wishart",
    "sample_ginibre_product",
    "GinibreProduct",
    "sample_wishart_product",
    "percolate",
    "keep_probability",
    "sample_spiked_goe",
]

ENTRY_DISTRIBUTIONS = ("gaussian", "rademacher", "uniform")


def sample_goe(p: int, sigma: float, rng: RngStream) -> SymmetricMatrix:
    """Gaussian orthogonal ensemble draw, normalized by 1/sqrt(P).

    Built as (G + G^T)/sqrt(2) from a square Gaussian block, which gives
    off-diagonal variance sigma^2 and diagonal variance 2*sigma^2 before
    the 1/sqrt(P) normalization.
    """
    if p < 1:
        raise ValueError("dimension must be positive")
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    g = rng.normals(p * p).reshape(p, p) * sigma
    m = (g + g.T) / math.sqrt(2.0)
    m /= math.sqrt(p)
    return SymmetricMatrix(m)


def sample_wigner_general(
    p: int, sigma: float, entry_distribution: str, rng: RngStream
) -> SymmetricMatrix:
    """Wigner draw with non-Gaussian entries, same normalization as the GOE.

    Off-diagonal entries are zero mean with variance sigma^2; the diagonal
    uses the same distribution scaled to variance 2*sigma^2 (the GOE
    convention).  The limiting law is the same semicircle.
    """
    if entry_distribution not in ENTRY_DISTRIBUTIONS:
        raise ValueError(f"entry_distribution must be one of {ENTRY_DISTRIBUTIONS}")
    if p < 1 or sigma <= 0:
        raise ValueError("need p >= 1 and sigma > 0")
    n_off = p * (p - 1) // 2
    if entry_distribution == "gaussian":
        off = rng.normals(n_off) * sigma
        diag = rng.normals(p) * (sigma * math.sqrt(2.0))
    elif entry_distribution == "rademacher":
        off = rng.rademacher(n_off) * sigma
        diag = rng.rademacher(p) * (sigma * math.sqrt(2.0))
    else:
        off = rng.uniform_symmetric(n_off, math.sqrt(3.0) * sigma)
        diag = rng.uniform_symmetric(p, math.sqrt(6.0) * sigma)
    m = np.zeros((p, p))
    iu = np.triu_indices(p, 1)
    m[iu] = off
    m += m.T
    m[np.arange(p), np.arange(p)] = diag
    m /= math.sqrt(p)
    return SymmetricMatrix(m)


def sample_wishart(p: int, n_data: int, sigma: float, rng: RngStream) -> SymmetricMatrix:
    """Wishart draw X X^T / N with X of shape P x N, entries N(0, sigma^2)."""
    if p < 1 or n_data < 1:
        raise ValueError("dimensions must be positive")
    x = rng.normals(p * n_data).reshape(p, n_data) * sigma
    return SymmetricMatrix((x @ x.T) / n_data)


@dataclass(frozen=True)
class GinibreProduct:
    """Product of independent Gaussian factors plus its complex spectrum."""

    matrix: np.ndarray
    eigenvalues: np.ndarray | None


def sample_ginibre_product(
    dims, sigmas, rng: RngStream, want_eigenvalues: bool = True
) -> GinibreProduct:
    """Product X_1 ... X_L of independent Gaussian factors.

    Factor l has shape dims[l] x dims[l+1] with entries
    N(0, sigmas[l]^2 / dims[l]), so each square factor has spectral radius
    sigmas[l] and the square product fills the disk of radius prod(sigmas).
    Complex eigenvalues are only defined for a square product.
    """
    dims = [int(d) for d in dims]
    if len(dims) < 2 or any(d < 1 for d in dims):
        raise ValueError("dims must list at least two positive factor dimensions")
    n_factors = len(dims) - 1
    if np.isscalar(sigmas):
        sigmas = [float(sigmas)] * n_factors
    sigmas = [float(s) for s in sigmas]
    if len(sigmas) != n_factors:
        raise ValueError("need one sigma per factor")
    if any(s <= 0 for s in sigmas):
        raise ValueError("sigmas must be positive")
    product = None
    for l in range(n_factors):
        rows, cols = dims[l], dims[l + 1]
        factor = rng.normals(rows * cols).reshape(rows, cols)
        factor *= sigmas[l] / math.sqrt(rows)
        product = factor if product is None else product @ factor
    if want_eigenvalues:
        if dims[0] != dims[-1]:
            raise ValueError(
                "eigenvalues are only defined for a square product; "
                "pass want_eigenvalues=False for rectangular factors"
            )
        return GinibreProduct(product, complex_eigenvalues(product))
    return GinibreProduct(product, None)


def sample_wishart_product(dims, sigma: float, rng: RngStream) -> SymmetricMatrix:
    """Gram matrix of a factor product, normalized by the inner dimensions.

    Returns X X^T / prod(dims[1:]) where X = X_1 ... X_L with independent
    N(0, sigma^2) entries per factor; the normalization makes the mean
    eigenvalue exactly sigma^(2L) in expectation.
    """
    dims = [int(d) for d in dims]
    if len(dims) < 2 or any(d < 1 for d in dims):
        raise ValueError("dims must list at least two positive factor dimensions")
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    product = None
    for l in range(len(dims) - 1):
        rows, cols = dims[l], dims[l + 1]
        factor = rng.normals(rows * cols).reshape(rows, cols) * sigma
        product = factor if product is None else product @ factor
    scale = 1.0
    for d in dims[1:]:
        scale *= d
    return SymmetricMatrix((product @ product.T) / scale)


def keep_probability(k: float, p: int) -> float:
    """Edge-keep probability p = k/P for sparsity constant k."""
    prob = k / p
    if not 0.0 < prob <= 1.0:
        raise ValueError(f"k={k} gives keep probability {prob}, outside (0, 1]")
    return prob


def percolate(matrix: SymmetricMatrix, k: float, rng: RngStream) -> SymmetricMatrix:
    """Keep each entry independently with probability k/P, zero the rest.

    One Bernoulli draw per upper-triangle entry, diagonal included; the
    mask is mirrored to preserve symmetry.  k = P is the identity map and
    consumes no randomness.
    """
    p = matrix.n
    prob = keep_probability(k, p)
    if prob == 1.0:
        return SymmetricMatrix(matrix.entries)
    n_upper = p * (p + 1) // 2
    keep = rng.uniforms(n_upper) < prob
    mask = np.zeros((p, p), dtype=bool)
    iu = np.triu_indices(p)
    mask[iu] = keep
    mask |= mask.T
    return SymmetricMatrix(np.where(mask, matrix.entries, 0.0))


def sample_spiked_goe(p: int, sigma_eps: float, spikes, rng: RngStream) -> SymmetricMatrix:
    """Finite-rank spike matrix plus an independent GOE bulk.

    The bulk is a ``sample_goe(p, sigma_eps)`` draw; the spike part is
    sum_i beta_i u_i u_i^T with orthonormal u_i obtained by Gram-Schmidt
    on Gaussian vectors (degenerate draws are resampled).  Draw order:
    bulk first, then spike vectors.
    """
    spikes = [float(b) for b in spikes]
    r = len(spikes)
    if r > p // 10:
        raise ValueError(f"rank {r} spikes exceed the low-rank budget P/10 = {p // 10}")
    bulk = sample_goe(p, sigma_eps, rng)
    if r == 0:
        return bulk
    basis = []
    for _ in spikes:
        while True:
            u = rng.normals(p)
            for q in basis:
                u -= (q @ u) * q
            norm = math.sqrt(float(u @ u))
            if norm >= 1e-12:
                basis.append(u / norm)
                break
    low_rank = np.zeros((p, p))
    for beta, u in zip(spikes, basis):
        low_rank += beta * np.outer(u, u)
    return SymmetricMatrix(bulk.entries + low_rank)
