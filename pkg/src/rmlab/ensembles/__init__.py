"""Deterministic samplers for the laboratory's random matrix ensembles."""

from .nonsymmetric import complex_eigenvalues, eigvals_hessenberg, hessenberg_reduce
from .rng import RngStream
from .samplers import (
    GinibreProduct,
    keep_probability,
    percolate,
    sample_ginibre_product,
    sample_goe,
    sample_spiked_goe,
    sample_wigner_general,
    sample_wishart,
    sample_wishart_product,
)
from .spec import ALL_KINDS, SYMMETRIC_KINDS, EnsembleSpec

__all__ = [
    "ALL_KINDS",
    "EnsembleSpec",
    "GinibreProduct",
    "RngStream",
    "SYMMETRIC_KINDS",
    "complex_eigenvalues",
    "eigvals_hessenberg",
    "hessenberg_reduce",
    "keep_probability",
    "percolate",
    "sample_ginibre_product",
    "sample_goe",
    "sample_spiked_goe",
    "sample_wigner_general",
    "sample_wishart",
    "sample_wishart_product",
]
