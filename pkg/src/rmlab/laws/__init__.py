"""Closed-form limiting laws and transform machinery."""

from .base import SpectralLaw, edge_substituted_quad
from .closed_forms import (
    SpikedEdges,
    degeneracy_fraction,
    ginibre_product_planar_density,
    ginibre_product_radial_law,
    marcenko_pastur_edges,
    marcenko_pastur_law,
    product_wishart_law_L2,
    product_wishart_planar_density_L2,
    semicircle_law,
    sparse_extremal_prediction,
    sparse_tail_density,
    spiked_edge_growth,
    spiked_edge_prediction,
)
from .transforms import (
    ConvergenceError,
    StieltjesFunction,
    default_inversion_eta,
    free_add,
    free_add_wigner_wishart,
    invert_stieltjes,
    r_transform_marcenko_pastur,
    r_transform_wigner,
    semicircle_stieltjes,
    stieltjes_of_law,
)

__all__ = [
    "ConvergenceError",
    "SpectralLaw",
    "SpikedEdges",
    "StieltjesFunction",
    "default_inversion_eta",
    "degeneracy_fraction",
    "edge_substituted_quad",
    "free_add",
    "free_add_wigner_wishart",
    "ginibre_product_planar_density",
    "ginibre_product_radial_law",
    "invert_stieltjes",
    "marcenko_pastur_edges",
    "marcenko_pastur_law",
    "product_wishart_law_L2",
    "product_wishart_planar_density_L2",
    "r_transform_marcenko_pastur",
    "r_transform_wigner",
    "semicircle_law",
    "semicircle_stieltjes",
    "sparse_extremal_prediction",
    "sparse_tail_density",
    "spiked_edge_growth",
    "spiked_edge_prediction",
    "stieltjes_of_law",
]
