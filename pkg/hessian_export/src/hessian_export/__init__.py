"""Exact Hessian / Gauss-Newton / Residual export for small classifiers."""

from .data import gaussian_mixture, load_idx, mnist_subset
from .export import ExportResult, export_entry_histogram, export_hessian_split
from .models import ModelSpec, Network, cross_entropy, softmax
from .rmtx import read_rmtx, write_rmtx
from .train import learning_rate, train

__all__ = [
    "ExportResult",
    "ModelSpec",
    "Network",
    "cross_entropy",
    "export_entry_histogram",
    "export_hessian_split",
    "gaussian_mixture",
    "learning_rate",
    "load_idx",
    "mnist_subset",
    "read_rmtx",
    "softmax",
    "train",
    "write_rmtx",
]

__version__ = "0.1.0"
