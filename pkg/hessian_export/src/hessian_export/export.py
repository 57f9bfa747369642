"""Export the Hessian split H = G + R of a trained or seeded classifier."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .models import ModelSpec, Network
from .rmtx import read_rmtx, write_rmtx

__all__ = ["ExportResult", "export_hessian_split", "export_entry_histogram"]


@dataclass(frozen=True)
class ExportResult:
    hessian_path: Path
    ggn_path: Path
    residual_path: Path
    metadata_path: Path


def _content_hash(*arrays: np.ndarray) -> str:
    digest = hashlib.sha256()
    for arr in arrays:
        digest.update(np.ascontiguousarray(arr, dtype=np.float64).tobytes())
    return digest.hexdigest()


def export_hessian_split(
    spec: ModelSpec,
    weights: np.ndarray,
    x: np.ndarray,
    y: np.ndarray,
    out_prefix,
) -> ExportResult:
    """Write H, G, and R = H - G as RMTX files plus a JSON metadata sidecar.

    H comes from exact second-order differentiation of the empirical risk
    (column-by-column curvature products against basis vectors); G is the
    Gauss-Newton construction from per-sample Jacobians and the loss
    output Hessian.  Positivity of H is deliberately not asserted; its
    minimum eigenvalue (and sign) is recorded instead.
    """
    network = Network(spec)
    weights = np.asarray(weights, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    if x.shape != (spec.n_samples, spec.input_dim):
        raise ValueError(f"features must have shape {(spec.n_samples, spec.input_dim)}")
    if y.shape != (spec.n_samples,) or y.min() < 0 or y.max() >= spec.classes:
        raise ValueError("labels must be integers in [0, classes)")
    network.check_finite(weights, x, y)

    hessian = network.dense_hessian(weights, x, y)
    ggn = network.gauss_newton(weights, x, y)
    residual = hessian - ggn

    prefix = Path(out_prefix)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    paths = ExportResult(
        hessian_path=prefix.with_name(prefix.name + ".hessian.rmtx"),
        ggn_path=prefix.with_name(prefix.name + ".ggn.rmtx"),
        residual_path=prefix.with_name(prefix.name + ".residual.rmtx"),
        metadata_path=prefix.with_name(prefix.name + ".meta.json"),
    )
    write_rmtx(paths.hessian_path, hessian)
    write_rmtx(paths.ggn_path, ggn)
    write_rmtx(paths.residual_path, residual)

    hessian_eigs = np.linalg.eigvalsh(hessian)
    loss, gradient = network.loss_and_gradient(weights, x, y)
    metadata = {
        "model": spec.to_dict(),
        "loss_type": "softmax_cross_entropy",
        "loss_value": loss,
        "gradient_norm": float(np.linalg.norm(gradient)),
        "n_samples": spec.n_samples,
        "parameter_count": spec.parameter_count,
        "classes": spec.classes,
        "hessian_min_eigenvalue": float(hessian_eigs[0]),
        "hessian_min_eigenvalue_sign": int(np.sign(hessian_eigs[0])),
        "hessian_max_eigenvalue": float(hessian_eigs[-1]),
        "ggn_rank_bound": spec.n_samples * spec.classes,
        "input_sha256": _content_hash(x, y.astype(np.float64), weights),
        "outputs": {
            "hessian": paths.hessian_path.name,
            "ggn": paths.ggn_path.name,
            "residual": paths.residual_path.name,
        },
    }
    paths.metadata_path.write_text(json.dumps(metadata, indent=2, sort_keys=True) + "\n")
    return paths


def export_entry_histogram(matrix_path, row_indices, out_csv) -> dict:
    """Dump raw entries of selected rows plus near-zero summary fractions.

    Returns the summary dict {"fraction_below_1e8", "fraction_below_1e6"})
    and writes one CSV row per sampled entry: row,col,entry.
    """
    matrix = read_rmtx(matrix_path)
    n = matrix.shape[0]
    rows = [int(r) for r in row_indices]
    for r in rows:
        if not 0 <= r < n:
            raise IndexError(f"row {r} out of range for dimension {n}")
    sampled = matrix[rows, :]
    lines = ["row,col,entry"]
    for r, row_values in zip(rows, sampled):
        for c, value in enumerate(row_values):
            lines.append(f"{r},{c},{float(value)!r}")
    Path(out_csv).write_text("\n".join(lines) + "\n")
    flat = np.abs(sampled.ravel())
    summary = {
        "fraction_below_1e8": float(np.mean(flat < 1e-8)),
        "fraction_below_1e6": float(np.mean(flat < 1e-6)),
        "rows": rows,
        "dimension": n,
    }
    summary_path = Path(out_csv).with_suffix(".summary.json")
    summary_path.write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    return summary
