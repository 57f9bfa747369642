"""Experiment drivers: parameter sweeps over the sampled ensembles.

Each (parameter, trial) pair owns RngStream(seed, stream=index) with a
fixed index scheme, so sweeps are deterministic given the seed, pairs are
independent, and a parallel runner would produce identical tables.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from ..core.eigh import eigvalsh_dense
from ..core.types import SymmetricMatrix, operator_from_matrix
from ..ensembles.rng import RngStream
from ..ensembles.samplers import percolate, sample_goe, sample_spiked_goe, sample_wishart_product
from ..laws.closed_forms import degeneracy_fraction, spiked_edge_prediction
from ..slq import lanczos, quadrature_from_tridiagonal
from .compare import detect_atom_zero

__all__ = [
    "BbpRow",
    "DegeneracyRow",
    "PercolationRow",
    "sweep_bbp",
    "sweep_degeneracy",
    "sweep_percolation",
]

_STREAMS_PER_PARAM = 100_000


def _extremes(matrix: SymmetricMatrix, rng: RngStream, solver: str, steps: int):
    """Extremal eigenvalues, matrix-free by default (dense for cross-checks)."""
    if solver == "dense":
        spectrum = eigvalsh_dense(matrix)
        return spectrum.min(), spectrum.max()
    if solver != "lanczos":
        raise ValueError("solver must be 'lanczos' or 'dense'")
    op = operator_from_matrix(matrix)
    v0 = rng.rademacher(matrix.n) / math.sqrt(matrix.n)
    result = lanczos(op, v0, min(steps, matrix.n))
    rule = quadrature_from_tridiagonal(result.tridiagonal)
    return float(rule.nodes[0]), float(rule.nodes[-1])


@dataclass(frozen=True)
class BbpRow:
    p_dim: int
    spike: float
    mean_top: float
    std_top: float
    mean_bottom: float
    std_bottom: float
    predicted_top: float
    predicted_bottom: float

    def to_dict(self) -> dict:
        return asdict(self)


def sweep_bbp(
    p_list,
    beta: float,
    sigma_eps: float,
    trials: int,
    seed: int,
    mode: str = "fixed",
    growth_n0: int | None = None,
    solver: str = "lanczos",
    lanczos_steps: int = 100,
) -> list[BbpRow]:
    """Extremal eigenvalues of spiked draws across dimensions.

    mode="fixed" keeps the spike at beta for every P (the detached outlier
    then sits at the rank-one prediction); mode="scaled" grows it as
    beta * sqrt(P / (2 * growth_n0)), the regime whose top eigenvalue
    increases without bound in P.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    if mode not in ("fixed", "scaled"):
        raise ValueError("mode must be 'fixed' or 'scaled'")
    if mode == "scaled" and not growth_n0:
        raise ValueError("scaled mode requires growth_n0")
    rows = []
    for ip, p in enumerate(p_list):
        spike = beta if mode == "fixed" else beta * math.sqrt(p / (2.0 * growth_n0))
        prediction = spiked_edge_prediction([spike], sigma_eps)
        tops = np.empty(trials)
        bottoms = np.empty(trials)
        for t in range(trials):
            rng = RngStream(seed, stream=ip * _STREAMS_PER_PARAM + t)
            matrix = sample_spiked_goe(p, sigma_eps, [spike], rng)
            bottoms[t], tops[t] = _extremes(matrix, rng, solver, lanczos_steps)
        rows.append(
            BbpRow(
                p_dim=int(p),
                spike=float(spike),
                mean_top=float(tops.mean()),
                std_top=float(tops.std(ddof=1)) if trials > 1 else 0.0,
                mean_bottom=float(bottoms.mean()),
                std_bottom=float(bottoms.std(ddof=1)) if trials > 1 else 0.0,
                predicted_top=prediction.top,
                predicted_bottom=prediction.bottom,
            )
        )
    return rows


@dataclass(frozen=True)
class DegeneracyRow:
    num_factors: int
    ratio: float
    dim_base: int
    predicted: float
    measured_mean: float
    measured_std: float

    def to_dict(self) -> dict:
        return asdict(self)


def sweep_degeneracy(
    l_list,
    ratio: float,
    dim_base: int,
    trials: int,
    seed: int,
    atom_tol: float = 1e-8,
) -> list[DegeneracyRow]:
    """Measured zero-eigenvalue fraction of factor products vs the prediction.

    The factor chain for L factors is [dim_base] * L + [dim_base / ratio]
    (inner dimension rounded), so every per-factor ratio equals ``ratio``
    and the L = 1 case is rank-exact.
    """
    if ratio < 1.0:
        raise ValueError("ratio must be at least 1")
    inner = max(1, round(dim_base / ratio))
    achieved = dim_base / inner
    rows = []
    for il, num_factors in enumerate(l_list):
        if num_factors < 1:
            raise ValueError("factor counts must be positive")
        dims = [dim_base] * num_factors + [inner]
        predicted = degeneracy_fraction(num_factors, [achieved] * num_factors)
        measured = np.empty(trials)
        for t in range(trials):
            rng = RngStream(seed, stream=il * _STREAMS_PER_PARAM + t)
            matrix = sample_wishart_product(dims, 1.0, rng)
            spectrum = eigvalsh_dense(matrix)
            measured[t] = detect_atom_zero(spectrum, atom_tol)
        rows.append(
            DegeneracyRow(
                num_factors=int(num_factors),
                ratio=float(achieved),
                dim_base=int(dim_base),
                predicted=float(predicted),
                measured_mean=float(measured.mean()),
                measured_std=float(measured.std(ddof=1)) if trials > 1 else 0.0,
            )
        )
    return rows


@dataclass(frozen=True)
class PercolationRow:
    sparsity_k: float
    sigma_hat: float
    atom_weight: float
    zero_row_fraction: float
    max_abs_eigenvalue: float
    tail_mass: float
    beyond_edge: bool

    def to_dict(self) -> dict:
        return asdict(self)


def sweep_percolation(
    p_dim: int,
    k_list,
    trials: int,
    seed: int,
    sigma: float = 1.0,
    atom_tol: float = 1e-8,
    relative_edge_tol: float = 0.15,
) -> list[PercolationRow]:
    """Spectral features of percolated GOE draws across sparsity constants.

    sigma_hat is the post-percolation entry scale sigma * sqrt(k/P); the
    semicircle of that scale would confine the spectrum to 2 sigma_hat, so
    tail_mass and beyond_edge measure what escapes it.  beyond_edge flags
    mean max|eigenvalue| > 2 sigma_hat (1 + relative_edge_tol); the margin
    is relative because sigma_hat itself shrinks with k.
    """
    rows = []
    for ik, k in enumerate(k_list):
        sigma_hat = sigma * math.sqrt(k / p_dim)
        atom = np.empty(trials)
        zero_rows = np.empty(trials)
        max_abs = np.empty(trials)
        tail = np.empty(trials)
        for t in range(trials):
            rng = RngStream(seed, stream=ik * _STREAMS_PER_PARAM + t)
            base = sample_goe(p_dim, sigma, rng)
            sparse = percolate(base, k, rng)
            zero_rows[t] = float(np.mean(np.all(sparse.entries == 0.0, axis=1)))
            spectrum = eigvalsh_dense(sparse)
            atom[t] = detect_atom_zero(spectrum, atom_tol)
            absvals = np.abs(spectrum.values)
            max_abs[t] = float(absvals.max())
            tail[t] = float(np.mean(absvals > 2.0 * sigma_hat))
        rows.append(
            PercolationRow(
                sparsity_k=float(k),
                sigma_hat=float(sigma_hat),
                atom_weight=float(atom.mean()),
                zero_row_fraction=float(zero_rows.mean()),
                max_abs_eigenvalue=float(max_abs.mean()),
                tail_mass=float(tail.mean()),
                beyond_edge=bool(max_abs.mean() > 2.0 * sigma_hat * (1.0 + relative_edge_tol)),
            )
        )
    return rows
