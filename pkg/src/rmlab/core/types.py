"""Foundational value types shared by every module.

All types are immutable after construction (backing arrays are marked
read-only) and therefore safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

__all__ = [
    "InvalidMatrixError",
    "SymmetricMatrix",
    "EmpiricalSpectrum",
    "TridiagonalMatrix",
    "LinearOperator",
    "operator_from_matrix",
    "operator_symmetry_defect",
]

# Largest tolerated relative asymmetry of raw input; anything bigger is
# treated as corrupt data rather than rounding noise.
ASYMMETRY_RTOL = 1e-8


class InvalidMatrixError(ValueError):
    """Raised for non-finite, non-square, or materially asymmetric input."""


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


class SymmetricMatrix:
    """Dense real symmetric matrix with exact entry symmetry.

    The constructor symmetrizes its input as (A + A^T)/2 after checking
    that the asymmetry does not exceed ``ASYMMETRY_RTOL`` relative to the
    largest entry.  Entries are stored row-major float64 and frozen.
    """

    __slots__ = ("entries", "n")

    def __init__(self, entries) -> None:
        a = np.array(entries, dtype=np.float64, order="C")
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise InvalidMatrixError(f"expected a square matrix, got shape {a.shape}")
        if a.shape[0] < 1:
            raise InvalidMatrixError("matrix dimension must be at least 1")
        if not np.all(np.isfinite(a)):
            raise InvalidMatrixError("matrix contains non-finite entries")
        scale = float(np.max(np.abs(a))) if a.size else 0.0
        defect = float(np.max(np.abs(a - a.T))) if a.size else 0.0
        if defect > ASYMMETRY_RTOL * max(scale, 1e-300):
            raise InvalidMatrixError(
                f"input is asymmetric beyond rounding noise: "
                f"max |A - A^T| = {defect:.3e}, max |A| = {scale:.3e}"
            )
        if defect != 0.0:
            a = (a + a.T) / 2.0
        self.entries = _freeze(a)
        self.n = a.shape[0]

    def trace(self) -> float:
        return float(np.trace(self.entries))

    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.entries))

    def __repr__(self) -> str:  # pragma: no cover
        return f"SymmetricMatrix(n={self.n})"


class EmpiricalSpectrum:
    """Sorted real eigenvalues with optional normalized weights.

    Weights default to the uniform 1/P measure.  Explicit weights must be
    positive and sum to 1 within 1e-12.
    """

    __slots__ = ("values", "weights")

    def __init__(self, values, weights=None) -> None:
        v = np.array(values, dtype=np.float64).ravel()
        if v.size < 1:
            raise ValueError("spectrum must contain at least one eigenvalue")
        if not np.all(np.isfinite(v)):
            raise ValueError("spectrum contains non-finite values")
        if weights is None:
            order = np.argsort(v, kind="stable")
            self.values = _freeze(v[order])
            self.weights = None
            return
        w = np.array(weights, dtype=np.float64).ravel()
        if w.shape != v.shape:
            raise ValueError("weights must match values in length")
        if np.any(w <= 0.0):
            raise ValueError("weights must all be positive")
        total = float(w.sum())
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"weights must sum to 1 within 1e-12, got {total!r}")
        order = np.argsort(v, kind="stable")
        self.values = _freeze(v[order])
        self.weights = _freeze(w[order])

    def __len__(self) -> int:
        return int(self.values.size)

    def weight_array(self) -> np.ndarray:
        """Weights as an array, materializing the uniform default."""
        if self.weights is not None:
            return self.weights
        return np.full(self.values.size, 1.0 / self.values.size)

    def moment(self, k: int) -> float:
        """k-th spectral moment sum_i w_i lambda_i^k."""
        return float(np.sum(self.weight_array() * self.values**k))

    def min(self) -> float:
        return float(self.values[0])

    def max(self) -> float:
        return float(self.values[-1])

    def __repr__(self) -> str:  # pragma: no cover
        return f"EmpiricalSpectrum(size={len(self)})"


class TridiagonalMatrix:
    """Symmetric tridiagonal matrix given by diagonal alpha and off-diagonal beta.

    All beta entries are strictly positive: a recursion that would produce a
    zero beta must stop early and return a shorter matrix instead.
    """

    __slots__ = ("alpha", "beta")

    def __init__(self, alpha, beta) -> None:
        a = np.array(alpha, dtype=np.float64).ravel()
        b = np.array(beta, dtype=np.float64).ravel()
        if a.size < 1:
            raise ValueError("alpha must have at least one entry")
        if b.size != a.size - 1:
            raise ValueError(f"beta must have len(alpha)-1 entries, got {b.size}")
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
            raise ValueError("tridiagonal entries must be finite")
        if b.size and np.any(b <= 0.0):
            raise ValueError("all beta entries must be strictly positive")
        self.alpha = _freeze(a)
        self.beta = _freeze(b)

    @property
    def size(self) -> int:
        return int(self.alpha.size)

    def dense(self) -> np.ndarray:
        """Materialize as a dense array (small matrices only)."""
        m = self.size
        t = np.zeros((m, m))
        t[np.arange(m), np.arange(m)] = self.alpha
        if m > 1:
            idx = np.arange(m - 1)
            t[idx, idx + 1] = self.beta
            t[idx + 1, idx] = self.beta
        return t

    def __repr__(self) -> str:  # pragma: no cover
        return f"TridiagonalMatrix(size={self.size})"


@dataclass(frozen=True)
class LinearOperator:
    """Symmetric linear operator given by its dimension and matvec.

    ``apply`` must be linear and symmetric: <u, A v> == <v, A u> within
    1e-10 relative for random probe pairs (see operator_symmetry_defect).
    """

    dim: int
    apply: Callable[[np.ndarray], np.ndarray] = field(repr=False)

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("operator dimension must be positive")

    def matvec(self, v: np.ndarray) -> np.ndarray:
        out = np.asarray(self.apply(np.asarray(v, dtype=np.float64)), dtype=np.float64)
        if out.shape != (self.dim,):
            raise ValueError(f"operator returned shape {out.shape}, expected ({self.dim},)")
        return out


def operator_from_matrix(matrix) -> LinearOperator:
    """Wrap a SymmetricMatrix (or square ndarray) as a LinearOperator."""
    a = matrix.entries if isinstance(matrix, SymmetricMatrix) else np.asarray(matrix, dtype=float)
    return LinearOperator(dim=a.shape[0], apply=lambda v: a @ v)


def operator_symmetry_defect(op: LinearOperator, probes: int = 4, seed: int = 0) -> float:
    """Max relative defect of <u, A v> - <v, A u> over random probe pairs."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(probes):
        u = rng.standard_normal(op.dim)
        v = rng.standard_normal(op.dim)
        au = op.matvec(u)
        av = op.matvec(v)
        num = abs(float(u @ av) - float(v @ au))
        den = max(abs(float(u @ av)), abs(float(v @ au)), 1e-300)
        worst = max(worst, num / den)
    return worst
