"""Exact symmetric eigensolvers: dense and tridiagonal.

The dense path is Householder tridiagonalization followed by implicit-shift
QL, written in-repo for platform-stable, reproducible spectra at desk scale
(n up to roughly 8000).
"""

from __future__ import annotations

import numpy as np

from .householder import accumulate_backtransform, tridiagonalize
from .tridiagonal import ql_eigen
from .types import EmpiricalSpectrum, SymmetricMatrix, TridiagonalMatrix

__all__ = ["eigvalsh_dense", "eigh_dense", "eigh_tridiagonal"]

DENSE_SIZE_LIMIT = 8000


def _as_symmetric(matrix) -> SymmetricMatrix:
    if isinstance(matrix, SymmetricMatrix):
        return matrix
    return SymmetricMatrix(matrix)


def eigvalsh_dense(matrix) -> EmpiricalSpectrum:
    """All eigenvalues of a dense symmetric matrix, sorted ascending."""
    sym = _as_symmetric(matrix)
    if sym.n > DENSE_SIZE_LIMIT:
        raise ValueError(f"dense solver is limited to n <= {DENSE_SIZE_LIMIT}")
    d, e, _, _ = tridiagonalize(sym.entries)
    values, _ = ql_eigen(d, e, mode="values")
    return EmpiricalSpectrum(values)


def eigh_dense(matrix):
    """Eigenvalues and orthonormal eigenvectors of a dense symmetric matrix.

    Returns ``(spectrum, q)`` with the columns of ``q`` matching the sorted
    eigenvalues, so ``matrix == q @ diag(values) @ q.T`` up to rounding.
    """
    sym = _as_symmetric(matrix)
    if sym.n > DENSE_SIZE_LIMIT:
        raise ValueError(f"dense solver is limited to n <= {DENSE_SIZE_LIMIT}")
    d, e, reflectors, taus = tridiagonalize(sym.entries)
    q0 = accumulate_backtransform(reflectors, taus)
    values, q = ql_eigen(d, e, mode="vectors", basis=q0)
    return EmpiricalSpectrum(values), q


def eigh_tridiagonal(t: TridiagonalMatrix, want_first_components: bool = True):
    """Eigenvalues of a tridiagonal matrix plus first eigenvector entries.

    ``first_components[j]`` is the first entry of the j-th normalized
    eigenvector; their squares are the Gauss quadrature weights.
    """
    if not isinstance(t, TridiagonalMatrix):
        raise TypeError("expected a TridiagonalMatrix")
    mode = "first" if want_first_components else "values"
    nodes, first = ql_eigen(t.alpha, t.beta, mode=mode)
    return nodes, first
