"""Core numeric types, exact eigensolvers, and file formats."""

from .eigh import eigh_dense, eigh_tridiagonal, eigvalsh_dense
from .io import (
    MatrixFormatError,
    read_rmtx,
    read_spectrum_csv,
    write_rmtx,
    write_spectrum_csv,
)
from .types import (
    EmpiricalSpectrum,
    InvalidMatrixError,
    LinearOperator,
    SymmetricMatrix,
    TridiagonalMatrix,
    operator_from_matrix,
    operator_symmetry_defect,
)

__all__ = [
    "EmpiricalSpectrum",
    "InvalidMatrixError",
    "LinearOperator",
    "MatrixFormatError",
    "SymmetricMatrix",
    "TridiagonalMatrix",
    "eigh_dense",
    "eigh_tridiagonal",
    "eigvalsh_dense",
    "operator_from_matrix",
    "operator_symmetry_defect",
    "read_rmtx",
    "read_spectrum_csv",
    "write_rmtx",
    "write_spectrum_csv",
]
