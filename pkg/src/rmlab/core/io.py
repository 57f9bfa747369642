"""On-disk formats: the RMTX binary matrix container and spectrum CSV.

RMTX layout: magic bytes ``52 4D 54 58`` ("RMTX"), version byte ``01``,
unsigned 64-bit little-endian dimension n, then n*n IEEE-754 float64
little-endian values row-major.

Spectrum CSV: header ``eigenvalue,weight`` then one row per eigenvalue,
formatted with full float64 round-trip precision.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .types import EmpiricalSpectrum, SymmetricMatrix

__all__ = [
    "MatrixFormatError",
    "write_rmtx",
    "read_rmtx",
    "write_spectrum_csv",
    "read_spectrum_csv",
]

RMTX_MAGIC = b"RMTX"
RMTX_VERSION = 1


class MatrixFormatError(ValueError):
    """Malformed RMTX input; carries the byte offset of the defect."""

    def __init__(self, message: str, byte_offset: int) -> None:
        super().__init__(f"{message} (byte offset {byte_offset})")
        self.byte_offset = byte_offset


def write_rmtx(path, matrix) -> None:
    """Write a square real matrix (SymmetricMatrix or ndarray) as RMTX."""
    a = matrix.entries if isinstance(matrix, SymmetricMatrix) else np.asarray(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"RMTX stores square matrices, got shape {a.shape}")
    n = a.shape[0]
    with open(path, "wb") as fh:
        fh.write(RMTX_MAGIC)
        fh.write(bytes([RMTX_VERSION]))
        fh.write(struct.pack("<Q", n))
        fh.write(np.ascontiguousarray(a, dtype="<f8").tobytes())


def read_rmtx(path) -> np.ndarray:
    """Read an RMTX file back into a float64 ndarray (row-major)."""
    data = Path(path).read_bytes()
    if len(data) < 4 or data[:4] != RMTX_MAGIC:
        raise MatrixFormatError("bad magic bytes, not an RMTX file", 0)
    if len(data) < 5:
        raise MatrixFormatError("truncated before version byte", 4)
    if data[4] != RMTX_VERSION:
        raise MatrixFormatError(f"unsupported RMTX version {data[4]}", 4)
    if len(data) < 13:
        raise MatrixFormatError("truncated inside dimension field", 5)
    (n,) = struct.unpack("<Q", data[5:13])
    if n < 1:
        raise MatrixFormatError("dimension must be at least 1", 5)
    expected = 13 + 8 * n * n
    if len(data) != expected:
        offset = min(len(data), expected)
        raise MatrixFormatError(
            f"payload has {len(data) - 13} bytes, expected {8 * n * n} for n={n}",
            offset,
        )
    values = np.frombuffer(data, dtype="<f8", count=n * n, offset=13)
    arr = values.reshape(n, n).astype(np.float64)
    if not np.all(np.isfinite(arr)):
        bad = int(np.flatnonzero(~np.isfinite(arr.ravel()))[0])
        raise MatrixFormatError("non-finite matrix entry", 13 + 8 * bad)
    return arr


def write_spectrum_csv(path, spectrum: EmpiricalSpectrum) -> None:
    weights = spectrum.weight_array()
    lines = ["eigenvalue,weight"]
    for v, w in zip(spectrum.values, weights):
        lines.append(f"{float(v)!r},{float(w)!r}")
    Path(path).write_text("\n".join(lines) + "\n")


def read_spectrum_csv(path) -> EmpiricalSpectrum:
    text = Path(path).read_text().strip().splitlines()
    if not text or text[0].strip() != "eigenvalue,weight":
        raise ValueError(f"{path}: expected header 'eigenvalue,weight'")
    values = []
    weights = []
    for line in text[1:]:
        if not line.strip():
            continue
        sv, sw = line.split(",")
        values.append(float(sv))
        weights.append(float(sw))
    w = np.array(weights)
    # re-normalize pure rounding drift from the textual round trip
    total = w.sum()
    if abs(total - 1.0) > 1e-12:
        raise ValueError(f"{path}: weights sum to {total!r}, expected 1")
    return EmpiricalSpectrum(values, w)
