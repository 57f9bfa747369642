"""RMTX container, written to the spectral toolchain's byte layout.

Layout: magic "RMTX" (52 4D 54 58), version byte 01, unsigned 64-bit
little-endian dimension n, then n*n float64 little-endian values
row-major.  This module is the export side of that interface; the
spectral toolchain is the reference consumer.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

__all__ = ["write_rmtx", "read_rmtx"]

MAGIC = b"RMTX"
VERSION = 1


def write_rmtx(path, matrix: np.ndarray) -> None:
    a = np.asarray(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"RMTX stores square matrices, got shape {a.shape}")
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(bytes([VERSION]))
        fh.write(struct.pack("<Q", a.shape[0]))
        fh.write(np.ascontiguousarray(a, dtype="<f8").tobytes())


def read_rmtx(path) -> np.ndarray:
    data = Path(path).read_bytes()
    if data[:4] != MAGIC or len(data) < 13:
        raise ValueError(f"{path}: not an RMTX file")
    if data[4] != VERSION:
        raise ValueError(f"{path}: unsupported version {data[4]}")
    (n,) = struct.unpack("<Q", data[5:13])
    if len(data) != 13 + 8 * n * n:
        raise ValueError(f"{path}: truncated payload")
    return np.frombuffer(data, dtype="<f8", count=n * n, offset=13).reshape(n, n).copy()
