"""Datasets: a self-contained Gaussian mixture, plus optional MNIST files."""

from __future__ import annotations

import gzip
import struct
from pathlib import Path

import numpy as np

__all__ = ["gaussian_mixture", "load_idx", "mnist_subset"]


def gaussian_mixture(n_samples: int, input_dim: int, classes: int, seed: int):
    """Balanced classification data: unit-covariance blobs at random centers.

    Centers are drawn once at separation ~3 so the problem is learnable
    but not separable to machine precision.
    """
    rng = np.random.default_rng(seed)
    centers = rng.normal(0.0, 1.0, size=(classes, input_dim))
    centers *= 3.0 / max(1.0, float(np.linalg.norm(centers, axis=1).mean()))
    labels = np.arange(n_samples) % classes
    rng.shuffle(labels)
    x = centers[labels] + rng.normal(0.0, 1.0, size=(n_samples, input_dim))
    return x, labels.astype(np.int64)


def load_idx(path) -> np.ndarray:
    """Read an IDX-format array (the classic digit-dataset container)."""
    path = Path(path)
    opener = gzip.open if path.suffix == ".gz" else open
    with opener(path, "rb") as fh:
        magic = fh.read(4)
        if len(magic) != 4 or magic[0] != 0 or magic[1] != 0:
            raise ValueError(f"{path}: not an IDX file")
        dtype = {8: np.uint8, 9: np.int8, 11: np.int16, 12: np.int32, 13: np.float32, 14: np.float64}
        if magic[2] not in dtype:
            raise ValueError(f"{path}: unknown IDX element type {magic[2]}")
        ndim = magic[3]
        shape = struct.unpack(f">{ndim}I", fh.read(4 * ndim))
        data = np.frombuffer(fh.read(), dtype=np.dtype(dtype[magic[2]]).newbyteorder(">"))
        return data.reshape(shape)


def mnist_subset(directory, n_samples: int, seed: int = 0):
    """First-n digits from local IDX files, flattened and scaled to [0, 1].

    Expects train-images-idx3-ubyte and train-labels-idx1-ubyte (optionally
    .gz) under ``directory``; raises FileNotFoundError when absent so
    callers can fall back to the synthetic mixture.
    """
    directory = Path(directory)
    images = labels = None
    for suffix in ("", ".gz"):
        img = directory / f"train-images-idx3-ubyte{suffix}"
        lab = directory / f"train-labels-idx1-ubyte{suffix}"
        if img.exists() and lab.exists():
            images, labels = load_idx(img), load_idx(lab)
            break
    if images is None:
        raise FileNotFoundError(f"no MNIST IDX files under {directory}")
    rng = np.random.default_rng(seed)
    pick = rng.permutation(images.shape[0])[:n_samples]
    x = images[pick].reshape(n_samples, -1).astype(np.float64) / 255.0
    return x, labels[pick].astype(np.int64)
