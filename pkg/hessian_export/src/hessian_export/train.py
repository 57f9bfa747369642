"""Plain gradient descent with a piecewise-decay schedule.

Training is a convenience for producing non-random weight vectors, not a
contract: exports are exact at whatever point in weight space they are
given.
"""

from __future__ import annotations

import numpy as np

from .models import ModelSpec, Network

__all__ = ["learning_rate", "train"]


def learning_rate(epoch: int, total: int, base: float, floor_ratio: float = 0.01) -> float:
    """Base rate for the first half, linear decay to floor by 90%, flat after."""
    progress = epoch / total
    if progress <= 0.5:
        return base
    if progress <= 0.9:
        return base * (1.0 - (1.0 - floor_ratio) * (progress - 0.5) / 0.4)
    return base * floor_ratio


def train(
    spec: ModelSpec,
    x: np.ndarray,
    y: np.ndarray,
    epochs: int,
    base_rate: float = 0.5,
    weights: np.ndarray | None = None,
) -> np.ndarray:
    network = Network(spec)
    w = network.init_weights() if weights is None else np.array(weights, dtype=float)
    for epoch in range(epochs):
        _, gradient = network.loss_and_gradient(w, x, y)
        w = w - learning_rate(epoch, epochs, base_rate) * gradient
    return w
