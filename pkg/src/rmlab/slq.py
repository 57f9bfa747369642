"""Matrix-free spectral density estimation via Lanczos quadrature.

The Lanczos recursion is fully reorthogonalized at every step (two-pass
classical Gram-Schmidt against the whole basis), which keeps Ritz values
honest at desk scale for an O(m^2 dim) cost.  Quadrature nodes are the
Ritz values; weights are the squared first components of the tridiagonal
eigenvectors.  Probe averaging yields the spectral-density estimate, and
the same probes drive Hutchinson trace estimation.

Kernel smoothing is presentation-only: every quantitative consumer works
from the discrete averaged rule.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .core.eigh import eigh_tridiagonal
from .core.types import LinearOperator, TridiagonalMatrix
from .ensembles.rng import RngStream

__all__ = [
    "LanczosResult",
    "QuadratureRule",
    "SlqResult",
    "lanczos",
    "quadrature_from_tridiagonal",
    "slq_density",
    "hutchinson_trace",
    "FileProtocolOperator",
]

BREAKDOWN_RTOL = 1e-12
PROBE_KINDS = ("rademacher", "gaussian")


@dataclass(frozen=True)
class LanczosResult:
    """Tridiagonal coefficients from one Lanczos run."""

    tridiagonal: TridiagonalMatrix
    steps_taken: int
    breakdown: bool
    basis: np.ndarray | None = field(default=None, repr=False)


def lanczos(
    op: LinearOperator,
    v0: np.ndarray,
    steps: int,
    keep_basis: bool = False,
) -> LanczosResult:
    """Run the Lanczos recursion with full reorthogonalization.

    ``v0`` must be unit norm; ``steps`` may not exceed the operator
    dimension.  Breakdown (a vanishing beta) is not an error: the result
    is truncated and flagged, since the Krylov space is exhausted.
    """
    v0 = np.asarray(v0, dtype=np.float64)
    if v0.shape != (op.dim,):
        raise ValueError(f"v0 must have shape ({op.dim},)")
    norm0 = float(np.linalg.norm(v0))
    if abs(norm0 - 1.0) > 1e-12:
        raise ValueError(f"v0 must be unit norm, got {norm0!r}")
    if not 1 <= steps <= op.dim:
        raise ValueError("steps must lie in [1, dim]")

    basis = np.empty((steps, op.dim))
    basis[0] = v0
    alphas: list[float] = []
    betas: list[float] = []
    scale = 0.0
    breakdown = False
    v = v0
    for j in range(steps):
        w = op.matvec(v)
        alpha = float(v @ w)
        alphas.append(alpha)
        scale = max(scale, abs(alpha))
        if j == steps - 1:
            break
        w = w - alpha * v
        if j > 0:
            w -= betas[-1] * basis[j - 1]
        # two-pass classical Gram-Schmidt against the whole basis
        used = basis[: j + 1]
        for _ in range(2):
            w -= used.T @ (used @ w)
        beta = float(np.linalg.norm(w))
        if beta <= BREAKDOWN_RTOL * max(scale, 1.0):
            breakdown = True
            break
        betas.append(beta)
        scale = max(scale, beta)
        v = w / beta
        basis[j + 1] = v

    taken = len(alphas)
    result_basis = basis[:taken].copy() if keep_basis else None
    return LanczosResult(
        tridiagonal=TridiagonalMatrix(alphas, betas),
        steps_taken=taken,
        breakdown=breakdown,
        basis=result_basis,
    )


class QuadratureRule:
    """Discrete spectral measure: ascending nodes with positive unit-mass weights."""

    __slots__ = ("nodes", "weights")

    def __init__(self, nodes, weights) -> None:
        n = np.array(nodes, dtype=np.float64).ravel()
        w = np.array(weights, dtype=np.float64).ravel()
        if n.shape != w.shape or n.size == 0:
            raise ValueError("nodes and weights must be nonempty and congruent")
        if np.any(np.diff(n) < 0):
            raise ValueError("nodes must be ascending")
        if np.any(w <= 0):
            raise ValueError("weights must be positive")
        total = float(w.sum())
        if abs(total - 1.0) > 1e-10:
            raise ValueError(f"weights must sum to 1 within 1e-10, got {total!r}")
        n.flags.writeable = False
        w.flags.writeable = False
        self.nodes = n
        self.weights = w

    def moment(self, k: int) -> float:
        return float(np.sum(self.weights * self.nodes**k))

    def mass_within(self, radius: float, center: float = 0.0) -> float:
        return float(np.sum(self.weights[np.abs(self.nodes - center) <= radius]))

    def cdf(self, x) -> np.ndarray:
        xs = np.atleast_1d(np.asarray(x, dtype=float))
        idx = np.searchsorted(self.nodes, xs, side="right")
        cum = np.concatenate([[0.0], np.cumsum(self.weights)])
        return cum[idx]

    def __len__(self) -> int:
        return int(self.nodes.size)


def quadrature_from_tridiagonal(t: TridiagonalMatrix) -> QuadratureRule:
    """Gauss rule of the Lanczos measure: Ritz nodes, squared-first-component weights."""
    nodes, first = eigh_tridiagonal(t, want_first_components=True)
    return QuadratureRule(nodes, first**2)


def _probe(rng: RngStream, dim: int, kind: str, normalized: bool) -> np.ndarray:
    if kind == "rademacher":
        v = rng.rademacher(dim)
        return v / math.sqrt(dim) if normalized else v
    if kind == "gaussian":
        v = rng.normals(dim)
        if normalized:
            norm = float(np.linalg.norm(v))
            while norm < 1e-12:  # astronomically unlikely; resample
                v = rng.normals(dim)
                norm = float(np.linalg.norm(v))
            return v / norm
        return v
    raise ValueError(f"probe_kind must be one of {PROBE_KINDS}")


@dataclass(frozen=True)
class SlqResult:
    """Averaged probe measure plus the per-probe rules it came from."""

    average: QuadratureRule
    per_probe: tuple[QuadratureRule, ...]
    smoothed: tuple[np.ndarray, np.ndarray] | None = None


def slq_density(
    op: LinearOperator,
    steps: int,
    num_probes: int,
    probe_kind: str = "rademacher",
    kernel_width: float | None = None,
    seed: int = 0,
    grid_points: int = 512,
) -> SlqResult:
    """Estimate the spectral density by averaging per-probe Gauss rules.

    Probe i draws from RngStream(seed, stream=i), so probes are
    independent and may be computed concurrently.  When ``kernel_width``
    is given, a Gaussian-smoothed curve is attached for plotting; the
    discrete averaged rule is always preserved and is what every metric
    should consume.
    """
    if steps < 2:
        raise ValueError("need at least two Lanczos steps")
    if num_probes < 1:
        raise ValueError("need at least one probe")
    rules = []
    for i in range(num_probes):
        rng = RngStream(seed, stream=i)
        v0 = _probe(rng, op.dim, probe_kind, normalized=True)
        result = lanczos(op, v0, min(steps, op.dim))
        rules.append(quadrature_from_tridiagonal(result.tridiagonal))
    nodes = np.concatenate([r.nodes for r in rules])
    weights = np.concatenate([r.weights for r in rules]) / num_probes
    order = np.argsort(nodes, kind="stable")
    average = QuadratureRule(nodes[order], weights[order])
    smoothed = None
    if kernel_width is not None:
        if kernel_width <= 0:
            raise ValueError("kernel_width must be positive")
        lo = average.nodes[0] - 3.0 * kernel_width
        hi = average.nodes[-1] + 3.0 * kernel_width
        grid = np.linspace(lo, hi, grid_points)
        dens = np.zeros_like(grid)
        for t, w in zip(average.nodes, average.weights):
            dens += w * np.exp(-0.5 * ((grid - t) / kernel_width) ** 2)
        dens /= kernel_width * math.sqrt(2.0 * math.pi)
        smoothed = (grid, dens)
    return SlqResult(average=average, per_probe=tuple(rules), smoothed=smoothed)


def hutchinson_trace(
    op: LinearOperator,
    num_probes: int,
    probe_kind: str = "rademacher",
    seed: int = 0,
) -> tuple[float, float]:
    """Trace estimate from quadratic forms of zero-mean unit-variance probes.

    Returns (estimate, stderr) with the standard error taken from the
    sample variance across probes.
    """
    if num_probes < 2:
        raise ValueError("need at least two probes for a standard error")
    samples = np.empty(num_probes)
    for i in range(num_probes):
        rng = RngStream(seed, stream=i)
        v = _probe(rng, op.dim, probe_kind, normalized=False)
        samples[i] = float(v @ op.matvec(v))
    estimate = float(samples.mean())
    stderr = float(samples.std(ddof=1) / math.sqrt(num_probes))
    return estimate, stderr


class FileProtocolOperator:
    """Streaming operator over a directory of request/response vector files.

    Protocol: the directory holds ``meta.json`` with ``{"dim": n}``.  For
    the i-th product the client writes the probe as raw little-endian
    float64 to ``req_<i:08d>.vec`` and polls for ``res_<i:08d>.vec`` of the
    same layout, written by whatever process owns the real operator.  Both
    files are deleted once the response is consumed.  This is the bridge
    for matrix-free operators living outside this process.
    """

    def __init__(self, directory, poll_interval: float = 0.005, timeout: float = 30.0) -> None:
        self.directory = Path(directory)
        meta = json.loads((self.directory / "meta.json").read_text())
        self.dim = int(meta["dim"])
        if self.dim < 1:
            raise ValueError("operator dimension must be positive")
        self.poll_interval = poll_interval
        self.timeout = timeout
        self._sequence = 0

    def _apply(self, v: np.ndarray) -> np.ndarray:
        seq = self._sequence
        self._sequence += 1
        req = self.directory / f"req_{seq:08d}.vec"
        res = self.directory / f"res_{seq:08d}.vec"
        tmp = self.directory / f"req_{seq:08d}.tmp"
        tmp.write_bytes(np.ascontiguousarray(v, dtype="<f8").tobytes())
        tmp.rename(req)  # atomic publish
        deadline = time.monotonic() + self.timeout
        while not res.exists():
            if time.monotonic() > deadline:
                raise TimeoutError(f"no response for request {seq} within {self.timeout}s")
            time.sleep(self.poll_interval)
        data = None
        while data is None or data.size != self.dim:
            data = np.frombuffer(res.read_bytes(), dtype="<f8")
            if data.size != self.dim:
                time.sleep(self.poll_interval)  # response still being written
                if time.monotonic() > deadline:
                    raise TimeoutError(f"short response for request {seq}")
        res.unlink(missing_ok=True)
        req.unlink(missing_ok=True)
        return np.array(data, dtype=np.float64)

    def as_linear_operator(self) -> LinearOperator:
        return LinearOperator(dim=self.dim, apply=self._apply)
