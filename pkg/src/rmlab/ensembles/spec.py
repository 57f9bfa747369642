"""Declarative description of which ensemble to sample, with JSON round trip.

The JSON form (snake_case keys mirroring the field names) is embedded in
experiment reports for provenance, so a report always pins down exactly
what was sampled.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from ..core.types import SymmetricMatrix
from .rng import RngStream
from .samplers import (
    ENTRY_DISTRIBUTIONS,
    keep_probability,
    percolate,
    sample_ginibre_product,
    sample_goe,
    sample_spiked_goe,
    sample_wigner_general,
    sample_wishart,
    sample_wishart_product,
)

__all__ = ["EnsembleSpec", "SYMMETRIC_KINDS", "ALL_KINDS"]

SYMMETRIC_KINDS = (
    "goe",
    "wigner_general",
    "wishart",
    "wishart_product",
    "percolated_wigner",
    "percolated_wishart",
    "percolated_product",
    "spiked_goe",
)
ALL_KINDS = SYMMETRIC_KINDS + ("ginibre_product",)


@dataclass
class EnsembleSpec:
    """Parameters of one random-matrix ensemble.

    ``dim`` is the matrix dimension P.  Wishart kinds use ``n_data`` (the
    factor column count N, with aspect ratio q = P/N); product kinds use
    the full ``dims`` chain N_1..N_{L+1}; percolated kinds add the sparsity
    constant k (edge-keep probability k/P); the spiked kind lists signed
    spike magnitudes.
    """

    kind: str
    dim: int
    sigma: float = 1.0
    n_data: int | None = None
    dims: list[int] | None = None
    sparsity_k: float | None = None
    spikes: list[float] | None = None
    entry_distribution: str = "gaussian"

    def __post_init__(self) -> None:
        if self.kind not in ALL_KINDS:
            raise ValueError(f"unknown ensemble kind {self.kind!r}; expected one of {ALL_KINDS}")
        if self.dim < 1:
            raise ValueError("dim must be positive")
        if self.sigma <= 0:
            raise ValueError("sigma must be positive")
        if self.entry_distribution not in ENTRY_DISTRIBUTIONS:
            raise ValueError(f"entry_distribution must be one of {ENTRY_DISTRIBUTIONS}")
        if self.kind in ("wishart", "percolated_wishart"):
            if self.n_data is None or self.n_data < 1:
                raise ValueError(f"{self.kind} requires n_data >= 1")
        if self.kind in ("wishart_product", "percolated_product", "ginibre_product"):
            if not self.dims or len(self.dims) < 2:
                raise ValueError(f"{self.kind} requires dims = [N_1, ..., N_(L+1)] with L >= 1")
            if any(d < 1 for d in self.dims):
                raise ValueError("all factor dimensions must be positive")
            if self.dims[0] != self.dim:
                raise ValueError("dims[0] must equal dim")
        if self.kind.startswith("percolated"):
            if self.sparsity_k is None:
                raise ValueError(f"{self.kind} requires sparsity_k")
            keep_probability(self.sparsity_k, self.dim)
        if self.kind == "spiked_goe":
            if not self.spikes:
                raise ValueError("spiked_goe requires at least one spike")
            if len(self.spikes) > self.dim // 10:
                raise ValueError("spike rank must stay below dim/10")

    @property
    def q(self) -> float | None:
        """Aspect ratio P/N for Wishart kinds."""
        if self.n_data is None:
            return None
        return self.dim / self.n_data

    @property
    def num_factors(self) -> int | None:
        if self.dims is None:
            return None
        return len(self.dims) - 1

    def sample(self, rng: RngStream) -> SymmetricMatrix:
        """Draw one symmetric matrix; ginibre_product is sampled separately."""
        if self.kind == "goe":
            return sample_goe(self.dim, self.sigma, rng)
        if self.kind == "wigner_general":
            return sample_wigner_general(self.dim, self.sigma, self.entry_distribution, rng)
        if self.kind == "wishart":
            return sample_wishart(self.dim, self.n_data, self.sigma, rng)
        if self.kind == "wishart_product":
            return sample_wishart_product(self.dims, self.sigma, rng)
        if self.kind == "percolated_wigner":
            base = sample_wigner_general(self.dim, self.sigma, self.entry_distribution, rng)
            return percolate(base, self.sparsity_k, rng)
        if self.kind == "percolated_wishart":
            base = sample_wishart(self.dim, self.n_data, self.sigma, rng)
            return percolate(base, self.sparsity_k, rng)
        if self.kind == "percolated_product":
            base = sample_wishart_product(self.dims, self.sigma, rng)
            return percolate(base, self.sparsity_k, rng)
        if self.kind == "spiked_goe":
            return sample_spiked_goe(self.dim, self.sigma, self.spikes, rng)
        raise ValueError(f"{self.kind} does not produce a symmetric matrix; use sample_ginibre_product")

    def sample_complex(self, rng: RngStream, want_eigenvalues: bool = True):
        if self.kind != "ginibre_product":
            raise ValueError("sample_complex applies only to ginibre_product")
        return sample_ginibre_product(self.dims, self.sigma, rng, want_eigenvalues)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "EnsembleSpec":
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "EnsembleSpec":
        return cls.from_dict(json.loads(text))
