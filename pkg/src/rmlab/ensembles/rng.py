"""Counter-based random streams with bit-for-bit reproducibility.

Streams are keyed Philox4x64 generators; the raw 64-bit output is mapped to
uniforms and normals in-repo (fixed shifts, fixed Box-Muller layout) so a
given (seed, stream) pair reproduces identical values on every platform and
numpy release.  Parallel work assigns one stream per (parameter, trial)
pair; nothing here is mutated after construction except the counter.
"""

from __future__ import annotations

import numpy as np

__all__ = ["RngStream"]

_INV_2_53 = 2.0**-53
_TWO_PI = 2.0 * np.pi


class RngStream:
    """Deterministic random source identified by (seed, stream)."""

    def __init__(self, seed: int, stream: int = 0) -> None:
        if not (0 <= int(seed) < 2**64 and 0 <= int(stream) < 2**64):
            raise ValueError("seed and stream must be unsigned 64-bit integers")
        self.seed = int(seed)
        self.stream = int(stream)
        key = np.array([self.seed, self.stream], dtype=np.uint64)
        self._bits = np.random.Philox(key=key)

    def raw(self, count: int) -> np.ndarray:
        return self._bits.random_raw(count)

    def uniforms(self, count: int) -> np.ndarray:
        """i.i.d. uniforms on [0, 1)."""
        return (self.raw(count) >> np.uint64(11)).astype(np.float64) * _INV_2_53

    def _open_uniforms(self, count: int) -> np.ndarray:
        # (0, 1]: safe under log()
        return ((self.raw(count) >> np.uint64(11)) + np.uint64(1)).astype(np.float64) * _INV_2_53

    def normals(self, count: int) -> np.ndarray:
        """i.i.d. standard normals via Box-Muller on paired uniforms."""
        pairs = (count + 1) // 2
        u = self._open_uniforms(2 * pairs)
        u1 = u[0::2]
        u2 = u[1::2]
        r = np.sqrt(-2.0 * np.log(u1))
        out = np.empty(2 * pairs)
        out[0::2] = r * np.cos(_TWO_PI * u2)
        out[1::2] = r * np.sin(_TWO_PI * u2)
        return out[:count]

    def rademacher(self, count: int) -> np.ndarray:
        """i.i.d. +-1 entries."""
        bits = self.raw(count) & np.uint64(1)
        return 2.0 * bits.astype(np.float64) - 1.0

    def uniform_symmetric(self, count: int, half_width: float) -> np.ndarray:
        """i.i.d. uniforms on [-half_width, half_width)."""
        return (2.0 * self.uniforms(count) - 1.0) * half_width

    def __repr__(self) -> str:  # pragma: no cover
        return f"RngStream(seed={self.seed}, stream={self.stream})"
