"""Stieltjes transform machinery and free additive convolution.

Conventions: S(z) = integral rho(u) / (z - u) du, so Im S(z) < 0 for
Im z > 0 (Herglotz up to sign) and S(z) ~ 1/z at infinity.  Densities are
recovered through the boundary identity rho(x) = Im S(x - i eta) / pi.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import quad

from .base import SpectralLaw

__all__ = [
    "StieltjesFunction",
    "ConvergenceError",
    "stieltjes_of_law",
    "invert_stieltjes",
    "default_inversion_eta",
    "semicircle_stieltjes",
    "r_transform_wigner",
    "r_transform_marcenko_pastur",
    "free_add",
    "free_add_wigner_wishart",
]


class ConvergenceError(RuntimeError):
    """Fixed-point iteration failed; carries the offending point."""

    def __init__(self, z: complex, residual: float, iterations: int) -> None:
        super().__init__(
            f"subordination fixed point did not converge at z={z!r}: "
            f"residual {residual:.3e} after {iterations} iterations"
        )
        self.z = z
        self.residual = residual
        self.iterations = iterations


@dataclass(frozen=True)
class StieltjesFunction:
    """Complex Stieltjes transform, evaluable off the real axis."""

    evaluate: Callable[[complex], complex] = field(repr=False)

    def __call__(self, z: complex) -> complex:
        if complex(z).imag == 0.0:
            raise ValueError("Stieltjes transforms are only defined off the real axis")
        return self.evaluate(complex(z))


def _interval_integral(pdf, a: float, b: float, z: complex) -> complex:
    """integral over [a, b] of pdf(u) / (z - u) du with edge substitution."""
    mid = 0.5 * (a + b)
    total = 0.0 + 0.0j
    near_axis = abs(z.imag) < 0.05
    for edge, inner, sign in ((a, mid, 1.0), (b, mid, -1.0)):
        t_max = abs(inner - edge) ** 0.25
        if t_max == 0.0:
            continue

        def g(t: float) -> complex:
            u = edge + sign * t**4
            return pdf(u) * 4.0 * t**3 / (z - u)

        # hint the quadrature at the near-pole when z hugs the real axis
        points = None
        if near_axis:
            u_star = (z.real - edge) * sign
            if 0.0 < u_star < t_max**4:
                points = [u_star**0.25]
        re = quad(lambda t: g(t).real, 0.0, t_max, limit=300, points=points)[0]
        im = quad(lambda t: g(t).imag, 0.0, t_max, limit=300, points=points)[0]
        total += re + 1j * im
    return total


def stieltjes_of_law(law: SpectralLaw) -> StieltjesFunction:
    """Numeric Stieltjes transform of a law: quadrature plus exact atom terms."""

    def evaluate(z: complex) -> complex:
        total = 0.0 + 0.0j
        for a, b in law.support:
            total += _interval_integral(law.pdf, a, b, z)
        for loc, w in law.atoms:
            total += w / (z - loc)
        return total

    return StieltjesFunction(evaluate)


def invert_stieltjes(s: StieltjesFunction, grid, eta: float) -> np.ndarray:
    """Density on a real grid via the boundary identity, smoothed by eta."""
    if eta <= 0:
        raise ValueError("eta must be positive")
    grid = np.asarray(grid, dtype=float)
    out = np.empty(grid.shape)
    for i, x in enumerate(grid.ravel()):
        out.ravel()[i] = abs(s(complex(x, -eta)).imag) / math.pi
    return out


def default_inversion_eta(law: SpectralLaw) -> float:
    """Default smoothing: 1e-3 times the law's full support width."""
    return 1e-3 * (law.support_max - law.support_min)


def semicircle_stieltjes(sigma: float) -> StieltjesFunction:
    """Closed form (z - sqrt(z^2 - 4 sigma^2)) / (2 sigma^2), S -> 1/z branch."""
    s2 = sigma * sigma

    def evaluate(z: complex) -> complex:
        # sqrt(z - 2s) * sqrt(z + 2s) keeps the branch cut on the support
        root = cmath.sqrt(z - 2.0 * sigma) * cmath.sqrt(z + 2.0 * sigma)
        return (z - root) / (2.0 * s2)

    return StieltjesFunction(evaluate)


def r_transform_wigner(sigma: float) -> Callable[[complex], complex]:
    """R-transform of the semicircle: R(w) = sigma^2 w."""
    s2 = sigma * sigma
    return lambda w: s2 * w


def r_transform_marcenko_pastur(q: float, sigma: float) -> Callable[[complex], complex]:
    """R-transform of the Marcenko-Pastur law: sigma^2 / (1 - q sigma^2 w)."""
    s2 = sigma * sigma
    return lambda w: s2 / (1.0 - q * s2 * w)


def free_add(
    r_transforms: Sequence[Callable[[complex], complex]],
    tolerance: float = 1e-10,
    max_iterations: int = 10_000,
) -> StieltjesFunction:
    """Free additive convolution via a damped subordination fixed point.

    R-transforms add under free convolution, so the convolved transform S
    solves S = 1 / (z - sum_i R_i(S)).  The iteration is damped and the
    damping halves whenever the residual grows; exceeding the iteration
    budget raises :class:`ConvergenceError` with diagnostics.
    """
    r_transforms = list(r_transforms)
    if not r_transforms:
        raise ValueError("need at least one R-transform")
    damping = 0.5

    def evaluate(z: complex) -> complex:
        flip = z.imag < 0
        zu = z.conjugate() if flip else z
        # continuation: walk down from high above the axis, where the map
        # contracts strongly, reusing each solution as the next warm start
        rungs = []
        im = max(1.0, zu.imag)
        while im > zu.imag:
            rungs.append(complex(zu.real, im))
            im /= 4.0
        rungs.append(zu)
        s = 1.0 / rungs[0]
        budget = max_iterations
        last_residual = math.inf
        for rung_index, zr in enumerate(rungs):
            final = rung_index == len(rungs) - 1
            cap = budget if final else min(budget, 300)
            converged = False
            for _ in range(cap):
                budget -= 1
                total = sum(r(s) for r in r_transforms)
                target = 1.0 / (zr - total)
                last_residual = abs(target - s)
                if last_residual <= tolerance * max(1.0, abs(s)):
                    s = target
                    converged = True
                    break
                s = s + damping * (target - s)
            if final and not converged:
                raise ConvergenceError(z, last_residual, max_iterations)
        return s.conjugate() if flip else s

    return StieltjesFunction(evaluate)


def free_add_wigner_wishart(sigma_w: float, q: float, sigma_mp: float) -> StieltjesFunction:
    """Free additive convolution of a semicircle with a Marcenko-Pastur law.

    ``sigma_w = 0`` degenerates to the pure Marcenko-Pastur transform.
    """
    if sigma_w < 0 or sigma_mp <= 0 or q <= 0:
        raise ValueError("need sigma_w >= 0 and positive q, sigma_mp")
    transforms = [r_transform_marcenko_pastur(q, sigma_mp)]
    if sigma_w > 0:
        transforms.insert(0, r_transform_wigner(sigma_w))
    return free_add(transforms)
