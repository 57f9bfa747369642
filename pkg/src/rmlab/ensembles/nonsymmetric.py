"""Complex spectra of real non-symmetric matrices.

This is the only non-symmetric eigensolver in the repository and exists
solely for the square Ginibre-product ensembles: Hessenberg reduction
followed by QR iteration (one unshifted sweep, then Francis double shifts
with occasional exceptional shifts), deflating 1x1 and 2x2 blocks.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = ["hessenberg_reduce", "eigvals_hessenberg", "complex_eigenvalues"]

_EPS = float(np.finfo(np.float64).eps)


class NonConvergenceError(RuntimeError):
    """QR iteration exceeded its sweep budget."""


def hessenberg_reduce(a: np.ndarray) -> np.ndarray:
    """Orthogonal similarity reduction to upper Hessenberg form."""
    h = np.array(a, dtype=np.float64, order="C")
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1:, k]
        norm_x = math.sqrt(float(x @ x))
        if norm_x == 0.0:
            continue
        alpha = -math.copysign(norm_x, x[0])
        v = x.copy()
        v[0] -= alpha
        vnorm = math.sqrt(float(v @ v))
        if vnorm == 0.0:
            continue
        v /= vnorm
        h[k + 1:, k:] -= np.outer(2.0 * v, v @ h[k + 1:, k:])
        h[:, k + 1:] -= np.outer(h[:, k + 1:] @ v, 2.0 * v)
    return h


def _reflector3(x0: float, x1: float, x2: float):
    norm = math.sqrt(x0 * x0 + x1 * x1 + x2 * x2)
    if norm == 0.0:
        return None
    alpha = -math.copysign(norm, x0)
    v0 = x0 - alpha
    vn = math.sqrt(v0 * v0 + x1 * x1 + x2 * x2)
    if vn == 0.0:
        return None
    return np.array([v0 / vn, x1 / vn, x2 / vn])


def _split_2x2(a: float, b: float, c: float, d: float):
    tr = a + d
    det = a * d - b * c
    disc = 0.25 * tr * tr - det
    if disc >= 0.0:
        rt = math.sqrt(disc)
        r1 = 0.5 * tr + math.copysign(rt, tr) if tr != 0.0 else rt
        if r1 == 0.0:
            return complex(0.0), complex(0.0)
        return complex(r1), complex(det / r1)
    im = math.sqrt(-disc)
    return complex(0.5 * tr, im), complex(0.5 * tr, -im)


def eigvals_hessenberg(h_in: np.ndarray, max_sweeps_per_eig: int = 40) -> np.ndarray:
    """All eigenvalues of an upper Hessenberg matrix as complex numbers."""
    h = np.array(h_in, dtype=np.float64, order="C")
    n = h.shape[0]
    values: list[complex] = []
    hi = n - 1
    stuck = 0
    unshifted_done = False
    while hi >= 0:
        if hi == 0:
            values.append(complex(h[0, 0]))
            hi -= 1
            continue
        lo = hi
        while lo > 0:
            s = abs(h[lo - 1, lo - 1]) + abs(h[lo, lo])
            if s == 0.0:
                s = 1.0
            if abs(h[lo, lo - 1]) <= _EPS * s:
                h[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            values.append(complex(h[hi, hi]))
            hi -= 1
            stuck = 0
            continue
        if lo == hi - 1:
            e1, e2 = _split_2x2(h[lo, lo], h[lo, hi], h[hi, lo], h[hi, hi])
            values.extend([e1, e2])
            hi -= 2
            stuck = 0
            continue
        stuck += 1
        if stuck > max_sweeps_per_eig * (hi - lo + 1):
            raise NonConvergenceError(
                f"QR failed to deflate block [{lo}, {hi}] after {stuck} sweeps"
            )
        if not unshifted_done:
            s_sum, s_prod = 0.0, 0.0
            unshifted_done = True
        elif stuck % 11 == 0:
            # exceptional shift to break a cycle
            w = abs(h[hi, hi - 1]) + abs(h[hi - 1, hi - 2])
            s_sum = 1.5 * w
            s_prod = w * w
        else:
            s_sum = h[hi - 1, hi - 1] + h[hi, hi]
            s_prod = h[hi - 1, hi - 1] * h[hi, hi] - h[hi - 1, hi] * h[hi, hi - 1]
        x = h[lo, lo]
        y = h[lo + 1, lo]
        p0 = x * x + h[lo, lo + 1] * y - s_sum * x + s_prod
        p1 = y * (x + h[lo + 1, lo + 1] - s_sum)
        p2 = y * h[lo + 2, lo + 1]
        for k in range(lo, hi - 1):
            if k == lo:
                v = _reflector3(p0, p1, p2)
            else:
                v = _reflector3(h[k, k - 1], h[k + 1, k - 1], h[k + 2, k - 1])
            if v is not None:
                c0 = lo if k == lo else k - 1
                rows = h[k:k + 3, c0:hi + 1]
                rows -= np.outer(2.0 * v, v @ rows)
                r1 = min(k + 4, hi + 1)
                cols = h[lo:r1, k:k + 3]
                cols -= np.outer(cols @ v, 2.0 * v)
                if k > lo:
                    h[k + 1, k - 1] = 0.0
                    h[k + 2, k - 1] = 0.0
        xx = h[hi - 1, hi - 2]
        yy = h[hi, hi - 2]
        norm = math.hypot(xx, yy)
        if norm != 0.0:
            alpha = -math.copysign(norm, xx)
            v0 = xx - alpha
            vn = math.hypot(v0, yy)
            if vn != 0.0:
                v = np.array([v0 / vn, yy / vn])
                rows = h[hi - 1:hi + 1, hi - 2:hi + 1]
                rows -= np.outer(2.0 * v, v @ rows)
                cols = h[lo:hi + 1, hi - 1:hi + 1]
                cols -= np.outer(cols @ v, 2.0 * v)
                h[hi, hi - 2] = 0.0
    return np.array(values, dtype=np.complex128)


def complex_eigenvalues(a: np.ndarray) -> np.ndarray:
    """Complex eigenvalues of a square real matrix, sorted by (re, im)."""
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 1:
        return np.array([complex(a[0, 0])])
    values = eigvals_hessenberg(hessenberg_reduce(a))
    return np.sort_complex(values)
