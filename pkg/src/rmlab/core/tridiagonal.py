"""Implicit-shift QL iteration on symmetric tridiagonal matrices.

Three accumulation modes share one sweep kernel:

* values only (plain Python floats, fastest; used for large dense solves),
* first eigenvector components only (O(1) extra work per rotation; this is
  what Gauss-quadrature weight extraction needs),
* full eigenvector matrix (rotations applied to the columns of a seed
  basis, which may be the Householder back-transform).
"""

from __future__ import annotations

import math

import numpy as np

__all__ = ["ql_eigen"]

_EPS = float(np.finfo(np.float64).eps)
_MAX_SWEEPS = 50


def ql_eigen(d_in, e_in, mode: str = "values", basis: np.ndarray | None = None):
    """Eigen-decompose a symmetric tridiagonal matrix by implicit-shift QL.

    Parameters
    ----------
    d_in, e_in : array_like
        Diagonal (m) and off-diagonal (m-1) entries; signs of ``e`` are
        irrelevant to the eigenvalues.
    mode : {"values", "first", "vectors"}
        What to accumulate alongside the eigenvalues.
    basis : ndarray, optional
        Seed basis for mode="vectors" (defaults to the identity); rotations
        are applied to its columns so the result diagonalizes
        ``basis @ T @ basis.T``.

    Returns
    -------
    values : ndarray
        Eigenvalues sorted ascending.
    aux : ndarray or None
        First components (mode="first"), the eigenvector matrix with
        columns matching ``values`` (mode="vectors"), else None.
    """
    d = [float(x) for x in d_in]
    n = len(d)
    e = [float(x) for x in e_in] + [0.0]
    if len(e) != n:
        raise ValueError("e must have one entry fewer than d")

    track_first = mode == "first"
    track_vectors = mode == "vectors"
    if track_first:
        z = [0.0] * n
        z[0] = 1.0
    elif track_vectors:
        q = np.eye(n) if basis is None else np.array(basis, dtype=float)
        if q.shape[1] != n:
            raise ValueError("basis must have one column per tridiagonal row")
    elif mode != "values":
        raise ValueError(f"unknown mode {mode!r}")

    # Negligibility anchor grows monotonically with the scales seen so far
    # (EISPACK tql semantics).  Splitting at |e| <= anchor perturbs the
    # eigenvalues by at most the anchor, i.e. machine epsilon relative to
    # the matrix scale; rank-deficient spectra with large zero clusters
    # need this to deflate their noise-level tail blocks.
    anchor = 0.0
    for l in range(n):
        h = _EPS * (abs(d[l]) + abs(e[l]))
        if anchor < h:
            anchor = h
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                if abs(e[m]) <= anchor:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > _MAX_SWEEPS:
                raise RuntimeError(f"QL sweep failed to converge at index {l}")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = 1.0
            c = 1.0
            p = 0.0
            aborted = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    aborted = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                if track_first:
                    zf = z[i + 1]
                    z[i + 1] = s * z[i] + c * zf
                    z[i] = c * z[i] - s * zf
                elif track_vectors:
                    col = q[:, i + 1].copy()
                    q[:, i + 1] = s * q[:, i] + c * col
                    q[:, i] = c * q[:, i] - s * col
            if aborted:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0

    values = np.array(d)
    order = np.argsort(values, kind="stable")
    values = values[order]
    if track_first:
        return values, np.array(z)[order]
    if track_vectors:
        return values, q[:, order]
    return values, None
