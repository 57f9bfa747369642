"""Householder reduction of a dense symmetric matrix to tridiagonal form.

The reduction runs panel-blocked so the bulk of the work lands in matrix
products rather than rank-2 updates; reflectors are stored below the
subdiagonal (unit first component, scale in ``taus``) so the orthogonal
back-transform can be accumulated on demand.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = ["tridiagonalize", "accumulate_backtransform"]

_DEFAULT_PANEL = 48


def tridiagonalize(a: np.ndarray, panel: int = _DEFAULT_PANEL):
    """Reduce symmetric ``a`` to tridiagonal (d, e) via Householder similarity.

    Parameters
    ----------
    a : ndarray
        Symmetric matrix; a working copy is taken.
    panel : int
        Panel width for the blocked two-sided update.

    Returns
    -------
    d, e, reflectors, taus :
        Diagonal ``d`` (n), off-diagonal ``e`` (n-1, may carry either sign),
        and the packed reflectors with their scales for
        :func:`accumulate_backtransform`.
    """
    work = np.array(a, dtype=np.float64, order="C")
    n = work.shape[0]
    if n == 1:
        return np.array([work[0, 0]]), np.zeros(0), work, np.zeros(0)
    e = np.zeros(n - 1)
    taus = np.zeros(n - 1)
    k = 0
    while k < n - 2:
        b = min(panel, n - 2 - k)
        m = n - k
        blk = work[k:, k:]
        vpan = np.zeros((m, b))
        wpan = np.zeros((m, b))
        for j in range(b):
            col = blk[:, j]
            if j > 0:
                # bring column j up to date with the pending panel updates
                col[j:] -= vpan[j:, :j] @ wpan[j, :j]
                col[j:] -= wpan[j:, :j] @ vpan[j, :j]
            x = col[j + 1:]
            norm_x = math.sqrt(float(x @ x))
            if norm_x == 0.0:
                e[k + j] = 0.0
                continue
            alpha = -math.copysign(norm_x, x[0])
            v = x.copy()
            v[0] -= alpha
            vsq = float(v @ v)
            if vsq == 0.0:
                e[k + j] = alpha
                continue
            tau = 2.0 / vsq
            e[k + j] = alpha
            vpan[j + 1:, j] = v
            # pack the reflector with unit first component below the subdiagonal
            head = v[0]
            taus[k + j] = tau * head * head
            col[j + 1] = alpha
            if v.size > 1:
                col[j + 2:] = v[1:] / head
            av = blk[j + 1:, j + 1:] @ v
            if j > 0:
                av -= vpan[j + 1:, :j] @ (wpan[j + 1:, :j].T @ v)
                av -= wpan[j + 1:, :j] @ (vpan[j + 1:, :j].T @ v)
            w = tau * av
            w -= (0.5 * tau * float(w @ v)) * v
            wpan[j + 1:, j] = w
        rest = slice(b, m)
        vr = vpan[b:, :b]
        wr = wpan[b:, :b]
        blk[rest, rest] -= vr @ wr.T
        blk[rest, rest] -= wr @ vr.T
        k += b
    e[n - 2] = work[n - 1, n - 2]
    d = np.diagonal(work).copy()
    return d, e, work, taus


def accumulate_backtransform(reflectors: np.ndarray, taus: np.ndarray) -> np.ndarray:
    """Build the orthogonal Q with A = Q T Q^T from packed reflectors."""
    n = reflectors.shape[0]
    q = np.eye(n)
    for k in range(n - 3, -1, -1):
        tau = taus[k]
        if tau == 0.0:
            continue
        v = np.empty(n - k - 1)
        v[0] = 1.0
        v[1:] = reflectors[k + 2:, k]
        sub = q[k + 1:, :]
        sub -= np.outer(tau * v, v @ sub)
    return q
