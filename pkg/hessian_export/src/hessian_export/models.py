"""Small differentiable classifiers with exact curvature products.

Models are multilayer perceptrons over softmax cross-entropy (a logistic
classifier is the zero-hidden-layer case).  Everything needed for exact
curvature is hand-rolled: batch forward/backward passes, forward-over-
reverse Hessian-vector products, and per-sample Jacobians for the
Gauss-Newton construction.  Data layout is row-major: activations are
(N, width), weights (fan_in, fan_out).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = ["ModelSpec", "Network", "softmax", "cross_entropy"]

MAX_PARAMETERS = 10_000


def softmax(logits: np.ndarray) -> np.ndarray:
    shifted = logits - logits.max(axis=1, keepdims=True)
    expd = np.exp(shifted)
    return expd / expd.sum(axis=1, keepdims=True)


def cross_entropy(logits: np.ndarray, labels: np.ndarray) -> float:
    shifted = logits - logits.max(axis=1, keepdims=True)
    log_norm = np.log(np.exp(shifted).sum(axis=1))
    picked = shifted[np.arange(labels.size), labels]
    return float(np.mean(log_norm - picked))


_ACTIVATIONS = {
    "tanh": (
        np.tanh,
        lambda z: 1.0 - np.tanh(z) ** 2,
        lambda z: -2.0 * np.tanh(z) * (1.0 - np.tanh(z) ** 2),
    ),
    "relu": (
        lambda z: np.maximum(z, 0.0),
        lambda z: (z > 0.0).astype(float),
        lambda z: np.zeros_like(z),
    ),
}


@dataclass
class ModelSpec:
    """Architecture plus dataset shape for one export run.

    architecture "logistic" forces an empty hidden list; "mlp" takes the
    hidden sizes as given.  The parameter count stays below the dense
    Hessian budget of 10000.
    """

    architecture: str = "logistic"
    hidden: list[int] = field(default_factory=list)
    input_dim: int = 10
    classes: int = 3
    n_samples: int = 200
    activation: str = "tanh"
    seed: int = 0

    def __post_init__(self) -> None:
        if self.architecture not in ("logistic", "mlp"):
            raise ValueError("architecture must be 'logistic' or 'mlp'")
        if self.architecture == "logistic":
            self.hidden = []
        if self.activation not in _ACTIVATIONS:
            raise ValueError(f"activation must be one of {sorted(_ACTIVATIONS)}")
        if min(self.input_dim, self.classes, self.n_samples) < 1:
            raise ValueError("input_dim, classes, n_samples must be positive")
        if any(h < 1 for h in self.hidden):
            raise ValueError("hidden sizes must be positive")
        if self.parameter_count > MAX_PARAMETERS:
            raise ValueError(
                f"{self.parameter_count} parameters exceed the dense budget {MAX_PARAMETERS}"
            )

    @property
    def layer_sizes(self) -> list[int]:
        return [self.input_dim] + list(self.hidden) + [self.classes]

    @property
    def parameter_count(self) -> int:
        sizes = self.layer_sizes
        return sum((sizes[i] + 1) * sizes[i + 1] for i in range(len(sizes) - 1))

    def to_dict(self) -> dict:
        return {
            "architecture": self.architecture,
            "hidden": list(self.hidden),
            "input_dim": self.input_dim,
            "classes": self.classes,
            "n_samples": self.n_samples,
            "activation": self.activation,
            "seed": self.seed,
            "parameter_count": self.parameter_count,
        }


class Network:
    """Parameter-vector view of an MLP with exact first and second order ops."""

    def __init__(self, spec: ModelSpec) -> None:
        self.spec = spec
        self.sizes = spec.layer_sizes
        self.act, self.act_d, self.act_dd = _ACTIVATIONS[spec.activation]
        self.n_layers = len(self.sizes) - 1

    # -- parameter vector layout: (W_1, b_1, W_2, b_2, ...) ------------------

    def init_weights(self, seed: int | None = None) -> np.ndarray:
        rng = np.random.default_rng(self.spec.seed if seed is None else seed)
        chunks = []
        for fan_in, fan_out in zip(self.sizes, self.sizes[1:]):
            scale = 1.0 / np.sqrt(fan_in)
            chunks.append(rng.normal(0.0, scale, size=fan_in * fan_out))
            chunks.append(np.zeros(fan_out))
        return np.concatenate(chunks)

    def unflatten(self, w: np.ndarray):
        layers = []
        offset = 0
        for fan_in, fan_out in zip(self.sizes, self.sizes[1:]):
            weight = w[offset:offset + fan_in * fan_out].reshape(fan_in, fan_out)
            offset += fan_in * fan_out
            bias = w[offset:offset + fan_out]
            offset += fan_out
            layers.append((weight, bias))
        if offset != w.size:
            raise ValueError(f"weight vector has {w.size} entries, expected {offset}")
        return layers

    def flatten(self, layers) -> np.ndarray:
        return np.concatenate([np.concatenate([w.ravel(), b]) for w, b in layers])

    # -- forward / backward --------------------------------------------------

    def forward(self, w: np.ndarray, x: np.ndarray):
        """Logits plus the per-layer (pre-activation, activation) cache."""
        layers = self.unflatten(w)
        a = x
        cache = [(None, x)]
        for index, (weight, bias) in enumerate(layers):
            z = a @ weight + bias
            a = self.act(z) if index < self.n_layers - 1 else z
            cache.append((z, a))
        return a, cache

    def loss(self, w: np.ndarray, x: np.ndarray, y: np.ndarray) -> float:
        logits, _ = self.forward(w, x)
        return cross_entropy(logits, y)

    def loss_and_gradient(self, w: np.ndarray, x: np.ndarray, y: np.ndarray):
        layers = self.unflatten(w)
        logits, cache = self.forward(w, x)
        n = x.shape[0]
        probs = softmax(logits)
        onehot = np.zeros_like(probs)
        onehot[np.arange(n), y] = 1.0
        g = (probs - onehot) / n
        grads = [None] * self.n_layers
        for index in range(self.n_layers - 1, -1, -1):
            a_prev = cache[index][1]
            grads[index] = (a_prev.T @ g, g.sum(axis=0))
            if index > 0:
                z_prev = cache[index][0]
                g = (g @ layers[index][0].T) * self.act_d(z_prev)
        return cross_entropy(logits, y), self.flatten(grads)

    def check_finite(self, w: np.ndarray, x: np.ndarray, y: np.ndarray) -> None:
        """Reject per-sample data or outputs that would poison the gradients."""
        bad = ~np.all(np.isfinite(x), axis=1)
        if np.any(bad):
            raise FloatingPointError(
                f"non-finite features at sample index {int(np.flatnonzero(bad)[0])}"
            )
        logits, _ = self.forward(w, x)
        bad = ~np.all(np.isfinite(logits), axis=1)
        if np.any(bad):
            raise FloatingPointError(
                f"non-finite network output at sample index {int(np.flatnonzero(bad)[0])}"
            )

    # -- curvature ------------------------------------------------------------

    def hessian_vector_product(
        self, w: np.ndarray, x: np.ndarray, y: np.ndarray, v: np.ndarray
    ) -> np.ndarray:
        """Exact Hessian-vector product by forward-over-reverse propagation."""
        layers = self.unflatten(w)
        tangents = self.unflatten(v)
        n = x.shape[0]

        # forward pass with directional derivatives
        a = x
        ra = np.zeros_like(x)
        zs, acts, rzs, ras = [], [x], [], [ra]
        for index, ((weight, bias), (tw, tb)) in enumerate(zip(layers, tangents)):
            z = a @ weight + bias
            rz = ra @ weight + a @ tw + tb
            if index < self.n_layers - 1:
                a = self.act(z)
                ra = self.act_d(z) * rz
            else:
                a, ra = z, rz
            zs.append(z)
            rzs.append(rz)
            acts.append(a)
            ras.append(ra)

        probs = softmax(acts[-1])
        onehot = np.zeros_like(probs)
        onehot[np.arange(n), y] = 1.0
        g = (probs - onehot) / n
        inner = np.sum(probs * rzs[-1], axis=1, keepdims=True)
        rg = probs * (rzs[-1] - inner) / n

        out = [None] * self.n_layers
        for index in range(self.n_layers - 1, -1, -1):
            a_prev = acts[index]
            ra_prev = ras[index]
            out[index] = (ra_prev.T @ g + a_prev.T @ rg, rg.sum(axis=0))
            if index > 0:
                z_prev = zs[index - 1]
                weight = layers[index][0]
                tw = tangents[index][0]
                back = g @ weight.T
                rback = rg @ weight.T + g @ tw.T
                rg = rback * self.act_d(z_prev) + back * self.act_dd(z_prev) * rzs[index - 1]
                g = back * self.act_d(z_prev)
        return self.flatten(out)

    def dense_hessian(self, w: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Full Hessian assembled column-by-column from exact products."""
        p = w.size
        h = np.empty((p, p))
        basis = np.zeros(p)
        for j in range(p):
            basis[j] = 1.0
            h[:, j] = self.hessian_vector_product(w, x, y, basis)
            basis[j] = 0.0
        return (h + h.T) / 2.0

    def per_sample_jacobian(self, w: np.ndarray, x: np.ndarray) -> np.ndarray:
        """d logits / d parameters, shape (N, classes, P)."""
        layers = self.unflatten(w)
        _, cache = self.forward(w, x)
        n = x.shape[0]
        p = w.size
        d_y = self.sizes[-1]
        jac = np.empty((n, d_y, p))
        for c in range(d_y):
            g = np.zeros((n, d_y))
            g[:, c] = 1.0
            pieces = []
            for index in range(self.n_layers - 1, -1, -1):
                a_prev = cache[index][1]
                dw = a_prev[:, :, None] * g[:, None, :]
                pieces.append((index, dw.reshape(n, -1), g.copy()))
                if index > 0:
                    z_prev = cache[index][0]
                    g = (g @ layers[index][0].T) * self.act_d(z_prev)
            flat = [None] * self.n_layers
            for index, dw_flat, db in pieces:
                flat[index] = np.concatenate([dw_flat, db], axis=1)
            jac[:, c, :] = np.concatenate(flat, axis=1)
        return jac

    def gauss_newton(self, w: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Generalized Gauss-Newton: mean of J^T (diag(p) - p p^T) J."""
        del y  # the GGN of cross-entropy/softmax depends on inputs only
        logits, _ = self.forward(w, x)
        probs = softmax(logits)
        jac = self.per_sample_jacobian(w, x)
        lam = np.einsum("ni,ij->nij", probs, np.eye(probs.shape[1]))
        lam -= np.einsum("ni,nj->nij", probs, probs)
        ggn = np.einsum("nip,nij,njq->pq", jac, lam, jac) / x.shape[0]
        return (ggn + ggn.T) / 2.0
