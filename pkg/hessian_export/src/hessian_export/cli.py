"""hessian-export command line.

Default mode computes the H/G/R split of a model on the synthetic mixture
(or local MNIST files) and writes RMTX matrices the spectral toolchain
can consume directly.  Histogram mode (--histogram-in) dumps raw entries
of selected rows of an existing RMTX file instead.
"""

from __future__ import annotations

import argparse
import sys

from .data import gaussian_mixture, mnist_subset
from .export import export_entry_histogram, export_hessian_split
from .models import ModelSpec
from .train import train


def _int_list(text: str) -> list[int]:
    return [int(part) for part in str(text).split(",") if part != ""]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hessian-export", description=__doc__)
    parser.add_argument("--model", choices=["logistic", "mlp"], default="logistic")
    parser.add_argument("--hidden", type=_int_list, default=[8], help="hidden sizes (mlp only)")
    parser.add_argument("--input-dim", type=int, default=10)
    parser.add_argument("--classes", type=int, default=3)
    parser.add_argument("--n", type=int, default=200, help="dataset size")
    parser.add_argument("--activation", choices=["tanh", "relu"], default="tanh")
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--train-epochs", type=int, default=0, help="0: export at initialization")
    parser.add_argument("--learning-rate", type=float, default=0.5)
    parser.add_argument("--mnist-dir", type=str, default=None,
                        help="directory with IDX files; falls back to the synthetic mixture")
    parser.add_argument("--out", type=str, default="export", help="output path prefix")
    parser.add_argument("--histogram-in", type=str, default=None, help="RMTX file for row dumps")
    parser.add_argument("--histogram-rows", type=_int_list, default=[0])
    parser.add_argument("--histogram-out", type=str, default="rows.csv")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.histogram_in is not None:
        summary = export_entry_histogram(args.histogram_in, args.histogram_rows, args.histogram_out)
        print(
            f"rows {summary['rows']}: {summary['fraction_below_1e8']:.4f} below 1e-8, "
            f"{summary['fraction_below_1e6']:.4f} below 1e-6"
        )
        return 0
    spec = ModelSpec(
        architecture=args.model,
        hidden=args.hidden if args.model == "mlp" else [],
        input_dim=args.input_dim,
        classes=args.classes,
        n_samples=args.n,
        activation=args.activation,
        seed=args.seed,
    )
    if args.mnist_dir is not None:
        try:
            x, y = mnist_subset(args.mnist_dir, args.n, seed=args.seed)
        except FileNotFoundError as exc:
            print(f"warning: {exc}; using the synthetic mixture", file=sys.stderr)
            x, y = gaussian_mixture(args.n, args.input_dim, args.classes, args.seed)
        else:
            if x.shape[1] != args.input_dim:
                spec = ModelSpec(
                    architecture=spec.architecture,
                    hidden=spec.hidden,
                    input_dim=x.shape[1],
                    classes=spec.classes,
                    n_samples=spec.n_samples,
                    activation=spec.activation,
                    seed=spec.seed,
                )
    else:
        x, y = gaussian_mixture(args.n, args.input_dim, args.classes, args.seed)
    weights = train(spec, x, y, epochs=args.train_epochs, base_rate=args.learning_rate)
    result = export_hessian_split(spec, weights, x, y, args.out)
    print(
        f"wrote {result.hessian_path}, {result.ggn_path}, {result.residual_path} "
        f"({spec.parameter_count} parameters)"
    )
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
