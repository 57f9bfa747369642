"""Command-line front end: reproducible experiments over the laboratory.

Flags are long-form only and never positional, so a command line reads as
a self-documenting config; the fully resolved parameter set is embedded
verbatim in every JSON report.  Outputs are byte-identical across reruns
of the same command (reports carry no timestamp unless --timestamp).

Exit codes: 0 success, 1 usage error, 2 numeric failure (non-convergence,
invalid or malformed matrix input).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .analysis import Tolerances, compare, sweep_bbp, sweep_degeneracy, sweep_percolation
from .core.eigh import eigvalsh_dense
from .core.io import (
    MatrixFormatError,
    read_rmtx,
    read_spectrum_csv,
    write_rmtx,
    write_spectrum_csv,
)
from .core.types import EmpiricalSpectrum, InvalidMatrixError, SymmetricMatrix, operator_from_matrix
from .ensembles import EnsembleSpec, RngStream
from .laws import (
    ConvergenceError,
    default_inversion_eta,
    free_add_wigner_wishart,
    ginibre_product_radial_law,
    invert_stieltjes,
    marcenko_pastur_law,
    product_wishart_law_L2,
    semicircle_law,
)
from .slq import FileProtocolOperator, slq_density

__all__ = ["main", "run", "ExperimentConfig", "UsageError"]

SCHEMA_VERSION = 1

LAW_NAMES = ("semicircle", "marcenko-pastur", "ginibre-product", "product-wishart-l2")


class UsageError(Exception):
    """Bad flags or inconsistent parameters; exits with code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); remap to our code 1
        raise UsageError(message)


@dataclass
class ExperimentConfig:
    """Resolved invocation: command name plus every parameter with defaults applied."""

    command: str = ""
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"command": self.command, **self.params}


def _float_list(text: str) -> list[float]:
    return [float(part) for part in str(text).split(",") if part != ""]


def _int_list(text: str) -> list[int]:
    return [int(part) for part in str(text).split(",") if part != ""]


def _fmt(value: float) -> str:
    return repr(float(value))


def _write_csv(path, header: str, rows) -> None:
    lines = [header]
    for row in rows:
        lines.append(",".join(_fmt(v) if isinstance(v, float) else str(v) for v in row))
    Path(path).write_text("\n".join(lines) + "\n")


def _write_report(path, config: ExperimentConfig, payload: dict) -> None:
    report = {"schema_version": SCHEMA_VERSION, "config": config.to_dict()}
    if config.params.get("timestamp"):
        report["generated_at"] = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    report.update(payload)
    Path(path).write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")


# -- option tables ----------------------------------------------------------

_COMMON = [
    ("--timestamp", dict(action="store_true", help="include a wall-clock stamp in reports")),
    ("--config", dict(type=str, help="JSON file of flag defaults (flags take precedence)")),
]

_LAW_FLAGS = [
    ("--law", dict(type=str, help=f"law name, one of {', '.join(LAW_NAMES)}")),
    ("--sigma", dict(type=float, help="scale parameter of the law")),
    ("--q", dict(type=float, help="aspect ratio P/N (marcenko-pastur)")),
    ("--num-factors", dict(type=int, help="factor count L (ginibre-product)")),
    ("--ratio", dict(type=float, help="dimension ratio R <= 1 (product-wishart-l2)")),
]

_DEFAULTS: dict[str, dict] = {
    "sample": {
        "ensemble": "goe",
        "dim": 200,
        "sigma": 1.0,
        "n_data": None,
        "dims": None,
        "entry_dist": "gaussian",
        "k_sparsity": None,
        "spikes": None,
        "seed": 0,
        "stream": 0,
        "out": "matrix.rmtx",
        "eig_out": None,
        "report": None,
        "timestamp": False,
    },
    "eig": {"in_path": "", "out": "spectrum.csv", "timestamp": False},
    "slq": {
        "in_path": None,
        "operator_dir": None,
        "steps": 80,
        "probes": 10,
        "probe_kind": "rademacher",
        "seed": 0,
        "out": "rule.csv",
        "smooth_width": None,
        "smooth_out": None,
        "timestamp": False,
    },
    "law": {
        "law": "semicircle",
        "sigma": 1.0,
        "q": None,
        "num_factors": None,
        "ratio": None,
        "grid": 512,
        "out": "law.csv",
        "timestamp": False,
    },
    "compare": {
        "spectrum": "",
        "law": "semicircle",
        "sigma": 1.0,
        "q": None,
        "num_factors": None,
        "ratio": None,
        "atom_tol": 1e-8,
        "edge_tol": None,
        "min_relative_gap": 0.1,
        "report": "report.json",
        "timestamp": False,
    },
    "hist": {
        "in_path": "",
        "bins": 50,
        "log_y": False,
        "atom_tol": 1e-8,
        "out": "hist.csv",
        "timestamp": False,
    },
    "sweep-bbp": {
        "p_list": [500, 1000, 2000],
        "beta": 3.0,
        "sigma_eps": 1.0,
        "trials": 10,
        "seed": 0,
        "mode": "fixed",
        "growth_n0": None,
        "solver": "lanczos",
        "out": "bbp.csv",
        "report": None,
        "timestamp": False,
    },
    "sweep-degeneracy": {
        "l_list": [1, 2, 3, 5],
        "ratio": 5.0,
        "dim_base": 600,
        "trials": 5,
        "seed": 0,
        "out": "degeneracy.csv",
        "report": None,
        "timestamp": False,
    },
    "sweep-percolation": {
        "dim": 600,
        "k_list": [1.0],
        "trials": 5,
        "seed": 0,
        "sigma": 1.0,
        "out": "percolation.csv",
        "report": None,
        "timestamp": False,
    },
    "free-add": {
        "sigma_wigner": 0.5,
        "q": 0.5,
        "sigma_mp": 1.0,
        "grid": 512,
        "eta": None,
        "x_min": None,
        "x_max": None,
        "out": "freeadd.csv",
        "report": None,
        "timestamp": False,
    },
}


def _build_parser() -> _Parser:
    parser = _Parser(prog="rmlab", description=__doc__, add_help=True)
    sub = parser.add_subparsers(dest="command")

    def add(name: str, flags: list[tuple[str, dict]]) -> None:
        p = sub.add_parser(name, add_help=True, argument_default=argparse.SUPPRESS)
        for flag, kwargs in flags + _COMMON:
            p.add_argument(flag, **kwargs)

    add("sample", [
        ("--ensemble", dict(type=str, help="ensemble kind (snake_case, e.g. goe, spiked_goe)")),
        ("--dim", dict(type=int, help="matrix dimension P")),
        ("--sigma", dict(type=float, help="entry scale")),
        ("--n-data", dict(type=int, dest="n_data", help="factor columns N (wishart kinds)")),
        ("--dims", dict(type=_int_list, help="factor dimension chain N1,...,N(L+1)")),
        ("--entry-dist", dict(type=str, dest="entry_dist", help="gaussian, rademacher, or uniform")),
        ("--k-sparsity", dict(type=float, dest="k_sparsity", help="sparsity constant k (keep prob k/P)")),
        ("--spikes", dict(type=_float_list, help="comma list of signed spike magnitudes")),
        ("--seed", dict(type=int, help="rng seed")),
        ("--stream", dict(type=int, help="rng stream index")),
        ("--out", dict(type=str, help="output RMTX path")),
        ("--eig-out", dict(type=str, dest="eig_out", help="complex spectrum CSV (ginibre_product only)")),
        ("--report", dict(type=str, help="optional provenance report JSON")),
    ])
    add("eig", [
        ("--in", dict(type=str, dest="in_path", help="input RMTX path")),
        ("--out", dict(type=str, help="output spectrum CSV")),
    ])
    add("slq", [
        ("--in", dict(type=str, dest="in_path", help="input RMTX path")),
        ("--operator-dir", dict(type=str, dest="operator_dir", help="streaming-operator directory")),
        ("--steps", dict(type=int, help="Lanczos steps per probe")),
        ("--probes", dict(type=int, help="number of probe vectors")),
        ("--probe-kind", dict(type=str, dest="probe_kind", help="rademacher or gaussian")),
        ("--seed", dict(type=int, help="rng seed")),
        ("--out", dict(type=str, help="averaged rule CSV (node,weight)")),
        ("--smooth-width", dict(type=float, dest="smooth_width", help="Gaussian kernel width (plotting only)")),
        ("--smooth-out", dict(type=str, dest="smooth_out", help="smoothed curve CSV (x,pdf)")),
    ])
    add("law", [
        ("--name", dict(type=str, dest="law", help=f"law name, one of {', '.join(LAW_NAMES)}")),
        ("--sigma", dict(type=float, help="scale parameter")),
        ("--q", dict(type=float, help="aspect ratio (marcenko-pastur)")),
        ("--num-factors", dict(type=int, dest="num_factors", help="factor count (ginibre-product)")),
        ("--ratio", dict(type=float, help="dimension ratio (product-wishart-l2)")),
        ("--grid", dict(type=int, help="number of pdf sample points")),
        ("--out", dict(type=str, help="output CSV (x,pdf); sidecar <out>.json")),
    ])
    add("compare", [
        ("--spectrum", dict(type=str, help="input spectrum CSV")),
        *_LAW_FLAGS,
        ("--atom-tol", dict(type=float, dest="atom_tol", help="zero-atom resolution")),
        ("--edge-tol", dict(type=float, dest="edge_tol", help="outlier margin beyond support")),
        ("--min-relative-gap", dict(type=float, dest="min_relative_gap", help="gap detection threshold")),
        ("--report", dict(type=str, help="output report JSON")),
    ])
    add("hist", [
        ("--in", dict(type=str, dest="in_path", help="input spectrum CSV")),
        ("--bins", dict(type=int, help="number of bins")),
        ("--log-y", dict(action="store_true", dest="log_y", help="emit log10(density), dropping empty bins")),
        ("--atom-tol", dict(type=float, dest="atom_tol", help="zero-atom resolution")),
        ("--out", dict(type=str, help="output CSV (bin_center,density); atoms in <out stem>.atoms.csv")),
    ])
    add("sweep-bbp", [
        ("--p-list", dict(type=_int_list, dest="p_list", help="comma list of dimensions")),
        ("--beta", dict(type=float, help="spike magnitude")),
        ("--sigma-eps", dict(type=float, dest="sigma_eps", help="bulk entry scale")),
        ("--trials", dict(type=int, help="trials per dimension")),
        ("--seed", dict(type=int, help="rng seed")),
        ("--mode", dict(type=str, help="fixed or scaled")),
        ("--growth-n0", dict(type=int, dest="growth_n0", help="reference data count for scaled mode")),
        ("--solver", dict(type=str, help="lanczos or dense")),
        ("--out", dict(type=str, help="output table CSV")),
        ("--report", dict(type=str, help="optional report JSON")),
    ])
    add("sweep-degeneracy", [
        ("--l-list", dict(type=_int_list, dest="l_list", help="comma list of factor counts")),
        ("--ratio", dict(type=float, help="per-factor dimension ratio R >= 1")),
        ("--dim-base", dict(type=int, dest="dim_base", help="outer dimension")),
        ("--trials", dict(type=int, help="trials per point")),
        ("--seed", dict(type=int, help="rng seed")),
        ("--out", dict(type=str, help="output table CSV")),
        ("--report", dict(type=str, help="optional report JSON")),
    ])
    add("sweep-percolation", [
        ("--dim", dict(type=int, help="matrix dimension P")),
        ("--k-list", dict(type=_float_list, dest="k_list", help="comma list of sparsity constants")),
        ("--trials", dict(type=int, help="trials per point")),
        ("--seed", dict(type=int, help="rng seed")),
        ("--sigma", dict(type=float, help="entry scale")),
        ("--out", dict(type=str, help="output table CSV")),
        ("--report", dict(type=str, help="optional report JSON")),
    ])
    add("free-add", [
        ("--sigma-wigner", dict(type=float, dest="sigma_wigner", help="semicircle scale")),
        ("--q", dict(type=float, help="marcenko-pastur aspect ratio")),
        ("--sigma-mp", dict(type=float, dest="sigma_mp", help="marcenko-pastur scale")),
        ("--grid", dict(type=int, help="number of density points")),
        ("--eta", dict(type=float, help="inversion smoothing (default: 1e-3 x support width)")),
        ("--x-min", dict(type=float, dest="x_min", help="grid start (default: auto)")),
        ("--x-max", dict(type=float, dest="x_max", help="grid end (default: auto)")),
        ("--out", dict(type=str, help="output CSV (x,pdf)")),
        ("--report", dict(type=str, help="optional report JSON")),
    ])
    return parser


def _resolve(command: str, explicit: dict) -> ExperimentConfig:
    defaults = dict(_DEFAULTS[command])
    config_path = explicit.pop("config", None)
    if config_path:
        try:
            loaded = json.loads(Path(config_path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {config_path}: {exc}") from exc
        if not isinstance(loaded, dict):
            raise UsageError(f"config {config_path} must hold a JSON object")
        unknown = set(loaded) - set(defaults)
        if unknown:
            raise UsageError(f"config keys not valid for {command}: {sorted(unknown)}")
        defaults.update(loaded)
    defaults.update(explicit)
    return ExperimentConfig(command=command, params=defaults)


# -- law construction -------------------------------------------------------

def _build_law(p: dict):
    name = p.get("law")
    sigma = p.get("sigma") or 1.0
    if name == "semicircle":
        return semicircle_law(sigma)
    if name == "marcenko-pastur":
        if p.get("q") is None:
            raise UsageError("marcenko-pastur requires --q")
        return marcenko_pastur_law(p["q"], sigma)
    if name == "ginibre-product":
        if p.get("num_factors") is None:
            raise UsageError("ginibre-product requires --num-factors")
        return ginibre_product_radial_law(p["num_factors"], sigma)
    if name == "product-wishart-l2":
        if p.get("ratio") is None:
            raise UsageError("product-wishart-l2 requires --ratio")
        return product_wishart_law_L2(p["ratio"], sigma)
    raise UsageError(f"unknown law {name!r}; expected one of {LAW_NAMES}")


# -- subcommand bodies ------------------------------------------------------

def _cmd_sample(cfg: ExperimentConfig) -> int:
    p = cfg.params
    try:
        spec = EnsembleSpec(
            kind=p["ensemble"],
            dim=p["dim"],
            sigma=p["sigma"],
            n_data=p["n_data"],
            dims=p["dims"],
            sparsity_k=p["k_sparsity"],
            spikes=p["spikes"],
            entry_distribution=p["entry_dist"],
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rng = RngStream(p["seed"], p["stream"])
    if spec.kind == "ginibre_product":
        draw = spec.sample_complex(rng, want_eigenvalues=p["eig_out"] is not None)
        write_rmtx(p["out"], draw.matrix)
        matrix_bytes = Path(p["out"]).read_bytes()
        if p["eig_out"] is not None:
            rows = [(float(ev.real), float(ev.imag)) for ev in draw.eigenvalues]
            _write_csv(p["eig_out"], "re,im", rows)
    else:
        matrix = spec.sample(rng)
        write_rmtx(p["out"], matrix)
        matrix_bytes = Path(p["out"]).read_bytes()
    if p["report"] is not None:
        _write_report(
            p["report"],
            cfg,
            {
                "ensemble_spec": spec.to_dict(),
                "output": str(p["out"]),
                "matrix_sha256": hashlib.sha256(matrix_bytes).hexdigest(),
            },
        )
    return 0


def _cmd_eig(cfg: ExperimentConfig) -> int:
    p = cfg.params
    if not p["in_path"]:
        raise UsageError("eig requires --in")
    matrix = SymmetricMatrix(read_rmtx(p["in_path"]))
    write_spectrum_csv(p["out"], eigvalsh_dense(matrix))
    return 0


def _cmd_slq(cfg: ExperimentConfig) -> int:
    p = cfg.params
    if bool(p["in_path"]) == bool(p["operator_dir"]):
        raise UsageError("slq requires exactly one of --in or --operator-dir")
    if p["in_path"]:
        op = operator_from_matrix(SymmetricMatrix(read_rmtx(p["in_path"])))
    else:
        op = FileProtocolOperator(p["operator_dir"]).as_linear_operator()
    result = slq_density(
        op,
        steps=p["steps"],
        num_probes=p["probes"],
        probe_kind=p["probe_kind"],
        kernel_width=p["smooth_width"],
        seed=p["seed"],
    )
    _write_csv(
        p["out"],
        "node,weight",
        zip(result.average.nodes.tolist(), result.average.weights.tolist()),
    )
    if p["smooth_out"] is not None:
        if result.smoothed is None:
            raise UsageError("--smooth-out requires --smooth-width")
        grid, dens = result.smoothed
        _write_csv(p["smooth_out"], "x,pdf", zip(grid.tolist(), dens.tolist()))
    return 0


def _cmd_law(cfg: ExperimentConfig) -> int:
    p = cfg.params
    law = _build_law(p)
    if p["grid"] < 2:
        raise UsageError("--grid must be at least 2")
    xs = np.linspace(law.support_min, law.support_max, p["grid"]) if law.support else np.zeros(1)
    pdf = law.pdf(xs)
    _write_csv(p["out"], "x,pdf", zip(xs.tolist(), np.asarray(pdf).ravel().tolist()))
    sidecar = Path(p["out"]).with_suffix(".json")
    _write_report(sidecar, cfg, {"law": law.describe()})
    return 0


def _cmd_compare(cfg: ExperimentConfig) -> int:
    p = cfg.params
    if not p["spectrum"]:
        raise UsageError("compare requires --spectrum")
    spectrum = read_spectrum_csv(p["spectrum"])
    law = _build_law(p)
    tolerances = Tolerances(
        atom_tol=p["atom_tol"],
        edge_tol=p["edge_tol"],
        min_relative_gap=p["min_relative_gap"],
    )
    report = compare(spectrum, law, tolerances)
    _write_report(p["report"], cfg, {"comparison": report.to_dict()})
    return 0


def _cmd_hist(cfg: ExperimentConfig) -> int:
    p = cfg.params
    if not p["in_path"]:
        raise UsageError("hist requires --in")
    if p["bins"] < 1:
        raise UsageError("--bins must be at least 1")
    spectrum = read_spectrum_csv(p["in_path"])
    weights = spectrum.weight_array()
    is_atom = np.abs(spectrum.values) <= p["atom_tol"]
    atom_weight = float(weights[is_atom].sum())
    bulk = spectrum.values[~is_atom]
    bulk_w = weights[~is_atom]
    atom_path = Path(p["out"]).with_suffix(".atoms.csv")
    atom_rows = [(0.0, atom_weight)] if atom_weight > 0.0 else []
    _write_csv(atom_path, "location,weight", atom_rows)
    if bulk.size == 0:
        _write_csv(p["out"], "bin_center,density", [])
        return 0
    lo, hi = float(bulk.min()), float(bulk.max())
    if lo == hi:
        lo, hi = lo - 0.5, hi + 0.5
    edges = np.linspace(lo, hi, p["bins"] + 1)
    counts, _ = np.histogram(bulk, bins=edges, weights=bulk_w)
    widths = np.diff(edges)
    density = counts / widths
    centers = 0.5 * (edges[:-1] + edges[1:])
    rows = []
    for c, d in zip(centers.tolist(), density.tolist()):
        if p["log_y"]:
            if d > 0.0:
                rows.append((c, float(np.log10(d))))
        else:
            rows.append((c, d))
    _write_csv(p["out"], "bin_center,density", rows)
    return 0


def _cmd_sweep_bbp(cfg: ExperimentConfig) -> int:
    p = cfg.params
    rows = sweep_bbp(
        p["p_list"],
        beta=p["beta"],
        sigma_eps=p["sigma_eps"],
        trials=p["trials"],
        seed=p["seed"],
        mode=p["mode"],
        growth_n0=p["growth_n0"],
        solver=p["solver"],
    )
    _write_csv(
        p["out"],
        "p_dim,spike,mean_top,std_top,mean_bottom,std_bottom,predicted_top,predicted_bottom",
        [
            (r.p_dim, r.spike, r.mean_top, r.std_top, r.mean_bottom, r.std_bottom,
             r.predicted_top, r.predicted_bottom)
            for r in rows
        ],
    )
    if p["report"] is not None:
        ensemble = {"kind": "spiked_goe", "sigma": p["sigma_eps"], "spikes": [p["beta"]]}
        _write_report(p["report"], cfg, {
            "ensemble_spec": ensemble,
            "rows": [r.to_dict() for r in rows],
        })
    return 0


def _cmd_sweep_degeneracy(cfg: ExperimentConfig) -> int:
    p = cfg.params
    rows = sweep_degeneracy(
        p["l_list"], ratio=p["ratio"], dim_base=p["dim_base"],
        trials=p["trials"], seed=p["seed"],
    )
    _write_csv(
        p["out"],
        "num_factors,ratio,dim_base,predicted,measured_mean,measured_std",
        [
            (r.num_factors, r.ratio, r.dim_base, r.predicted, r.measured_mean, r.measured_std)
            for r in rows
        ],
    )
    if p["report"] is not None:
        ensemble = {"kind": "wishart_product", "dim": p["dim_base"], "ratio": p["ratio"]}
        _write_report(p["report"], cfg, {
            "ensemble_spec": ensemble,
            "rows": [r.to_dict() for r in rows],
        })
    return 0


def _cmd_sweep_percolation(cfg: ExperimentConfig) -> int:
    p = cfg.params
    rows = sweep_percolation(
        p["dim"], p["k_list"], trials=p["trials"], seed=p["seed"], sigma=p["sigma"],
    )
    _write_csv(
        p["out"],
        "sparsity_k,sigma_hat,atom_weight,zero_row_fraction,max_abs_eigenvalue,tail_mass,beyond_edge",
        [
            (r.sparsity_k, r.sigma_hat, r.atom_weight, r.zero_row_fraction,
             r.max_abs_eigenvalue, r.tail_mass, int(r.beyond_edge))
            for r in rows
        ],
    )
    if p["report"] is not None:
        ensemble = {"kind": "percolated_wigner", "dim": p["dim"], "sigma": p["sigma"]}
        _write_report(p["report"], cfg, {
            "ensemble_spec": ensemble,
            "rows": [r.to_dict() for r in rows],
        })
    return 0


def _cmd_free_add(cfg: ExperimentConfig) -> int:
    p = cfg.params
    transform = free_add_wigner_wishart(p["sigma_wigner"], p["q"], p["sigma_mp"])
    mp = marcenko_pastur_law(p["q"], p["sigma_mp"])
    lo = p["x_min"] if p["x_min"] is not None else mp.support_min - 2.0 * p["sigma_wigner"] - 0.5
    hi = p["x_max"] if p["x_max"] is not None else mp.support_max + 2.0 * p["sigma_wigner"] + 0.5
    eta = p["eta"] if p["eta"] is not None else 1e-3 * (hi - lo)
    grid = np.linspace(lo, hi, p["grid"])
    density = invert_stieltjes(transform, grid, eta)
    _write_csv(p["out"], "x,pdf", zip(grid.tolist(), density.tolist()))
    if p["report"] is not None:
        _write_report(p["report"], cfg, {
            "eta": eta,
            "grid": [lo, hi, p["grid"]],
            "total_mass_on_grid": float(np.trapezoid(density, grid)),
        })
    return 0


_COMMANDS = {
    "sample": _cmd_sample,
    "eig": _cmd_eig,
    "slq": _cmd_slq,
    "law": _cmd_law,
    "compare": _cmd_compare,
    "hist": _cmd_hist,
    "sweep-bbp": _cmd_sweep_bbp,
    "sweep-degeneracy": _cmd_sweep_degeneracy,
    "sweep-percolation": _cmd_sweep_percolation,
    "free-add": _cmd_free_add,
}


def run(argv) -> int:
    """Parse argv and execute; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        explicit = {k: v for k, v in vars(args).items() if k != "command"}
        cfg = _resolve(args.command, explicit)
        return _COMMANDS[args.command](cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (MatrixFormatError, InvalidMatrixError, ConvergenceError, TimeoutError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 2


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
