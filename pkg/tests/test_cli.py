"""CLI: subcommands, exit codes, determinism, file round trips."""

import json
import subprocess
import sys

import numpy as np
import pytest

from rmlab.cli import run
from rmlab.core import read_rmtx, read_spectrum_csv, write_rmtx, write_spectrum_csv
from rmlab.core.types import EmpiricalSpectrum


def invoke(*argv):
    return run(list(argv))


def read_csv_rows(path):
    lines = path.read_text().strip().splitlines()
    return lines[0], [line.split(",") for line in lines[1:]]


class TestSampleAndEig:
    def test_roundtrip_and_determinism(self, tmp_path):
        rmtx = tmp_path / "m.rmtx"
        csv = tmp_path / "s.csv"
        args = ["sample", "--ensemble", "goe", "--dim", "200", "--sigma", "1.0",
                "--seed", "42", "--out", str(rmtx)]
        assert invoke(*args) == 0
        first = rmtx.read_bytes()
        assert invoke(*args) == 0
        assert rmtx.read_bytes() == first
        assert invoke("eig", "--in", str(rmtx), "--out", str(csv)) == 0
        spectrum = read_spectrum_csv(csv)
        assert len(spectrum) == 200
        first_csv = csv.read_bytes()
        assert invoke("eig", "--in", str(rmtx), "--out", str(csv)) == 0
        assert csv.read_bytes() == first_csv

    def test_sample_report_embeds_spec(self, tmp_path):
        rmtx = tmp_path / "w.rmtx"
        report = tmp_path / "w.json"
        assert invoke(
            "sample", "--ensemble", "wishart", "--dim", "60", "--n-data", "30",
            "--seed", "1", "--out", str(rmtx), "--report", str(report),
        ) == 0
        data = json.loads(report.read_text())
        assert data["schema_version"] == 1
        assert data["ensemble_spec"]["kind"] == "wishart"
        assert data["ensemble_spec"]["n_data"] == 30
        assert data["config"]["command"] == "sample"
        assert "generated_at" not in data

    def test_ginibre_product_eig_out(self, tmp_path):
        rmtx = tmp_path / "g.rmtx"
        eig_csv = tmp_path / "g.csv"
        assert invoke(
            "sample", "--ensemble", "ginibre_product", "--dim", "40",
            "--dims", "40,40", "--seed", "3", "--out", str(rmtx),
            "--eig-out", str(eig_csv),
        ) == 0
        header, rows = read_csv_rows(eig_csv)
        assert header == "re,im"
        assert len(rows) == 40

    def test_spiked_sample(self, tmp_path):
        rmtx = tmp_path / "spiked.rmtx"
        assert invoke(
            "sample", "--ensemble", "spiked_goe", "--dim", "100",
            "--spikes", "3.0,-2.0", "--seed", "5", "--out", str(rmtx),
        ) == 0
        assert read_rmtx(rmtx).shape == (100, 100)

    def test_bad_ensemble_is_usage_error(self, tmp_path):
        assert invoke("sample", "--ensemble", "levy", "--out", str(tmp_path / "x.rmtx")) == 1


class TestExitCodes:
    def test_unknown_flag(self):
        assert invoke("eig", "--nope", "x") == 1

    def test_missing_subcommand(self):
        assert invoke() == 1

    def test_unknown_subcommand(self):
        assert invoke("frobnicate") == 1

    def test_malformed_rmtx_is_numeric_failure(self, tmp_path):
        bad = tmp_path / "bad.rmtx"
        bad.write_bytes(b"RMTX\x01" + b"\x00" * 10)
        assert invoke("eig", "--in", str(bad), "--out", str(tmp_path / "s.csv")) == 2

    def test_asymmetric_matrix_is_numeric_failure(self, tmp_path):
        rmtx = tmp_path / "asym.rmtx"
        write_rmtx(rmtx, np.array([[0.0, 1.0], [2.0, 0.0]]))
        assert invoke("eig", "--in", str(rmtx), "--out", str(tmp_path / "s.csv")) == 2

    def test_missing_file_is_numeric_failure(self, tmp_path):
        assert invoke("eig", "--in", str(tmp_path / "nope.rmtx"), "--out", str(tmp_path / "s.csv")) == 2


class TestConfigMerge:
    def test_config_provides_defaults_flags_win(self, tmp_path):
        config = tmp_path / "cfg.json"
        config.write_text(json.dumps({"dim": 50, "seed": 7}))
        rmtx = tmp_path / "a.rmtx"
        assert invoke("sample", "--config", str(config), "--out", str(rmtx)) == 0
        assert read_rmtx(rmtx).shape == (50, 50)
        rmtx2 = tmp_path / "b.rmtx"
        assert invoke("sample", "--config", str(config), "--dim", "30", "--out", str(rmtx2)) == 0
        assert read_rmtx(rmtx2).shape == (30, 30)

    def test_unknown_config_key(self, tmp_path):
        config = tmp_path / "cfg.json"
        config.write_text(json.dumps({"dimension": 50}))
        assert invoke("sample", "--config", str(config), "--out", str(tmp_path / "x.rmtx")) == 1


class TestLawCommand:
    def test_marcenko_pastur_sidecar_atom(self, tmp_path):
        out = tmp_path / "mp.csv"
        assert invoke("law", "--name", "marcenko-pastur", "--q", "6", "--sigma", "1",
                      "--grid", "128", "--out", str(out)) == 0
        sidecar = json.loads((tmp_path / "mp.json").read_text())
        atoms = sidecar["law"]["atoms"]
        assert atoms[0][0] == 0.0
        assert atoms[0][1] == pytest.approx(1.0 - 1.0 / 6.0, abs=1e-12)
        header, rows = read_csv_rows(out)
        assert header == "x,pdf"
        assert len(rows) == 128

    def test_semicircle_deterministic(self, tmp_path):
        out = tmp_path / "sc.csv"
        args = ["law", "--name", "semicircle", "--sigma", "2.0", "--out", str(out)]
        assert invoke(*args) == 0
        first = out.read_bytes()
        assert invoke(*args) == 0
        assert out.read_bytes() == first

    def test_missing_law_parameter(self, tmp_path):
        assert invoke("law", "--name", "marcenko-pastur", "--out", str(tmp_path / "x.csv")) == 1


class TestCompareCommand:
    def test_report_schema(self, tmp_path):
        spectrum_csv = tmp_path / "s.csv"
        rng = np.random.default_rng(0)
        u = rng.uniform(0, 1, 4000)
        values = 2.0 * np.sin(np.pi * (u - 0.5))  # roughly bulk-shaped, inside [-2, 2]
        write_spectrum_csv(spectrum_csv, EmpiricalSpectrum(values))
        report_path = tmp_path / "r.json"
        assert invoke("compare", "--spectrum", str(spectrum_csv), "--law", "semicircle",
                      "--sigma", "1", "--report", str(report_path)) == 0
        report = json.loads(report_path.read_text())
        ks = report["comparison"]["ks_distance"]
        assert 0.0 <= ks <= 1.0
        assert report["schema_version"] == 1
        assert len(report["comparison"]["moment_errors"]) == 6


class TestHistCommand:
    def test_single_eigenvalue_single_bin(self, tmp_path):
        spectrum_csv = tmp_path / "s.csv"
        write_spectrum_csv(spectrum_csv, EmpiricalSpectrum([2.5]))
        out = tmp_path / "h.csv"
        assert invoke("hist", "--in", str(spectrum_csv), "--bins", "1", "--out", str(out)) == 0
        header, rows = read_csv_rows(out)
        assert header == "bin_center,density"
        assert float(rows[0][1]) == pytest.approx(1.0)  # width defaults to 1

    def test_uniform_spectrum_flat(self, tmp_path):
        rng = np.random.default_rng(1)
        spectrum_csv = tmp_path / "u.csv"
        write_spectrum_csv(spectrum_csv, EmpiricalSpectrum(rng.uniform(0, 1, 200_000)))
        out = tmp_path / "h.csv"
        assert invoke("hist", "--in", str(spectrum_csv), "--bins", "10", "--out", str(out)) == 0
        _, rows = read_csv_rows(out)
        for _, density in rows:
            assert abs(float(density) - 1.0) < 0.1

    def test_atom_emitted_separately(self, tmp_path):
        from rmlab.core import eigvalsh_dense
        from rmlab.ensembles import RngStream, sample_wishart

        spectrum = eigvalsh_dense(sample_wishart(120, 20, 1.0, RngStream(2)))
        spectrum_csv = tmp_path / "w.csv"
        write_spectrum_csv(spectrum_csv, spectrum)
        out = tmp_path / "h.csv"
        assert invoke("hist", "--in", str(spectrum_csv), "--bins", "24", "--out", str(out)) == 0
        _, atom_rows = read_csv_rows(tmp_path / "h.atoms.csv")
        assert float(atom_rows[0][1]) == pytest.approx(5.0 / 6.0, abs=1e-12)
        _, rows = read_csv_rows(out)
        centers = np.array([float(r[0]) for r in rows])
        dens = np.array([float(r[1]) for r in rows])
        width = centers[1] - centers[0]
        assert float(np.sum(dens * width)) == pytest.approx(1.0 / 6.0, abs=1e-6)

    def test_log_y_drops_empty_bins(self, tmp_path):
        spectrum_csv = tmp_path / "s.csv"
        write_spectrum_csv(spectrum_csv, EmpiricalSpectrum([0.1, 0.11, 5.0]))
        out = tmp_path / "h.csv"
        assert invoke("hist", "--in", str(spectrum_csv), "--bins", "8", "--log-y",
                      "--out", str(out)) == 0
        _, rows = read_csv_rows(out)
        assert 0 < len(rows) < 8


class TestSweepCommands:
    def test_sweep_bbp_table(self, tmp_path):
        out = tmp_path / "bbp.csv"
        report = tmp_path / "bbp.json"
        assert invoke(
            "sweep-bbp", "--p-list", "200,400", "--beta", "3.0", "--sigma-eps", "1.0",
            "--trials", "3", "--seed", "1", "--out", str(out), "--report", str(report),
        ) == 0
        header, rows = read_csv_rows(out)
        assert header.startswith("p_dim,spike,mean_top")
        assert len(rows) == 2
        data = json.loads(report.read_text())
        assert data["ensemble_spec"]["kind"] == "spiked_goe"
        assert len(data["rows"]) == 2

    def test_sweep_degeneracy_table(self, tmp_path):
        out = tmp_path / "deg.csv"
        assert invoke(
            "sweep-degeneracy", "--l-list", "1,2", "--ratio", "5", "--dim-base", "150",
            "--trials", "2", "--seed", "2", "--out", str(out),
        ) == 0
        _, rows = read_csv_rows(out)
        assert len(rows) == 2
        assert float(rows[0][3]) == pytest.approx(0.8)

    def test_sweep_percolation_table(self, tmp_path):
        out = tmp_path / "perc.csv"
        assert invoke(
            "sweep-percolation", "--dim", "200", "--k-list", "1.0,200",
            "--trials", "2", "--seed", "3", "--out", str(out),
        ) == 0
        _, rows = read_csv_rows(out)
        assert len(rows) == 2
        assert int(rows[0][6]) == 1  # sparse draw escapes its edge
        assert int(rows[1][6]) == 0  # full keep stays inside

    def test_sweep_deterministic(self, tmp_path):
        out = tmp_path / "bbp.csv"
        args = ["sweep-bbp", "--p-list", "150", "--beta", "2.5", "--sigma-eps", "1.0",
                "--trials", "2", "--seed", "9", "--out", str(out)]
        assert invoke(*args) == 0
        first = out.read_bytes()
        assert invoke(*args) == 0
        assert out.read_bytes() == first


class TestSlqCommand:
    def test_rule_output(self, tmp_path):
        rmtx = tmp_path / "m.rmtx"
        assert invoke("sample", "--ensemble", "goe", "--dim", "150", "--seed", "4",
                      "--out", str(rmtx)) == 0
        rule = tmp_path / "rule.csv"
        smooth = tmp_path / "smooth.csv"
        assert invoke(
            "slq", "--in", str(rmtx), "--steps", "30", "--probes", "4", "--seed", "0",
            "--out", str(rule), "--smooth-width", "0.1", "--smooth-out", str(smooth),
        ) == 0
        header, rows = read_csv_rows(rule)
        assert header == "node,weight"
        total = sum(float(r[1]) for r in rows)
        assert total == pytest.approx(1.0, abs=1e-9)
        header, _ = read_csv_rows(smooth)
        assert header == "x,pdf"
        # full-precision round trip: parsed CSV equals the in-memory rule
        from rmlab.core import SymmetricMatrix, operator_from_matrix, read_rmtx
        from rmlab.slq import slq_density

        op = operator_from_matrix(SymmetricMatrix(read_rmtx(rmtx)))
        recomputed = slq_density(op, steps=30, num_probes=4, seed=0)
        assert np.array_equal(np.array([float(r[0]) for r in rows]), recomputed.average.nodes)
        assert np.array_equal(np.array([float(r[1]) for r in rows]), recomputed.average.weights)

    def test_requires_exactly_one_source(self, tmp_path):
        assert invoke("slq", "--out", str(tmp_path / "r.csv")) == 1


class TestFreeAddCommand:
    def test_density_integrates_to_one(self, tmp_path):
        out = tmp_path / "fa.csv"
        report = tmp_path / "fa.json"
        assert invoke(
            "free-add", "--sigma-wigner", "0.5", "--q", "0.5", "--sigma-mp", "1.0",
            "--grid", "160", "--out", str(out), "--report", str(report),
        ) == 0
        data = json.loads(report.read_text())
        assert data["total_mass_on_grid"] == pytest.approx(1.0, abs=0.02)


class TestModuleEntryPoint:
    def test_python_dash_m(self, tmp_path):
        rmtx = tmp_path / "m.rmtx"
        proc = subprocess.run(
            [sys.executable, "-m", "rmlab", "sample", "--ensemble", "goe",
             "--dim", "20", "--seed", "0", "--out", str(rmtx)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0, proc.stderr
        assert read_rmtx(rmtx).shape == (20, 20)

    def test_timestamp_opt_in(self, tmp_path):
        report = tmp_path / "r.json"
        assert invoke(
            "sample", "--ensemble", "goe", "--dim", "10", "--seed", "0",
            "--out", str(tmp_path / "m.rmtx"), "--report", str(report), "--timestamp",
        ) == 0
        assert "generated_at" in json.loads(report.read_text())
