"""Core types, eigensolvers, and file formats."""

import numpy as np
import pytest

from rmlab.core import (
    EmpiricalSpectrum,
    InvalidMatrixError,
    MatrixFormatError,
    SymmetricMatrix,
    TridiagonalMatrix,
    eigh_dense,
    eigh_tridiagonal,
    eigvalsh_dense,
    operator_from_matrix,
    operator_symmetry_defect,
    read_rmtx,
    read_spectrum_csv,
    write_rmtx,
    write_spectrum_csv,
)


def random_symmetric(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, n))
    return (a + a.T) / 2.0


class TestSymmetricMatrix:
    def test_symmetrizes_rounding_noise(self):
        a = np.array([[1.0, 2.0], [2.0 + 1e-12, 3.0]])
        m = SymmetricMatrix(a)
        assert m.entries[0, 1] == m.entries[1, 0]

    def test_rejects_material_asymmetry(self):
        a = np.array([[1.0, 2.0], [2.5, 3.0]])
        with pytest.raises(InvalidMatrixError):
            SymmetricMatrix(a)

    def test_rejects_nonfinite(self):
        a = np.array([[np.nan, 0.0], [0.0, 1.0]])
        with pytest.raises(InvalidMatrixError):
            SymmetricMatrix(a)

    def test_rejects_nonsquare(self):
        with pytest.raises(InvalidMatrixError):
            SymmetricMatrix(np.zeros((2, 3)))

    def test_entries_frozen(self):
        m = SymmetricMatrix(np.eye(3))
        with pytest.raises(ValueError):
            m.entries[0, 0] = 5.0


class TestEmpiricalSpectrum:
    def test_sorts_values(self):
        s = EmpiricalSpectrum([3.0, 1.0, 2.0])
        assert list(s.values) == [1.0, 2.0, 3.0]

    def test_uniform_default_weights(self):
        s = EmpiricalSpectrum([1.0, 2.0])
        assert np.allclose(s.weight_array(), [0.5, 0.5])

    def test_weights_sorted_with_values(self):
        s = EmpiricalSpectrum([2.0, 1.0], [0.25, 0.75])
        assert list(s.weights) == [0.75, 0.25]

    def test_rejects_bad_weight_sum(self):
        with pytest.raises(ValueError):
            EmpiricalSpectrum([1.0, 2.0], [0.5, 0.6])

    def test_rejects_nonpositive_weights(self):
        with pytest.raises(ValueError):
            EmpiricalSpectrum([1.0, 2.0], [1.0, 0.0])


class TestTridiagonalMatrix:
    def test_rejects_nonpositive_beta(self):
        with pytest.raises(ValueError):
            TridiagonalMatrix([1.0, 2.0], [0.0])

    def test_dense_roundtrip(self):
        t = TridiagonalMatrix([1.0, 2.0, 3.0], [0.5, 0.25])
        d = t.dense()
        assert d[0, 1] == d[1, 0] == 0.5
        assert d[2, 2] == 3.0


class TestEigvalshDense:
    def test_diagonal_matrix(self):
        s = eigvalsh_dense(np.diag([3.0, 1.0, 2.0]))
        assert np.allclose(s.values, [1.0, 2.0, 3.0], atol=1e-12)

    def test_two_by_two_exchange(self):
        s = eigvalsh_dense(np.array([[0.0, 1.0], [1.0, 0.0]]))
        assert np.allclose(s.values, [-1.0, 1.0], atol=1e-12)

    def test_one_by_one(self):
        s = eigvalsh_dense(np.array([[4.5]]))
        assert s.values[0] == 4.5

    def test_goe_draw_matches_independent_oracle(self):
        # 50x50 seeded draw against LAPACK as the independent eigensolver
        a = random_symmetric(50, seed=1234) / np.sqrt(50)
        mine = eigvalsh_dense(a).values
        ref = np.linalg.eigvalsh(a)
        assert np.max(np.abs(mine - ref)) < 1e-8

    @pytest.mark.parametrize("n", [2, 3, 17, 120])
    def test_matches_oracle_various_sizes(self, n):
        a = random_symmetric(n, seed=n)
        mine = eigvalsh_dense(a).values
        ref = np.linalg.eigvalsh(a)
        scale = max(1.0, np.max(np.abs(ref)))
        assert np.max(np.abs(mine - ref)) < 1e-10 * scale

    def test_trace_preserved(self):
        a = random_symmetric(80, seed=7)
        s = eigvalsh_dense(a)
        tr = float(np.trace(a))
        assert abs(s.values.sum() - tr) <= 1e-9 * (1.0 + abs(tr))

    def test_degenerate_eigenvalues(self):
        vals = np.array([2.0, 2.0, 2.0, 5.0])
        rng = np.random.default_rng(3)
        q, _ = np.linalg.qr(rng.standard_normal((4, 4)))
        a = q @ np.diag(vals) @ q.T
        s = eigvalsh_dense((a + a.T) / 2)
        assert np.allclose(np.sort(s.values), vals, atol=1e-10)


class TestEighDense:
    @pytest.mark.parametrize("n", [3, 20, 150])
    def test_reconstruction_and_orthogonality(self, n):
        a = random_symmetric(n, seed=100 + n)
        spectrum, q = eigh_dense(a)
        recon = q @ np.diag(spectrum.values) @ q.T
        fro = np.linalg.norm(a)
        assert np.linalg.norm(recon - a) <= 1e-9 * fro
        assert np.max(np.abs(q.T @ q - np.eye(n))) <= 1e-10

    def test_values_match_values_only_path(self):
        a = random_symmetric(40, seed=9)
        s1 = eigvalsh_dense(a)
        s2, _ = eigh_dense(a)
        assert np.allclose(s1.values, s2.values, atol=1e-12)


class TestEighTridiagonal:
    def test_single_entry(self):
        nodes, first = eigh_tridiagonal(TridiagonalMatrix([5.0], []))
        assert np.allclose(nodes, [5.0])
        assert np.allclose(np.abs(first), [1.0])

    def test_two_by_two_analytic(self):
        nodes, first = eigh_tridiagonal(TridiagonalMatrix([0.0, 0.0], [1.0]))
        assert np.allclose(nodes, [-1.0, 1.0], atol=1e-14)
        assert np.allclose(first**2, [0.5, 0.5], atol=1e-14)

    def test_against_dense_oracle(self):
        rng = np.random.default_rng(11)
        alpha = rng.standard_normal(12)
        beta = np.abs(rng.standard_normal(11)) + 0.1
        t = TridiagonalMatrix(alpha, beta)
        nodes, first = eigh_tridiagonal(t)
        ref_vals, ref_vecs = np.linalg.eigh(t.dense())
        assert np.allclose(nodes, ref_vals, atol=1e-10)
        assert np.allclose(first**2, ref_vecs[0, :] ** 2, atol=1e-10)

    def test_first_components_normalized(self):
        rng = np.random.default_rng(21)
        t = TridiagonalMatrix(rng.standard_normal(30), np.abs(rng.standard_normal(29)) + 0.05)
        _, first = eigh_tridiagonal(t)
        assert abs(np.sum(first**2) - 1.0) <= 1e-12


class TestLinearOperator:
    def test_identity(self):
        op = operator_from_matrix(np.eye(3))
        assert np.allclose(op.matvec([1.0, 2.0, 3.0]), [1.0, 2.0, 3.0])

    def test_exchange(self):
        op = operator_from_matrix(np.array([[0.0, 1.0], [1.0, 0.0]]))
        assert np.allclose(op.matvec([1.0, 0.0]), [0.0, 1.0])

    def test_matches_direct_product(self):
        a = random_symmetric(100, seed=5)
        op = operator_from_matrix(a)
        rng = np.random.default_rng(6)
        for _ in range(10):
            v = rng.standard_normal(100)
            assert np.max(np.abs(op.matvec(v) - a @ v)) < 1e-12

    def test_symmetry_defect_small(self):
        a = random_symmetric(64, seed=8)
        assert operator_symmetry_defect(operator_from_matrix(a)) < 1e-10


class TestRmtxFormat:
    def test_roundtrip(self, tmp_path):
        a = random_symmetric(17, seed=2)
        path = tmp_path / "m.rmtx"
        write_rmtx(path, a)
        back = read_rmtx(path)
        assert back.dtype == np.float64
        assert np.array_equal(back, a)

    def test_header_bytes(self, tmp_path):
        path = tmp_path / "m.rmtx"
        write_rmtx(path, np.eye(2))
        raw = path.read_bytes()
        assert raw[:4] == b"RMTX"
        assert raw[4] == 1
        assert int.from_bytes(raw[5:13], "little") == 2
        assert len(raw) == 13 + 8 * 4

    def test_bad_magic_offset(self, tmp_path):
        path = tmp_path / "bad.rmtx"
        path.write_bytes(b"NOPE" + bytes(20))
        with pytest.raises(MatrixFormatError) as exc:
            read_rmtx(path)
        assert exc.value.byte_offset == 0

    def test_truncated_payload_offset(self, tmp_path):
        path = tmp_path / "trunc.rmtx"
        write_rmtx(path, np.eye(3))
        data = path.read_bytes()
        path.write_bytes(data[:-8])
        with pytest.raises(MatrixFormatError) as exc:
            read_rmtx(path)
        assert exc.value.byte_offset == len(data) - 8

    def test_symmetric_matrix_input(self, tmp_path):
        m = SymmetricMatrix(random_symmetric(5, seed=3))
        path = tmp_path / "sym.rmtx"
        write_rmtx(path, m)
        assert np.array_equal(read_rmtx(path), m.entries)


class TestSpectrumCsv:
    def test_roundtrip_full_precision(self, tmp_path):
        rng = np.random.default_rng(4)
        spec = EmpiricalSpectrum(rng.standard_normal(33))
        path = tmp_path / "s.csv"
        write_spectrum_csv(path, spec)
        back = read_spectrum_csv(path)
        assert np.array_equal(back.values, spec.values)
        assert np.array_equal(back.weight_array(), spec.weight_array())

    def test_header(self, tmp_path):
        path = tmp_path / "s.csv"
        write_spectrum_csv(path, EmpiricalSpectrum([1.0]))
        assert path.read_text().splitlines()[0] == "eigenvalue,weight"

    def test_rejects_missing_header(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("1.0,1.0\n")
        with pytest.raises(ValueError):
            read_spectrum_csv(path)
