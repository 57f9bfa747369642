"""Samplers: reproducibility, entry statistics, and law agreement."""

import math

import numpy as np
import pytest

from rmlab.core import eigvalsh_dense
from rmlab.ensembles import (
    EnsembleSpec,
    RngStream,
    complex_eigenvalues,
    keep_probability,
    percolate,
    sample_ginibre_product,
    sample_goe,
    sample_spiked_goe,
    sample_wigner_general,
    sample_wishart,
    sample_wishart_product,
)
from rmlab.laws import marcenko_pastur_edges, semicircle_law, spiked_edge_prediction


def ks_distance(values, law):
    """Sup distance between an empirical CDF and a law CDF."""
    xs = np.sort(values)
    n = xs.size
    steps = np.arange(1, n + 1) / n
    cdf = law.cdf(xs)
    cdf_left = law.cdf_left(xs)
    return float(max(np.max(np.abs(steps - cdf)), np.max(np.abs(steps - 1.0 / n - cdf_left))))


class TestRngStream:
    def test_bit_reproducible(self):
        a = RngStream(123, 7).normals(1000)
        b = RngStream(123, 7).normals(1000)
        assert np.array_equal(a, b)

    def test_streams_differ(self):
        a = RngStream(123, 0).normals(100)
        b = RngStream(123, 1).normals(100)
        assert not np.array_equal(a, b)

    def test_normal_moments(self):
        z = RngStream(5).normals(200_000)
        assert abs(z.mean()) < 0.01
        assert abs(z.var() - 1.0) < 0.01

    def test_rademacher_values(self):
        r = RngStream(9).rademacher(1000)
        assert set(np.unique(r)) == {-1.0, 1.0}

    def test_uniforms_range(self):
        u = RngStream(11).uniforms(10_000)
        assert u.min() >= 0.0 and u.max() < 1.0


class TestGoe:
    def test_p1_is_single_diagonal_draw(self):
        m = sample_goe(1, 2.0, RngStream(0))
        assert m.n == 1
        assert np.isfinite(m.entries[0, 0])

    def test_reproducible(self):
        a = sample_goe(100, 1.0, RngStream(42, 3))
        b = sample_goe(100, 1.0, RngStream(42, 3))
        assert np.array_equal(a.entries, b.entries)

    def test_entry_statistics(self):
        p, sigma = 600, 1.0
        m = sample_goe(p, sigma, RngStream(7)).entries
        iu = np.triu_indices(p, 1)
        off = m[iu] * math.sqrt(p)
        count = off.size
        assert abs(off.mean()) < 4.0 * sigma / math.sqrt(count)
        assert abs(off.var() - sigma**2) < 0.05 * sigma**2
        diag = np.diagonal(m) * math.sqrt(p)
        assert abs(diag.var() - 2.0 * sigma**2) < 0.25 * sigma**2

    def test_semicircle_agreement_moderate_size(self):
        m = sample_goe(600, 1.0, RngStream(1))
        spectrum = eigvalsh_dense(m)
        assert ks_distance(spectrum.values, semicircle_law(1.0)) < 0.05
        assert abs(spectrum.max() - 2.0) < 0.25


class TestWignerGeneral:
    def test_p1_rademacher_support(self):
        m = sample_wigner_general(1, 1.5, "rademacher", RngStream(3))
        assert abs(m.entries[0, 0]) == pytest.approx(1.5 * math.sqrt(2.0))

    @pytest.mark.parametrize("dist", ["rademacher", "uniform", "gaussian"])
    def test_semicircle_universality(self, dist):
        m = sample_wigner_general(600, 1.0, dist, RngStream(17))
        spectrum = eigvalsh_dense(m)
        assert ks_distance(spectrum.values, semicircle_law(1.0)) < 0.05

    def test_uniform_entries_large_draw(self):
        # the 1/sqrt(3) half-width scaling gives unit entry variance
        m = sample_wigner_general(2000, 1.0, "uniform", RngStream(23))
        spectrum = eigvalsh_dense(m)
        assert ks_distance(spectrum.values, semicircle_law(1.0)) < 0.02

    def test_rejects_unknown_distribution(self):
        with pytest.raises(ValueError):
            sample_wigner_general(10, 1.0, "cauchy", RngStream(0))


class TestWishart:
    def test_single_cell(self):
        m = sample_wishart(1, 1, 1.0, RngStream(2))
        assert m.entries[0, 0] >= 0.0

    def test_bulk_edges_contained(self):
        m = sample_wishart(1000, 2000, 1.0, RngStream(5))
        spectrum = eigvalsh_dense(m)
        lo, hi = marcenko_pastur_edges(0.5, 1.0)
        assert spectrum.min() >= lo - 0.1
        assert spectrum.max() <= hi + 0.1

    def test_rank_exact_atom(self):
        m = sample_wishart(600, 100, 1.0, RngStream(8))
        spectrum = eigvalsh_dense(m)
        zeros = int(np.sum(np.abs(spectrum.values) <= 1e-8))
        assert zeros == 500

    def test_positive_semidefinite(self):
        m = sample_wishart(200, 50, 1.0, RngStream(13))
        assert eigvalsh_dense(m).min() >= -1e-9


class TestGinibreProduct:
    def test_single_cell(self):
        out = sample_ginibre_product([1, 1], 1.0, RngStream(4))
        assert out.eigenvalues.shape == (1,)

    def test_rectangular_eigenvalues_rejected(self):
        with pytest.raises(ValueError):
            sample_ginibre_product([4, 2], 1.0, RngStream(0))

    def test_rectangular_product_shape(self):
        out = sample_ginibre_product([4, 2, 4], 1.0, RngStream(0), want_eigenvalues=True)
        assert out.matrix.shape == (4, 4)

    def test_matches_lapack_oracle(self):
        out = sample_ginibre_product([120, 120], 1.0, RngStream(21))
        ref = np.linalg.eigvals(out.matrix)
        mine = np.array(out.eigenvalues)
        used = np.zeros(ref.size, dtype=bool)
        for lam in mine:
            dist = np.abs(ref - lam)
            dist[used] = np.inf
            j = int(np.argmin(dist))
            used[j] = True
            assert dist[j] < 1e-8

    def test_circular_law_disk(self):
        out = sample_ginibre_product([600, 600], 1.0, RngStream(6))
        moduli = np.abs(out.eigenvalues)
        assert np.mean(moduli > 1.05) <= 0.01

    def test_symmetric_input_agrees_with_symmetric_solver(self):
        rng = np.random.default_rng(14)
        a = rng.standard_normal((60, 60))
        a = (a + a.T) / 2
        mine = np.sort(complex_eigenvalues(a).real)
        ref = eigvalsh_dense(a).values
        assert np.max(np.abs(mine - ref)) < 1e-9


class TestWishartProduct:
    def test_all_dims_one(self):
        m = sample_wishart_product([1, 1], 1.0, RngStream(1))
        assert m.entries[0, 0] >= 0.0

    def test_rank_bound_atom(self):
        m = sample_wishart_product([400, 80], 1.0, RngStream(3))
        spectrum = eigvalsh_dense(m)
        zeros = int(np.sum(np.abs(spectrum.values) <= 1e-8))
        assert zeros >= 320

    def test_positive_semidefinite(self):
        m = sample_wishart_product([150, 60, 150], 1.0, RngStream(19))
        assert eigvalsh_dense(m).min() >= -1e-9

    def test_deep_product_concentrates_near_origin(self):
        # five factors push far more relative mass below a tenth of the
        # mean eigenvalue than a single-factor draw of the same shape
        dims_deep = [400] * 6
        dims_shallow = [400, 400]
        deep = eigvalsh_dense(sample_wishart_product(dims_deep, 1.0, RngStream(31)))
        shallow = eigvalsh_dense(sample_wishart_product(dims_shallow, 1.0, RngStream(32)))
        frac_deep = np.mean(deep.values < 0.1 * deep.values.mean())
        frac_shallow = np.mean(shallow.values < 0.1 * shallow.values.mean())
        assert frac_deep > frac_shallow

    def test_large_rectangular_rank_atom(self):
        # 5000 x 1000 factor: at least 4000 exact zeros by the rank bound
        m = sample_wishart_product([5000, 1000], 1.0, RngStream(42))
        spectrum = eigvalsh_dense(m)
        zeros = int(np.sum(np.abs(spectrum.values) <= 1e-8))
        assert zeros >= 4000


class TestPercolate:
    def test_identity_at_full_keep(self):
        m = sample_goe(50, 1.0, RngStream(2))
        out = percolate(m, 50, RngStream(99))
        assert np.array_equal(out.entries, m.entries)

    def test_rejects_excess_keep_probability(self):
        m = sample_goe(10, 1.0, RngStream(2))
        with pytest.raises(ValueError):
            percolate(m, 11, RngStream(0))
        with pytest.raises(ValueError):
            keep_probability(0.0, 10)

    def test_zero_row_fraction_matches_binomial(self):
        p, k = 2000, 1.0
        m = sample_goe(p, 1.0, RngStream(10))
        sparse = percolate(m, k, RngStream(11))
        zero_rows = np.mean(np.all(sparse.entries == 0.0, axis=1))
        expected = (1.0 - k / p) ** p
        assert abs(zero_rows - expected) <= 0.03

    def test_tails_beyond_percolated_edge(self):
        p, k = 800, 1.0
        m = sample_goe(p, 1.0, RngStream(12))
        sparse = percolate(m, k, RngStream(13))
        spectrum = eigvalsh_dense(sparse)
        sigma_hat = math.sqrt(k / p)
        assert np.max(np.abs(spectrum.values)) > 2.0 * sigma_hat

    def test_keeps_symmetry(self):
        m = sample_goe(80, 1.0, RngStream(15))
        sparse = percolate(m, 4.0, RngStream(16))
        assert np.array_equal(sparse.entries, sparse.entries.T)


class TestSpikedGoe:
    def test_outlier_position(self):
        m = sample_spiked_goe(1000, 1.0, [3.0], RngStream(20))
        spectrum = eigvalsh_dense(m)
        predicted = spiked_edge_prediction([3.0], 1.0).top
        assert abs(spectrum.max() - predicted) < 0.15

    def test_subcritical_spike_absorbed(self):
        m = sample_spiked_goe(1000, 1.0, [0.5], RngStream(22))
        spectrum = eigvalsh_dense(m)
        assert abs(spectrum.max() - 2.0) < 0.15

    def test_negative_spike_bottom_edge(self):
        m = sample_spiked_goe(1000, 1.0, [-3.0], RngStream(24))
        spectrum = eigvalsh_dense(m)
        assert abs(spectrum.min() + 10.0 / 3.0) < 0.15

    def test_rank_budget_enforced(self):
        with pytest.raises(ValueError):
            sample_spiked_goe(50, 1.0, [1.0] * 6, RngStream(0))


class TestEnsembleSpec:
    def test_json_roundtrip(self):
        spec = EnsembleSpec(kind="wishart", dim=100, sigma=2.0, n_data=50)
        back = EnsembleSpec.from_json(spec.to_json())
        assert back == spec
        assert back.q == 2.0

    def test_sample_reproducible(self):
        spec = EnsembleSpec(kind="percolated_wigner", dim=60, sparsity_k=5.0)
        a = spec.sample(RngStream(1, 2))
        b = spec.sample(RngStream(1, 2))
        assert np.array_equal(a.entries, b.entries)

    def test_validates_keep_probability(self):
        with pytest.raises(ValueError):
            EnsembleSpec(kind="percolated_wigner", dim=10, sparsity_k=20.0)

    def test_validates_product_dims(self):
        with pytest.raises(ValueError):
            EnsembleSpec(kind="wishart_product", dim=10, dims=[20, 5])

    def test_validates_spike_rank(self):
        with pytest.raises(ValueError):
            EnsembleSpec(kind="spiked_goe", dim=20, spikes=[1.0, 2.0, 3.0])

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            EnsembleSpec(kind="levy", dim=10)

    def test_all_symmetric_kinds_sample(self):
        specs = [
            EnsembleSpec(kind="goe", dim=30),
            EnsembleSpec(kind="wigner_general", dim=30, entry_distribution="rademacher"),
            EnsembleSpec(kind="wishart", dim=30, n_data=15),
            EnsembleSpec(kind="wishart_product", dim=30, dims=[30, 10, 30]),
            EnsembleSpec(kind="percolated_wigner", dim=30, sparsity_k=3.0),
            EnsembleSpec(kind="percolated_wishart", dim=30, n_data=15, sparsity_k=3.0),
            EnsembleSpec(kind="percolated_product", dim=30, dims=[30, 10], sparsity_k=3.0),
            EnsembleSpec(kind="spiked_goe", dim=30, spikes=[2.5]),
        ]
        for spec in specs:
            m = spec.sample(RngStream(0))
            assert m.n == 30
