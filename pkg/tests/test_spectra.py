import numpy as np
import pytest

from signed_spectra.graphs import SignedGraph, all_positive, complete_graph
from signed_spectra.spectra import Spectrum, eigenvalues, laplacian, spectrum_of, top_k_sum

from _oracles import eigvalsh_desc
from conftest import random_signed_graph


class TestLaplacian:
    def test_all_positive_k3(self):
        L = laplacian(all_positive(complete_graph(3)))
        assert L.tolist() == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]

    def test_single_negative_edge(self):
        g = SignedGraph(complete_graph(2), 0b1)
        assert laplacian(g).tolist() == [[1, 1], [1, 1]]

    def test_fixture_matrix(self, ex1):
        assert np.array_equal(laplacian(ex1.graph()).astype(np.int64), ex1.laplacian)

    def test_symmetric(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            L = laplacian(random_signed_graph(rng))
            assert np.array_equal(L, L.T)


class TestEigenvalues:
    def test_reference_values(self, ex1, ex2):
        for fx in (ex1, ex2):
            s = eigenvalues(fx.laplacian)
            assert np.max(np.abs(s.values - np.array(fx.eigenvalues))) <= 1e-3

    def test_k3_spectrum(self):
        s = spectrum_of(all_positive(complete_graph(3)))
        assert np.allclose(s.values, [3, 3, 0], atol=1e-9)

    def test_sorted_non_increasing(self):
        rng = np.random.default_rng(1)
        for _ in range(30):
            s = spectrum_of(random_signed_graph(rng))
            assert np.all(np.diff(s.values) <= 1e-12)

    def test_matches_lapack(self):
        rng = np.random.default_rng(2)
        for _ in range(100):
            L = laplacian(random_signed_graph(rng))
            s = eigenvalues(L)
            assert np.max(np.abs(s.values - eigvalsh_desc(L))) <= 1e-9

    def test_one_vertex(self):
        s = eigenvalues([[0]])
        assert s.values.tolist() == [0.0]

    def test_rejects_nan(self):
        with pytest.raises(ValueError, match="finite"):
            eigenvalues([[np.nan, 0], [0, 1]])

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError, match="symmetric"):
            eigenvalues([[1, 2], [3, 4]])

    def test_rejects_non_square(self):
        with pytest.raises(ValueError, match="square"):
            eigenvalues([[1, 2, 3]])


class TestTraceIdentity:
    def test_random_graphs(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            g = random_signed_graph(rng)
            s = spectrum_of(g)
            tr = 2 * g.m
            assert abs(s.prefix[-1] - tr) <= 1e-8 * max(1, tr)

    def test_flipping_a_sign_preserves_trace(self):
        rng = np.random.default_rng(12)
        for _ in range(30):
            g = random_signed_graph(rng)
            if g.m == 0:
                continue
            t = int(rng.integers(0, g.m))
            flipped = SignedGraph(g.base, g.signs ^ (1 << t))
            a = spectrum_of(g).prefix[-1]
            b = spectrum_of(flipped).prefix[-1]
            assert abs(a - b) <= 1e-8 * max(1, 2 * g.m)


class TestTopKSum:
    def test_fixture_sums(self, ex1, ex2):
        s1 = eigenvalues(ex1.laplacian)
        assert abs(top_k_sum(s1, 4) - ex1.top_sum) <= 1e-3
        s2 = eigenvalues(ex2.laplacian)
        assert abs(top_k_sum(s2, 5) - ex2.top_sum) <= 1e-3

    def test_k_equals_n_is_trace(self):
        g = all_positive(complete_graph(6))
        s = spectrum_of(g)
        assert abs(top_k_sum(s, 6) - 2 * g.m) <= 1e-8 * 2 * g.m

    def test_prefix_zero(self):
        s = spectrum_of(all_positive(complete_graph(3)))
        assert s.prefix[0] == 0.0

    @pytest.mark.parametrize("k", [0, 4, -1])
    def test_k_out_of_range(self, k):
        s = spectrum_of(all_positive(complete_graph(3)))
        with pytest.raises(ValueError):
            top_k_sum(s, k)
