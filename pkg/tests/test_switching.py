import numpy as np
import pytest

from signed_spectra.conjectures import BoundKind, check_graph
from signed_spectra.graphs import SignedGraph, SimpleGraph, all_positive, complete_graph
from signed_spectra.spectra import spectrum_of
from signed_spectra.switching import (
    DisconnectedGraphError,
    canonical_representative,
    class_index,
    class_signing,
    enumerate_classes,
    num_classes,
    spanning_tree,
    spectrum_is_switching_invariant,
    switch,
    vertex_mask,
)

from conftest import random_connected_signed_graph


class TestSwitch:
    def test_empty_set_is_identity(self, ex1):
        g = ex1.graph()
        assert switch(g, 0) == g

    def test_full_set_is_identity(self, ex1):
        g = ex1.graph()
        assert switch(g, (1 << g.n) - 1) == g

    def test_involution(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            g = random_connected_signed_graph(rng)
            s = int(rng.integers(0, 1 << g.n))
            assert switch(switch(g, s), s) == g

    def test_complement_equivalence(self):
        rng = np.random.default_rng(6)
        for _ in range(50):
            g = random_connected_signed_graph(rng)
            s = int(rng.integers(0, 1 << g.n))
            assert switch(g, s) == switch(g, ~s & ((1 << g.n) - 1))

    def test_rejects_oversized_mask(self):
        g = all_positive(complete_graph(3))
        with pytest.raises(ValueError):
            switch(g, 1 << 3)

    def test_vertex_mask_helper(self):
        assert vertex_mask([0, 2], 3) == 0b101
        with pytest.raises(ValueError):
            vertex_mask([3], 3)


class TestCanonicalRepresentative:
    def test_all_positive_is_fixed(self):
        for n in (2, 4, 7):
            g = all_positive(complete_graph(n))
            assert canonical_representative(g) == g

    def test_tree_edges_positive(self):
        rng = np.random.default_rng(8)
        for _ in range(30):
            g = random_connected_signed_graph(rng)
            st = spanning_tree(g.base)
            c = canonical_representative(g, st)
            assert all(not (c.signs >> t) & 1 for t in st.tree_edges)

    def test_fixture_class_preserves_spectrum(self, ex1):
        g = ex1.graph()
        c = canonical_representative(g)
        a, b = spectrum_of(g).values, spectrum_of(c).values
        assert np.max(np.abs(a - b)) <= 1e-9

    def test_same_class_same_representative(self):
        rng = np.random.default_rng(9)
        for _ in range(30):
            g = random_connected_signed_graph(rng)
            s = int(rng.integers(0, 1 << g.n))
            assert canonical_representative(switch(g, s)) == canonical_representative(g)

    def test_disconnected_rejected(self):
        g = all_positive(SimpleGraph(4, ((0, 1), (2, 3))))
        with pytest.raises(DisconnectedGraphError):
            canonical_representative(g)


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(2, 1), (4, 8), (7, 32768)])
    def test_class_counts(self, n, count):
        base = complete_graph(n)
        assert num_classes(base) == count
        assert sum(1 for _ in enumerate_classes(base)) == count

    def test_ascending_bitmask_order(self):
        base = complete_graph(4)
        st = spanning_tree(base)
        masks = [class_index(g, st) for g in enumerate_classes(base)]
        assert masks == list(range(8))

    def test_class_signing_index_inverse(self):
        base = complete_graph(5)
        st = spanning_tree(base)
        for mask in range(num_classes(base)):
            assert class_index(class_signing(base, st, mask), st) == mask

    def test_k4_orbit_partition(self):
        # Brute force: all 64 signings of K4 fall into 8 switching orbits of
        # size 8, one per enumerated representative.
        base = complete_graph(4)
        reps = list(enumerate_classes(base))
        orbit_of = {}
        for signs in range(64):
            c = canonical_representative(SignedGraph(base, signs))
            orbit_of.setdefault(c.signs, set()).add(signs)
        assert len(orbit_of) == 8
        assert all(len(v) == 8 for v in orbit_of.values())
        assert sorted(orbit_of.keys()) == sorted(r.signs for r in reps)

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            num_classes(SimpleGraph(4, ((0, 1), (2, 3))))


class TestSpectralInvariance:
    def test_fixture_under_random_switches(self, ex1):
        g = ex1.graph()
        rng = np.random.default_rng(10)
        for _ in range(20):
            s = int(rng.integers(0, 1 << g.n))
            assert spectrum_is_switching_invariant(g, s)

    def test_positive_k5_spectrum(self):
        g = all_positive(complete_graph(5))
        rng = np.random.default_rng(13)
        for _ in range(10):
            h = switch(g, int(rng.integers(0, 32)))
            assert np.allclose(spectrum_of(h).values, [5, 5, 5, 5, 0], atol=1e-9)

    def test_k2_both_signings(self):
        base = complete_graph(2)
        for signs in (0, 1):
            s = spectrum_of(SignedGraph(base, signs))
            assert np.allclose(s.values, [2, 0], atol=1e-9)

    def test_violations_invariant_across_class(self, ex1):
        g = ex1.graph()
        rng = np.random.default_rng(14)
        ref = check_graph(g, BoundKind.WANG_HOU)
        for _ in range(10):
            h = switch(g, int(rng.integers(0, 1 << g.n)))
            got = check_graph(h, BoundKind.WANG_HOU)
            assert [r.k for r in got] == [r.k for r in ref]
            assert np.allclose([r.margin for r in got], [r.margin for r in ref], atol=1e-8)
