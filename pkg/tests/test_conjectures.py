import numpy as np
import pytest

from signed_spectra.conjectures import (
    BoundKind,
    ViolationRecord,
    bound,
    check_all_k,
    check_graph,
    evaluate_all_k,
    ties_all_k,
)
from signed_spectra.graphs import all_positive, complete_graph
from signed_spectra.spectra import eigenvalues, spectrum_of


class TestBound:
    def test_reference_values(self):
        assert bound(BoundKind.WANG_HOU, 21, 4) == 32
        assert bound(BoundKind.WANG_HOU, 28, 5) == 44
        assert bound(BoundKind.BROUWER, 0, 1) == 1

    def test_kinds_differ_by_one(self):
        for m in range(0, 40):
            for k in range(1, 12):
                assert bound(BoundKind.BROUWER, m, k) + 1 == bound(BoundKind.WANG_HOU, m, k)

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            bound(BoundKind.BROUWER, -1, 1)
        with pytest.raises(ValueError):
            bound(BoundKind.BROUWER, 1, 0)


class TestCheckAllK:
    def test_fixture_k7_unique_violation(self, ex1):
        s = eigenvalues(ex1.laplacian)
        recs = check_all_k(s, 21, BoundKind.WANG_HOU, tol=1e-9)
        assert [r.k for r in recs] == [4]
        assert abs(recs[0].margin - 0.1735) <= 1e-3
        assert recs[0].bound == 32

    def test_fixture_k8_violation(self, ex2):
        s = eigenvalues(ex2.laplacian)
        recs = check_all_k(s, 28, BoundKind.WANG_HOU, tol=1e-9)
        assert [r.k for r in recs] == [5]
        assert abs(recs[0].margin - 0.6056) <= 1e-3
        assert recs[0].bound == 44

    def test_positive_k3_brouwer_holds(self):
        s = spectrum_of(all_positive(complete_graph(3)))
        rows = evaluate_all_k(s, 3, BoundKind.BROUWER)
        assert [round(r.sum, 9) for r in rows] == [3, 6, 6]
        assert [r.bound for r in rows] == [4, 6, 9]
        assert check_all_k(s, 3, BoundKind.BROUWER) == []

    def test_records_sorted_by_k_and_deterministic(self, ex1):
        s = eigenvalues(ex1.laplacian)
        a = check_all_k(s, 21, BoundKind.BROUWER)
        b = check_all_k(s, 21, BoundKind.BROUWER)
        assert a == b
        assert [r.k for r in a] == sorted(r.k for r in a)

    def test_wang_hou_violation_implies_brouwer(self, ex1):
        s = eigenvalues(ex1.laplacian)
        wh = check_all_k(s, 21, BoundKind.WANG_HOU)
        br = {r.k: r for r in check_all_k(s, 21, BoundKind.BROUWER)}
        for r in wh:
            assert r.k in br
            assert abs(br[r.k].margin - (r.margin + 1)) < 1e-12

    def test_rejects_nonpositive_tol(self, ex1):
        s = eigenvalues(ex1.laplacian)
        with pytest.raises(ValueError):
            check_all_k(s, 21, BoundKind.WANG_HOU, tol=0.0)


class TestTies:
    def test_exact_equality_is_tie_not_violation(self):
        # Positive K3 under Brouwer: at k=2 the sum equals the bound exactly.
        s = spectrum_of(all_positive(complete_graph(3)))
        ties = ties_all_k(s, 3, BoundKind.BROUWER, tol=1e-9)
        assert [r.k for r in ties] == [2]
        assert check_all_k(s, 3, BoundKind.BROUWER, tol=1e-9) == []


class TestCheckGraph:
    def test_fixture_graphs(self, ex1, ex2):
        assert [r.k for r in check_graph(ex1.graph(), BoundKind.WANG_HOU)] == [4]
        assert [r.k for r in check_graph(ex2.graph(), BoundKind.WANG_HOU)] == [5]

    def test_positive_k7_holds(self):
        assert check_graph(all_positive(complete_graph(7)), BoundKind.WANG_HOU) == []

    def test_records_carry_signing(self, ex1):
        g = ex1.graph()
        recs = check_graph(g, BoundKind.WANG_HOU)
        assert recs[0].signing == g


class TestRecordJson:
    def test_round_trip(self, ex1):
        g = ex1.graph()
        rec = check_graph(g, BoundKind.WANG_HOU)[0]
        d = rec.to_json_dict()
        assert d["base"] == "K7" and d["kind"] == "wang-hou" and d["k"] == 4
        back = ViolationRecord.from_json_dict(d, g.base)
        assert back == rec
