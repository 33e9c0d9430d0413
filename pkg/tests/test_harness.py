import pytest

import distideals.graphs as graphs_mod
from distideals.harness import (_run_lemma, phi_cached, run_all,
                                verify_bull, verify_g65, verify_g612,
                                verify_g69, verify_5pan, verify_transcription)


class TestIndividualLemmas:
    def test_transcription(self):
        rep = verify_transcription()
        assert rep.passed

    def test_bull(self):
        rep = verify_bull()
        assert rep.passed

    def test_g65(self):
        rep = verify_g65()
        assert rep.passed

    def test_5pan(self):
        rep = verify_5pan()
        assert rep.passed

    def test_g69_flags_erratum(self):
        rep = verify_g69()
        assert rep.passed
        kinds = {c.kind for c in rep.checks}
        assert "erratum" in kinds and "derived-golden" in kinds

    def test_g612(self):
        rep = verify_g612()
        assert rep.passed


class TestMutation:
    def test_corrupted_atlas_edge_fails_bull(self, monkeypatch):
        bad = dict(graphs_mod._ATLAS_EDGES)
        bad["bull"] = (5, ((0, 1), (1, 3), (2, 3), (2, 4), (3, 4)))
        monkeypatch.setitem(graphs_mod._ATLAS_EDGES, "bull", bad["bull"])
        rep = verify_bull()
        assert not rep.passed
        failing = [c for c in rep.checks if not c.passed]
        assert any("phi(bull)" in c.description for c in failing)

    def test_corrupted_matrix_fails_transcription(self, monkeypatch):
        import distideals.certmatrices as cm
        tweaked = dict(cm._TABLES["G_{6,12}"])
        tweaked["rows"] = tweaked["rows"].replace("x0 2  2  2  y0 1",
                                                  "x0 2  2  3  y0 1", 1)
        monkeypatch.setitem(cm._TABLES, "G_{6,12}", tweaked)
        rep = verify_transcription()
        assert not rep.passed


class TestBudgets:
    def test_tiny_budget_reports_inconclusive(self):
        rep = _run_lemma("G_{6,7}", budget=1, seed=1729)
        assert not rep.passed
        assert any(c.kind == "inconclusive" or "inconclusive" in c.computed
                   for c in rep.checks if not c.passed)

    def test_tiny_budget_no_false_pass_on_phi(self):
        rep = _run_lemma("diameter2-members", budget=1, seed=1729)
        assert not rep.passed


class TestRunAll:
    def test_unknown_lemma(self):
        with pytest.raises(KeyError):
            run_all(lemma="nonexistent")

    def test_single_lemma_no_theorem(self):
        report = run_all(lemma="bull")
        assert report.theorem_summary is None
        assert report.passed

    def test_json_shape(self):
        import json
        report = run_all(lemma="G_{6,5}")
        payload = report.to_json()
        json.dumps(payload)
        assert payload["lemmas"][0]["lemma"] == "G_{6,5}"


class TestPhiCache:
    def test_cached_matches_direct(self):
        from distideals.graphs import atlas
        from distideals.ideals import phi_trivial_count
        g = atlas("dart").graph
        assert phi_cached(g) == phi_trivial_count(g).phi_ideals
