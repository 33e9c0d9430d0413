import random

import pytest

from distideals.graphs import (Graph, atlas, complete, contains_induced,
                               contains_induced_bruteforce, cycle, emit_graph6,
                               is_connected, path)
from distideals.scan import (canonical_form, canonical_graph,
                             enumerate_connected_graphs,
                             enumerate_connected_graphs_bitmask,
                             enumerate_trees, forbidden_scan,
                             verify_forbidden_contrapositive,
                             verify_lambda1_characterizations)

CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853]
TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]


class TestEnumeration:
    def test_counts_match_known_values(self):
        for n, want in enumerate(CONNECTED_COUNTS, start=1):
            assert len(list(enumerate_connected_graphs(n))) == want, n

    def test_bitmask_oracle_agrees(self):
        for n in range(1, 7):
            fast = {canonical_form(g) for g in enumerate_connected_graphs(n)}
            slow = {canonical_form(g) for g in enumerate_connected_graphs_bitmask(n)}
            assert fast == slow, n

    def test_all_connected_distinct(self):
        graphs = list(enumerate_connected_graphs(5))
        assert all(is_connected(g) for g in graphs)
        assert len({canonical_form(g) for g in graphs}) == len(graphs)

    def test_guards(self):
        with pytest.raises(ValueError):
            list(enumerate_connected_graphs(9))
        with pytest.raises(ValueError):
            enumerate_connected_graphs_bitmask(7)

    def test_tree_counts(self):
        for n, want in enumerate(TREE_COUNTS, start=1):
            trees = enumerate_trees(n)
            assert len(trees) == want, n
            assert all(len(t.edges) == n - 1 and is_connected(t) for t in trees)


class TestCanonicalForm:
    def test_relabel_invariance(self):
        rnd = random.Random(9)
        for g in list(enumerate_connected_graphs(6))[:40]:
            perm = list(range(g.n))
            rnd.shuffle(perm)
            assert canonical_form(g) == canonical_form(g.relabel(perm))

    def test_distinguishes_nonisomorphic(self):
        assert canonical_form(path(4)) != canonical_form(atlas("paw").graph)

    def test_canonical_graph_is_isomorphic(self):
        from distideals.graphs import is_isomorphic
        g = atlas("gem").graph
        assert is_isomorphic(canonical_graph(g), g)


class TestForbiddenScan:
    def test_gem_self_hit(self):
        rep = forbidden_scan(atlas("gem").graph)
        assert ("gem", (0, 1, 2, 3, 4)) in rep.atlas_hits
        assert rep.lambda2 is False

    def test_c7_is_odd_hole_only(self):
        rep = forbidden_scan(cycle(7))
        assert rep.atlas_hits == ()
        assert rep.odd_hole == (0, 1, 2, 3, 4, 5, 6)
        assert rep.phi_ideals >= 3 and rep.lambda2 is False

    def test_k4_clean(self):
        rep = forbidden_scan(complete(4))
        assert rep.atlas_hits == () and rep.odd_hole is None
        assert rep.lambda2 is True

    def test_structural_only(self):
        rep = forbidden_scan(atlas("bull").graph, with_phi=False)
        assert rep.phi_ideals is None and rep.lambda2 is None

    def test_report_json(self):
        import json
        rep = forbidden_scan(path(4))
        payload = rep.to_json()
        json.dumps(payload)
        assert payload["graph"] == emit_graph6(path(4))

    def test_scanner_vs_bruteforce(self, corpus6):
        rnd = random.Random(17)
        pats = [(nm, atlas(nm).graph) for nm in ("P4", "paw", "diamond", "bull", "house")]
        for g in rnd.sample(corpus6, 40):
            for nm, pat in pats:
                fast = contains_induced(g, pat)
                slow = contains_induced_bruteforce(g, pat)
                assert (fast is None) == (slow is None), (emit_graph6(g), nm)


class TestContrapositive:
    def test_bull_alone(self):
        summary = verify_forbidden_contrapositive([atlas("bull").graph])
        assert summary["violations"] == []
        assert summary["flagged"] == 1
        assert summary["hit_counts"]["bull"] == 1

    def test_pendant_c7(self):
        g = Graph.from_edges(8, list(cycle(7).edges) + [(0, 7)])
        summary = verify_forbidden_contrapositive([g])
        assert summary["violations"] == []
        assert summary["flagged"] == 1
        assert summary["hit_counts"]["odd-hole"] == 1

    def test_small_corpus(self, corpus5):
        summary = verify_forbidden_contrapositive(corpus5)
        assert summary["violations"] == []
        assert summary["inconclusive"] == []


class TestScanReportInvariant:
    def test_lambda2_implies_clean_on_n6_corpus(self, corpus6):
        bad = []
        for g in corpus6:
            rep = forbidden_scan(g)
            assert rep.status == "complete", emit_graph6(g)
            if rep.lambda2 and (rep.atlas_hits or rep.odd_hole):
                bad.append(emit_graph6(g))
        assert bad == []


class TestLambda1Sweep:
    def test_up_to_five_vertices(self):
        summary = verify_lambda1_characterizations(5)
        assert summary["exceptions_integer"] == []
        assert summary["exceptions_rational"] == []
        assert summary["inconclusive"] == []
        assert summary["total"] == sum(CONNECTED_COUNTS[:5])

    def test_guard(self):
        with pytest.raises(ValueError):
            verify_lambda1_characterizations(8)
