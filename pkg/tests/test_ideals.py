import random
from math import gcd

import pytest

from distideals.graphs import (atlas, complete, complete_bipartite, cycle,
                               distance_matrix, emit_graph6, induced_subgraph,
                               path)
from distideals.ideals import (distance_ideal_generators,
                               eval_points, ideal_triviality,
                               lambda_membership, phi_over_rationals,
                               phi_trivial_count, rational_ideal_triviality,
                               verdict_record)
from distideals.intlinalg import IntMatrix, snf
from distideals.poly import minors, generalized_distance_matrix


class TestGenerators:
    def test_k2_entries(self):
        gens = distance_ideal_generators(complete(2), 1)
        assert [p.to_str() for p in gens] == ["x0", "1", "1", "x1"]

    def test_k2_determinant(self):
        gens = distance_ideal_generators(complete(2), 2)
        assert [p.to_str() for p in gens] == ["x0x1 - 1"]

    def test_c7_contains_2_and_5(self):
        consts = {p.constant_value()
                  for p in distance_ideal_generators(cycle(7), 3) if p.is_constant()}
        assert {2, 5} <= consts

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            distance_ideal_generators(complete(2), 3)


class TestTriviality:
    def test_c7_constant_gcd(self):
        v = ideal_triviality(cycle(7), 3)
        assert v.decision == "trivial"
        assert v.certificate_kind == "ConstantGcdOne"
        vals = [c["value"] for c in v.certificate_data["constants"]]
        g = 0
        for x in vals:
            g = gcd(g, x)
        assert g == 1

    def test_k2_nontrivial(self):
        v = ideal_triviality(complete(2), 2)
        assert v.decision == "non-trivial"
        assert v.certificate_kind in ("EvaluationObstruction", "GroebnerProper")

    def test_p3_evaluation_obstruction(self):
        v = ideal_triviality(path(3), 3)
        assert v.decision == "non-trivial"
        assert v.certificate_kind == "EvaluationObstruction"
        assert v.certificate_data == {"assignment": "zero", "gcd": 4}

    def test_unit_minor_certificate(self):
        v = ideal_triviality(cycle(9), 3)
        assert v.decision == "trivial"
        assert v.certificate_kind == "UnitMinor"
        assert abs(v.certificate_data["value"]) == 1

    def test_obstruction_divides_all_generators(self):
        # certificate validity: the obstruction gcd divides every evaluated minor
        for g in (complete(2), path(3), complete(4)):
            for i in range(2, g.n + 1):
                v = ideal_triviality(g, i)
                if v.certificate_kind != "EvaluationObstruction":
                    continue
                a = v.certificate_data["assignment"]
                assignment = {f"x{k}": 0 for k in range(g.n)} if a == "zero" else \
                    {f"x{k}": a[k] for k in range(g.n)}
                val = v.certificate_data["gcd"]
                for p in distance_ideal_generators(g, i):
                    got = p.evaluate(assignment).constant_value()
                    assert got % val == 0 if val else got == 0

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            ideal_triviality(complete(2), 5)


class TestPhi:
    def test_examples(self):
        assert phi_trivial_count(atlas("C4").graph).phi_ideals == 1
        assert phi_trivial_count(atlas("bull").graph).phi_ideals == 3
        assert phi_trivial_count(path(4)).phi_ideals == 2

    def test_k1(self):
        res = phi_trivial_count(complete(1))
        assert res.phi_ideals == 0 and res.phi_snf == 0

    def test_prefix_property_small(self, corpus5):
        for g in corpus5:
            res = phi_trivial_count(g)
            trivial = {i for i in range(1, g.n + 1)
                       if ideal_triviality(g, i).decision == "trivial"}
            assert trivial == set(range(1, res.phi_ideals + 1)), emit_graph6(g)

    def test_phi_at_most_unit_count(self, corpus6):
        for g in corpus6:
            res = phi_trivial_count(g)
            assert res.status == "complete"
            assert res.phi_ideals <= res.phi_snf, emit_graph6(g)


class TestLambda:
    def test_examples(self):
        assert lambda_membership(atlas("C4").graph, 1) is True
        assert lambda_membership(atlas("bull").graph, 2) is False

    def test_trees(self):
        from distideals.scan import enumerate_trees
        for n in (4, 7, 10):
            for t in enumerate_trees(n):
                assert lambda_membership(t, 2) is True

    def test_bad_k(self):
        with pytest.raises(ValueError):
            lambda_membership(complete(2), 0)


class TestRationalMode:
    def test_c4_gains_an_ideal(self):
        assert phi_over_rationals(atlas("C4").graph) == 2

    def test_complete_graph(self):
        assert phi_over_rationals(complete(3)) == 1

    def test_star(self):
        assert phi_over_rationals(complete_bipartite(1, 3)) == 1

    def test_rational_at_least_integer(self, corpus5):
        for g in corpus5:
            res = phi_trivial_count(g)
            assert phi_over_rationals(g) >= res.phi_ideals, emit_graph6(g)

    def test_rational_triviality_vs_integer(self):
        # integer-trivial ideals stay trivial over the rationals
        g = cycle(7)
        assert rational_ideal_triviality(g, 3).decision == "trivial"


class TestEvaluationProposition:
    def test_gcd_of_evaluated_minors_is_factor_product(self):
        rnd = random.Random(20)
        graphs = [path(4), cycle(5), complete(4), atlas("bull").graph,
                  atlas("gem").graph, cycle(6), complete_bipartite(2, 3)]
        pairs = 0
        while pairs < 20:
            g = rnd.choice(graphs)
            d = [rnd.randint(-3, 3) for _ in range(g.n)]
            assignment = {f"x{k}": d[k] for k in range(g.n)}
            dm = distance_matrix(g)
            evaluated = IntMatrix([[dm[r, c] + (d[r] if r == c else 0)
                                    for c in range(g.n)] for r in range(g.n)])
            factors = snf(evaluated).factors
            m = generalized_distance_matrix(g)
            for i in range(1, g.n + 1):
                vals = [p.evaluate(assignment).constant_value() for p in minors(m, i)]
                got = 0
                for v in vals:
                    got = gcd(got, v)
                want = 0
                if i <= len(factors):
                    want = 1
                    for f in factors[:i]:
                        want *= f
                assert got == abs(want), (emit_graph6(g), d, i)
            pairs += 1


class TestMonotonicity:
    def test_diameter2_induced_subgraphs(self, corpus6):
        from distideals.graphs import diameter, is_connected
        from itertools import combinations
        rnd = random.Random(3)
        checked = 0
        for g in rnd.sample(corpus6, 40):
            if g.n < 4:
                continue
            phi_g = phi_trivial_count(g).phi_ideals
            for s in combinations(range(g.n), g.n - 1):
                h = induced_subgraph(g, s)
                if not is_connected(h) or diameter(h) > 2:
                    continue
                assert phi_trivial_count(h).phi_ideals <= phi_g, emit_graph6(g)
                checked += 1
        assert checked > 10


class TestSeededPoints:
    def test_deterministic(self):
        a = eval_points("Ch:2", 4, seed=1729)
        b = eval_points("Ch:2", 4, seed=1729)
        assert a == b
        assert all(-3 <= x <= 3 for pt in a for x in pt)
        assert len(a) == 8

    def test_seed_changes_points(self):
        assert eval_points("Ch:2", 4, seed=1) != eval_points("Ch:2", 4, seed=2)


class TestVerdictRecord:
    def test_schema(self):
        g = cycle(7)
        v = ideal_triviality(g, 3)
        rec = verdict_record(g, 3, v)
        assert set(rec) == {"graph", "i", "decision", "certificate_kind",
                            "certificate_data", "elapsed_ms"}
        assert rec["graph"] == emit_graph6(g)
        import json
        json.dumps(rec)
