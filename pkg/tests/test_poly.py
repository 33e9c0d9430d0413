import pytest
from hypothesis import given, settings, strategies as st

from distideals.graphs import Graph, DisconnectedGraphError, complete, cycle
from distideals.poly import (InexactDivisionError, Ring, SymMatrix,
                             determinant, determinant_bareiss, divexact,
                             generalized_distance_matrix, iter_minor_index_sets,
                             minors, submatrix_det)

R2 = Ring(("x0", "x1"))


def rand_poly(ring, draw, max_terms=4, max_deg=1, coeff=st.integers(-5, 5)):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = tuple(draw(st.integers(0, max_deg)) for _ in ring.variables)
        c = draw(coeff)
        if c:
            terms[exps] = terms.get(exps, 0) + c
    return ring.zero() + sum((ring.monomial(m, c) for m, c in terms.items()), ring.zero())


class TestArithmetic:
    def test_difference_of_squares(self):
        x0 = R2.var("x0")
        assert (x0 + 1) * (x0 - 1) == R2.parse("x0^2 - 1")

    def test_additive_inverse(self):
        p = R2.parse("3x0x1 - 2x0 + 7")
        assert (p + (-p)).is_zero()

    def test_constant_absorption(self):
        assert R2.parse("x0x1 - 1") + 1 == R2.var("x0") * R2.var("x1")

    def test_context_mismatch(self):
        other = Ring(("y0",))
        with pytest.raises(ValueError):
            R2.var("x0") + other.var("y0")

    @settings(max_examples=100, deadline=None)
    @given(st.data())
    def test_ring_axioms(self, data):
        ring = Ring(("a", "b", "c"))
        p = rand_poly(ring, data.draw)
        q = rand_poly(ring, data.draw)
        r = rand_poly(ring, data.draw)
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) * r == p * r + q * r
        assert (p * q) * r == p * (q * r)


class TestParseDisplay:
    def test_examples(self):
        ring = Ring(("x0", "x1", "y0", "y4"))
        assert ring.parse("2y4 - 3").to_str() == "2y4 - 3"
        assert ring.parse("-3y4^2 + x0x1").to_str() == "x0x1 - 3y4^2"
        assert ring.parse("x0 * x1 - 1") == ring.parse("x0x1 - 1")

    def test_letter_variables(self):
        ring = Ring(("x_u", "c", "d"))
        p = ring.parse("x_u + c + 2d - 5")
        assert p.evaluate({"x_u": 1, "c": 1, "d": 1}).constant_value() == -1

    def test_unknown_variable(self):
        with pytest.raises(ValueError):
            R2.parse("z9 + 1")

    @settings(max_examples=80, deadline=None)
    @given(st.data())
    def test_roundtrip(self, data):
        ring = Ring(("x0", "x1", "y0"))
        p = rand_poly(ring, data.draw, max_deg=2)
        assert ring.parse(p.to_str()) == p


class TestEvaluate:
    def test_quoted_cases(self):
        ring = Ring(("y0", "y1"))
        p = ring.parse("y0y1 - 2y0 - 2y1 + 3")
        assert p.evaluate({"y0": 2, "y1": 2}).constant_value() == -1
        assert p.evaluate({"y0": 3, "y1": 3}).constant_value() == 0

    def test_partial(self):
        p = R2.parse("x0x1 - 1")
        assert p.evaluate({"x0": 0}).constant_value() == -1
        assert p.evaluate({"x0": 2}) == R2.parse("2x1 - 1")


class TestGeneralizedDistanceMatrix:
    def test_k2(self):
        m = generalized_distance_matrix(complete(2))
        assert m[0, 0].to_str() == "x0"
        assert m[1, 1].to_str() == "x1"
        assert m[0, 1] == 1

    def test_zero_assignment_recovers_distances(self):
        from distideals.graphs import distance_matrix
        g = cycle(5)
        m = generalized_distance_matrix(g)
        zeroed = m.evaluate({v: 0 for v in m.ring.variables})
        assert zeroed.to_int_matrix() == distance_matrix(g)

    def test_c7_entry(self):
        m = generalized_distance_matrix(cycle(7))
        assert m[0, 3] == 3

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            generalized_distance_matrix(Graph.from_edges(3, [(0, 1)]))


class TestDeterminant:
    def test_k2(self):
        m = generalized_distance_matrix(complete(2))
        assert determinant(m) == m.ring.parse("x0x1 - 1")

    def test_band_matrix(self):
        for n in range(4, 11):
            ring = Ring(("t",))
            rows = [[n - 1, n, n], [n - 2, n - 1, n], [n - 3, n - 2, n - 1]]
            m = SymMatrix(ring, [[ring.const(v) for v in row] for row in rows])
            assert determinant(m).constant_value() == -1
            assert determinant_bareiss(m).constant_value() == -1

    def test_c7_constant_minors(self):
        m = generalized_distance_matrix(cycle(7))
        assert submatrix_det(m, (0, 1, 2), (4, 5, 6)).constant_value() == 2
        assert submatrix_det(m, (1, 2, 4), (3, 5, 6)).constant_value() == 5

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_two_algorithms_agree(self, data):
        ring = Ring(("v0", "v1", "v2"))
        n = data.draw(st.integers(1, 4))
        ents = [[rand_poly(ring, data.draw, max_terms=3, max_deg=1)
                 for _ in range(n)] for _ in range(n)]
        m = SymMatrix(ring, ents)
        assert determinant(m) == determinant_bareiss(m)

    def test_laplace_row0_on_certificates(self):
        from distideals.certmatrices import matrix_names, witness_matrix
        for name in matrix_names():
            m = witness_matrix(name)
            det = determinant(m)
            ring = m.ring
            acc = ring.zero()
            cols = tuple(range(m.n))
            for k in range(m.n):
                cof = submatrix_det(m, tuple(range(1, m.n)), cols[:k] + cols[k + 1:])
                term = m[0, k] * cof
                acc = acc + term if k % 2 == 0 else acc - term
            assert acc == det, name

    def test_evaluate_commutes_with_det(self):
        import random
        from distideals.certmatrices import matrix_names, witness_matrix
        rnd = random.Random(5)
        for name in matrix_names():
            m = witness_matrix(name)
            det = determinant(m)
            for _ in range(20):
                a = {v: rnd.randint(-3, 3) for v in m.ring.variables}
                assert det.evaluate(a).constant_value() == \
                    determinant(m.evaluate(a)).constant_value(), name


class TestMinors:
    def test_count(self):
        m = generalized_distance_matrix(cycle(6))
        assert len(minors(m, 3)) == 400

    def test_enumeration_order(self):
        idx = list(iter_minor_index_sets(4, 2))
        assert idx[0] == ((0, 1), (0, 1))
        assert idx[1] == ((0, 1), (0, 2))
        assert idx[-1] == ((2, 3), (2, 3))
        assert len(idx) == 36

    def test_out_of_range(self):
        m = generalized_distance_matrix(cycle(5))
        with pytest.raises(ValueError):
            minors(m, 6)

    def test_multilinearity(self, corpus5):
        for g in corpus5[-8:]:
            m = generalized_distance_matrix(g)
            for i in range(1, g.n + 1):
                for p in minors(m, i):
                    for v in m.ring.variables:
                        assert p.degree_in(v) <= 1


class TestDivexact:
    def test_exact(self):
        p = R2.parse("x0^2x1 - x1")
        q = R2.parse("x0 - 1")
        assert divexact(p, q) * q == p

    def test_inexact_raises(self):
        with pytest.raises(InexactDivisionError):
            divexact(R2.parse("x0 + 1"), R2.parse("2x0"))

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            divexact(R2.parse("x0"), R2.zero())
