"""Acceptance gate: every criterion runs at its stated tolerance and prints
one PASS/FAIL line.  The corpus analysis (criteria 3 and 8) is computed once
per session and shared.

Three displayed values in the source material disagree with their own
displayed matrices (see ``distideals.certmatrices.ERRATA``); the affected
sub-checks of criterion 6 assert the frozen recomputed values and the
substance each display was used for, and say so in their output.
"""

import random
import time
from concurrent.futures import ProcessPoolExecutor
from math import gcd

import pytest

from distideals.certmatrices import ERRATA, witness_matrix
from distideals.graphs import (atlas, contains_induced,
                               contains_induced_bruteforce, cycle,
                               distance_matrix, emit_graph6, parse_graph6)
from distideals.harness import (verify_cotwinhouse, verify_diameter2_members,
                                verify_g615, verify_g67, verify_odd_holes)
from distideals.ideals import ideal_triviality, lambda_membership
from distideals.intlinalg import IntMatrix, delta, snf
from distideals.poly import (Ring, SymMatrix, determinant,
                             determinant_bareiss, generalized_distance_matrix,
                             minors, submatrix_det)
from distideals.scan import (enumerate_trees, structural_hits,
                             verify_lambda1_characterizations)

SEED = 1729


def _announce(num, ok, detail):
    flag = "PASS" if ok else "FAIL"
    print(f"\n[{flag}] acceptance criterion {num}: {detail}")
    assert ok, f"criterion {num} failed: {detail}"


# -- shared corpus analysis ---------------------------------------------------


def _analyze_one(g6):
    g = parse_graph6(g6)
    hits, hole = structural_hits(g)
    factors = snf(distance_matrix(g)).factors
    phi_snf = sum(1 for f in factors if f == 1)
    trivial = []
    inconclusive = []
    for i in range(1, g.n + 1):
        v = ideal_triviality(g, i)
        if v.decision == "trivial":
            trivial.append(i)
        elif v.decision == "inconclusive":
            inconclusive.append(i)
    return {
        "graph6": g6,
        "n": g.n,
        "hits": [nm for nm, _ in hits],
        "hole": hole is not None,
        "phi_snf": phi_snf,
        "trivial": trivial,
        "inconclusive": inconclusive,
    }


@pytest.fixture(scope="session")
def corpus_analysis(corpus7):
    """Per-graph structural hits plus triviality of every ideal index,
    over the full exhaustive corpus (n <= 7)."""
    t0 = time.monotonic()
    keys = [emit_graph6(g) for g in corpus7]
    small = [k for k in keys if parse_graph6(k).n <= 6]
    t_small0 = time.monotonic()
    with ProcessPoolExecutor(max_workers=2) as pool:
        small_records = list(pool.map(_analyze_one, small, chunksize=8))
    t_small = time.monotonic() - t_small0
    big = [k for k in keys if k not in set(small)]
    with ProcessPoolExecutor(max_workers=2) as pool:
        big_records = list(pool.map(_analyze_one, big, chunksize=8))
    records = {r["graph6"]: r for r in small_records + big_records}
    elapsed = time.monotonic() - t0
    print(f"\n[corpus analysis] {len(records)} graphs in {elapsed:.0f}s "
          f"(n<=6 portion {t_small:.0f}s)")
    records["_timing"] = {"total_s": elapsed, "small_s": t_small}
    return records


# -- criteria -----------------------------------------------------------------


def test_criterion_1_atlas_phi_values():
    t0 = time.monotonic()
    rep = verify_diameter2_members()
    elapsed = time.monotonic() - t0
    ok = rep.passed and elapsed < 180
    _announce(1, ok, f"16 atlas graphs have exactly 3 trivial ideals and all "
                     f"proper connected induced subgraphs stay at <= 2 "
                     f"({elapsed:.0f}s, limit 180s)")


def test_criterion_2_lambda1_characterizations():
    t0 = time.monotonic()
    summary = verify_lambda1_characterizations(6)
    elapsed = time.monotonic() - t0
    ok = (summary["total"] == 143
          and summary["exceptions_integer"] == []
          and summary["exceptions_rational"] == []
          and summary["inconclusive"] == []
          and elapsed < 300)
    _announce(2, ok, f"over all 143 connected graphs with n <= 6: at most one "
                     f"trivial ideal iff {{P4, paw, diamond}}-free, rational "
                     f"mode iff additionally C4-free; zero inconclusive "
                     f"({elapsed:.0f}s, limit 300s)")


def test_criterion_3_forbidden_contrapositive(corpus_analysis):
    timing = corpus_analysis["_timing"]
    violations = []
    inconclusive7 = []
    inconclusive6 = []
    flagged = 0
    total7 = 0
    for g6, rec in corpus_analysis.items():
        if g6 == "_timing":
            continue
        if rec["n"] == 7:
            total7 += 1
        if not rec["hits"] and not rec["hole"]:
            continue
        flagged += 1
        if 3 in rec["inconclusive"]:
            (inconclusive6 if rec["n"] <= 6 else inconclusive7).append(g6)
        elif 3 not in rec["trivial"]:
            violations.append(g6)
    for g6 in inconclusive7:
        print(f"   inconclusive at n=7: {g6}")
    ok = (not violations
          and not inconclusive6
          and len(inconclusive7) < 0.02 * total7
          and timing["total_s"] < 1800
          and timing["small_s"] < 600)
    _announce(3, ok, f"{flagged} flagged graphs in the 996-graph corpus all "
                     f"have a trivial third ideal; {len(violations)} violations, "
                     f"{len(inconclusive6)}/{len(inconclusive7)} inconclusive at "
                     f"n<=6/n=7 ({timing['total_s']:.0f}s total, n<=6 portion "
                     f"{timing['small_s']:.0f}s)")


@pytest.fixture(scope="session")
def basis_reports():
    return {r.lemma_id: r for r in (verify_g67(), verify_cotwinhouse(), verify_g615())}


def test_criterion_4_groebner_fidelity(basis_reports):
    reports = basis_reports
    wanted = {
        "G_{6,7}": "<minors_3(M)> equals <I union J>",
        "co-twin-house": "<minors_3(M)> equals <I union J>",
        "G_{6,15}": "<minors_3(M)> equals <I union J>",
    }
    ok = True
    for lemma, desc in wanted.items():
        checks = [c for c in reports[lemma].checks if c.description == desc]
        ok = ok and checks and all(c.passed for c in checks)
    listed = [c for c in reports["co-twin-house"].checks
              if c.description == "<minors_3(aug-332)> equals the listed 12-element ideal"]
    ok = ok and listed and all(c.passed for c in listed)
    ok = ok and all(r.passed for r in reports.values())
    _announce(4, ok, "minor ideals equal the quoted bases for G_{6,7}, "
                     "co-twin-house, G_{6,15}, and the augmented co-twin-house "
                     "ideal equals the quoted 12-element list (exact)")


def test_criterion_5_exceptional_vectors(basis_reports):
    g67 = basis_reports["G_{6,7}"]
    cth = basis_reports["co-twin-house"]
    g615 = basis_reports["G_{6,15}"]
    def exception_check(rep):
        return [c for c in rep.checks if c.description.startswith("exceptional vectors")]
    ok = True
    for rep, want in ((g67, "[(2, 2, 2, 2, 2), (2, 2, 3, 2, 2), (2, 2, 3, 3, 3), (3, 3, 3, 3, 3)]"),
                      (cth, "[(3, 3, 2), (3, 3, 3)]"),
                      (g615, "[]")):
        checks = exception_check(rep)
        ok = ok and checks and all(c.passed and c.expected == want for c in checks)
    _announce(5, ok, "gcd scans yield exactly the quoted exceptional vectors: "
                     "four for G_{6,7}, two for co-twin-house, none for G_{6,15}")


def test_criterion_6_displayed_minors():
    checks = []

    def chk(label, expected, computed, note=""):
        passed = str(expected) == str(computed)
        checks.append((label, passed, note))
        assert passed, (label, expected, computed)

    quoted = [
        ("G_{6,5}", (1, 2, 5), (0, 3, 4), "-y2 + 1"),
        ("G_{6,5}", (1, 2, 4), (0, 3, 5), "-y2 + 4"),
        ("5-pan", (2, 3, 4), (1, 2, 5), "-x2 + 5"),
        ("5-pan", (2, 4, 5), (1, 2, 3), "3x2 - 4"),
        ("5-pan", (0, 1, 2), (3, 4, 5), "-5"),
        ("G_{6,9}", (0, 4, 5), (1, 2, 3), "-y1 + 4"),
        ("G_{6,9}", (1, 4, 5), (0, 3, 5), "-2x5 + 1"),
        ("G_{6,12}", (0, 1, 2), (3, 4, 5), "-y0 + 1"),
        ("C7", (4, 5, 6), (0, 1, 2), "2y3y4 - y3 - 2y4 - 2"),
    ]
    for name, rows, cols, want in quoted:
        chk(f"{name}{rows}x{cols}", want,
            submatrix_det(witness_matrix(name), rows, cols).to_str())

    gm7 = generalized_distance_matrix(cycle(7))
    chk("C7 constant minor {0,1,2}x{4,5,6}", "2",
        submatrix_det(gm7, (0, 1, 2), (4, 5, 6)).to_str())
    chk("C7 constant minor {1,2,4}x{3,5,6}", "5",
        submatrix_det(gm7, (1, 2, 4), (3, 5, 6)).to_str())
    for n in range(4, 11):
        gm = generalized_distance_matrix(cycle(2 * n + 1))
        chk(f"band det of C_{2*n+1}", "-1",
            submatrix_det(gm, (0, 1, 2), (n - 1, n, n + 1)).to_str())

    # erratum 1: the published 4 - y0 is a real minor, at corrected index sets
    m69 = witness_matrix("G_{6,9}")
    chk("G_{6,9} published indices ({1,4,5},{1,3,4})",
        ERRATA["G_{6,9}"]["computed_at_published"],
        submatrix_det(m69, (1, 4, 5), (1, 3, 4)).to_str(),
        note="erratum: published value 4 - y0 lives at ({1,3,5},{0,2,4})")
    chk("G_{6,9} corrected indices ({1,3,5},{0,2,4})", "-y0 + 4",
        submatrix_det(m69, (1, 3, 5), (0, 2, 4)).to_str())

    # erratum 2: the published 3 has the opposite sign; same ideal
    m612 = witness_matrix("G_{6,12}")
    chk("G_{6,12} published indices ({0,3,4},{1,2,5})", "-3",
        submatrix_det(m612, (0, 3, 4), (1, 2, 5)).to_str(),
        note="erratum: published as +3; the generated ideal <3> is identical")

    # erratum 3: no minor equals the published 3 - 2y4; the case split the
    # display served is re-established from the full substituted minor ideal
    mC7 = witness_matrix("C7")
    chk("C7 published indices ({3,4,5},{0,1,2})", "-2y4 - 1",
        submatrix_det(mC7, (3, 4, 5), (0, 1, 2)).to_str(),
        note="erratum: published as 3 - 2y4, which no 3x3 minor equals")
    odd = verify_odd_holes(n_max=4)
    absent = [c for c in odd.checks
              if c.description.startswith("index sets whose minor equals")]
    assert absent and absent[0].passed
    subbed = [c for c in odd.checks
              if c.description.startswith("substituted minors trivial")]
    assert len(subbed) == 4 and all(c.passed for c in subbed)
    checks.append(("C7 case split re-established from the substituted minor ideal",
                   True, "derived-golden"))

    for label, passed, note in checks:
        if note:
            print(f"   {label}: {'ok' if passed else 'FAIL'} ({note})")
    _announce(6, all(p for _, p, _ in checks),
              f"all {len(checks)} displayed-minor checks exact; three source "
              f"errata pinned to recomputed values with their substance verified")


def test_criterion_7_tree_facts():
    t0 = time.monotonic()
    count = 0
    for n in range(3, 11):
        for t in enumerate_trees(n):
            factors = snf(distance_matrix(t)).factors
            assert sum(1 for f in factors if f == 1) == 2, emit_graph6(t)
            if n >= 4:
                assert factors[2] == 2, emit_graph6(t)
            assert lambda_membership(t, 2) is True, emit_graph6(t)
            count += 1
    elapsed = time.monotonic() - t0
    ok = count == 199 and elapsed < 120
    _announce(7, ok, f"all {count} trees on 3..10 vertices: exactly two unit "
                     f"invariant factors, third factor 2 for n >= 4, and "
                     f"membership at k = 2 ({elapsed:.0f}s, limit 120s)")


def test_criterion_8_structural_identities(corpus_analysis):
    bad_phi = []
    bad_prefix = []
    for g6, rec in corpus_analysis.items():
        if g6 == "_timing":
            continue
        if rec["inconclusive"]:
            bad_prefix.append(g6)
            continue
        phi = 0
        while phi + 1 in set(rec["trivial"]):
            phi += 1
        if phi > rec["phi_snf"]:
            bad_phi.append(g6)
        if set(rec["trivial"]) != set(range(1, phi + 1)):
            bad_prefix.append(g6)

    rnd = random.Random(SEED)
    graphs = [g6 for g6 in corpus_analysis if g6 != "_timing"
              and 4 <= corpus_analysis[g6]["n"] <= 7]
    eval_ok = True
    for g6 in rnd.sample(graphs, 20):
        g = parse_graph6(g6)
        d = [rnd.randint(-3, 3) for _ in range(g.n)]
        assignment = {f"x{k}": d[k] for k in range(g.n)}
        dm = distance_matrix(g)
        evaluated = IntMatrix([[dm[r, c] + (d[r] if r == c else 0)
                                for c in range(g.n)] for r in range(g.n)])
        factors = snf(evaluated).factors
        m = generalized_distance_matrix(g)
        for i in range(1, g.n + 1):
            got = 0
            for p in minors(m, i):
                got = gcd(got, p.evaluate(assignment).constant_value())
            want = 0
            if i <= len(factors):
                want = 1
                for f in factors[:i]:
                    want *= f
            if got != abs(want):
                eval_ok = False
    ok = not bad_phi and not bad_prefix and eval_ok
    _announce(8, ok, f"trivial-ideal count bounded by the unit-factor count and "
                     f"prefix property on all 996 corpus graphs "
                     f"({len(bad_phi)}/{len(bad_prefix)} violations); "
                     f"evaluated-minor gcds match invariant-factor products on "
                     f"20 seeded (graph, assignment) pairs")


def test_criterion_9_engine_crosschecks(corpus7):
    rnd = random.Random(SEED)
    # SNF vs the independent gcd-of-minors oracle
    for _ in range(100):
        r = rnd.randint(1, 6)
        c = rnd.randint(1, 6)
        a = IntMatrix([[rnd.randint(-9, 9) for _ in range(c)] for _ in range(r)])
        factors = snf(a).factors
        prev = 1
        for i, f in enumerate(factors, start=1):
            cur = delta(a, i)
            assert cur == prev * f, a
            prev = cur
        if len(factors) < min(r, c):
            assert delta(a, len(factors) + 1) == 0

    # symbolic determinant: two independent algorithms
    ring = Ring(("v0", "v1", "v2", "v3"))
    for _ in range(200):
        n = rnd.randint(1, 5)
        ents = []
        for _ in range(n):
            row = []
            for _ in range(n):
                p = ring.const(rnd.randint(-4, 4))
                for v in ring.variables:
                    if rnd.random() < 0.3:
                        p = p + rnd.randint(-3, 3) * ring.var(v)
                row.append(p)
            ents.append(row)
        m = SymMatrix(ring, ents)
        assert determinant(m) == determinant_bareiss(m)

    # induced-subgraph scanner vs brute force
    sample = rnd.sample(corpus7, 100)
    pats = [(nm, atlas(nm).graph) for nm in
            ("P4", "paw", "diamond", "C4", "bull", "house", "gem", "5-pan")]
    for g in sample:
        for nm, pat in pats:
            if pat.n > g.n:
                continue
            fast = contains_induced(g, pat)
            slow = contains_induced_bruteforce(g, pat)
            assert (fast is None) == (slow is None), (emit_graph6(g), nm)
    _announce(9, True, "SNF vs gcd-of-minors on 100 random matrices, dual "
                       "determinant algorithms on 200 random symbolic matrices, "
                       "scanner vs brute force on 100 corpus graphs (exact)")
