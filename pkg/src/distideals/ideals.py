"""Distance ideals: construction, layered triviality certificates, the count
of trivial ideals, and membership in the at-most-k-trivial-ideals families.

Triviality of the i-th ideal is decided in layers, cheapest first:

1. integer minors on disjoint row/column sets (always constant): a unit
   minor or a gcd-1 set of constants certifies triviality;
2. evaluation at X=0 and at seeded pseudorandom small integer points: any
   evaluated-ideal generator gcd different from 1 certifies non-triviality;
3. a full symbolic sweep catching accidentally-constant minors;
4. a Groebner decision: over ZZ the exact pseudo/modular router of the
   groebner module, over QQ a streaming reduced-basis completion stopping
   as soon as a unit constant appears.

Budget exhaustion is an explicit "inconclusive" verdict, never a guess.
"""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .graphs import Graph, emit_graph6
from .intlinalg import det_int, snf
from .poly import generalized_distance_matrix, iter_minor_index_sets, submatrix_det
from .groebner import (BudgetExceededError, DEFAULT_BUDGET, _Completion,
                       grevlex_order, integer_ideal_contains_one)

DEFAULT_SEED = 1729
EVAL_POINT_COUNT = 8
STREAM_BATCH = 32


class InconclusiveError(Exception):
    """A triviality decision ran out of budget; carries the verdict."""

    def __init__(self, verdict):
        super().__init__(f"inconclusive: {verdict.certificate_kind}")
        self.verdict = verdict


@dataclass(frozen=True)
class TrivialityVerdict:
    decision: str             # "trivial" | "non-trivial" | "inconclusive"
    certificate_kind: str     # UnitMinor | ConstantGcdOne | EvaluationObstruction
    #                           | GroebnerContainsOne | GroebnerProper | BudgetExceeded
    certificate_data: dict
    elapsed_ms: int = 0

    @property
    def trivial(self):
        return self.decision == "trivial"


@dataclass(frozen=True)
class PhiResult:
    phi_ideals: int | None    # None when inconclusive
    phi_snf: int
    verdicts: dict            # i -> TrivialityVerdict
    status: str               # "complete" | "inconclusive"


def eval_points(tag: str, nvars: int, seed: int = DEFAULT_SEED,
                count: int = EVAL_POINT_COUNT):
    """Deterministic pseudorandom assignments with entries in {-3..3}."""
    pts = []
    for k in range(count):
        h = hashlib.blake2b(f"{seed}:{tag}:{k}".encode(), digest_size=max(nvars, 1)).digest()
        pts.append(tuple(h[j] % 7 - 3 for j in range(nvars)))
    return pts


def distance_ideal_generators(g: Graph, i: int):
    """All i x i minors of the generalized distance matrix, enumerated
    lexicographically by (row subset, column subset)."""
    if not 1 <= i <= g.n:
        raise ValueError(f"ideal index {i} out of range for n={g.n}")
    m = generalized_distance_matrix(g)
    return [submatrix_det(m, r, c) for r, c in iter_minor_index_sets(g.n, i)]


def _verdict(decision, kind, data, t0):
    return TrivialityVerdict(decision, kind, data,
                             elapsed_ms=int((time.monotonic() - t0) * 1000))


def _disjoint_scan(dmat, n, i, t0):
    """Layer 1: integer determinants on disjoint row/column subsets.

    Returns (verdict_or_None, gcd_so_far, constants_used)."""
    g = 0
    used = []
    for rset in combinations(range(n), i):
        rem = [v for v in range(n) if v not in rset]
        if len(rem) < i:
            continue
        rows = [dmat.entries[r] for r in rset]
        for cset in combinations(rem, i):
            d = det_int([[row[c] for c in cset] for row in rows])
            if d == 0:
                continue
            if abs(d) == 1:
                v = _verdict("trivial", "UnitMinor",
                             {"rows": rset, "cols": cset, "value": d}, t0)
                return v, 1, used
            used.append({"rows": rset, "cols": cset, "value": d})
            g = gcd(g, d)
            if g == 1:
                v = _verdict("trivial", "ConstantGcdOne",
                             {"constants": used}, t0)
                return v, 1, used
    return None, g, used


def _snf_products(int_matrix):
    """Cumulative invariant-factor products: prods[i] = f_1 * ... * f_i,
    zero beyond the rank."""
    factors = snf(int_matrix).factors
    n = min(int_matrix.rows, int_matrix.cols)
    prods = []
    acc = 1
    for k in range(n):
        if k < len(factors):
            acc *= factors[k]
            prods.append(acc)
        else:
            prods.append(0)
    return prods


def _evaluation_layer(g, dmat, i, seed, rational=False):
    """Layer 2: X=0 plus seeded points.  Over ZZ an evaluated-ideal gcd
    different from 1 refutes triviality; over QQ only gcd 0 (rank drop)."""
    from .intlinalg import IntMatrix

    tag = f"{emit_graph6(g)}:{i}"
    assignments = [None] + list(eval_points(tag, g.n, seed))
    for a in assignments:
        if a is None:
            entries = dmat.entries
        else:
            entries = [tuple(dmat.entries[r][c] + (a[r] if r == c else 0)
                             for c in range(g.n)) for r in range(g.n)]
        prods = _snf_products(IntMatrix(entries))
        val = abs(prods[i - 1])
        bad = (val == 0) if rational else (val != 1)
        if bad:
            return {"assignment": "zero" if a is None else list(a), "gcd": val}
    return None


def _symbolic_sweep(m, i, g0, used, t0, rational=False):
    """Layer 3: full sweep; returns (verdict_or_None, nonzero_minors)."""
    g = g0
    used = list(used)
    gens = []
    for (rset, cset), p in _iter_all_minors(m, i):
        if p.is_zero():
            continue
        gens.append(p)
        if p.is_constant():
            c = p.constant_value()
            if abs(c) == 1 or (rational and c != 0):
                return _verdict("trivial", "UnitMinor",
                                {"rows": rset, "cols": cset, "value": c}, t0), gens
            used.append({"rows": rset, "cols": cset, "value": c})
            g = gcd(g, c)
            if g == 1 and not rational:
                return _verdict("trivial", "ConstantGcdOne",
                                {"constants": used}, t0), gens
    return None, gens


def _iter_all_minors(m, i):
    for rset, cset in iter_minor_index_sets(m.n, i):
        yield (rset, cset), submatrix_det(m, rset, cset)


def _groebner_layer(gens, ring, budget, t0, rational=False):
    """Layer 4: Groebner decision.

    Over ZZ this uses the exact pseudo/modular router (an integer
    combination certifies a constant member, then prime-by-prime field
    checks settle unit membership); over QQ a streaming reduced-basis
    completion with an early unit stop."""
    order = grevlex_order(ring)
    if not rational:
        try:
            ok, info = integer_ideal_contains_one(gens, order, budget)
        except BudgetExceededError:
            return _verdict("inconclusive", "BudgetExceeded", {"budget": budget}, t0)
        if ok:
            return _verdict("trivial", "GroebnerContainsOne", info, t0)
        return _verdict("non-trivial", "GroebnerProper", info, t0)
    comp = _Completion(ring, order, budget, rational=True)
    try:
        for k in range(0, len(gens), STREAM_BATCH):
            for p in gens[k:k + STREAM_BATCH]:
                comp.add_generator(p.terms)
                if comp.unit:
                    break
            comp.run(stop_on_unit=True)
            if comp.unit:
                return _verdict("trivial", "GroebnerContainsOne",
                                {"generators_used": min(k + STREAM_BATCH, len(gens))}, t0)
        comp.run(stop_on_unit=True)
        if comp.unit:
            return _verdict("trivial", "GroebnerContainsOne",
                            {"generators_used": len(gens)}, t0)
        basis = comp.interreduced_polys()
        summary = {"basis_size": len(basis),
                   "leading": [p.to_str() for p in basis[:6]]}
        return _verdict("non-trivial", "GroebnerProper", summary, t0)
    except BudgetExceededError:
        return _verdict("inconclusive", "BudgetExceeded",
                        {"budget": budget, "steps": comp.steps}, t0)


def ideal_triviality(g: Graph, i: int, budget: int = DEFAULT_BUDGET,
                     seed: int = DEFAULT_SEED) -> TrivialityVerdict:
    """Layered triviality decision for the i-th distance ideal over ZZ."""
    if not 1 <= i <= g.n:
        raise ValueError(f"ideal index {i} out of range for n={g.n}")
    t0 = time.monotonic()
    from .graphs import distance_matrix
    dmat = distance_matrix(g)

    verdict, g0, used = _disjoint_scan(dmat, g.n, i, t0)
    if verdict:
        return verdict
    obstruction = _evaluation_layer(g, dmat, i, seed)
    if obstruction:
        return _verdict("non-trivial", "EvaluationObstruction", obstruction, t0)
    m = generalized_distance_matrix(g)
    verdict, gens = _symbolic_sweep(m, i, g0, used, t0)
    if verdict:
        return verdict
    return _groebner_layer(gens, m.ring, budget, t0)


def rational_ideal_triviality(g: Graph, i: int, budget: int = DEFAULT_BUDGET,
                              seed: int = DEFAULT_SEED) -> TrivialityVerdict:
    """Triviality of the i-th distance ideal with rational coefficients
    (realizing the real-coefficient statements for rational generators)."""
    if not 1 <= i <= g.n:
        raise ValueError(f"ideal index {i} out of range for n={g.n}")
    t0 = time.monotonic()
    from .graphs import distance_matrix
    dmat = distance_matrix(g)

    # any nonzero constant minor is a unit over QQ
    for rset in combinations(range(g.n), i):
        rem = [v for v in range(g.n) if v not in rset]
        if len(rem) < i:
            continue
        rows = [dmat.entries[r] for r in rset]
        for cset in combinations(rem, i):
            d = det_int([[row[c] for c in cset] for row in rows])
            if d != 0:
                return _verdict("trivial", "UnitMinor",
                                {"rows": rset, "cols": cset, "value": d}, t0)
    obstruction = _evaluation_layer(g, dmat, i, seed, rational=True)
    if obstruction:
        return _verdict("non-trivial", "EvaluationObstruction", obstruction, t0)
    m = generalized_distance_matrix(g)
    verdict, gens = _symbolic_sweep(m, i, 0, [], t0, rational=True)
    if verdict:
        return verdict
    return _groebner_layer(gens, m.ring, budget, t0, rational=True)


def phi_trivial_count(g: Graph, budget: int = DEFAULT_BUDGET,
                      seed: int = DEFAULT_SEED) -> PhiResult:
    """Largest i with I_1..I_i all trivial, ascending with early stop and
    never testing beyond phi(G) + 1."""
    from .graphs import distance_matrix

    phi_snf = sum(1 for f in snf(distance_matrix(g)).factors if f == 1)
    verdicts = {}
    phi = 0
    status = "complete"
    for i in range(1, min(g.n, phi_snf + 1) + 1):
        v = ideal_triviality(g, i, budget, seed)
        verdicts[i] = v
        if v.decision == "trivial":
            phi = i
            continue
        if v.decision == "inconclusive":
            status = "inconclusive"
        break
    if status == "inconclusive":
        return PhiResult(None, phi_snf, verdicts, status)
    if phi > phi_snf:
        raise RuntimeError("engine inconsistency: trivial ideal beyond the unit-factor count")
    return PhiResult(phi, phi_snf, verdicts, status)


def lambda_membership(g: Graph, k: int, budget: int = DEFAULT_BUDGET,
                      seed: int = DEFAULT_SEED) -> bool:
    """Whether g has at most k trivial distance ideals over ZZ."""
    if k < 1:
        raise ValueError("k must be positive")
    res = phi_trivial_count(g, budget, seed)
    if res.status != "complete":
        raise InconclusiveError(res.verdicts[max(res.verdicts)])
    return res.phi_ideals <= k


def phi_over_rationals(g: Graph, budget: int = DEFAULT_BUDGET,
                       seed: int = DEFAULT_SEED) -> int:
    """Largest prefix of rational-coefficient trivial distance ideals."""
    phi = 0
    for i in range(1, g.n + 1):
        v = rational_ideal_triviality(g, i, budget, seed)
        if v.decision == "trivial":
            phi = i
            continue
        if v.decision == "inconclusive":
            raise InconclusiveError(v)
        break
    return phi


def verdict_record(g: Graph, i: int, verdict: TrivialityVerdict) -> dict:
    """JSON-ready verdict record."""
    return {
        "graph": emit_graph6(g),
        "i": i,
        "decision": verdict.decision,
        "certificate_kind": verdict.certificate_kind,
        "certificate_data": _jsonable(verdict.certificate_data),
        "elapsed_ms": verdict.elapsed_ms,
    }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    return x
