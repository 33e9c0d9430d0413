"""Corpus enumeration and forbidden-family scanning.

Connected graphs are enumerated one representative per isomorphism class by
vertex augmentation with canonical-form rejection (desk scale, n <= 8).  A
second, independent generator -- all edge bitmasks, deduplicated by a plain
minimum-over-permutations canonical form -- is retained for n <= 6 as the
oracle.  Trees are enumerated separately by leaf attachment with a rooted
canonical encoding, which reaches n = 10 comfortably.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product

from .graphs import (FORBIDDEN_FAMILY, Graph, adjacency, atlas, emit_graph6,
                     find_odd_hole, contains_induced, is_connected)
from .ideals import (DEFAULT_BUDGET, DEFAULT_SEED, ideal_triviality,
                     phi_trivial_count, rational_ideal_triviality)

MAX_EXHAUSTIVE_N = 8


# -- canonical form ---------------------------------------------------------


def _refine_colors(g: Graph):
    adj = adjacency(g)
    colors = [0] * g.n
    while True:
        sigs = sorted(set((colors[v], tuple(sorted(colors[u] for u in adj[v])))
                          for v in range(g.n)))
        lookup = {s: k for k, s in enumerate(sigs)}
        new = [lookup[(colors[v], tuple(sorted(colors[u] for u in adj[v])))]
               for v in range(g.n)]
        if new == colors:
            return colors
        colors = new


def canonical_form(g: Graph):
    """Isomorphism-invariant canonical key: (n, minimal edge bitmask over
    relabelings consistent with the stable vertex coloring)."""
    colors = _refine_colors(g)
    classes = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    groups = [classes[c] for c in sorted(classes)]
    pairs = list(combinations(range(g.n), 2))
    bit = {p: len(pairs) - 1 - k for k, p in enumerate(pairs)}
    edges = g.edges
    best = None
    for perm_parts in product(*(permutations(grp) for grp in groups)):
        order = [v for part in perm_parts for v in part]
        pos = {v: k for k, v in enumerate(order)}
        mask = 0
        for u, v in edges:
            a, b = pos[u], pos[v]
            if a > b:
                a, b = b, a
            mask |= 1 << bit[(a, b)]
        if best is None or mask < best:
            best = mask
    return (g.n, best)


def _graph_from_key(key) -> Graph:
    n, mask = key
    pairs = list(combinations(range(n), 2))
    nb = len(pairs)
    edges = [pairs[k] for k in range(nb) if (mask >> (nb - 1 - k)) & 1]
    return Graph.from_edges(n, edges)


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    return _graph_from_key(canonical_form(g))


# -- enumeration by augmentation --------------------------------------------


@lru_cache(maxsize=None)
def _all_graph_classes(n: int):
    """Canonical representatives of ALL graphs (connected or not) on n vertices."""
    if n == 1:
        return (Graph.from_edges(1, []),)
    out = {}
    for parent in _all_graph_classes(n - 1):
        base = list(parent.edges)
        for mask in range(1 << (n - 1)):
            extra = [(v, n - 1) for v in range(n - 1) if (mask >> v) & 1]
            g = Graph.from_edges(n, base + extra)
            key = canonical_form(g)
            if key not in out:
                out[key] = _graph_from_key(key)
    return tuple(out[k] for k in sorted(out))


def enumerate_connected_graphs(n: int):
    """One representative per isomorphism class of connected graphs on n
    vertices, in canonical order (guarded to n <= 8)."""
    if not 1 <= n <= MAX_EXHAUSTIVE_N:
        raise ValueError(f"exhaustive enumeration is guarded to n <= {MAX_EXHAUSTIVE_N}")
    for g in _all_graph_classes(n):
        if is_connected(g):
            yield g


def enumerate_connected_graphs_bitmask(n: int):
    """Independent oracle: every edge bitmask, deduplicated by plain
    minimum over all vertex permutations (numpy-vectorized; n <= 6)."""
    import numpy as np

    if not 1 <= n <= 6:
        raise ValueError("bitmask oracle is limited to n <= 6")
    pairs = list(combinations(range(n), 2))
    nb = len(pairs)
    masks = np.arange(1 << nb, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(nb)) & 1
    canon = None
    for perm in permutations(range(n)):
        weights = np.zeros(nb, dtype=np.int64)
        for k, (u, v) in enumerate(pairs):
            a, b = perm[u], perm[v]
            if a > b:
                a, b = b, a
            weights[k] = 1 << pairs.index((a, b))
        mapped = bits @ weights
        canon = mapped if canon is None else np.minimum(canon, mapped)
    reps = {}
    for mask, c in zip(masks.tolist(), canon.tolist()):
        if c not in reps:
            reps[c] = mask
    out = []
    for c in sorted(reps):
        edges = [pairs[k] for k in range(nb) if (c >> k) & 1]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            out.append(g)
    return out


# -- trees -------------------------------------------------------------------


def _tree_code(g: Graph) -> str:
    adj = adjacency(g)

    def encode(v, parent):
        subs = sorted(encode(u, v) for u in adj[v] if u != parent)
        return "(" + "".join(subs) + ")"

    # find centers by leaf stripping
    deg = [len(a) for a in adj]
    alive = set(range(g.n))
    layer = [v for v in alive if deg[v] <= 1]
    while len(alive) > 2:
        nxt = []
        for v in layer:
            alive.discard(v)
            for u in adj[v]:
                if u in alive:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return min(encode(c, -1) for c in alive)


@lru_cache(maxsize=None)
def enumerate_trees(n: int):
    """One representative per isomorphism class of trees on n vertices."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (Graph.from_edges(1, []),)
    out = {}
    for parent in enumerate_trees(n - 1):
        for v in range(n - 1):
            g = Graph.from_edges(n, list(parent.edges) + [(v, n - 1)])
            code = _tree_code(g)
            if code not in out:
                out[code] = g
    return tuple(out[k] for k in sorted(out))


# -- scan reports -------------------------------------------------------------


@dataclass(frozen=True)
class ScanReport:
    graph6: str
    atlas_hits: tuple          # of (name, witness vertex tuple)
    odd_hole: tuple | None
    phi_ideals: int | None
    phi_snf: int | None
    lambda1: bool | None
    lambda2: bool | None
    status: str                # "complete" | "inconclusive"

    def to_json(self):
        return {
            "graph": self.graph6,
            "atlas_hits": [[n, list(w)] for n, w in self.atlas_hits],
            "odd_hole": list(self.odd_hole) if self.odd_hole else None,
            "phi_ideals": self.phi_ideals,
            "phi_snf": self.phi_snf,
            "lambda1": self.lambda1,
            "lambda2": self.lambda2,
            "status": self.status,
        }


_PATTERNS = None


def _forbidden_patterns():
    global _PATTERNS
    if _PATTERNS is None:
        _PATTERNS = [(nm, atlas(nm).graph) for nm in FORBIDDEN_FAMILY]
    return _PATTERNS


def structural_hits(g: Graph):
    """All forbidden-family hits with witnesses, plus an odd-hole witness."""
    hits = []
    for nm, pat in _forbidden_patterns():
        w = contains_induced(g, pat)
        if w is not None:
            hits.append((nm, w))
    return tuple(hits), find_odd_hole(g)


def forbidden_scan(g: Graph, budget: int = DEFAULT_BUDGET, with_phi: bool = True,
                   seed: int = DEFAULT_SEED) -> ScanReport:
    """Structural forbidden-family scan, optionally with the trivial-ideal
    count and the membership flags for k = 1, 2."""
    hits, hole = structural_hits(g)
    if not with_phi:
        return ScanReport(emit_graph6(g), hits, hole, None, None, None, None, "complete")
    res = phi_trivial_count(g, budget, seed)
    if res.status != "complete":
        return ScanReport(emit_graph6(g), hits, hole, None, res.phi_snf,
                          None, None, "inconclusive")
    return ScanReport(emit_graph6(g), hits, hole, res.phi_ideals, res.phi_snf,
                      res.phi_ideals <= 1, res.phi_ideals <= 2, "complete")


def verify_forbidden_contrapositive(corpus, budget: int = DEFAULT_BUDGET,
                                    seed: int = DEFAULT_SEED) -> dict:
    """Every graph containing a forbidden-family member or an odd hole must
    have a trivial third distance ideal.  Returns a summary with violations
    (must be empty), inconclusive graphs, and per-member hit counts."""
    t0 = time.monotonic()
    violations = []
    inconclusive = []
    hit_counts = {nm: 0 for nm in FORBIDDEN_FAMILY}
    hit_counts["odd-hole"] = 0
    scanned = 0
    flagged = 0
    for g in corpus:
        scanned += 1
        hits, hole = structural_hits(g)
        if not hits and hole is None:
            continue
        flagged += 1
        for nm, _ in hits:
            hit_counts[nm] += 1
        if hole is not None:
            hit_counts["odd-hole"] += 1
        v = ideal_triviality(g, 3, budget, seed)
        if v.decision == "inconclusive":
            inconclusive.append(emit_graph6(g))
        elif v.decision != "trivial":
            violations.append(emit_graph6(g))
    return {
        "scanned": scanned,
        "flagged": flagged,
        "violations": sorted(violations),
        "inconclusive": sorted(inconclusive),
        "hit_counts": hit_counts,
        "elapsed_ms": int((time.monotonic() - t0) * 1000),
    }


def verify_lambda1_characterizations(n_max: int, budget: int = DEFAULT_BUDGET,
                                     seed: int = DEFAULT_SEED) -> dict:
    """Over all connected graphs with at most n_max vertices: at most one
    trivial ideal over ZZ iff {P4, paw, diamond}-free, and over QQ iff
    {P4, paw, diamond, C4}-free.  Returns counts and exceptions (must be
    empty)."""
    if n_max > 7:
        raise ValueError("characterization sweep is guarded to n <= 7")
    t0 = time.monotonic()
    pats_z = [(nm, atlas(nm).graph) for nm in ("P4", "paw", "diamond")]
    pats_q = pats_z + [("C4", atlas("C4").graph)]
    exceptions_z = []
    exceptions_q = []
    inconclusive = []
    total = 0
    members_z = 0
    members_q = 0
    for n in range(1, n_max + 1):
        for g in enumerate_connected_graphs(n):
            total += 1
            free_z = all(contains_induced(g, p) is None for _, p in pats_z)
            free_q = all(contains_induced(g, p) is None for _, p in pats_q)
            res = phi_trivial_count(g, budget, seed)
            if res.status != "complete":
                inconclusive.append(emit_graph6(g))
                continue
            in_l1 = res.phi_ideals <= 1
            members_z += in_l1
            if in_l1 != free_z:
                exceptions_z.append(emit_graph6(g))
            if n >= 2:
                phiq2 = rational_ideal_triviality(g, 2, budget, seed)
                if phiq2.decision == "inconclusive":
                    inconclusive.append(emit_graph6(g))
                    continue
                in_l1q = not phiq2.trivial
            else:
                in_l1q = True
            members_q += in_l1q
            if in_l1q != free_q:
                exceptions_q.append(emit_graph6(g))
    return {
        "total": total,
        "lambda1_members": members_z,
        "lambda1_rational_members": members_q,
        "exceptions_integer": sorted(exceptions_z),
        "exceptions_rational": sorted(exceptions_q),
        "inconclusive": sorted(inconclusive),
        "elapsed_ms": int((time.monotonic() - t0) * 1000),
    }
