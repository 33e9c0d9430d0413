"""Command-line interface.

Subcommands: snf, phi, ideal, scan, enumerate, verify-paper, atlas.
Graph inputs are files containing either graph6 lines or a single
"n m" edge list (auto-detected).  ``--json PATH`` writes the structured
report; stdout stays human-readable.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .graphs import atlas, atlas_names, emit_graph6, load_graphs
from .groebner import DEFAULT_BUDGET
from .ideals import (DEFAULT_SEED, InconclusiveError, ideal_triviality,
                     phi_over_rationals, phi_trivial_count,
                     rational_ideal_triviality, verdict_record)
from .intlinalg import snf
from .scan import (enumerate_connected_graphs, enumerate_trees,
                   forbidden_scan, structural_hits)


def _read_graphs(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SystemExit(f"cannot read {path}: {exc}") from exc
    graphs = load_graphs(text)
    if not graphs:
        raise SystemExit(f"no graphs found in {path}")
    return graphs


def _emit(args, payload):
    if args.json:
        Path(args.json).write_text(json.dumps(payload, indent=2, default=str) + "\n")


def cmd_snf(args):
    from .graphs import distance_matrix

    rows = []
    for g in _read_graphs(args.file):
        factors = snf(distance_matrix(g)).factors
        phi = sum(1 for f in factors if f == 1)
        rows.append({"graph": emit_graph6(g), "invariant_factors": list(factors),
                     "phi_snf": phi})
        print(f"{emit_graph6(g)}  factors={list(factors)}  unit_count={phi}")
    _emit(args, rows)
    return 0


def cmd_phi(args):
    rows = []
    for g in _read_graphs(args.file):
        g6 = emit_graph6(g)
        if args.rational:
            try:
                phi = phi_over_rationals(g, args.budget, args.seed)
                rows.append({"graph": g6, "phi_rational": phi})
                print(f"{g6}  phi_rational={phi}")
            except InconclusiveError:
                rows.append({"graph": g6, "phi_rational": None, "status": "inconclusive"})
                print(f"{g6}  phi_rational=inconclusive")
        else:
            res = phi_trivial_count(g, args.budget, args.seed)
            rows.append({"graph": g6, "phi_ideals": res.phi_ideals,
                         "phi_snf": res.phi_snf, "status": res.status})
            print(f"{g6}  phi={res.phi_ideals}  phi_snf={res.phi_snf}  [{res.status}]")
    _emit(args, rows)
    return 0


def cmd_ideal(args):
    rows = []
    for g in _read_graphs(args.file):
        fn = rational_ideal_triviality if args.rational else ideal_triviality
        v = fn(g, args.i, args.budget, args.seed)
        rec = verdict_record(g, args.i, v)
        rows.append(rec)
        print(f"{rec['graph']}  i={args.i}  {v.decision}  [{v.certificate_kind}]")
    _emit(args, rows)
    return 0


def cmd_scan(args):
    rows = []
    failures = 0
    graphs = sorted(_read_graphs(args.file), key=emit_graph6)
    for g in graphs:
        g6 = emit_graph6(g)
        if args.family == "F":
            hits, hole = structural_hits(g)
            rec = {"graph": g6, "atlas_hits": [[n, list(w)] for n, w in hits],
                   "odd_hole": list(hole) if hole else None}
            print(f"{g6}  hits={[n for n, _ in hits]}  odd_hole={bool(hole)}")
        elif args.family in ("lambda1", "lambda1R"):
            if args.family == "lambda1":
                res = phi_trivial_count(g, args.budget, args.seed)
                member = None if res.status != "complete" else res.phi_ideals <= 1
            else:
                if g.n == 1:
                    member = True
                else:
                    v = rational_ideal_triviality(g, 2, args.budget, args.seed)
                    member = None if v.decision == "inconclusive" else not v.trivial
            rec = {"graph": g6, "family": args.family, "member": member}
            print(f"{g6}  {args.family}: {member}")
        else:
            report = forbidden_scan(g, args.budget, with_phi=True, seed=args.seed)
            rec = report.to_json()
            if report.status != "complete":
                failures += 1
            print(f"{g6}  phi={report.phi_ideals}  hits={[n for n, _ in report.atlas_hits]}"
                  f"  odd_hole={bool(report.odd_hole)}  [{report.status}]")
        rows.append(rec)
    summary = {"graphs": len(rows), "inconclusive": failures}
    _emit(args, {"reports": rows, "summary": summary})
    return 0


def cmd_enumerate(args):
    gen = enumerate_trees(args.n) if args.trees else enumerate_connected_graphs(args.n)
    out = [emit_graph6(g) for g in gen]
    for line in out:
        print(line)
    _emit(args, out)
    return 0


def cmd_verify_paper(args):
    from .harness import run_all

    report = run_all(budget=args.budget, seed=args.seed, lemma=args.lemma,
                     theorem_nmax=args.nmax, jobs=args.jobs)
    for rep in report.lemma_reports:
        flag = "PASS" if rep.passed else "FAIL"
        print(f"[{flag}] {rep.lemma_id}  ({len(rep.checks)} checks, {rep.elapsed_ms} ms)")
        for c in rep.checks:
            if not c.passed:
                print(f"       FAIL {c.description}: expected {c.expected}, computed {c.computed}")
            elif c.kind != "exact":
                print(f"       note ({c.kind}) {c.description} = {c.computed}")
    if report.theorem_summary is not None:
        ts = report.theorem_summary
        flag = "PASS" if not ts["violations"] else "FAIL"
        print(f"[{flag}] forbidden-family theorem: {ts['scanned']} graphs scanned, "
              f"{ts['flagged']} flagged, {len(ts['violations'])} violations, "
              f"{len(ts['inconclusive'])} inconclusive")
    _emit(args, report.to_json())
    return 0 if report.passed else 1


def cmd_atlas(args):
    rows = []
    for name in atlas_names():
        g = atlas(name).graph
        if args.emit_graph6:
            print(f"{name}\t{emit_graph6(g)}")
        else:
            print(f"{name}\tn={g.n}\tedges={g.sorted_edges()}")
        rows.append({"name": name, "n": g.n, "graph6": emit_graph6(g),
                     "edges": [list(e) for e in g.sorted_edges()]})
    _emit(args, rows)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="distideals",
                                 description="Exact distance-ideal toolkit")
    ap.add_argument("--json", help="write a JSON report to this path")
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED,
                    help="seed for the pseudorandom evaluation points")
    ap.add_argument("--jobs", type=int, default=1, help="parallel workers")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("snf", help="invariant factors of distance matrices")
    p.add_argument("file")
    p.set_defaults(fn=cmd_snf)

    p = sub.add_parser("phi", help="number of trivial distance ideals")
    p.add_argument("file")
    p.add_argument("--rational", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(fn=cmd_phi)

    p = sub.add_parser("ideal", help="triviality of one distance ideal")
    p.add_argument("file")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--rational", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(fn=cmd_ideal)

    p = sub.add_parser("scan", help="forbidden-family scan")
    p.add_argument("file")
    p.add_argument("--family", choices=["F", "lambda1", "lambda1R"])
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("enumerate", help="enumerate connected graphs (or trees)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trees", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("verify-paper",
                       help="re-run the recorded verification suite")
    p.add_argument("--lemma", help="run a single lemma by id")
    p.add_argument("--budget", type=int, default=1_000_000)
    p.add_argument("--nmax", type=int, default=6,
                   help="corpus bound for the theorem check (0 disables)")
    p.set_defaults(fn=cmd_verify_paper)

    p = sub.add_parser("atlas", help="list the named atlas graphs")
    p.add_argument("--emit-graph6", action="store_true")
    p.set_defaults(fn=cmd_atlas)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
