#!/usr/bin/env python3
"""Run the full verification suite and write a JSON conformance report.

Usage: python scripts/verify_paper.py [--budget N] [--nmax K] [--out PATH]
"""

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from distideals.harness import run_all  # noqa: E402


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--budget", type=int, default=1_000_000)
    ap.add_argument("--nmax", type=int, default=6,
                    help="corpus bound for the theorem check (0 disables)")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default="conformance.json")
    args = ap.parse_args()

    report = run_all(budget=args.budget, theorem_nmax=args.nmax, jobs=args.jobs)
    for rep in report.lemma_reports:
        flag = "PASS" if rep.passed else "FAIL"
        print(f"[{flag}] {rep.lemma_id} ({rep.elapsed_ms} ms)")
    if report.theorem_summary:
        ts = report.theorem_summary
        print(f"theorem check: {ts['scanned']} scanned, {ts['flagged']} flagged, "
              f"{len(ts['violations'])} violations, {len(ts['inconclusive'])} inconclusive")
    Path(args.out).write_text(json.dumps(report.to_json(), indent=2) + "\n")
    print(f"report written to {args.out}")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
