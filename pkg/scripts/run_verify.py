"""Run every verification suite and write a JSON report.

    python3 scripts/run_verify.py [--max-degree 4] [--seed 0] [--out reports/verify.json]
"""
import argparse
import json
import sys
from pathlib import Path

from jordan_capelli.suites import SUITES, run_suites


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="reports/verify.json")
    args = ap.parse_args()
    ok, results = run_suites(list(SUITES), args.max_degree, args.seed)
    for name, checks in results.items():
        asserted = [c for c in checks if not c.diagnostic]
        diag = [c for c in checks if c.diagnostic]
        print(f"{name:26s} {sum(c.ok for c in asserted)}/{len(asserted)} asserted"
              + (f", {sum(c.ok for c in diag)}/{len(diag)} diagnostic" if diag else ""))
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps({"ok": ok, "suites": {n: [c.to_json() for c in cs] for n, cs in results.items()}},
                              indent=1, sort_keys=True) + "\n")
    print(f"{'OK' if ok else 'FAILED'}; wrote {out}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
