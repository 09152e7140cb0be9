"""Archive the Case III / IV Capelli-lemma report under both tau conventions.

    python3 scripts/case34_diagnostic.py [--max-degree 4] [--out reports/case34_diagnostic.json]
"""
import argparse
import json
from fractions import Fraction
from pathlib import Path

from jordan_capelli.capelli import verify_capelli_lemma
from jordan_capelli.jordan import CONVENTIONS, make_case, tau

CASES = [("III", 3, 1, None), ("III", 4, 1, None), ("III", 2, 1, None), ("III", 5, 1, None),
         ("IV", None, None, Fraction(-2)), ("IV", None, None, Fraction(-3, 2)), ("IV", None, None, Fraction(-1, 2))]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--out", default="reports/case34_diagnostic.json")
    args = ap.parse_args()
    reports = []
    for tag, m, n, t in CASES:
        case = make_case(tag, m, n, t)
        for conv in CONVENTIONS:
            rep = verify_capelli_lemma(case, args.max_degree, convention=conv, cumulative=True)
            amap = tau(case, conv)
            entry = rep.to_json()
            entry["tau"] = {"matrix": [[str(x) for x in row] for row in amap.matrix],
                            "offset": [str(x) for x in amap.offset]}
            reports.append(entry)
            print(f"{case.label():12s} {conv:9s} {'pass' if rep.passed else 'FAIL'} "
                  f"{len(rep.failures)}/{len(rep.checks)} failing")
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps({"max_degree": args.max_degree, "reports": reports}, indent=1, sort_keys=True) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
