"""Count semi-noncrossing n-paths, fixed points and swapped pairs per shape.

Also tallies which failing block ``k`` and crossing heights occur, and
whether any crossing choice was a tie.
"""

import argparse
import json
import sys
from collections import Counter

from glab.involution import phi
from glab.paths import enumerate_npaths
from glab.partitions import SkewShape
from glab.tableaux import enumerate_rpp
from glab.verify import box_pairs


def scan(rows: int, cols: int, p: int) -> dict:
    totals = Counter()
    by_k, omega_crossings = Counter(), 0
    rows_out = []
    for lam, mu in box_pairs(rows, cols):
        n = fixed = 0
        for np in enumerate_npaths(lam, mu, p, snc=True):
            n += 1
            _, tr = phi(np)
            if tr.outcome == "Fixed":
                fixed += 1
                continue
            by_k[tr.k] += 1
            omega_crossings += tr.crossing[1][0] != 0
            totals["ties"] += bool(tr.ties)
        rpps = len(enumerate_rpp(SkewShape(lam, mu), p))
        rows_out.append({"outer": list(lam.parts), "inner": list(mu.parts), "snc": n, "fixed": fixed, "rpp": rpps})
        totals["snc"] += n
        totals["fixed"] += fixed
        totals["mismatch"] += fixed != rpps
    return {
        "box": f"{rows}x{cols}", "p": p, "totals": dict(totals),
        "failing_block": {str(k): v for k, v in sorted(by_k.items())},
        "crossings_above_omega": omega_crossings, "shapes": rows_out,
    }


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rows", type=int, default=3)
    ap.add_argument("--cols", type=int, default=3)
    ap.add_argument("-p", type=int, default=2)
    ap.add_argument("--shapes", action="store_true", help="include the per-shape table")
    args = ap.parse_args()
    res = scan(args.rows, args.cols, args.p)
    if not args.shapes:
        res.pop("shapes")
    print(json.dumps(res, indent=2))
    return 0 if res["totals"].get("mismatch", 0) == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
