"""Print the involution step by step on the bundled worked example."""

import json
from pathlib import Path

from glab.involution import phi
from glab.paths import NPath, tab

DATA = Path(__file__).resolve().parent.parent / "testdata" / "worked_example_npath.json"


def main() -> None:
    np = NPath.from_json(json.loads(DATA.read_text()))
    out, tr = phi(np)
    print(f"lambda = {np.lam}, mu = {np.mu}, type {np.type()}, sign {np.sign():+d}")
    print("Tab:")
    print(tab(np).pretty())
    for row in tr.ledger:
        print(f"\nU_{row.i + 1} (fits: {row.fits})")
        print(row.U.pretty())
    if tr.outcome == "Fixed":
        print("\nfixed point")
        return
    a, (_, b) = tr.crossing
    print(f"\nfirst failing block k = {tr.k}, s = {tr.s}, gamma = {tr.gamma}")
    print(f"crossing ({a}, {b}) between q_{tr.swapped[0]} and q_{tr.swapped[1]}")
    print("\nT' =")
    print(tr.T_prime.pretty())
    print(f"\noutput type {out.type()}, sign {out.sign():+d}, involution: {phi(out)[0] == np}")


if __name__ == "__main__":
    main()
