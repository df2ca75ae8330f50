"""Run the identity checks over a box of shapes and write a JSON report."""

import argparse
import json
import sys

from glab.verify import IDENTITIES, VerifyConfig, run_box


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rows", type=int, default=4)
    ap.add_argument("--cols", type=int, default=4)
    ap.add_argument("-p", type=int, default=2, help="number of x variables")
    ap.add_argument("--identities", nargs="*", default=[], choices=sorted(IDENTITIES))
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", help="report path (default: stdout)")
    args = ap.parse_args()

    cfg = VerifyConfig(args.rows, args.cols, args.p, tuple(args.identities), args.jobs)
    done = [0]

    def tick(rep):
        done[0] += 1
        if done[0] % 100 == 0:
            print(f"  {done[0]} shapes", file=sys.stderr)

    report = run_box(cfg, tick)
    text = json.dumps(report.to_json(), indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    for name, (passed, total) in report.summary().items():
        print(f"{name:12s} {passed}/{total}", file=sys.stderr)
    print(f"{report.seconds:.1f}s, ok={report.ok}", file=sys.stderr)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
