"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 domain error (inner shape not contained in the outer one, input outside
the semi-noncrossing family).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .involution import InvolutionError, phi
from .partitions import Partition, SkewShape, contains
from .paths import NPath, is_semi_noncrossing
from .polynomial import Polynomial, specialize_t
from .rsk_maps import pd_traced, pu_traced
from .tableaux import RSETableau
from .verify import IDENTITIES, VerifyConfig, binomial_determinant, gpoly_by_rpp, jt_determinant, run_box

OK, FAILED, USAGE, DOMAIN = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def parse_shape(text: str) -> tuple[Partition, Partition]:
    outer, _, inner = text.partition("/")
    try:
        lam = Partition(int(x) for x in outer.split(",") if x.strip())
        mu = Partition(int(x) for x in inner.split(",") if x.strip())
    except ValueError as exc:
        raise CliError(f"cannot parse shape {text!r}: {exc}", USAGE) from None
    if not len(lam):
        raise CliError(f"empty outer shape in {text!r}", USAGE)
    return lam, mu


def parse_box(text: str) -> tuple[int, int]:
    try:
        r, c = text.lower().split("x")
        return int(r), int(c)
    except ValueError:
        raise CliError(f"box must look like 4x4, got {text!r}", USAGE) from None


def emit_poly(poly: Polynomial, as_json: bool) -> None:
    print(json.dumps(poly.to_json(), sort_keys=True) if as_json else poly)


def cmd_gpoly(args) -> int:
    lam, mu = parse_shape(args.shape)
    if not contains(mu, lam):
        raise CliError(f"{mu} is not contained in {lam}", DOMAIN)
    poly = gpoly_by_rpp(lam, mu, args.xvars)
    if args.t0:
        poly = specialize_t(poly, 0)
    elif args.t1:
        poly = specialize_t(poly, 1)
    emit_poly(poly, args.json)
    return OK


def cmd_jt(args) -> int:
    lam, mu = parse_shape(args.shape)
    if args.corollary:
        poly = binomial_determinant(lam, mu, args.xvars) if contains(mu, lam) else specialize_t(jt_determinant(lam, mu, args.xvars), 1)
    else:
        poly = jt_determinant(lam, mu, args.xvars)
    emit_poly(poly, args.json)
    return OK


def cmd_verify(args) -> int:
    box = args.box or os.environ.get("GLAB_BOX") or "4x4"
    rows, cols = parse_box(box)
    ids = tuple(x.strip() for x in args.identities.split(",") if x.strip()) if args.identities else ()
    unknown = [i for i in ids if i not in IDENTITIES]
    if unknown:
        raise CliError(f"unknown identities {unknown}; choose from {', '.join(IDENTITIES)}", USAGE)
    cfg = VerifyConfig(rows, cols, args.xvars, ids, args.jobs, "sign-flip" if args.expect_fail else None)
    report = run_box(cfg)
    if args.json:
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        for name, (passed, total) in report.summary().items():
            print(f"{name:12s} {passed}/{total}")
        van = report.vanishing
        print(f"{'vanishing':12s} {'ok' if van['ok'] else 'FAILED'} ({van['checked']} pairs)")
        bad = report.first_failure()
        if bad:
            print(f"first failure: {json.dumps(bad)}")
    if args.expect_fail:
        detected = not report.ok
        print("mutation detected" if detected else "mutation NOT detected", file=sys.stderr)
        return OK if detected else FAILED
    return OK if report.ok else FAILED


def _load_json(path: str):
    try:
        with (sys.stdin if path == "-" else open(path)) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}", USAGE) from None


def cmd_involution_trace(args) -> int:
    data = _load_json(args.input)
    try:
        np = NPath.from_json(data)
        np.type()
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"bad n-path: {exc}", USAGE) from None
    if not contains(np.mu, np.lam):
        raise CliError(f"{np.mu} is not contained in {np.lam}", DOMAIN)
    if not is_semi_noncrossing(np):
        raise CliError("input n-path is not semi-noncrossing", DOMAIN)
    try:
        _, trace = phi(np)
    except InvolutionError as exc:
        print(json.dumps(exc.trace.to_json(), sort_keys=True), file=sys.stderr)
        raise CliError(str(exc), FAILED) from None
    print(json.dumps(trace.to_json(), indent=None if args.compact else 2, sort_keys=True))
    return OK


def cmd_level_map(args) -> int:
    data = _load_json(args.input)
    try:
        t = RSETableau.from_json(data)
        shape = SkewShape.from_json(data["skew"]) if "skew" in data else None
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"bad tableau: {exc}", USAGE) from None
    steps = []
    for _ in range(args.steps):
        try:
            res = (pu_traced if args.direction == "up" else pd_traced)(t, shape)
        except ValueError as exc:
            raise CliError(str(exc), DOMAIN) from None
        steps.append(res.to_json())
        t = res.tableau
        if not res.valid:
            break
    print(json.dumps({"steps": steps}, indent=2, sort_keys=True))
    return OK if all(s["valid"] for s in steps) else FAILED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="glab", description="Refined dual stable Grothendieck polynomials")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gpoly", help="RPP generating function of a skew shape")
    g.add_argument("--shape", required=True, help='e.g. "6,5,4,4,2/4,3,1"')
    g.add_argument("--xvars", type=int, default=2)
    mode = g.add_mutually_exclusive_group()
    mode.add_argument("--t0", action="store_true", help="set every t_i to 0")
    mode.add_argument("--t1", action="store_true", help="set every t_i to 1")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_gpoly)

    j = sub.add_parser("jt", help="Jacobi-Trudi determinant")
    j.add_argument("--shape", required=True)
    j.add_argument("--xvars", type=int, default=2)
    j.add_argument("--corollary", action="store_true", help="binomial form at t = 1")
    j.add_argument("--json", action="store_true")
    j.set_defaults(func=cmd_jt)

    v = sub.add_parser("verify", help="exhaustive identity checks over a box of shapes")
    v.add_argument("--box", help="RxC; defaults to $GLAB_BOX or 4x4")
    v.add_argument("--xvars", type=int, default=2)
    v.add_argument("--identities", help=f"comma list from: {', '.join(IDENTITIES)}")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--json", action="store_true")
    v.add_argument("--expect-fail", action="store_true", help="corrupt the RPP oracle and require a failure")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("involution-trace", help="run the involution on an n-path and dump every step")
    t.add_argument("--input", required=True, help="n-path JSON file, or - for stdin")
    t.add_argument("--compact", action="store_true")
    t.set_defaults(func=cmd_involution_trace)

    m = sub.add_parser("level-map", help="apply pu or pd step by step with insertion records")
    m.add_argument("--input", required=True, help="RSE-tableau JSON file, or - for stdin")
    m.add_argument("--direction", choices=("up", "down"), required=True, help="up lowers the level (pu), down raises it (pd)")
    m.add_argument("--steps", type=int, default=1)
    m.set_defaults(func=cmd_level_map)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"glab: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
