"""Command-line interface: ``torus-roots <command> [options]``.

Exit status is 0 when every verdict passes, 1 on a verdict failure or a
domain error, 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import sys
import warnings

from . import io
from .cones import dual, faces
from .demazure import descends_to_quasi_affine, enumerate_roots, weight_set_D
from .fans import FanError, boundary_faces, is_quasi_affine, require_quasi_affine
from .lattice_sets import nonempty_witness
from .weight_monoid import (
    MalformedWeightSet,
    counterexample_monoids,
    reconstruct_details,
    semigroup_equal,
    toric_weight_monoid,
)
from .harness import run_verify

COMMANDS = ("dual", "faces", "quasi-affine", "roots", "reconstruct", "verify", "counterexample")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="torus-roots", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", default="-", help="fan document (default: stdin)")
    p.add_argument("--bound", type=int, default=2)
    p.add_argument("--classify", action="store_true", help="roots: include the exact D(X)")
    p.add_argument("--suite", default="all", choices=("asymcone", "demazure", "reconstruct", "all"))
    p.add_argument("--instances", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rank", type=int, default=4)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--d", type=int, dest="d")
    p.add_argument("--s", type=int, dest="s")
    p.add_argument("--n", type=int, dest="n", default=2)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="compact output")
    fmt.add_argument("--pretty", action="store_true", help="indented output (default)")
    return p


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _cone_block(c) -> dict:
    return io.cone_to_json(c)


def cmd_dual(fan, args) -> tuple[dict, dict]:
    out = [{"cone": _cone_block(c), "dual": _cone_block(dual(c))} for c in fan.max_cones]
    return {"cones": out}, {"double_dual": all(dual(dual(c)) == c for c in fan.max_cones)}


def cmd_faces(fan, args) -> tuple[dict, dict]:
    out = []
    for c in fan.max_cones:
        fl = [{"dim": fc.dim, "rays": [list(r) for r in fc.cone.rays], "normal": list(fc.normal)}
              for fc in faces(c)]
        out.append({"cone": _cone_block(c), "faces": fl})
    return {"cones": out}, {}


def cmd_quasi_affine(fan, args) -> tuple[dict, dict]:
    ok, cert = is_quasi_affine(fan)
    res = {"quasi_affine": ok, "certificate": cert,
           "support_hull": _cone_block(fan.support_hull)}
    if ok:
        res["boundary_faces"] = [_cone_block(b.face) for b in boundary_faces(fan)]
    return res, {"quasi_affine": ok}


def cmd_roots(fan, args) -> tuple[dict, dict]:
    if args.bound < 1:
        raise UsageError("--bound must be >= 1")
    require_quasi_affine(fan)
    roots = enumerate_roots(fan, args.bound)
    rows = [{"rho": list(r.rho), "e": list(r.e), "descends": descends_to_quasi_affine(fan, r)}
            for r in roots]
    res = {"bound": args.bound, "count": len(rows), "roots": rows}
    if args.classify:
        res["weight_set"] = io.set_to_json(weight_set_D(fan))
    return res, {"all_roots_descend": all(r["descends"] for r in rows)}


def cmd_reconstruct(fan, args) -> tuple[dict, dict]:
    require_quasi_affine(fan)
    d = weight_set_D(fan)
    rec = reconstruct_details(d)
    oracle = toric_weight_monoid(fan.support_hull)
    equal = semigroup_equal(rec.semigroup, oracle)
    res = {
        "weight_set": io.set_to_json(d),
        "witnesses": [list(w) if (w := nonempty_witness(p)) else None for p in d.pieces],
        "asymptotic_cone": [_cone_block(k) for k in rec.asymptotic],
        "span_basis": [list(v) for v in rec.span.basis],
        "case": rec.case,
        "reconstructed": io.semigroup_to_json(rec.semigroup),
        "oracle": io.semigroup_to_json(oracle),
        "verdict": "EQUAL" if equal else "DIFFERENT",
    }
    return res, {"round_trip": equal}


def cmd_counterexample(args) -> tuple[dict, dict]:
    if args.d is None or args.s is None:
        raise UsageError("counterexample needs --d and --s")
    if args.d < 2 or args.s < 2 or args.n < 2:
        raise UsageError("need d >= 2, s >= 2 and n >= 2")
    a, b, distinct, witness = counterexample_monoids(args.d, args.s)
    window = args.d * (args.s + 2)
    res = {
        "d": args.d, "s": args.s, "n": args.n,
        "quotient_monoid": {"description": "{k d : k >= 0}", "window": a.members(window)},
        "gapped_monoid": {"description": "{k d : k = 0 or k >= s}", "window": b.members(window)},
        "distinct": distinct, "witness": witness,
    }
    checks = {"distinct": distinct, "witness_in_quotient": a.contains(witness),
              "witness_not_in_gapped": not b.contains(witness)}
    return res, checks


FAN_COMMANDS = {"dual": cmd_dual, "faces": cmd_faces, "quasi-affine": cmd_quasi_affine,
                "roots": cmd_roots, "reconstruct": cmd_reconstruct}


def run(args) -> tuple[dict, int]:
    report = {"schema_version": io.SCHEMA_VERSION, "command": args.command}
    if args.command == "verify":
        if args.instances < 1:
            raise UsageError("--instances must be >= 1")
        if not 1 <= args.rank <= 4:
            raise UsageError("--rank must be between 1 and 4")
        res = run_verify(args.suite, args.instances, args.seed, args.rank, args.workers)
        report.update(seed=args.seed, results=res,
                      verdicts={"all_instances": res["pass"]})
    elif args.command == "counterexample":
        res, checks = cmd_counterexample(args)
        report.update(results=res, verdicts=checks)
    else:
        text = _read_input(args.input)
        doc = io.parse_fan_document(text)
        fan = io.document_to_fan(doc)
        res, checks = FAN_COMMANDS[args.command](fan, args)
        report.update(input_sha256=io.digest(text), results=res, verdicts=checks)
    report["pass"] = all(report["verdicts"].values())
    return report, 0 if report["pass"] else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    with warnings.catch_warnings():
        warnings.simplefilter("always")
        warnings.showwarning = lambda msg, *a, **k: print(f"warning: {msg}", file=sys.stderr)
        try:
            report, code = run(args)
        except (UsageError, io.ParseError, OSError) as exc:
            print(f"torus-roots: error: {exc}", file=sys.stderr)
            return 2
        except (FanError, MalformedWeightSet, ValueError) as exc:
            print(f"torus-roots: {type(exc).__name__}: {exc}", file=sys.stderr)
            return 1
    sys.stdout.write(io.dumps(report, pretty=not args.json))
    return code


if __name__ == "__main__":
    sys.exit(main())
