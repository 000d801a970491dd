"""Command-line surface: construct codes, verify descriptors, reproduce the
bundled parameter tables, and sweep dual-side hull dimensions.

Exit codes: 0 success; 2 inadmissible request (the message names the violated
bound); 3 internal assertion failure (a theorem-level equality broke, which
means a bug); 4 verification mismatch; 5 malformed descriptor.

The table and sweep commands fan rows out over a thread pool capped by the
HULLFORGE_THREADS environment variable (default 1); output ordering is fixed
by row index regardless of completion order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from math import comb
from typing import Callable, Iterable, Sequence

from .eaqecc import dual_side_eaqecc, emit_from_construction, singleton_verdict
from .errors import (
    BoundViolatedError,
    HullforgeError,
    MalformedDescriptorError,
    MethodDisagreementError,
    NoPreimageError,
    NoScalingElementError,
    PredicateFailedError,
    TheoremMismatchError,
)
from .families import Family, FamilyRequest, construct
from .ffield import field_new, field_to_json
from .grs import (
    BRUTE_FORCE_BUDGET,
    MINOR_BUDGET,
    grs_generator,
    mds_check_minors,
    min_distance_bruteforce,
    spec_from_json,
    spec_to_json,
)
from .hull import hull_compute
from .tables import TABLES

EXIT_OK = 0
EXIT_INADMISSIBLE = 2
EXIT_INTERNAL = 3
EXIT_VERIFY_FAILED = 4
EXIT_MALFORMED = 5

_INADMISSIBLE = (PredicateFailedError, NoScalingElementError, NoPreimageError)
_INTERNAL = (TheoremMismatchError, MethodDisagreementError, BoundViolatedError)


def _pool_map(fn: Callable, items: Sequence) -> list:
    threads = int(os.environ.get("HULLFORGE_THREADS", "1") or "1")
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------

def _request_from_args(args: argparse.Namespace) -> FamilyRequest:
    return FamilyRequest(
        family=Family(args.family),
        p=args.p,
        e=args.e,
        l=args.l,
        k=args.k,
        h=args.h,
        n=args.n,
        x1=args.x1,
        x2=args.x2,
        r=args.r,
        m=args.m,
    )


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        built = construct(_request_from_args(args))
        params = emit_from_construction(built)
    except (*_INADMISSIBLE, ValueError) as exc:
        print(f"inadmissible: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except _INTERNAL as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    payload = {
        "descriptor": spec_to_json(built.spec),
        "provenance": built.provenance,
        "hull": built.hull.to_json(),
        "eaqecc": params.to_json(),
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        spec = built.spec
        print(f"family     {built.request.family.value}")
        print(f"field      GF({args.p}^{args.e}) = GF({spec.ctx.q}), level l = {args.l}")
        print(f"code       [{spec.length},{spec.k}] GRS" + (" (extended)" if spec.extended else ""))
        print(f"hull dim   {built.hull.dim} (stacked {built.hull.dim_stacked}, rankHH {built.hull.dim_rank})")
        print(f"eaqecc     {params}  MDS={params.mds}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args: argparse.Namespace) -> int:
    try:
        raw = sys.stdin.read() if args.descriptor == "-" else open(args.descriptor).read()
        payload = json.loads(raw)
        if not isinstance(payload, dict):
            raise MalformedDescriptorError("descriptor must be a JSON object")
        descriptor = payload.get("descriptor", payload)
        spec = spec_from_json(descriptor)
    except (OSError, json.JSONDecodeError, MalformedDescriptorError) as exc:
        print(f"malformed descriptor: {exc}", file=sys.stderr)
        return EXIT_MALFORMED

    failures: list[str] = []
    checks: dict[str, object] = {}
    try:
        code = grs_generator(spec)
        claimed_hull = payload.get("hull")
        if claimed_hull is not None:
            l = int(claimed_hull["l"])
            report = hull_compute(code, l)
            checks["hull"] = {
                "l": l,
                "recomputed": report.dim,
                "claimed": int(claimed_hull["dim"]),
                "methods": {"stacked": report.dim_stacked, "rankHH": report.dim_rank},
            }
            if int(claimed_hull["dim"]) != report.dim:
                failures.append(
                    f"claimed hull dim {claimed_hull['dim']} != recomputed {report.dim}"
                )
            methods = claimed_hull.get("methods", {})
            for name, value in (("stacked", report.dim_stacked), ("rankHH", report.dim_rank)):
                if name in methods and int(methods[name]) != value:
                    failures.append(f"claimed {name} = {methods[name]} != recomputed {value}")

        if comb(code.n, code.k) <= MINOR_BUDGET:
            ok = mds_check_minors(code)
            checks["mds_minors"] = ok
            if not ok:
                failures.append("a k-column minor is singular (not MDS)")
        else:
            checks["mds_minors"] = "skipped (budget)"
        if spec.ctx.q**code.k <= BRUTE_FORCE_BUDGET:
            d = min_distance_bruteforce(code)
            checks["min_distance"] = d
            if d != code.n - code.k + 1:
                failures.append(f"minimum distance {d} != {code.n - code.k + 1}")
        else:
            checks["min_distance"] = "skipped (budget)"

        claimed_eaqecc = payload.get("eaqecc")
        if claimed_eaqecc is not None and claimed_hull is not None:
            l = int(claimed_hull["l"])
            dim = hull_compute(code, l).dim
            derived = (
                code.n,
                code.k - dim,
                code.n - code.k + 1,
                code.n - code.k - dim,
            )
            claimed = (
                int(claimed_eaqecc["n"]),
                int(claimed_eaqecc["k"]),
                int(claimed_eaqecc["d"]),
                int(claimed_eaqecc["c"]),
            )
            checks["eaqecc"] = {"recomputed": derived, "claimed": claimed}
            if derived != claimed:
                failures.append(f"claimed EAQECC {claimed} != derived {derived}")
    except (KeyError, TypeError, ValueError) as exc:
        print(f"malformed descriptor: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except _INTERNAL as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    report_obj = {"ok": not failures, "checks": checks, "failures": failures}
    if args.format == "json":
        _emit_json(report_obj)
    else:
        for name, value in checks.items():
            print(f"{name}: {value}")
        print("ok" if not failures else "FAILED: " + "; ".join(failures))
    return EXIT_OK if not failures else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def cmd_table(args: argparse.Namespace) -> int:
    scenario = TABLES[args.number]
    field_new(scenario.p, scenario.e)  # build the shared context before pooling

    def run_row(row):
        request = scenario.request_for(row)
        params = emit_from_construction(construct(request))
        got = params.tuple()
        verdict = singleton_verdict(params)
        return row, got, verdict

    try:
        results = _pool_map(run_row, list(scenario.rows))
    except _INTERNAL as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except _INADMISSIBLE as exc:
        print(f"inadmissible table row: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE

    mismatches = 0
    if args.format == "json":
        out = []
        for row, got, verdict in results:
            match = got == row.expected
            mismatches += 0 if match else 1
            out.append(
                {"k": row.k, "h": row.h, "expected": list(row.expected),
                 "constructed": list(got), "match": match, "slack": verdict["slack"]}
            )
        _emit_json({"table": scenario.number, "q": scenario.q, "l": scenario.l,
                    "rows": out, "all_match": mismatches == 0})
    else:
        q_label = f"{scenario.p}^{scenario.e}" if scenario.e > 1 else f"{scenario.p}"
        print(f"table {scenario.number}: q = {q_label}, l = {scenario.l}")
        print(f"{'k':>3} {'h':>3}  {'expected':<22} {'constructed':<22} status")
        for row, got, verdict in results:
            ne, ke, de, ce = row.expected
            ng, kg, dg, cg = got
            exp_s = f"[[{ne},{ke},{de};{ce}]]_{q_label}"
            got_s = f"[[{ng},{kg},{dg};{cg}]]_{q_label}"
            match = got == row.expected
            mismatches += 0 if match else 1
            print(f"{row.k:>3} {row.h:>3}  {exp_s:<22} {got_s:<22} "
                  + ("ok" if match else "MISMATCH"))
        print(f"{len(results) - mismatches}/{len(results)} rows match")
    return EXIT_OK if mismatches == 0 else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def _parse_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    return int(lo), int(hi)


def cmd_sweep(args: argparse.Namespace) -> int:
    family = Family(args.family)
    levels = args.l if args.l else list(range(args.e))
    ns = args.n if args.n else [None]
    k_lo, k_hi = _parse_range(args.k_range)
    h_lo, h_hi = _parse_range(args.h_range)
    field_new(args.p, args.e)

    requests = []
    for l in levels:
        for n in ns:
            for k in range(k_lo, k_hi + 1):
                for h in range(h_lo, h_hi + 1):
                    requests.append(FamilyRequest(
                        family=family, p=args.p, e=args.e, l=l, k=k, h=h,
                        n=n, x1=args.x1, x2=args.x2, r=args.r, m=args.m,
                    ))

    def run(req: FamilyRequest):
        try:
            built = construct(req)
        except (*_INADMISSIBLE, ValueError):
            return None
        params = dual_side_eaqecc(built.code, req.l)
        return (req.p, req.e, req.l, built.code.n, req.k,
                params.provenance["hull_primal"], params.provenance["hull_dual"])

    try:
        rows = [row for row in _pool_map(run, requests) if row is not None]
    except _INTERNAL as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    print("p,e,l,n,k,hullPrimal,hullDual")
    for row in rows:
        print(",".join(str(x) for x in row))
    return EXIT_OK


# ---------------------------------------------------------------------------
# field-info
# ---------------------------------------------------------------------------

def cmd_field_info(args: argparse.Namespace) -> int:
    modulus = [int(c) for c in args.modulus.split(",")] if args.modulus else None
    try:
        ctx = field_new(args.p, args.e, modulus=modulus)
    except HullforgeError as exc:
        print(f"inadmissible: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    info = field_to_json(ctx) | {"q": ctx.q, "log_tables": ctx.has_tables}
    _emit_json(info)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hullforge",
        description="GRS codes with prescribed Galois hull dimension and their EAQECC parameters",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("construct", help="build one code and print its descriptor")
    pc.add_argument("--family", required=True, choices=[f.value for f in Family])
    pc.add_argument("--p", type=int, required=True)
    pc.add_argument("--e", type=int, required=True)
    pc.add_argument("--l", type=int, required=True)
    pc.add_argument("--k", type=int, required=True)
    pc.add_argument("--h", type=int, required=True)
    pc.add_argument("--n", type=int)
    pc.add_argument("--x1", type=int)
    pc.add_argument("--x2", type=int)
    pc.add_argument("--r", type=int)
    pc.add_argument("--m", type=int)
    pc.add_argument("--format", choices=["json", "text"], default="json")
    pc.set_defaults(func=cmd_construct)

    pv = sub.add_parser("verify", help="recompute and check a descriptor's claims")
    pv.add_argument("descriptor", help="path to a descriptor JSON file, or - for stdin")
    pv.add_argument("--format", choices=["json", "text"], default="text")
    pv.set_defaults(func=cmd_verify)

    pt = sub.add_parser("table", help="reproduce one of the bundled parameter tables")
    pt.add_argument("number", type=int, choices=sorted(TABLES))
    pt.add_argument("--format", choices=["json", "text"], default="text")
    pt.set_defaults(func=cmd_table)

    ps = sub.add_parser("sweep", help="log primal/dual hull dimensions over a request grid")
    ps.add_argument("--family", default="T1a", choices=[f.value for f in Family])
    ps.add_argument("--p", type=int, required=True)
    ps.add_argument("--e", type=int, required=True)
    ps.add_argument("--l", type=int, action="append", help="repeatable; default all levels")
    ps.add_argument("--n", type=int, action="append", help="repeatable point-set size")
    ps.add_argument("--k-range", default="1:1", help="inclusive lo:hi")
    ps.add_argument("--h-range", default="0:0", help="inclusive lo:hi")
    ps.add_argument("--x1", type=int)
    ps.add_argument("--x2", type=int)
    ps.add_argument("--r", type=int)
    ps.add_argument("--m", type=int)
    ps.set_defaults(func=cmd_sweep)

    pf = sub.add_parser("field-info", help="print the canonical field descriptor")
    pf.add_argument("--p", type=int, required=True)
    pf.add_argument("--e", type=int, required=True)
    pf.add_argument("--modulus", help="comma-separated coefficients, constant first")
    pf.set_defaults(func=cmd_field_info)

    return parser


def main(argv: Iterable[str] | None = None) -> int:
    args = build_parser().parse_args(list(argv) if argv is not None else None)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
