"""Command-line front end.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .. import groups as gc
from .. import families
from ..cyclotomic.wreath import WitnessError, check_wreath_certificate, verify_wreath_witness
from ..embedding import verify_prop_4_3, verify_prop_4_5
from ..nilpotent.hall import hall_basis, witt_number
from ..nilpotent.pcp import build_G9
from ..nilpotent.prop36 import verify_prop_3_6
from . import builtins
from .presentation import PresentationError, parse_presentation
from .realize import UnsupportedPresentation, realize

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a comma separated list of integers: {text}") from exc


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="magnusprop", description="Magnus property computations")
    ap.add_argument("--list", action="store_true", help="list builtin group names")
    ap.add_argument("--seed", type=int, default=families.DEFAULT_SEED, help="random seed")
    ap.add_argument("--threads", type=int, default=1, help="worker threads for the suite")
    sub = ap.add_subparsers(dest="command")

    mp = sub.add_parser("mp", help="Magnus property of a finite group")
    mps = mp.add_subparsers(dest="mode")
    for mode, text in (("check", "decide the Magnus property"),
                       ("weak", "check the weak Magnus property with f(n) = n")):
        p = mps.add_parser(mode, help=text)
        p.add_argument("target", help="presentation file or builtin name")
        p.add_argument("--json", metavar="OUT")

    wit = sub.add_parser("witness", help="witness-pair certificates")
    wits = wit.add_subparsers(dest="kind")
    wr = wits.add_parser("wreath", help="basic witness pair in the wreath product")
    wr.add_argument("-p", type=int, required=True)
    wr.add_argument("--json", metavar="OUT")

    ver = sub.add_parser("verify", help="run a verification")
    vs = ver.add_subparsers(dest="what")
    for name in ("g9", "prop3.6"):
        p = vs.add_parser(name)
        p.add_argument("--json", metavar="OUT")
    for name in ("prop4.3", "prop4.5"):
        p = vs.add_parser(name)
        p.add_argument("-p", type=int, default=5)
        p.add_argument("-c", type=int, required=True)
        p.add_argument("--json", metavar="OUT")
    p = vs.add_parser("example3.8")
    p.add_argument("-c", type=int, required=True)
    p.add_argument("--l-bound", type=int)
    p.add_argument("--json", metavar="OUT")
    p = vs.add_parser("family")
    p.add_argument("--primes", type=_int_list, default=[3, 5, 7])
    p.add_argument("--classes", type=_int_list, default=[1, 2, 3])
    p.add_argument("--json", metavar="OUT")
    p = vs.add_parser("suite")
    p.add_argument("--seed", type=int, dest="suite_seed")
    p.add_argument("--json", metavar="OUT")
    p.add_argument("--timings", action="store_true", help="record runtimes (bundle no longer byte-stable)")
    p = vs.add_parser("bundle", help="re-verify a saved suite bundle")
    p.add_argument("path")
    p.add_argument("--no-rerun", action="store_true")

    h = sub.add_parser("hall", help="print a Hall basis and the Witt counts")
    h.add_argument("-r", type=int, required=True)
    h.add_argument("-c", type=int, required=True)

    rz = sub.add_parser("realize", help="parse a presentation and report the realized group")
    rz.add_argument("target", help="presentation file or builtin name")
    return ap


def load_group(target: str):
    """A presentation file, or a builtin name."""
    if os.path.exists(target):
        with open(target) as fh:
            text = fh.read()
        return realize(parse_presentation(text))
    try:
        return builtins.build(target)
    except builtins.UnknownBuiltin as exc:
        raise UsageError(f"unknown builtin or missing file: {exc.args[0]}") from exc


def _write_json(path: str | None, doc: dict) -> None:
    if path:
        with open(path, "w") as fh:
            json.dump(families._json_safe(doc), fh, indent=1, sort_keys=True)
            fh.write("\n")


def _finite(target: str) -> gc.FiniteGroup:
    G = load_group(target)
    if not isinstance(G, gc.FiniteGroup):
        raise UsageError(f"{target} is not a finite group; MP checks need a multiplication table")
    return G


def cmd_mp(args) -> int:
    G = _finite(args.target)
    if args.mode == "check":
        rep = gc.is_mp(G)
        if rep.verdict:
            print(f"MP ({G.name}, order {G.order})")
        else:
            g, h = rep.counterexample
            print(f"NOT MP; witness g={G.labels[g]} h={G.labels[h]}")
        ok = rep.verify_counterexample()
    else:
        rep = gc.is_weak_mp_linear(G)
        if rep.verdict:
            print(f"WEAK MP with f(n) = n ({G.name}, order {G.order}, {len(rep.pair_data)} pairs)")
        else:
            g, h = rep.counterexample
            print(f"NOT WEAK MP; pair g={G.labels[g]} h={G.labels[h]}")
        ok = True
    doc = {"group": G.name, "order": G.order, "mode": args.mode, **rep.to_json()}
    _write_json(args.json, doc)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_witness(args) -> int:
    if args.kind != "wreath":
        raise UsageError("witness needs a kind: wreath")
    try:
        cert = verify_wreath_witness(args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    except WitnessError as exc:
        print(f"NO WITNESS: {exc}")
        _write_json(args.json, {"p": args.p, "error": str(exc), "verdict": False})
        return EXIT_FAIL
    ok = check_wreath_certificate(cert)
    print(f"{'CERTIFIED' if ok else 'FAILED'}: basic witness pair for p={args.p}; f = {cert['f']}")
    _write_json(args.json, cert)
    return EXIT_OK if ok else EXIT_FAIL


def _report(name: str, cert: dict, path: str | None) -> int:
    ok = bool(cert.get("verdict"))
    print(f"{name}: {'PASS' if ok else 'FAIL'}")
    checks = cert.get("checks")
    if isinstance(checks, dict):
        for k, v in checks.items():
            print(f"  {k}: {v}")
    _write_json(path, cert)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args, seed: int, threads: int) -> int:
    what = args.what
    if what is None:
        raise UsageError("verify needs a target")
    try:
        if what == "g9":
            _, cert = build_G9(seed=seed)
            return _report("g9", cert, args.json)
        if what == "prop3.6":
            return _report("prop3.6", verify_prop_3_6(seed=seed), args.json)
        if what == "prop4.3":
            return _report("prop4.3", verify_prop_4_3(args.p, args.c, seed=seed), args.json)
        if what == "prop4.5":
            cert = verify_prop_4_5(args.p, args.c, seed=seed)
            print("  sign report:", cert["sign_report"]["explanation"])
            return _report("prop4.5", cert, args.json)
        if what == "example3.8":
            return _report("example3.8", families.verify_example_3_8(args.c, args.l_bound), args.json)
        if what == "family":
            rep = families.verify_Gp_family(args.primes, args.classes)
            for r in rep.records:
                state = r.skipped or ("FAIL" if r.failed else "ok")
                print(f"  p={r.p} c={r.c} order={r.order} class={r.nilpotency_class} "
                      f"closed={r.cocentraliser_closed} weak={r.weak_mp} mp={r.mp} {state}")
            return _report("family", rep.to_json(), args.json)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if what == "suite":
        s = args.suite_seed if args.suite_seed is not None else seed
        bundle = families.run_paper_suite(args.json, seed=s, timings=args.timings, threads=threads)
        for e in bundle["entries"]:
            mark = "ok" if e["verdict"] == e["expected"] else "MISMATCH"
            print(f"  {e['name']:28s} {e['verdict']:4s} (expected {e['expected']}) {mark}")
        if bundle["manifest"]["missing"]:
            print("  missing entries:", ", ".join(bundle["manifest"]["missing"]))
        print(f"suite: {'PASS' if bundle['ok'] else 'FAIL'}")
        return EXIT_OK if bundle["ok"] else EXIT_FAIL
    if what == "bundle":
        try:
            res = families.verify_bundle(args.path, rerun=not args.no_rerun)
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            raise UsageError(f"cannot read bundle: {exc}") from exc
        if res["manifest"]["missing_expected_failures"]:
            print("  missing expected-failure entries:", ", ".join(res["manifest"]["missing_expected_failures"]))
        print(f"bundle: {'PASS' if res['verdict'] else 'FAIL'}")
        return EXIT_OK if res["verdict"] else EXIT_FAIL
    raise UsageError(f"unknown verification {what}")


def cmd_hall(args) -> int:
    if args.r < 1 or args.c < 1:
        raise UsageError("r and c must be positive")
    basis = hall_basis(args.r, args.c)
    for i in range(len(basis)):
        print(f"{i:4d}  weight {basis.weights[i]}  {basis.name(i)}")
    counts = basis.counts()
    witt = [witt_number(args.r, n) for n in range(1, args.c + 1)]
    print("counts by weight:", " + ".join(map(str, counts)), "=", sum(counts))
    print("Witt numbers:    ", " + ".join(map(str, witt)), "=", sum(witt))
    return EXIT_OK if list(counts) == witt else EXIT_FAIL


def cmd_realize(args) -> int:
    G = load_group(args.target)
    if isinstance(G, gc.FiniteGroup):
        print(f"{G.name}: finite group of order {G.order}")
    else:
        print(f"{G.name}: polycyclic group, Hirsch length {G.hirsch_length}, relative orders {G.orders}")
    print(f"  route: {getattr(G, 'provenance', 'builtin')}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.list:
        for line in builtins.listing():
            print(line)
        return EXIT_OK
    try:
        if args.command == "mp":
            if args.mode is None:
                raise UsageError("mp needs a mode: check or weak")
            return cmd_mp(args)
        if args.command == "witness":
            return cmd_witness(args)
        if args.command == "verify":
            return cmd_verify(args, args.seed, args.threads)
        if args.command == "hall":
            return cmd_hall(args)
        if args.command == "realize":
            return cmd_realize(args)
        raise UsageError("missing command")
    except (UsageError, PresentationError, UnsupportedPresentation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        ap.print_usage(sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
