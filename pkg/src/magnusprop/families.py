"""Family verifications, corpus property suites and the certificate bundle."""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import groups as gc
from .cyclotomic.wreath import (WitnessError, check_explicit_expansion_p5, check_wreath_certificate,
                                explicit_pair_p5, verify_wreath_witness)
from .embedding import verify_prop_4_3, verify_prop_4_5
from .nilpotent import truncated
from .nilpotent.collect import NilWord, collect
from .nilpotent.hall import hall_basis
from .nilpotent.pcp import build_G9
from .nilpotent.prop36 import verify_prop_3_6

SUITE_VERSION = "1"
DEFAULT_SEED = 20240
FAMILY_CAP = 10_000


def _json_safe(obj):
    """Convert numpy scalars and tuples so that ``json.dumps`` accepts the object."""
    if isinstance(obj, dict):
        return {str(k): _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return _json_safe(obj.tolist())
    return obj


def _valuation(n: int, p: int) -> float:
    if n == 0:
        return float("inf")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


# -- metacyclic family -----------------------------------------------------------------

@dataclass
class FamilyRecord:
    p: int
    c: int
    order: int | None = None
    nilpotency_class: int | None = None
    gamma_orders: list[int] = field(default_factory=list)
    gamma_matches: bool | None = None
    cocentraliser_closed: bool | None = None
    weak_mp: bool | None = None
    mp: bool | None = None
    skipped: str | None = None
    failed: bool = False

    def to_json(self) -> dict:
        return dict(self.__dict__)


@dataclass
class FamilyReport:
    records: list[FamilyRecord]

    @property
    def verdict(self) -> bool:
        return all(not r.failed for r in self.records)

    def to_json(self) -> dict:
        return {"records": [r.to_json() for r in self.records], "verdict": self.verdict}


def _a_power(p: int, c: int, k: int) -> int:
    # forms t^i a^j sit at index i * p^c + j
    return k % (p ** c)


def verify_Gp_family(primes, c_values, cap: int = FAMILY_CAP) -> FamilyReport:
    records = []
    for p in primes:
        for c in c_values:
            rec = FamilyRecord(p, c)
            order = p ** (2 * c - 1)
            if order > cap:
                rec.order = order
                rec.skipped = f"order {order} exceeds cap {cap}"
                records.append(rec)
                continue
            G = gc.build_metacyclic(p, c)
            rec.order = G.order
            s = gc.series(G)
            rec.nilpotency_class = s.nilpotency_class
            rec.gamma_orders = [t.order for t in s.lower_central]
            ok = len(s.lower_central) == c + 1
            for i in range(1, len(s.lower_central)):
                expected = G.subgroup([_a_power(p, c, p ** i)])
                ok &= s.lower_central[i] == expected and s.lower_central[i].order == p ** (c - i)
            rec.gamma_matches = bool(ok)
            rec.cocentraliser_closed = gc.cocentraliser_closed(G)
            rec.weak_mp = gc.is_weak_mp_linear(G).verdict
            rec.mp = gc.is_mp(G).verdict
            rec.failed = not (rec.nilpotency_class == c and rec.gamma_matches
                              and rec.cocentraliser_closed and rec.weak_mp)
            records.append(rec)
    return FamilyReport(records)


def padic_closure_check(p: int, c: int) -> dict:
    """Commutator sets in ``G_{p,c}`` against ``<a^(p^m)>`` with ``m`` from the valuations."""
    G = gc.build_metacyclic(p, c)
    na = p ** c
    rows = []
    ok_all = closed_all = True
    for h in range(1, G.order):
        lam, mu = divmod(h, na)
        m = 1 + min(_valuation(lam, p), _valuation(mu, p))
        step = p ** m if m < c else na
        expected = np.arange(0, na, step)        # indices of a^(k p^m), k >= 0
        got = gc.commutator_set(G, h)
        match = np.array_equal(got, np.sort(expected))
        closed = bool(gc._is_closed(G, got))
        ok_all &= match
        closed_all &= closed
        if not match or h < 4 * p:
            rows.append({"h": G.labels[h], "m": m if m != float("inf") else None,
                         "size": int(got.size), "match": bool(match), "closed": closed})
    return {"p": p, "c": c, "order": G.order, "all_match": bool(ok_all),
            "all_closed": bool(closed_all), "sample_rows": rows,
            "convention": "v(0) is +infinity; <a^(p^m)> is truncated at a^(p^c) = 1",
            "verdict": bool(ok_all and closed_all)}


# -- the infinite metacyclic example with a^t = a^4 ----------------------------------------

class _CyclicByFinite:
    """``<t> x| C_(3^c)`` with ``a^t = a^4``; elements are pairs ``(l, m)``."""

    def __init__(self, c: int):
        self.n = 3 ** c
        self.period = 3 ** (c - 1)

    def act(self, m: int, l: int) -> int:
        return m * pow(4, l, self.n) % self.n

    def mul(self, x, y):
        return (x[0] + y[0], (self.act(x[1], y[0]) + y[1]) % self.n)

    def inv(self, x):
        return (-x[0], -self.act(x[1], -x[0]) % self.n)

    def comm(self, x, y):
        return self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))

    def conj(self, x, y):
        return self.mul(self.mul(self.inv(y), x), y)

    def power(self, x, k):
        out, base = (0, 0), x if k >= 0 else self.inv(x)
        for _ in range(abs(k)):
            out = self.mul(out, base)
        return out


def verify_example_3_8(c: int, l_bound: int | None = None) -> dict:
    """Commutator sets and conjugacy in ``<t, a | a^(3^c) = [a,t] a^-3 = 1>`` on a finite box."""
    if c < 1:
        raise ValueError("c must be positive")
    G = _CyclicByFinite(c)
    l_bound = 3 ** c if l_bound is None else l_bound
    if l_bound < 3 ** c:
        raise ValueError("l_bound must be at least 3^c")
    n_a = G.n
    if pow(4, G.period, n_a) != 1 or (G.period > 1 and pow(4, G.period // 3, n_a) == 1):
        raise AssertionError("order of 4 modulo 3^c is not 3^(c-1)")
    ws = [(i, j) for i in range(G.period) for j in range(n_a)]
    box = [(l, m) for l in range(-l_bound, l_bound + 1) for m in range(n_a) if (l, m) != (0, 0)]
    data = {}
    bad = []
    for g in box:
        l, m = g
        n = 1 + min(_valuation(l, 3), _valuation(m, 3))
        step = 3 ** n if n < c else n_a
        expected = set(range(0, n_a, step))
        comms = {G.comm(g, w) for w in ws}
        if any(x[0] != 0 for x in comms):
            bad.append({"g": g, "reason": "commutator outside <a>"})
            continue
        got = {x[1] for x in comms}
        closed = all((u + v) % n_a in got for u in got for v in got)
        if got != expected or not closed:
            bad.append({"g": list(g), "n": n, "got": sorted(got)})
        # normal closure <g> M: t-exponent l and the coset of M
        conj_class = {G.conj(g, w) for w in ws}
        data[g] = (n, step, conj_class)

    def closure_key(g):
        l, m = g
        step = data[g][1]
        if l == 0:
            # <a^m> M inside <a>
            return ("A", math.gcd(m, step, n_a))
        return ("T", abs(l), step, m % step if l > 0 else G.inv(g)[1] % step)

    buckets: dict = {}
    for g in data:
        buckets.setdefault(closure_key(g), []).append(g)
    pairs = mp_fail = 0
    for members in buckets.values():
        for g in members:
            for h in members:
                pairs += 1
                if h not in data[g][2] and G.inv(h) not in data[g][2]:
                    mp_fail += 1
    return {
        "c": c, "l_bound": l_bound, "box_size": len(box), "conjugator_range": [G.period, n_a],
        "completeness": ("[g, t^i a^j] depends on i only modulo the order 3^(c-1) of 4 mod 3^c, "
                         "so the conjugator range covers the whole group"),
        "closure_rule": ("<g>^G = <g> M with M = {[g,w]}; for l != 0 equal closures force the same |l| "
                         "and g^(+-1) = h mod M, for l = 0 they are subgroups of <a>"),
        "commutator_mismatches": bad[:10], "commutator_sets_match": not bad,
        "pairs_checked": pairs, "mp_failures": mp_fail,
        "verdict": not bad and mp_fail == 0,
    }


# -- corpus and property suites ------------------------------------------------------------

def corpus() -> list[gc.FiniteGroup]:
    """Small finite groups used by the property suites."""
    out = [gc.build_cyclic(m) for m in range(1, 13)]
    out += [gc.build_dihedral(n) for n in range(3, 7)]
    out.append(gc.build_quaternion())
    out += [gc.build_metacyclic(3, 1), gc.build_metacyclic(3, 2), gc.build_metacyclic(5, 2)]
    tg = gc.build_three_group()
    out.append(tg)
    out.append(gc.build_quotient(tg, gc.center(tg)))
    out += direct_products()
    return out


def direct_products() -> list[gc.FiniteGroup]:
    return [gc.build_direct_product(a, b) for a, b in product_factors()]


def product_factors() -> list[tuple[gc.FiniteGroup, gc.FiniteGroup]]:
    return [(gc.build_cyclic(2), gc.build_cyclic(2)), (gc.build_cyclic(2), gc.build_cyclic(3)),
            (gc.build_cyclic(3), gc.build_cyclic(3)), (gc.build_cyclic(2), gc.build_dihedral(3)),
            (gc.build_cyclic(3), gc.build_quaternion()), (gc.build_cyclic(2), gc.build_cyclic(4)),
            (gc.build_dihedral(4), gc.build_cyclic(3)), (gc.build_cyclic(4), gc.build_cyclic(6))]


def cocentraliser_identities(G: gc.FiniteGroup) -> dict:
    """The four co-centraliser identities, checked for every element of ``G``."""
    n = G.order
    whole = np.arange(n)
    closures = [G.normal_closure([g]) for g in range(n)]
    ccs = [gc.cocentraliser(G, g) for g in range(n)]
    ok = [True, True, True, True]
    for g in range(n):
        cc, nc = ccs[g], closures[g]
        cyc = G.generate([g])
        prod = set(np.unique(G.mul[np.ix_(cyc, cc.members)]).tolist())
        ok[0] &= cc.is_normal() and prod == set(nc.members.tolist())
        ok[1] &= G.commutator_subgroup(nc.members, whole) == cc
        ok[2] &= all(ccs[int(h)] <= cc for h in nc.members)
    by_key: dict = {}
    for g in range(n):
        by_key.setdefault(closures[g], []).append(g)
    for members in by_key.values():
        ok[3] &= all(ccs[h] == ccs[members[0]] for h in members)
    return {"group": G.name, "order": n, "normal_and_product": bool(ok[0]),
            "equals_commutator_with_G": bool(ok[1]), "monotone": bool(ok[2]),
            "closure_invariant": bool(ok[3]), "verdict": bool(all(ok))}


def cocentraliser_suite(groups_: list | None = None, max_order: int = 512) -> dict:
    rows = [cocentraliser_identities(G) for G in (groups_ or corpus()) if G.order <= max_order]
    return {"groups": rows, "verdict": all(r["verdict"] for r in rows)}


def quotient_inheritance_suite(groups_: list | None = None) -> dict:
    """MP passes to every quotient of an MP group."""
    rows = []
    for G in groups_ or corpus():
        if not gc.is_mp(G).verdict:
            continue
        for N in gc.normal_subgroups(G):
            Q = gc.build_quotient(G, N)
            rows.append({"group": G.name, "normal_order": N.order, "quotient_mp": gc.is_mp(Q).verdict})
    return {"checked": len(rows), "failures": [r for r in rows if not r["quotient_mp"]],
            "verdict": all(r["quotient_mp"] for r in rows)}


def retract_inheritance_suite(pairs: list | None = None) -> dict:
    """If ``H x K`` is MP then so are both factors."""
    rows = []
    for H, K in pairs or product_factors():
        P = gc.build_direct_product(H, K)
        mp = gc.is_mp(P).verdict
        hm, km = gc.is_mp(H).verdict, gc.is_mp(K).verdict
        rows.append({"product": P.name, "product_mp": mp, "factors_mp": [hm, km],
                     "ok": (not mp) or (hm and km)})
    return {"rows": rows, "verdict": all(r["ok"] for r in rows)}


def weak_mp_implication_suite(groups_: list | None = None) -> dict:
    rows = []
    for G in groups_ or corpus():
        closed = gc.cocentraliser_closed(G)
        weak = gc.is_weak_mp_linear(G).verdict if closed else None
        rows.append({"group": G.name, "closed": closed, "weak": weak, "ok": (not closed) or weak})
    return {"rows": rows, "verdict": all(r["ok"] for r in rows)}


def three_group_criterion_suite(groups_: list | None = None) -> dict:
    """The 3-group criterion agrees with ``is_mp`` on eligible corpus groups."""
    rows = []
    for G in groups_ or corpus():
        n = G.order
        while n % 3 == 0:
            n //= 3
        if n != 1 or G.order == 1 or gc.series(G).nilpotency_class > 2:
            continue
        crit, mp = gc.check_3group_criterion(G), gc.is_mp(G).verdict
        rows.append({"group": G.name, "criterion": crit, "mp": mp, "agree": crit == mp})
    return {"rows": rows, "verdict": all(r["agree"] for r in rows)}


def collect_oracle_suite(pairs: int = 1000, seed: int = 0,
                         configs=((2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4))) -> dict:
    """Hall collection, compiled products and the truncated-algebra image agree on random pairs."""
    rng = random.Random(seed)
    mismatches = []
    per_config: dict = {}
    for k in range(pairs):
        r, c = configs[k % len(configs)]
        u = [(rng.randrange(r), rng.choice((1, -1))) for _ in range(rng.randint(0, 8))]
        v = [(rng.randrange(r), rng.choice((1, -1))) for _ in range(rng.randint(0, 8))]
        slow = collect(u + v, r, c)
        fast = NilWord.from_letters(u, r, c) * NilWord.from_letters(v, r, c)
        oracle = truncated.image(u + v, c)
        image = truncated.normal_form_image(hall_basis(r, c), slow.exponents, c)
        ok = slow == fast and oracle == image
        per_config[f"{r},{c}"] = per_config.get(f"{r},{c}", 0) + 1
        if not ok:
            mismatches.append({"r": r, "c": c, "u": u, "v": v})
    return {"pairs": pairs, "seed": seed, "per_config": per_config,
            "mismatches": mismatches[:10], "mismatch_count": len(mismatches),
            "verdict": not mismatches}


def cyclic_mp_table(limit: int = 30) -> dict:
    mp = [m for m in range(1, limit + 1) if gc.is_mp(gc.build_cyclic(m)).verdict]
    return {"limit": limit, "mp_orders": mp, "verdict": mp == [1, 2, 3, 4, 6]}


def three_group_checks() -> dict:
    G = gc.build_three_group()
    s = gc.series(G)
    z = s.center
    derived = G.commutator_subgroup(np.arange(G.order), np.arange(G.order))
    quo = gc.build_quotient(G, z)
    rep = gc.is_mp(G)
    a, b = G.index_of("a"), G.index_of("b")
    nc = G.normal_closure([a])
    expected_nc = G.subgroup([a, G.power(b, 3)])
    a4 = G.power(a, 4)
    quo_elem_ab = bool(np.array_equal(quo.mul, quo.mul.T)) and all(
        quo.power(x, 3) == 0 for x in range(quo.order))
    checks = {
        "order_243": G.order == 243,
        "center_is_derived": z == derived,
        "center_order_9": z.order == 9,
        "quotient_order_27_elementary_abelian": quo.order == 27 and quo_elem_ab,
        "not_mp": not rep.verdict,
        "witness_a_a4": rep.counterexample == (a, a4),
        "witness_reverifies": rep.verify_counterexample(),
        "normal_closure_a_b3_order_27": nc == expected_nc and nc.order == 27
        and G.normal_closure([a4]) == nc,
        "criterion_false": not gc.check_3group_criterion(G),
    }
    return {"checks": checks, "witness": [G.labels[i] for i in rep.counterexample],
            "verdict": all(checks.values())}


# -- the bundle ---------------------------------------------------------------------------------

@dataclass
class Job:
    name: str
    params: dict
    run: Callable[[], dict]
    expected: str = "pass"


def _wreath_negative() -> dict:
    try:
        verify_wreath_witness(3)
    except WitnessError as exc:
        return {"p": 3, "error": str(exc), "verdict": False}
    return {"p": 3, "verdict": True}


def _wreath_job(p: int) -> dict:
    cert = verify_wreath_witness(p)
    cert["recheck"] = check_wreath_certificate(cert)
    cert["verdict"] = cert["verdict"] and cert["recheck"]
    return cert


def _wreath_p5_pair() -> dict:
    f, fbar = explicit_pair_p5()
    cert = verify_wreath_witness(5, f=f, fbar=fbar)
    exp = check_explicit_expansion_p5()
    return {"certificate": cert, "expansion": exp,
            "verdict": cert["verdict"] and check_wreath_certificate(cert) and all(
                v for k, v in exp.items() if k != "product_mod_T5_minus_1")}


def _g9_job(seed: int) -> dict:
    _, cert = build_G9(seed=seed)
    return cert


def _family_job(primes, classes) -> dict:
    return verify_Gp_family(primes, classes).to_json()


def suite_jobs(seed: int = DEFAULT_SEED) -> list[Job]:
    jobs = [
        Job("cyclic_mp_table", {"limit": 30}, lambda: cyclic_mp_table(30)),
        Job("three_group", {}, three_group_checks),
        Job("g9", {"seed": seed}, lambda: _g9_job(seed)),
        Job("prop3.6", {"seed": seed}, lambda: verify_prop_3_6(seed=seed)),
    ]
    for p in (5, 7, 11, 13):
        jobs.append(Job(f"wreath_p{p}", {"p": p}, lambda p=p: _wreath_job(p)))
    jobs.append(Job("wreath_p5_explicit_pair", {"p": 5}, _wreath_p5_pair))
    jobs.append(Job("wreath_p3", {"p": 3}, _wreath_negative, expected="fail"))
    for c in (1, 2, 3):
        jobs.append(Job(f"prop4.3_c{c}", {"p": 5, "c": c, "seed": seed},
                        lambda c=c: verify_prop_4_3(5, c, seed=seed)))
    for c in (1, 2):
        jobs.append(Job(f"prop4.5_c{c}", {"p": 5, "c": c, "seed": seed},
                        lambda c=c: verify_prop_4_5(5, c, seed=seed)))
    jobs.append(Job("family", {"primes": [3, 5, 7], "classes": [1, 2, 3]},
                    lambda: _family_job([3, 5, 7], [1, 2, 3])))
    for p, c in ((3, 3), (5, 2)):
        jobs.append(Job(f"padic_p{p}_c{c}", {"p": p, "c": c}, lambda p=p, c=c: padic_closure_check(p, c)))
    for c in (1, 2, 3):
        jobs.append(Job(f"example3.8_c{c}", {"c": c, "l_bound": 3 ** c},
                        lambda c=c: verify_example_3_8(c)))
    jobs.append(Job("cocentraliser_identities", {"max_order": 512}, cocentraliser_suite))
    jobs.append(Job("quotient_inheritance", {}, quotient_inheritance_suite))
    jobs.append(Job("retract_inheritance", {}, retract_inheritance_suite))
    jobs.append(Job("weak_mp_implication", {}, weak_mp_implication_suite))
    jobs.append(Job("three_group_criterion", {}, three_group_criterion_suite))
    jobs.append(Job("collect_oracle", {"pairs": 1000, "seed": seed},
                    lambda: collect_oracle_suite(1000, seed)))
    return jobs


MANIFEST = {job.name: job.expected for job in suite_jobs()}


def _run_job(job: Job, timings: bool) -> dict:
    start = time.perf_counter()
    try:
        cert = job.run()
        verdict = bool(cert.get("verdict"))
    except Exception as exc:            # a crash is a recorded failure, not an abort
        cert = {"error": f"{type(exc).__name__}: {exc}"}
        verdict = False
    elapsed = round((time.perf_counter() - start) * 1000) if timings else None
    return {"name": job.name, "params": job.params, "verdict": "pass" if verdict else "fail",
            "expected": job.expected, "runtime_ms": elapsed, "certificate": _json_safe(cert)}


def run_paper_suite(output_path=None, seed: int = DEFAULT_SEED, timings: bool = False,
                    only: list[str] | None = None, threads: int = 1) -> dict:
    """Run every verification job and write the bundle as JSON.

    Runtimes are recorded only with ``timings=True`` so that default bundles are
    byte-identical across runs with the same seed.
    """
    jobs = [j for j in suite_jobs(seed) if only is None or j.name in only]
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(threads) as pool:
            entries = list(pool.map(lambda j: _run_job(j, timings), jobs))
    else:
        entries = [_run_job(j, timings) for j in jobs]
    bundle = {"suite_version": SUITE_VERSION, "seed": seed, "entries": entries}
    bundle["manifest"] = check_manifest(bundle, partial=only is not None)
    bundle["ok"] = bundle_ok(bundle, partial=only is not None)
    if output_path is not None:
        with open(output_path, "w") as fh:
            fh.write(dump_bundle(bundle))
    return bundle


def dump_bundle(bundle: dict) -> str:
    return json.dumps(bundle, indent=1, sort_keys=True) + "\n"


def check_manifest(bundle: dict, partial: bool = False) -> dict:
    names = {e["name"]: e for e in bundle["entries"]}
    missing = [] if partial else [n for n in MANIFEST if n not in names]
    missing_expected_failures = [n for n in missing if MANIFEST[n] == "fail"]
    wrong_expectation = [n for n, e in names.items() if n in MANIFEST and e["expected"] != MANIFEST[n]]
    unknown = [n for n in names if n not in MANIFEST]
    return {"missing": missing, "missing_expected_failures": missing_expected_failures,
            "wrong_expectation": wrong_expectation, "unknown": unknown,
            "ok": not (missing or wrong_expectation or unknown)}


def bundle_ok(bundle: dict, partial: bool = False) -> bool:
    entries_ok = all(e["verdict"] == e["expected"] for e in bundle["entries"])
    return entries_ok and check_manifest(bundle, partial)["ok"]


def verify_bundle(bundle: dict | str, rerun: bool = True) -> dict:
    """Re-check a serialized bundle: manifest, expectations and, optionally, every verdict by rerunning."""
    if isinstance(bundle, str):
        with open(bundle) as fh:
            bundle = json.load(fh)
    manifest = check_manifest(bundle)
    rows = []
    jobs = {j.name: j for j in suite_jobs(bundle["seed"])}
    for e in bundle["entries"]:
        row = {"name": e["name"], "recorded": e["verdict"], "expected": e["expected"]}
        if rerun and e["name"] in jobs:
            fresh = _run_job(jobs[e["name"]], timings=False)
            row["rerun"] = fresh["verdict"]
            row["identical_certificate"] = fresh["certificate"] == e["certificate"]
        rows.append(row)
    reproduced = all(r.get("rerun", r["recorded"]) == r["recorded"] for r in rows)
    matches = all(r["recorded"] == r["expected"] for r in rows)
    return {"manifest": manifest, "entries": rows, "reproduced": reproduced,
            "verdict": manifest["ok"] and reproduced and matches}
