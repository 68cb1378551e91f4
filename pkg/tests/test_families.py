import json
from importlib import resources

import jsonschema
import pytest

from magnusprop import families as F
from magnusprop import groups as gc


@pytest.fixture(scope="module")
def bundle():
    return F.run_paper_suite()


def _schema(name):
    return json.loads(resources.files("magnusprop").joinpath("schemas", name).read_text())


def test_suite_matches_expectations(bundle):
    assert bundle["ok"]
    for e in bundle["entries"]:
        assert e["verdict"] == e["expected"], e["name"]
    names = [e["name"] for e in bundle["entries"]]
    assert names == list(F.MANIFEST)
    assert F.MANIFEST["wreath_p3"] == "fail"


def test_bundle_is_byte_identical_across_runs(bundle):
    again = F.run_paper_suite(only=None)
    assert F.dump_bundle(again) == F.dump_bundle(bundle)


def test_bundle_schema(bundle):
    jsonschema.validate(json.loads(F.dump_bundle(bundle)), _schema("suite_bundle.schema.json"))


def test_removing_expected_failure_is_flagged(bundle):
    pruned = dict(bundle)
    pruned["entries"] = [e for e in bundle["entries"] if e["name"] != "wreath_p3"]
    man = F.check_manifest(pruned)
    assert man["missing_expected_failures"] == ["wreath_p3"]
    assert not F.bundle_ok(pruned)
    assert not F.verify_bundle(pruned, rerun=False)["verdict"]


def test_flipped_expectation_is_flagged(bundle):
    edited = json.loads(F.dump_bundle(bundle))
    for e in edited["entries"]:
        if e["name"] == "wreath_p3":
            e["expected"] = "pass"
    assert "wreath_p3" in F.check_manifest(edited)["wrong_expectation"]


def test_saved_bundle_reverifies(tmp_path):
    path = tmp_path / "bundle.json"
    F.run_paper_suite(str(path), only=["cyclic_mp_table", "wreath_p3", "prop4.3_c1"])
    doc = json.loads(path.read_text())
    res = F.verify_bundle(doc, rerun=True)
    assert res["reproduced"]
    assert all(r["identical_certificate"] for r in res["entries"])
    # partial bundles miss manifest entries, so the full check fails
    assert not res["verdict"]


def test_timings_are_opt_in():
    b = F.run_paper_suite(only=["cyclic_mp_table"], timings=True)
    assert isinstance(b["entries"][0]["runtime_ms"], int)
    b = F.run_paper_suite(only=["cyclic_mp_table"])
    assert b["entries"][0]["runtime_ms"] is None


def test_crashing_job_is_recorded_as_failure():
    job = F.Job("broken", {}, lambda: 1 / 0)
    entry = F._run_job(job, timings=False)
    assert entry["verdict"] == "fail" and "ZeroDivisionError" in entry["certificate"]["error"]


def test_family_records():
    rep = F.verify_Gp_family([3, 5, 7], [1, 2, 3])
    assert rep.verdict
    for r in rep.records:
        if r.skipped:
            assert r.order > F.FAMILY_CAP
            continue
        assert r.nilpotency_class == r.c
        assert r.gamma_matches and r.cocentraliser_closed and r.weak_mp


@pytest.mark.parametrize("p,c", [(3, 3), (5, 2), (3, 2)])
def test_padic_commutator_sets(p, c):
    rep = F.padic_closure_check(p, c)
    assert rep["all_match"] and rep["all_closed"] and rep["verdict"]


@pytest.mark.parametrize("c", [1, 2])
def test_cyclic_by_finite_box(c):
    rep = F.verify_example_3_8(c)
    assert rep["commutator_sets_match"] and rep["mp_failures"] == 0 and rep["verdict"]


def test_cocentraliser_identities_on_small_groups():
    for G in (gc.build_dihedral(4), gc.build_quaternion(), gc.build_metacyclic(3, 2)):
        assert F.cocentraliser_identities(G)["verdict"]


def test_inheritance_suites():
    assert F.quotient_inheritance_suite()["verdict"]
    assert F.retract_inheritance_suite()["verdict"]
    assert F.weak_mp_implication_suite()["verdict"]
    assert F.three_group_criterion_suite()["verdict"]


def test_collect_oracle_small_run():
    rep = F.collect_oracle_suite(pairs=120, seed=3)
    assert rep["mismatch_count"] == 0
    assert len(rep["per_config"]) == 6
