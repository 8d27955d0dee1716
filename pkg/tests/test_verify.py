"""Suite runner checks: every shipped suite is green at its default
bounds, reports serialize to the documented shape, and the worker pool
honors the SOLFOUR_THREADS override."""

import pytest

import oracles
from solgeom import verify
from solgeom.gl2z import element_order
from solgeom.intmat import IntMatrix
from solgeom.verify import VerificationReport, run_suite


@pytest.mark.parametrize("name", sorted(verify.SUITES))
def test_suite_green_at_defaults(name):
    rep = run_suite(name)
    assert rep.suite == name
    assert rep.ok, rep.failures[:3]
    assert rep.failures == []
    assert rep.instances > 0
    assert rep.elapsed >= 0.0


def test_report_json_shape():
    rep = run_suite("order-twelve", box=2)
    d = rep.to_json_dict()
    assert d["schema"] == "solgeom/verify-report-v1"
    assert set(d) == {"schema", "suite", "ok", "instances", "failures",
                      "elapsed_seconds", "parameters"}
    assert d["suite"] == "order-twelve"
    assert d["ok"] is True
    assert d["parameters"] == {"box": 2}
    assert isinstance(d["elapsed_seconds"], float)


def test_ok_reflects_failures():
    good = VerificationReport("s", 1, [], 0.0, {})
    bad = VerificationReport("s", 1, [{"input": 0}], 0.0, {})
    assert good.ok and not bad.ok
    assert bad.to_json_dict()["ok"] is False


def test_failures_sorted_by_input():
    # a check that fails on everything, fed deliberately unsorted keys
    def check(k):
        return verify._fail(k, "x", "y")

    rep = verify._run("fake", ["b", "a", "c"], check, {})
    assert [f["input"] for f in rep.failures] == ["a", "b", "c"]
    assert rep.instances == 3 and not rep.ok


def test_order_twelve_instance_count_matches_oracle():
    rep = run_suite("order-twelve", box=2)
    assert rep.instances == len(oracles.unimodular_box(2))


def test_two_ended_counts_pairs_plus_synthetics():
    finite = [t for t in oracles.unimodular_box(2)
              if element_order(IntMatrix([t[:2], t[2:]])) is not None]
    rep = run_suite("two-ended", box=2)
    assert rep.instances == len(finite) ** 2 + len(verify._SYNTHETIC_PAIRS)
    assert rep.ok


def test_bound_routing():
    rep = run_suite("roundtrip", max_entry=8)
    assert rep.parameters["maxEntry"] == 8
    assert rep.ok
    # bounds that do not apply to a suite are ignored, not errors
    rep = run_suite("catalog-examples", box=5, max_entry=9)
    assert rep.ok


def test_unknown_suite():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite("no-such-suite")


def test_homology_note_records_split():
    rep = run_suite("homology")
    notes = rep.parameters["notes"]
    assert len(notes) == 1 and "24 of 52" in notes[0]


def test_worker_count_env(monkeypatch):
    monkeypatch.setenv(verify.THREADS_ENV, "3")
    assert verify.worker_count() == 3
    monkeypatch.setenv(verify.THREADS_ENV, "0")
    assert verify.worker_count() == 1
    monkeypatch.setenv(verify.THREADS_ENV, "not-a-number")
    assert verify.worker_count() >= 1
    monkeypatch.delenv(verify.THREADS_ENV)
    assert verify.worker_count() >= 1


def test_single_thread_same_result(monkeypatch):
    parallel = run_suite("homology")
    monkeypatch.setenv(verify.THREADS_ENV, "1")
    serial = run_suite("homology")
    assert serial.ok == parallel.ok
    assert serial.instances == parallel.instances
    assert serial.failures == parallel.failures
    assert serial.parameters == parallel.parameters
