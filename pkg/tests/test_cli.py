"""End-to-end command checks: the documented invocations, their frozen
outputs, and the exit code contract (0 ok, 1 input error, 2 suite
failure)."""

import json
import subprocess
import sys

import pytest

from solgeom import cli, verify
from solgeom.catalog import g2_group
from solgeom.verify import VerificationReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_isom_example(capsys):
    code, out = run(capsys, "invariant", "isom", "3,2;4,3", "3,-2;-4,3")
    assert code == 0
    assert out["schema"] == "solgeom/isom-v1"
    assert out["isomorphic"] is True
    assert out["left"] == out["right"] == {"p": 3, "q": 2, "r": 4}


def test_isom_distinct(capsys):
    code, out = run(capsys, "invariant", "isom", "3,2;4,3", "3,4;2,3")
    assert code == 0 and out["isomorphic"] is False


def test_validate_ok(capsys):
    code, out = run(capsys, "invariant", "validate", "3,2;4,3")
    assert code == 0
    assert out == {"schema": "solgeom/invariant-v1", "p": 3, "q": 2, "r": 4,
                   "matrix": "3,2;4,3"}


def test_validate_parity_error(capsys):
    code, out = run(capsys, "invariant", "validate", "2,1;3,2")
    assert code == 1
    assert out == {"schema": "solgeom/error-v1",
                   "error": "p is even; it must be odd"}


def test_validate_rejects_inverse_form(capsys):
    code, out = run(capsys, "invariant", "validate", "3,-2;-4,3")
    assert code == 1 and "q <= 0" in out["error"]


def test_normalize_accepts_inverse_form(capsys):
    code, out = run(capsys, "invariant", "normalize", "3,-2;-4,3")
    assert code == 0
    assert (out["p"], out["q"], out["r"]) == (3, 2, 4)


def test_normalize_hopeless_input(capsys):
    code, out = run(capsys, "invariant", "normalize", "1,0;0,1")
    assert code == 1 and "neither the matrix nor its inverse" in out["error"]


def test_enumerate_max_four(capsys):
    code, out = run(capsys, "invariant", "enumerate", "--max", "4")
    assert code == 0
    assert out["schema"] == "solgeom/enumeration-v1"
    assert out["maxEntry"] == 4 and out["count"] == 4
    assert out["invariants"] == [
        {"p": 3, "q": 2, "r": 4}, {"p": 3, "q": 4, "r": 2},
        {"p": -3, "q": 2, "r": 4}, {"p": -3, "q": 4, "r": 2}]


def test_enumerate_default_bound(capsys):
    code, out = run(capsys, "invariant", "enumerate")
    assert code == 0 and out["maxEntry"] == 20 and out["count"] == 52


def test_h1_example(capsys):
    code, out = run(capsys, "group", "h1", "G2")
    assert code == 0
    assert out == {"schema": "solgeom/h1-v1", "group": "G2", "rank": 1,
                   "torsion": [2, 2]}


def test_center_example(capsys):
    code, out = run(capsys, "group", "center", "kb-monodromy(3,2;4,3)")
    assert code == 0
    assert out["schema"] == "solgeom/center-v1"
    assert out["rank"] == 1
    assert out["generator"] == "x^2"
    assert out["generators"] == ["x^2"]


def test_center_trivial_has_no_singular_key(capsys):
    code, out = run(capsys, "group", "center", "pillowcase(3,2,4)")
    assert code == 0 and out["rank"] == 0
    assert out["generators"] == [] and "generator" not in out


def test_torsion_example(capsys):
    code, out = run(capsys, "group", "torsion", "pillowcase(3,2,4)",
                    "--max-word", "7")
    assert code == 0
    assert out["schema"] == "solgeom/torsion-v1"
    assert out["maxWordLength"] == 7
    assert out["torsion_found"] is False
    assert "witness" not in out


def test_torsion_witness(capsys):
    code, out = run(capsys, "group", "torsion", "Dinf")
    assert code == 0
    assert out["torsion_found"] is True
    assert out["witness"] == {"element": "u", "order": 2}


def test_torsion_needs_dihedral_quotient(capsys):
    code, out = run(capsys, "group", "torsion", "G2")
    assert code == 1 and "Dinf" in out["error"]


def test_w1_report(capsys):
    code, out = run(capsys, "group", "w1", "pillowcase(3,2,4)")
    assert code == 0
    assert out["schema"] == "solgeom/w1-v1"
    assert out["characters"] == {"x": 0, "y": 0, "z": 0, "u": 1, "v": 1}
    assert out["factors_through_z4"] is True


def test_group_from_description_file(capsys, tmp_path):
    path = tmp_path / "g2.json"
    path.write_text(json.dumps(g2_group().to_description()))
    code, out = run(capsys, "group", "h1", str(path))
    assert code == 0 and out["rank"] == 1 and out["torsion"] == [2, 2]


def test_description_missing_field(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text(json.dumps({"kind": "Zq"}))
    code, out = run(capsys, "group", "h1", str(path))
    assert code == 1 and "missing field" in out["error"]


def test_unknown_group(capsys):
    code, out = run(capsys, "group", "h1", "G3")
    assert code == 1 and "G3" in out["error"]


def test_unknown_suite(capsys):
    code, out = run(capsys, "verify", "no-such-suite")
    assert code == 1 and "unknown suite" in out["error"]


def test_verify_success(capsys):
    code, out = run(capsys, "verify", "catalog-examples")
    assert code == 0
    assert out["schema"] == "solgeom/verify-report-v1"
    assert out["ok"] is True and out["failures"] == []


def test_verify_passes_bounds(capsys):
    code, out = run(capsys, "verify", "order-twelve", "--box", "2")
    assert code == 0 and out["parameters"] == {"box": 2}
    code, out = run(capsys, "verify", "bordered-family", "--a-max", "4")
    assert code == 0 and out["parameters"] == {"aMax": 4}
    code, out = run(capsys, "verify", "roundtrip", "--max", "8")
    assert code == 0 and out["parameters"] == {"maxEntry": 8}


def test_verify_failure_exits_two(capsys, monkeypatch):
    canned = VerificationReport(
        "order-twelve", 3,
        [{"input": (1, 0, 0, 1), "expected": "x", "actual": "y"}],
        0.01, {"box": 1})

    def fake(name, **kwargs):
        return canned

    monkeypatch.setattr(verify, "run_suite", fake)
    code, out = run(capsys, "verify", "order-twelve")
    assert code == 2
    assert out["ok"] is False and len(out["failures"]) == 1


def test_pretty_flag(capsys):
    code, out = run(capsys, "group", "h1", "G2", "--pretty")
    assert code == 0 and out["rank"] == 1
    cli.main(["group", "h1", "G2", "--pretty"])
    text = capsys.readouterr().out
    assert text.count("\n") > 3


def test_usage_error_is_exit_one(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["bogus"])
    assert exc.value.code == 1
    out = json.loads(capsys.readouterr().out)
    assert out["schema"] == "solgeom/error-v1"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "solgeom.cli", "invariant", "isom",
         "3,2;4,3", "3,-2;-4,3"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["isomorphic"] is True
