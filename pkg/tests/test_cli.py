import csv
import io
import json

import pytest

from sporadic_sics import cli, families


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr()


def test_verify_json(capsys):
    code, out = run(capsys, "verify", "--family", "qubit-plus")
    doc = json.loads(out.out)
    assert code == 0 and doc["overall"] is True and doc["subject"] == "qubit-plus"
    assert "output" not in doc["config"]


def test_verify_failure_exit_code(capsys):
    code, out = run(capsys, "verify", "--family", "hesse-orbit", "--tolerance", "1e-30")
    assert code == 1 and json.loads(out.out)["overall"] is False


def test_usage_errors(capsys):
    assert run(capsys, "verify", "--family", "nope")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "verify", "--family", "bounds", "--tolerance", "-1")[0] == 2
    assert run(capsys, "entropy-search", "--family", "bounds")[0] == 2
    assert run(capsys, "incidence", "--family", "qubit-plus")[0] == 2
    assert run(capsys, "export", "--family", "qubit-plus", "--format", "csv")[0] == 2


def test_io_error(tmp_path, capsys):
    code, out = run(capsys, "bounds", "--output", str(tmp_path / "no" / "dir" / "x"))
    assert code == 3 and "I/O error" in out.err


def test_seed_env(monkeypatch, capsys):
    monkeypatch.setenv(cli.SEED_ENV, "7")
    code, out = run(capsys, "verify", "--family", "bounds")
    assert json.loads(out.out)["config"]["seed"] == 7
    code, out = run(capsys, "verify", "--family", "bounds", "--seed", "3")
    assert json.loads(out.out)["config"]["seed"] == 3
    monkeypatch.setenv(cli.SEED_ENV, "abc")
    assert run(capsys, "verify", "--family", "bounds")[0] == 2


def test_report_all_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    assert cli.main(["report-all", "--output", str(a)]) == 0
    assert cli.main(["report-all", "--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    doc = json.loads(a.read_text())
    assert [s["subject"] for s in doc["sections"]] == list(families.FAMILIES)
    assert doc["overall"] is True


def test_report_all_tiny_tolerance(capsys):
    code, out = run(capsys, "report-all", "--tolerance", "1e-30")
    doc = json.loads(out.out)
    assert code == 1
    passing = {s["subject"] for s in doc["sections"] if s["overall"]}
    assert passing == {"fano-28", "so8-28", "icosahedron"}


def test_report_all_csv(capsys):
    code, out = run(capsys, "report-all", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out.out)))
    assert code == 0 and rows and all(r["passed"] == "pass" for r in rows)


def test_entropy_search_report(capsys):
    code, out = run(capsys, "entropy-search", "--family", "qubit-minus", "--restarts", "8", "--format", "json")
    rep = json.loads(out.out)
    assert code == 0
    assert abs(float(rep["minimum_entropy_bits"]) - 1.584962500721156) < 1e-6
    assert all(float(m["fidelity"]) > 1 - 1e-6 for m in rep["matched_dual_states"])
    code2, out2 = run(capsys, "entropy-search", "--family", "qubit-minus", "--restarts", "8", "--format", "json")
    assert out.out == out2.out


def test_incidence_and_bounds(capsys):
    code, out = run(capsys, "incidence", "--format", "json")
    doc = json.loads(out.out)
    assert (doc["per_sic_state"], doc["per_mub_state"]) == (4, 3)
    code, out = run(capsys, "incidence", "--family", "twin-incidence", "--format", "json")
    assert json.loads(out.out)["row_regularity"] == [28]
    code, out = run(capsys, "bounds", "--format", "json")
    assert json.loads(out.out)["gerzon"]["(3, octonionic3)"] == 27
    code, out = run(capsys, "bounds")
    assert "176" in out.out


@pytest.mark.parametrize("family", families.FAMILIES)
def test_export_and_build_every_family(family, capsys):
    code, out = run(capsys, "export", "--family", family)
    assert code == 0 and json.loads(out.out) is not None
    code, out = run(capsys, "build", "--family", family, "--format", "json")
    assert code == 0 and json.loads(out.out)


def test_export_lineset_csv(capsys):
    code, out = run(capsys, "export", "--family", "so8-28", "--format", "csv")
    assert code == 0 and out.out.count("\n") == 29
