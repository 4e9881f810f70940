import json

import pytest

from godeaux3.cli import main
from godeaux3.prooftree import EXPECTED, build_nodes, topological_order
from godeaux3.report import UnknownSelector, explain, fixtures_check, run


@pytest.fixture(scope="module")
def full_report():
    return run("all")


def test_full_run_verifies(full_report):
    assert full_report.verdict == "verified"
    assert not full_report.failed_nodes()


def test_node_census(full_report):
    assert len(full_report.order) >= 40
    counts = full_report.counts()
    assert counts["axiom-assumed"] == len(EXPECTED["axioms"])
    assert counts.get("failed", 0) == 0


def test_axiom_ledger_is_exact(full_report):
    ledger = [ax["id"] for ax in full_report.axiom_ledger()]
    assert sorted(ledger) == EXPECTED["axioms"]


def test_dependency_graph_acyclic():
    registry = build_nodes()
    order = topological_order(registry)
    position = {nid: i for i, nid in enumerate(order)}
    for nid, node in registry.items():
        for dep in node.depends_on:
            assert position[dep] < position[nid]


def test_removing_any_axiom_fails_the_root():
    for ax_id in EXPECTED["axioms"]:
        report = run("all", excluded=(ax_id,))
        assert report.verdict == "failed", ax_id
        assert "t.final" in report.failed_nodes()


def test_reports_byte_identical():
    a = json.dumps(run("all").to_json(), sort_keys=True)
    b = json.dumps(run("all").to_json(), sort_keys=True)
    c = json.dumps(run("all", jobs=4).to_json(), sort_keys=True)
    assert a == b == c


def test_text_report_deterministic():
    assert run("all").to_text() == run("all", jobs=3).to_text()


def test_subtree_selectors():
    report = run("t.ii")
    assert report.verdict == "verified"
    assert "t.ii" in report.order and "t.final" not in report.order
    report = run("p.list2")
    assert report.verdict == "verified"
    assert report.results["p.list2"].status == "verified"


def test_case_id_selectors():
    report = run("1e")
    assert report.verdict == "verified"
    assert "p.1e" in report.order
    with pytest.raises(UnknownSelector):
        run("zz")


def test_json_schema(full_report):
    blob = full_report.to_json()
    assert blob["schema_version"] == "1"
    assert blob["verdict"] == "verified"
    assert {n["id"] for n in blob["nodes"]} == set(full_report.order)
    assert all(set(n) == {"id", "kind", "title", "status", "depends_on", "trace"}
               for n in blob["nodes"])


def test_explain():
    text = explain("p.no2")
    assert "13" in text and "r >= 3" in text
    text = explain("e.fixed")
    assert "h1+2h2" in text.replace(" ", "")
    text = explain("p.equiv0")
    assert "reachable" in text
    with pytest.raises(UnknownSelector):
        explain("nope")


def test_fixtures_check():
    ok, messages = fixtures_check()
    assert ok
    assert any("pencil list" in m for m in messages)


def test_cli_run_and_exit_codes(tmp_path, capsys):
    assert main(["run", "--node", "t.ii"]) == 0
    capsys.readouterr()
    out = tmp_path / "report.json"
    assert main(["run", "--format", "json", "--out", str(out)]) == 0
    blob = json.loads(out.read_text())
    assert blob["verdict"] == "verified"
    assert main(["run", "--node", "bogus"]) == 2
    assert main(["explain", "t.ii"]) == 0
    capsys.readouterr()
    assert main(["fixtures", "check"]) == 0
    capsys.readouterr()


def test_cli_jobs_deterministic(tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["run", "--format", "json", "--out", str(out1)]) == 0
    assert main(["run", "--format", "json", "--jobs", "4", "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
