import json

import pytest

import hamfree.cli as cli
from hamfree.aleph import ProofTraceViolation
from hamfree.enumeration import write_graph6
from hamfree.graph import complete_bipartite, h1, petersen
from hamfree.graph6 import to_graph6


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def test_check_panel(capsys):
    code, out = run(capsys, "check", to_graph6(complete_bipartite(2, 3)), "--json")
    assert code == 0
    panel = json.loads(out)
    assert panel["tau"] == "2/3"
    assert panel["kappa"] == 2
    assert panel["alpha"] == 3
    assert panel["hamiltonian"] is False
    assert panel["in_aleph"] is True


def test_check_text(capsys):
    code, out = run(capsys, "check", to_graph6(petersen()))
    assert code == 0
    assert "4/3" in out


def test_verify_exit_zero(capsys):
    code, out = run(capsys, "verify", "thm2", "--n-max", "7")
    assert code == 0
    assert "verified-at-scale" in out


def test_verify_json_lines(capsys):
    code, out = run(capsys, "verify", "prop1", "--n-max", "5", "--json")
    assert code == 0
    record = json.loads(out)
    assert record["claim"] == "prop1" and record["violations"] == []


def test_gallery_exit_two(capsys):
    code, out = run(capsys, "gallery")
    assert code == 2
    assert "example-discrepant" in out


def test_hunt_with_universe_file(capsys, tmp_path):
    path = tmp_path / "u.g6"
    write_graph6([petersen(), h1()], path)
    code, out = run(capsys, "hunt", "conj2", "--universe", str(path), "--json")
    assert code == 0
    assert json.loads(out)["graphs_scanned"] == 2


def test_audits(capsys):
    assert run(capsys, "verify", "audit.dichotomy", "--n-max", "6")[0] == 0
    assert run(capsys, "verify", "audit.segments", "--n-max", "5")[0] == 0


def test_gen(capsys):
    code, out = run(capsys, "gen", "--n", "5", "--connected")
    assert code == 0
    assert len(out.split()) == 21
    code, out = run(capsys, "gen", "--n", "4", "--free", "K1+P2")
    assert out.split() == ["C?", "CF", "C]", "C^", "C~"]


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "zz"],
        ["verify", "nope", "--n-max", "3"],
        ["hunt", "thm1", "--n-max", "3"],
        ["frobnicate"],
        ["verify", "thm1"],
        ["gen", "--n", "4", "--free", "Q7"],
    ],
)
def test_usage_errors(capsys, argv):
    assert cli.main(argv) == 1


def test_proof_trace_exit_code(capsys, monkeypatch):
    def broken(G):
        raise ProofTraceViolation("synthetic", {"graph6": to_graph6(G)})

    monkeypatch.setattr(cli, "theorem1_dichotomy", broken)
    code, out = run(capsys, "check", to_graph6(complete_bipartite(2, 3)))
    assert code == 3
    assert "proof-trace violated" in out
