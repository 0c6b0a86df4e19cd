import json

import pytest

import config
import csf
from partition_algebra import Basis, SymFunc
from verifiers import VerificationReport, instance_descriptor
from weighted_graph import complete_graph, edgeless_graph
from witness_store import WitnessStore


@pytest.fixture(autouse=True)
def witness_dir(monkeypatch, tmp_path):
    monkeypatch.setattr(config, "WITNESS_DIR", tmp_path / "witnesses")
    return tmp_path / "witnesses"


def write_json(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def json_lines(out):
    return [json.loads(line) for line in out.splitlines() if line.strip()]


def test_compute_triangle_in_e_basis(tmp_path, capsys, triangle):
    path = write_json(tmp_path / "k3.json", triangle.to_json())
    assert csf.main(["compute", path, "--basis", "e"]) == 0
    [out] = json_lines(capsys.readouterr().out)
    assert out == {"basis": "e", "degree": 3, "terms": [{"partition": [3], "num": 6, "den": 1}]}


def test_compute_edgeless_with_all_engines(tmp_path, capsys):
    path = write_json(tmp_path / "k31.json", edgeless_graph([3, 1]).to_json())
    assert csf.main(["compute", path, "--engine", "all"]) == 0
    [out] = json_lines(capsys.readouterr().out)
    assert SymFunc.from_json(out) == SymFunc.element(Basis.P, (3, 1))


def test_compute_loop_is_zero(tmp_path, capsys, loop_graph):
    path = write_json(tmp_path / "loop.json", loop_graph.to_json())
    assert csf.main(["compute", path]) == 0
    [out] = json_lines(capsys.readouterr().out)
    assert out["terms"] == [] and out["degree"] == 3


def test_compute_pretty_table(tmp_path, capsys, weighted_edge):
    path = write_json(tmp_path / "edge.json", weighted_edge.to_json())
    assert csf.main(["compute", path, "--pretty"]) == 0
    text = capsys.readouterr().out
    assert "p-basis, degree 3" in text
    assert "p(2,1)" in text and "p(3)" in text


def test_compute_errors(tmp_path, monkeypatch, triangle):
    assert csf.main(["compute", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": [{"id": 0, "weight": -1}]}')
    assert csf.main(["compute", str(bad)]) == 2
    monkeypatch.setattr(config, "SUBSET_EDGE_LIMIT", 1)
    path = write_json(tmp_path / "k3.json", triangle.to_json())
    assert csf.main(["compute", path, "--engine", "subsets"]) == 2


def test_usage_errors():
    with pytest.raises(SystemExit) as info:
        csf.main(["compute"])
    assert info.value.code == 2
    with pytest.raises(SystemExit):
        csf.main(["compute", "x.json", "--basis", "z"])


def test_verify_standalone(capsys):
    assert csf.main(["verify", "fig1", "--no-progress"]) == 0
    lines = json_lines(capsys.readouterr().out)
    assert lines[0]["check"] == "fig1" and lines[0]["passed"]
    assert lines[-1]["failed"] == 0 and lines[-1]["total"] == 1


def test_verify_with_overrides(capsys, witness_dir):
    assert csf.main(["verify", "involution", "--n", "3", "--maxw", "2", "--no-progress"]) == 0
    summary = json_lines(capsys.readouterr().out)[-1]
    assert summary["summary"]["involution"]["failed"] == 0
    assert summary["total"] > 0
    assert not witness_dir.exists()


def has_loop(line):
    return [0, 0] in line["instance"]["graph"]["edges"]


def test_verify_overrides_keep_the_multigraph_family(capsys):
    assert csf.main(["verify", "involution", "--n", "2", "--maxw", "2", "--no-progress"]) == 0
    reports = json_lines(capsys.readouterr().out)[:-1]
    assert any(has_loop(r) for r in reports)
    assert csf.main(["verify", "involution", "--n", "2", "--maxw", "2", "--simple-only", "--no-progress"]) == 0
    reports = json_lines(capsys.readouterr().out)[:-1]
    assert reports and not any(has_loop(r) for r in reports)
    assert csf.main(["verify", "stanley", "--n", "2", "--multigraphs", "--no-progress"]) == 0
    assert json_lines(capsys.readouterr().out)[-1]["failed"] == 0


def test_verify_flip_small(capsys):
    assert csf.main(["verify", "flip", "--n", "3", "--no-progress"]) == 0
    assert json_lines(capsys.readouterr().out)[-1]["failed"] == 0


def test_verify_random_corpus(capsys):
    assert csf.main(["verify", "engines", "--n", "5", "--seed", "3", "--count", "10", "--no-progress"]) == 0
    summary = json_lines(capsys.readouterr().out)[-1]
    assert summary["total"] == 10


def test_verify_unknown_check():
    assert csf.main(["verify", "nope"]) == 2


def test_verify_failure_writes_witness(monkeypatch, capsys, witness_dir):
    import verifiers

    def broken(g):
        return [VerificationReport("engines", instance_descriptor(g), False, {"why": "forced"})]

    monkeypatch.setitem(verifiers.EXPANSIONS, "engines", broken)
    assert csf.main(["verify", "engines", "--n", "2", "--no-progress"]) == 1
    assert json_lines(capsys.readouterr().out)[-1]["failed"] > 0
    assert list((witness_dir / "engines").glob("*.json"))


def test_convert(tmp_path, capsys):
    path = write_json(tmp_path / "p2.json", SymFunc.element(Basis.P, (2,)).to_json())
    assert csf.main(["convert", path, "--basis", "e"]) == 0
    [out] = json_lines(capsys.readouterr().out)
    assert SymFunc.from_json(out).as_dict() == {(1, 1): 1, (2,): -2}
    bad = write_json(tmp_path / "bad.json", {"basis": "p"})
    assert csf.main(["convert", bad, "--basis", "e"]) == 2


def test_replay_and_witness_listing(capsys, witness_dir):
    report = VerificationReport("engines", instance_descriptor(complete_graph([1, 2])), False, {"why": "old bug"})
    path = WitnessStore().save(report)
    assert csf.main(["replay", str(path)]) == 0
    [out] = json_lines(capsys.readouterr().out)
    assert out["passed"]
    assert csf.main(["witnesses"]) == 0
    assert path.name in capsys.readouterr().out
    assert csf.main(["witnesses", "--summary"]) == 0
    assert "Total witnesses: 1" in capsys.readouterr().out


def test_replay_bad_file(tmp_path):
    path = write_json(tmp_path / "x.json", {"nothing": True})
    assert csf.main(["replay", path]) == 2


def test_witnesses_empty(capsys):
    assert csf.main(["witnesses"]) == 0
    assert "No witnesses" in capsys.readouterr().out


def test_search_trees(capsys):
    assert csf.main(["search-trees", "--n", "5", "--weights", "1,2,1,3,2"]) == 0
    summary = json_lines(capsys.readouterr().out)[-1]
    assert summary["pairs"] >= 1
    assert csf.main(["search-trees", "--n", "3", "--weights", "1,2"]) == 2
