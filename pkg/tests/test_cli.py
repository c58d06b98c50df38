"""Tests for the command-line interface."""

import io
import json

import pytest

from cdsgame.cli import main
from cdsgame.jsonio import dump_document, graph_to_doc
from cdsgame.families import gen_chain


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def write_graph(tmp_path, g, name="g.json"):
    path = tmp_path / name
    path.write_text(dump_document(graph_to_doc(g)))
    return str(path)


def test_perm_pile(capsys):
    code, doc = run_cli(capsys, "perm", "pile", "--perm", "3 6 5 2 4 8 1 7")
    assert code == 0
    assert doc["pile"] == [7, 4, 6, 1, 5, 3, 2]
    assert doc["sortable"] is False


def test_perm_apply_and_moves(capsys):
    code, doc = run_cli(
        capsys, "perm", "apply", "--perm", "3 6 5 2 4 8 1 7", "--pair", "3,6"
    )
    assert code == 0
    assert doc["result"] == [3, 4, 8, 1, 5, 2, 6, 7]
    code, doc = run_cli(capsys, "perm", "moves", "--perm", "2 4 1 3")
    assert code == 0
    assert doc["moves"] == [["1", "2"], ["1", "3"], ["2", "3"]]


def test_perm_overlap_and_fixedpoints(capsys):
    code, doc = run_cli(capsys, "perm", "overlap", "--perm", "3 1 4 2 5")
    assert code == 0
    assert doc == {
        "vertices": ["1", "2", "3", "4"],
        "edges": [["1", "3"], ["1", "4"], ["2", "4"]],
    }
    code, doc = run_cli(capsys, "perm", "fixedpoints", "--perm", "2 4 1 3")
    assert code == 0
    assert doc["codes"] == [1, 2, 3] and doc["identity"] is False
    code, doc = run_cli(capsys, "perm", "sortable", "--perm", "1 2 3")
    assert code == 0
    assert doc["sortable"] is True and doc["pile_size"] == 0


def test_gen_commands(capsys):
    code, doc = run_cli(capsys, "gen", "alpha", "--n", "8")
    assert code == 0
    assert doc == {"perm": [5, 7, 6, 3, 2, 4, 8, 1]}
    code, doc = run_cli(capsys, "gen", "chain", "--m", "1")
    assert code == 0
    assert doc["vertices"] == ["1", "2", "3"]
    code, doc = run_cli(capsys, "gen", "favorable", "--m", "5")
    assert code == 0
    assert doc == {"favorable": [2, 4, 8]}
    code, doc = run_cli(capsys, "gen", "tight", "--n", "8")
    assert code == 0
    assert doc["perm"] == [5, 7, 6, 3, 2, 4, 8, 1]
    assert len(doc["favorable"]) == 2


def test_graph_commands(capsys, tmp_path):
    chain = write_graph(tmp_path, gen_chain(1))
    code, doc = run_cli(capsys, "graph", "gcds2", "--graph", chain, "--edge", "1,3")
    assert code == 0
    assert doc == {"vertices": ["2"], "edges": []}
    code, doc = run_cli(capsys, "graph", "gcds", "--graph", chain, "--edge", "1,3")
    assert code == 0
    assert doc["vertices"] == ["1", "2", "3"] and doc["edges"] == []
    other = write_graph(tmp_path, gen_chain(1).relabel({1: "a", 2: "b", 3: "c"}), "h.json")
    code, doc = run_cli(capsys, "graph", "iso", "--graph", chain, "--other", other)
    assert code == 0
    assert doc["isomorphic"] is True
    assert sorted(doc["mapping"]) == ["1", "2", "3"]


def test_graph_reads_stdin_for_piping(capsys, monkeypatch):
    doc_text = dump_document(graph_to_doc(gen_chain(1)))
    monkeypatch.setattr("sys.stdin", io.StringIO(doc_text))
    code, doc = run_cli(capsys, "graph", "gcds2", "--graph", "-", "--edge", "1,3")
    assert code == 0
    assert doc == {"vertices": ["2"], "edges": []}


def test_solve_gcds_matches_known_position(capsys, tmp_path):
    chain = write_graph(tmp_path, gen_chain(2))
    code, doc = run_cli(
        capsys, "solve", "gcds", "--graph", chain, "--favorable", "2,4",
        "--first", "ONE",
    )
    assert code == 0
    assert doc["winner"] == "TWO"
    assert "timing" in doc and "seconds" in doc["timing"]


def test_solve_np(capsys, tmp_path):
    chain = write_graph(tmp_path, gen_chain(1))
    code, doc = run_cli(capsys, "solve", "np", "--graph", chain, "--favorable", "2")
    assert code == 0
    assert doc["status"] == "N" and doc["anomaly"] is False


def test_solve_cds_with_cache(capsys, tmp_path):
    cache = str(tmp_path / "c.tsv")
    argv = ["solve", "cds", "--perm", "2 4 1 3", "--favorable", "1",
            "--first", "ONE", "--cache", cache]
    code, doc = run_cli(capsys, *argv)
    assert code == 0 and doc["winner"] == "ONE"
    cold_nodes = doc["nodes_expanded"]
    code, doc = run_cli(capsys, *argv)
    assert code == 0 and doc["winner"] == "ONE"
    assert doc["nodes_expanded"] < cold_nodes


def test_empty_favorable_is_legal(capsys, tmp_path):
    chain = write_graph(tmp_path, gen_chain(1))
    code, doc = run_cli(capsys, "solve", "gcds", "--graph", chain, "--favorable", "")
    assert code == 0
    assert doc["winner"] == "TWO"


def test_exit_code_invalid_input(capsys, tmp_path):
    code, doc = run_cli(capsys, "perm", "pile", "--perm", "1 2 x")
    assert code == 2 and "error" in doc
    code, doc = run_cli(capsys, "gen", "alpha", "--n", "7")
    assert code == 2
    chain = write_graph(tmp_path, gen_chain(1))
    code, doc = run_cli(capsys, "graph", "gcds", "--graph", chain, "--edge", "1,9")
    assert code == 2
    code, doc = run_cli(capsys, "solve", "gcds", "--graph",
                        str(tmp_path / "nope.json"), "--favorable", "")
    assert code == 2


def test_exit_code_size_bound(capsys):
    word = " ".join(str(i) for i in range(1, 13))
    code, doc = run_cli(capsys, "solve", "cds", "--perm", word, "--favorable", "")
    assert code == 4
    assert doc["error"]["type"] == "size-bound"


def test_exit_code_verification(capsys):
    code, doc = run_cli(capsys, "verify", "formats")
    assert code == 0
    assert doc["ok"] is True and doc["suites"][0]["failures"] == []
    code, doc = run_cli(capsys, "verify", "chain-collapse")
    assert code == 3
    assert doc["ok"] is False
    assert len(doc["suites"][0]["failures"]) == 10


def test_verify_output_is_deterministic(capsys):
    code1, doc1 = run_cli(capsys, "verify", "formats", "--seed", "5")
    code2, doc2 = run_cli(capsys, "verify", "formats", "--seed", "5")
    assert code1 == code2 == 0
    doc1.pop("timing")
    doc2.pop("timing")
    assert doc1 == doc2


def test_pretty_flag(capsys):
    code = main(["gen", "chain", "--m", "1", "--pretty"])
    out = capsys.readouterr().out
    assert code == 0 and "\n" in out.strip()
    assert json.loads(out)["vertices"] == ["1", "2", "3"]


def test_cache_export_import(capsys, tmp_path):
    cache = str(tmp_path / "a.tsv")
    run_cli(capsys, "solve", "cds", "--perm", "2 4 1 3", "--favorable", "1",
            "--cache", cache)
    code, doc = run_cli(capsys, "cache", "export", "--cache", cache)
    assert code == 0 and doc["entries"] > 0
    merged = str(tmp_path / "m.tsv")
    code, doc = run_cli(capsys, "cache", "import", "--cache", merged,
                        "--input", cache, "--input", cache)
    assert code == 0
    assert doc["added"] == doc["entries"]


def test_play_cds_game(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("1,3\n"))
    code = main(["play", "--perm", "3 1 4 2 5", "--favorable", "2", "--human", "ONE"])
    out = capsys.readouterr().out
    doc = json.loads(out)
    assert code == 0
    assert doc["game"] == "cds"
    assert doc["moves"][0] == {"mover": "ONE", "move": ["1", "3"]}
    assert doc["winner"] in ("ONE", "TWO")


def test_play_engine_opens_and_wins(capsys, monkeypatch):
    # Engine is ONE with favorable {1}; it should win without consulting the
    # human at all (one move ends the game).
    monkeypatch.setattr("sys.stdin", io.StringIO(""))
    code = main(["play", "--perm", "2 4 1 3", "--favorable", "1", "--human", "TWO"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["winner"] == "ONE" and doc["human_won"] is False


def test_play_rejects_ambiguous_setup(capsys):
    code = main(["play", "--favorable", "1"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 2 and "error" in doc


def test_play_handles_eof(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(""))
    code = main(["play", "--perm", "3 1 4 2 5", "--favorable", "2", "--human", "ONE"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 2 and "error" in doc
