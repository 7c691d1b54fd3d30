import json
import random

import pytest

from wordrep.cli import OK, REFUTED, UNKNOWN, USAGE, main
from wordrep.graph import complete_graph, empty_graph
from wordrep.io import emit_graph6

from conftest import random_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestCheckWord:
    def test_pair_golden(self, capsys):
        code, out, _ = run(capsys, "check-word", "42535214421", "--k", "1", "--pair", "4", "5")
        assert out == "subword 45544\ncount_11 2\nnon-edge at k=1\n"
        assert code == REFUTED

    def test_pair_edge(self, capsys):
        code, out, _ = run(capsys, "check-word", "42535214421", "--k", "2", "--pair", "4", "5")
        assert out.endswith("edge at k=2\n") and code == OK

    def test_against_graph(self, capsys):
        assert run(capsys, "check-word", "0101", "--graph", "A_")[0] == OK
        assert run(capsys, "check-word", "0011", "--graph", "A_")[0] == REFUTED

    def test_bad_word(self, capsys):
        assert run(capsys, "check-word", "0 1 x y z", "--pair", "0", "q")[0] == USAGE


class TestOrient:
    def test_w5(self, capsys, tmp_path):
        dot = tmp_path / "w5.dot"
        code, out, _ = run(capsys, "orient", "Ehfw", "--dot", str(dot))
        assert code == REFUTED and out.startswith("not word-representable")
        assert dot.read_text().startswith("graph G {")

    def test_representable(self, capsys, tmp_path):
        dot = tmp_path / "k4.dot"
        code, out, _ = run(capsys, "orient", emit_graph6(complete_graph(4)), "--dot", str(dot))
        assert code == OK and "arcs " in out
        assert dot.read_text().count("->") == 6

    def test_budget(self, capsys):
        assert run(capsys, "orient", "Ehfw", "--node-limit", "1")[0] == UNKNOWN

    def test_edge_list_file(self, capsys, tmp_path):
        f = tmp_path / "p.txt"
        f.write_text("a b\nb c\n")
        assert run(capsys, "orient", str(f))[0] == OK


class TestRepresent:
    def test_modes(self, capsys):
        assert run(capsys, "represent", "Ehfw", "--k", "1")[0] == OK
        assert run(capsys, "represent", "Ehfw")[0] == REFUTED
        assert run(capsys, "represent", "Ehfw", "--mode", "circle")[0] == REFUTED
        assert run(capsys, "represent", "Ch", "--mode", "interval")[0] == OK

    def test_permutational(self, capsys):
        code, out, _ = run(capsys, "represent", emit_graph6(empty_graph(2)), "--k", "2", "--mode", "permutational")
        assert code == OK and json.loads(out.splitlines()[1])["m"] == 4

    def test_budget(self, capsys):
        assert run(capsys, "represent", "Ehfw", "--k", "1", "--node-limit", "5")[0] == UNKNOWN
        assert run(capsys, "represent", "Ehfw", "--mode", "circle", "--node-limit", "2")[0] == UNKNOWN


class TestProveAndVerify:
    def test_w5_round_trip(self, capsys, tmp_path):
        cert = tmp_path / "w5.json"
        code, _, err = run(capsys, "prove", "Ehfw", "--out", str(cert))
        assert code == OK and "certified by single_edge" in err
        assert json.loads(cert.read_text())["kind"] == "matching"
        code, out, _ = run(capsys, "verify-cert", "Ehfw", str(cert))
        assert code == OK and out == "valid\n"
        assert run(capsys, "verify-cert", emit_graph6(complete_graph(6)), str(cert))[0] == REFUTED

    def test_stdout_and_synthesis(self, capsys):
        code, out, err = run(capsys, "prove", "Bw", "--synthesize")
        assert code == OK and json.loads(out)["kind"] == "word_rep"
        assert "word 0 1 2 0 1 2" in err

    def test_unknown(self, capsys):
        code, out, err = run(capsys, "prove", "KNNvR{tzaU~b", "--node-limit", "1")
        assert code == UNKNOWN and json.loads(out)["kind"] == "unknown"
        assert "word_rep:budget" in err

    def test_malformed_certificate(self, capsys, tmp_path):
        f = tmp_path / "c.json"
        f.write_text('{"kind": "matching"}')
        assert run(capsys, "verify-cert", "Ehfw", str(f))[0] == USAGE


class TestMulti:
    def test_k24(self, capsys, tmp_path):
        out = tmp_path / "m.json"
        g6 = emit_graph6(complete_graph(24))
        code, _, err = run(capsys, "multi", g6, "--out", str(out))
        # complete graphs are word-representable, so one part is enough
        assert code == OK and "m <= 1" in err
        assert json.loads(out.read_text())["m"] == 1
        assert run(capsys, "verify-cert", g6, str(out))[0] == OK

    def test_two_parts(self, capsys, tmp_path):
        out = tmp_path / "m.json"
        rng = random.Random(0)
        g6 = emit_graph6(random_graph(24, 0.5, rng))
        code, _, err = run(capsys, "multi", g6, "--out", str(out))
        assert code == OK and "m <= 2" in err
        data = json.loads(out.read_text())
        assert data["strict"] and data["m"] == 2
        assert run(capsys, "verify-cert", g6, str(out))[0] == OK

    def test_non_strict(self, capsys):
        code, out, _ = run(capsys, "multi", "Ehfw", "--non-strict")
        assert code == OK and json.loads(out)["strict"] is False

    def test_too_large(self, capsys):
        assert run(capsys, "multi", emit_graph6(empty_graph(30)))[0] == UNKNOWN


class TestCensus:
    def test_six(self, capsys, tmp_path):
        out, summ = tmp_path / "c.jsonl", tmp_path / "c.csv"
        code, text, _ = run(capsys, "census", "--n", "6", "--out", str(out), "--summary", str(summ), "--workers", "2")
        assert code == OK
        assert text.startswith("n=6 total=156 non_wr=1 non_wr_connected=1 certified=156 unknown=0")
        head = json.loads(out.read_text().splitlines()[0])["manifest"]
        assert head["source"] == "enumerate n=6" and head["config"]["workers"] == 2
        assert "output" not in head["config"]
        assert summ.read_text().splitlines()[1] == "6,156,1,1,156,0"

    def test_file_with_errors(self, capsys, tmp_path):
        f = tmp_path / "in.g6"
        f.write_text("Ehfw\nEh\n")
        code, _, err = run(capsys, "census", "--input", str(f))
        assert code == USAGE and "line 2" in err

    def test_unknown(self, capsys, tmp_path):
        f = tmp_path / "in.g6"
        f.write_text("IrI@nreTo\n")
        assert run(capsys, "census", "--input", str(f), "--node-limit", "1")[0] == UNKNOWN

    def test_needs_one_source(self, capsys):
        assert run(capsys, "census")[0] == USAGE
        assert run(capsys, "census", "--n", "8")[0] == USAGE

    def test_config_file_and_env(self, capsys, tmp_path, monkeypatch):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({"workers": 1, "seed": 4}))
        monkeypatch.setenv("WORDREP_CONFIG", str(cfg))
        monkeypatch.setenv("WORDREP_SEED", "5")
        out = tmp_path / "c.jsonl"
        assert run(capsys, "census", "--n", "3", "--out", str(out))[0] == OK
        assert json.loads(out.read_text().splitlines()[0])["manifest"]["config"]["seed"] == 5


class TestUsage:
    @pytest.mark.parametrize(
        "argv",
        [[], ["frobnicate"], ["orient"], ["orient", "Ehf"], ["orient", "Ehfw", "--node-limit", "x"], ["prove", "Ehfw", "--t-max", "0"]],
    )
    def test_usage_errors(self, capsys, argv):
        assert run(capsys, *argv)[0] == USAGE

    def test_help(self, capsys):
        code, out, _ = run(capsys, "--help")
        assert code == OK and "check-word" in out
