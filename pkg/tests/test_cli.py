import json
import subprocess
import sys

import numpy as np
import pytest

from qecgraph.cli import main

JSON_KEYS = ["expr", "n", "m", "diameter", "qec", "formula",
             "delta1", "delta2", "lambda_min", "srg"]


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_text_output(self, capsys):
        code, out, err = run_cli(capsys, "eval", "petersen")
        assert code == 0 and err == ""
        lines = dict(line.split(None, 1) for line in out.splitlines())
        assert lines["expr"] == "petersen"
        assert lines["vertices"] == "10"
        assert lines["edges"] == "15"
        assert lines["diameter"] == "2"
        assert lines["qec"].endswith("[diam2_regular]")
        assert lines["formula"] == "0  [srg]"
        assert lines["srg"] == "(10, 3, 0, 1)"

    def test_json_fields(self, capsys):
        code, out, err = run_cli(capsys, "eval", "C(5)+Kbar(2)", "--json")
        assert code == 0
        doc = json.loads(out)
        assert list(doc) == JSON_KEYS
        assert doc["expr"] == "C(5) + Kbar(2)"
        assert (doc["n"], doc["m"], doc["diameter"]) == (7, 15, 2)
        assert abs(doc["qec"]["value"] - 2 / 7) < 1e-9
        assert doc["qec"]["witness"] is None
        assert doc["formula"] == {"value": "2/7", "source": "regular-join"}
        assert doc["srg"] is None
        assert doc["delta2"] <= doc["qec"]["value"] < doc["delta1"]

    def test_json_no_formula(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "P(4)", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["formula"] == {"value": None, "source": None}
        assert doc["qec"]["method"] == "compression"

    def test_json_float_formula(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "C(5)", "--json")
        assert code == 0
        doc = json.loads(out)
        assert isinstance(doc["formula"]["value"], float)
        assert abs(doc["formula"]["value"] - doc["qec"]["value"]) < 1e-9

    def test_witness_json(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "Kb(2,4)", "--json", "--witness")
        assert code == 0
        doc = json.loads(out)
        f = np.array(doc["qec"]["witness"], dtype=float)
        assert f.shape == (6,)
        assert abs(f @ f - 1.0) < 1e-9
        assert abs(f.sum()) < 1e-9

    def test_witness_text(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "K(3)", "--witness")
        assert code == 0
        witness_lines = [l for l in out.splitlines() if l.startswith("witness")]
        assert len(witness_lines) == 1
        assert len(witness_lines[0].split()) == 4

    def test_method_override(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "C(5)", "--method", "stationary")
        assert code == 0
        assert "[stationary]" in out

    def test_file_input(self, capsys, tmp_path):
        edges = tmp_path / "g.edges"
        edges.write_text("# a 4-cycle\n0 1\n1 2\n2 3\n3 0\n")
        code, out, _ = run_cli(capsys, "eval", "--file", str(edges), "--json")
        assert code == 0
        doc = json.loads(out)
        assert (doc["n"], doc["m"]) == (4, 4)
        assert abs(doc["qec"]["value"]) < 1e-9
        assert doc["expr"] == f'file("{edges}")'

    def test_file_and_expr_conflict(self, capsys, tmp_path):
        edges = tmp_path / "g.edges"
        edges.write_text("0 1\n")
        code, _, err = run_cli(capsys, "eval", "K(2)", "--file", str(edges))
        assert code == 2 and "error" in err

    def test_neither_expr_nor_file(self, capsys):
        code, _, err = run_cli(capsys, "eval")
        assert code == 2 and "error" in err

    def test_bad_edge_file_reports_line(self, capsys, tmp_path):
        edges = tmp_path / "bad.edges"
        edges.write_text("0 1\n0 0\n")
        code, _, err = run_cli(capsys, "eval", "--file", str(edges))
        assert code == 2
        assert "line 2" in err

    def test_parse_error(self, capsys):
        code, _, err = run_cli(capsys, "eval", "K(")
        assert code == 2
        assert "position 3" in err

    def test_disconnected(self, capsys):
        code, _, err = run_cli(capsys, "eval", "union(K(2), K(2))")
        assert code == 3
        assert "disconnected" in err

    def test_cli_size_cap(self, capsys):
        code, _, err = run_cli(capsys, "eval", "K(2100)")
        assert code == 3
        assert "--max-vertices" in err

    def test_size_cap_flag(self, capsys):
        code, _, _ = run_cli(capsys, "eval", "Kb(40,40)", "--max-vertices", "50")
        assert code == 3

    def test_library_hard_cap(self, capsys):
        code, _, err = run_cli(capsys, "eval", "double(K(3000))")
        assert code == 3


class TestSpectrum:
    def test_text(self, capsys):
        code, out, _ = run_cli(capsys, "spectrum", "chang(1)")
        assert code == 0
        lines = dict(line.split(None, 1) for line in out.splitlines())
        assert lines["vertices"] == "28"
        assert lines["adjacency"] == "12^1  4^7  -2^20"
        assert lines["distance"].startswith("42^1")

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "spectrum", "C(4)", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["n"] == 4
        adj = doc["adjacency"]
        assert [m for _, m in adj] == [1, 2, 1]
        assert abs(adj[0][0] - 2) < 1e-9 and abs(adj[2][0] + 2) < 1e-9

    def test_parse_error_exit(self, capsys):
        code, _, _ = run_cli(capsys, "spectrum", "nosuch(3)")
        assert code == 2


class TestVerify:
    def test_single_family(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--family", "friendship", "--max", "6")
        assert code == 0
        line = out.strip()
        assert line.startswith("family=friendship cases=6 max_dev=")
        assert line.endswith("status=PASS")

    def test_bipartite_case_count(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--family", "bipartite", "--max", "8")
        assert code == 0
        assert "cases=64" in out

    def test_max_n_alias(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--family", "cycle", "--max-n", "10")
        assert code == 0
        assert "cases=8" in out

    def test_unknown_family(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--family", "nosuch")
        assert code == 2
        assert "choose from" in err

    def test_seeded_families_reproducible(self, capsys):
        args = ("verify", "--family", "double", "--samples", "6", "--seed", "7")
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2


class TestTable:
    def test_all_rows_pass(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--paper-examples")
        assert code == 0
        assert "FAIL" not in out
        footer = out.strip().splitlines()[-1]
        assert footer.endswith("rows pass")
        count = footer.split()[0]
        total = count.split("/")
        assert total[0] == total[1]

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--paper-examples", "--json")
        assert code == 0
        rows = json.loads(out)
        assert len(rows) >= 100
        assert all(row["ok"] for row in rows)
        assert {"label", "expected", "computed", "ok"} <= set(rows[0])


class TestEntryPoints:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "qecgraph", "eval", "K(4)", "--json"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["qec"]["value"] == -1.0

    def test_console_script(self):
        proc = subprocess.run(
            ["qec", "eval", "K(4)"], capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert "-1" in proc.stdout

    def test_json_byte_stable(self):
        cmd = [sys.executable, "-m", "qecgraph", "eval", "shrikhande + K(2)", "--json"]
        first = subprocess.run(cmd, capture_output=True).stdout
        second = subprocess.run(cmd, capture_output=True).stdout
        assert first == second and first

    def test_usage_error_exit(self):
        proc = subprocess.run(
            [sys.executable, "-m", "qecgraph", "eval", "--method", "bogus", "K(3)"],
            capture_output=True,
        )
        assert proc.returncode == 2
