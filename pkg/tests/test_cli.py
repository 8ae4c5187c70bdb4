import json

import pytest

from pcties.cli import main
from pcties.fileio import matrix_to_csv, matrix_to_json
from pcties.core import graph_to_matrix, validate_matrix
from pcties.extremal import gen_max_tournament

from conftest import WORKED_MATRIX


@pytest.fixture
def worked_json(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(
        matrix_to_json(validate_matrix(WORKED_MATRIX), labels=["A1", "A2", "A3", "A4", "A5"])
    )
    return path


class TestAnalyze:
    def test_worked_example_text(self, worked_json, capsys):
        assert main(["analyze", str(worked_json), "--list-triads"]) == 0
        out = capsys.readouterr().out
        assert "inconsistent 5/10" in out
        assert "zeta_g = 1/2 (0.5)" in out
        assert "eta = 1/2 (0.5)" in out
        assert "{A1, A2, A3}" in out and "{A3, A4, A5}" in out

    def test_all_zeros(self, tmp_path, capsys):
        path = tmp_path / "z.csv"
        path.write_text(matrix_to_csv(validate_matrix([[0] * 4 for _ in range(4)])))
        assert main(["analyze", str(path)]) == 0
        out = capsys.readouterr().out
        assert "inconsistent 0/4" in out and "zeta_g = 1 (1)" in out

    def test_tournament_fast_path(self, tmp_path, capsys):
        path = tmp_path / "t.csv"
        path.write_text(matrix_to_csv(graph_to_matrix(gen_max_tournament(6))))
        assert main(["analyze", str(path)]) == 0
        out = capsys.readouterr().out
        assert "tournament" in out
        assert "inconsistent 8/8" in out and "zeta = 0 (0)" in out
        assert "eta = 2/5 (0.4)" in out

    def test_ties_denominator_flag(self, tmp_path, capsys):
        path = tmp_path / "t.csv"
        path.write_text(matrix_to_csv(graph_to_matrix(gen_max_tournament(6))))
        assert main(["analyze", str(path), "--with-ties-denominator"]) == 0
        out = capsys.readouterr().out
        assert "inconsistent 8/20" in out and "zeta_g = 3/5" in out

    def test_json_output_stable(self, worked_json, capsys):
        assert main(["analyze", str(worked_json), "--json"]) == 0
        first = capsys.readouterr().out
        assert main(["analyze", str(worked_json), "--json"]) == 0
        second = capsys.readouterr().out
        assert first == second
        doc = json.loads(first)
        assert doc["zeta"] == "1/2" and doc["eta_float"] == 0.5
        assert len(doc["inconsistent_triads"]) == 5

    def test_missing_file_io_error(self, capsys):
        assert main(["analyze", "/nonexistent/file.json"]) == 1

    def test_invalid_matrix_exit_2(self, tmp_path, capsys):
        path = tmp_path / "bad.csv"
        path.write_text("0,1\n1,0\n")
        assert main(["analyze", str(path)]) == 2
        err = capsys.readouterr().err
        assert "(0,1)" in err


class TestGenerate:
    def test_max_tournament_matrix_bytes(self, capsys):
        assert main(["generate", "max-tournament", "6", "--format", "matrix"]) == 0
        out = capsys.readouterr().out
        expected = (
            "0,1,1,1,-1,-1\n-1,0,1,1,1,-1\n-1,-1,0,1,1,1\n"
            "-1,-1,-1,0,1,1\n1,-1,-1,-1,0,1\n1,1,-1,-1,-1,0\n"
        )
        assert out == expected

    def test_max_dt_edges(self, capsys):
        assert main(["generate", "max-dt", "5", "--format", "edges"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 10
        assert sum(1 for l in lines if ">" in l) == 4
        assert sum(1 for l in lines if "=" in l) == 6

    def test_n1_empty_edges(self, capsys):
        assert main(["generate", "max-tournament", "1", "--format", "edges"]) == 0
        assert capsys.readouterr().out == ""

    def test_output_file(self, tmp_path):
        out = tmp_path / "x.csv"
        assert main(["generate", "max-tournament", "7", "--output", str(out)]) == 0
        from pcties.fileio import load_matrix

        m, _ = load_matrix(out)
        from conftest import MAX_T7

        assert m.to_lists() == MAX_T7

    def test_self_check_failure_exit_3(self, monkeypatch, capsys):
        import pcties.cli as cli_mod

        monkeypatch.setattr(cli_mod.indices, "count_inconsistent", lambda g: -1)
        assert main(["generate", "max-dt", "5"]) == 3
        assert "self-check failed" in capsys.readouterr().err


class TestBounds:
    def test_csv_file(self, tmp_path, capsys):
        path = tmp_path / "b.csv"
        assert main(["bounds", "10", "--csv", str(path)]) == 0
        lines = path.read_text().strip().splitlines()
        assert len(lines) == 47
        h = [int(l.split(",")[-1]) for l in lines[1:]]
        assert max(h) == 110 and h.index(110) == 20

    def test_stdout(self, capsys):
        assert main(["bounds", "3"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "n,m,C,D,E,F,F_decimal,F_clamped,G,H"


class TestCover:
    def test_exact_n5(self, capsys):
        assert main(["cover", "5", "--mode", "exact"]) == 0
        out = capsys.readouterr().out
        assert "size 4" in out

    def test_json(self, capsys):
        assert main(["cover", "6", "--mode", "greedy", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["size"] >= doc["lower_bound"] == 6


class TestCertify:
    def test_gt4_pass(self, capsys):
        assert main(["certify", "4", "--family", "gt"]) == 0
        out = capsys.readouterr().out
        assert "max 4 == Y(4)" in out and "PASS" in out

    def test_tournament5_pass(self, capsys):
        assert main(["certify", "5", "--family", "t"]) == 0
        out = capsys.readouterr().out
        assert "max 5 == I(5)" in out and "PASS" in out

    def test_budget_exit(self, capsys):
        assert main(["certify", "6", "--family", "gt"]) == 2

    def test_json(self, capsys):
        assert main(["certify", "3", "--family", "gt", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["pass"] is True and doc["max"] == 1 and doc["visited"] == 27
