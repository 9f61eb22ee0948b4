import json

import pytest

from circleact.cli import main

PETRIE_TEXT = "+ 7 2 3\n- 7 2 3\n+ 5 2 3\n- 5 2 3\n"
NEG1_TEXT = "+ 1 2 4\n+ 1 2 3\n- 2 3 4\n- 1 1 2\n"
CP2_TEXT = "+ 1 3\n- 1 2\n+ 2 3\n"


@pytest.fixture
def petrie_file(tmp_path):
    p = tmp_path / "petrie.txt"
    p.write_text(PETRIE_TEXT)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCheck:
    def test_pass(self, capsys, petrie_file):
        code, out, _ = run(capsys, "check", petrie_file)
        assert code == 0
        assert "overall: PASS" in out

    def test_fail(self, capsys, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text(NEG1_TEXT)
        code, out, _ = run(capsys, "check", str(p))
        assert code == 1
        assert "overall: FAIL" in out

    def test_json_and_order(self, capsys, petrie_file):
        code, out, _ = run(capsys, "--json", "check", "--order", "4", petrie_file)
        assert code == 0
        lines = out.strip().splitlines()
        reports = json.loads(lines[0])
        assert {r["name"] for r in reports} >= {
            "abbv_integral_one",
            "weight_parity",
            "signature_constant",
        }
        series = json.loads(lines[1])
        assert series["signature_series"] == ["0"] * 5

    def test_pair_weights_flag(self, capsys, petrie_file):
        code, out, _ = run(capsys, "check", petrie_file, "--pair-weights", "7")
        assert code == 0
        assert "congruence_pairing(w=7)" in out
        assert "congruence_pairing(w=2)" not in out

    def test_quiet(self, capsys, petrie_file):
        code, out, _ = run(capsys, "--quiet", "check", petrie_file)
        assert code == 0 and out == ""

    def test_parse_error_exit_2(self, capsys, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("+ 1 0 2\n")
        code, _, err = run(capsys, "check", str(p))
        assert code == 2 and "error" in err

    def test_missing_file_exit_2(self, capsys):
        code, _, _ = run(capsys, "check", "/nonexistent/input.txt")
        assert code == 2

    def test_json_input(self, capsys, tmp_path):
        p = tmp_path / "in.json"
        p.write_text('{"points": [{"sign": 1, "weights": [1, 2]}, {"sign": -1, "weights": [1, 2]}]}')
        code, out, _ = run(capsys, "check", str(p))
        assert code == 0


class TestClassify:
    def test_petrie_case1(self, capsys, petrie_file):
        code, out, _ = run(capsys, "classify", petrie_file)
        assert code == 0
        verdicts = json.loads(out)
        assert verdicts[0]["verdict"] == "Case1"

    def test_two_points(self, capsys, tmp_path):
        p = tmp_path / "s6.txt"
        p.write_text("+ 1 2 3\n- 1 2 3\n")
        code, out, _ = run(capsys, "classify", str(p))
        assert code == 0
        assert json.loads(out)[0]["verdict"] == "TwoPointRotation"

    def test_4d_membership(self, capsys, tmp_path):
        p = tmp_path / "cp2.txt"
        p.write_text(CP2_TEXT)
        code, out, _ = run(capsys, "classify", "--effective", str(p))
        assert code == 0
        assert json.loads(out)[0]["verdict"] == "FourDimReachable"

    def test_unclassified_exit_1(self, capsys, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text(NEG1_TEXT)
        code, out, _ = run(capsys, "classify", str(p))
        assert code == 1
        assert json.loads(out)[0]["verdict"] == "NotInClassification"

    def test_unsupported_shape(self, capsys, tmp_path):
        p = tmp_path / "odd.txt"
        p.write_text("+ 1 2 3\n- 1 2 3\n+ 1 2 3\n")
        code, _, err = run(capsys, "classify", str(p))
        assert code == 2 and "unsupported" in err


class TestGraphs:
    def test_emit(self, capsys, petrie_file, tmp_path):
        out_path = tmp_path / "graphs.txt"
        code, out, _ = run(capsys, "graphs", "--emit", str(out_path), petrie_file)
        assert code == 0
        assert out_path.read_text().strip()
        assert "figure1=" in out

    def test_json(self, capsys, petrie_file):
        code, out, _ = run(capsys, "--json", "graphs", petrie_file)
        assert code == 0
        recs = [json.loads(line) for line in out.strip().splitlines()]
        assert all(r["figure1"] in {"A", "B", "C", "D", "E", None} for r in recs)
        assert any(r["figure1"] for r in recs)

    def test_parity_failure_exit_1(self, capsys, tmp_path):
        p = tmp_path / "odd.txt"
        p.write_text("+ 1 2 3\n- 1 2 4\n")
        code, _, err = run(capsys, "graphs", str(p))
        assert code == 1 and "parity" in err


class TestReduce:
    def test_petrie(self, capsys, petrie_file, tmp_path):
        trace_path = tmp_path / "trace.jsonl"
        code, out, _ = run(
            capsys, "reduce", "--emit-trace", str(trace_path), petrie_file
        )
        assert code == 0
        assert "reduced to empty in 2 moves" in out
        lines = trace_path.read_text().strip().splitlines()
        assert len(lines) == 2
        assert all(json.loads(line)["op"] == 1 for line in lines)

    def test_depth_exhausted_exit_1(self, capsys, tmp_path):
        p = tmp_path / "stuck.txt"
        p.write_text("+ 1 1 1\n")
        code, out, _ = run(capsys, "reduce", "--max-depth", "2", str(p))
        assert code == 1
        assert json.loads(out.strip())["depth"] == 2

    def test_wrong_arity(self, capsys, tmp_path):
        p = tmp_path / "d4.txt"
        p.write_text(CP2_TEXT)
        code, _, err = run(capsys, "reduce", str(p))
        assert code == 2 and "arity-3" in err


class TestGen:
    def test_cp3(self, capsys):
        code, out, _ = run(capsys, "gen", "cp3", "--params", "1", "2", "3")
        assert code == 0
        assert sorted(out.strip().splitlines()) == sorted(
            ["+ 1 3 6", "- 1 2 5", "+ 2 3 3", "- 3 5 6"]
        )

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "--json", "gen", "s6", "--params", "1", "2", "3")
        assert code == 0
        assert json.loads(out)["points"][0]["weights"] == [1, 2, 3]

    def test_wrong_param_count(self, capsys):
        code, _, err = run(capsys, "gen", "cp2", "--params", "1")
        assert code == 2 and "parameters" in err

    def test_nonpositive_param(self, capsys):
        code, _, err = run(capsys, "gen", "s6", "--params", "0", "1", "2")
        assert code == 2


class TestOracle:
    def test_small_sweep(self, capsys):
        code, out, _ = run(
            capsys, "oracle", "--points", "2", "--arity", "2", "--max-weight", "2"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("data,")
        assert len(lines) == 22

    def test_cap_enforced(self, capsys):
        code, _, err = run(capsys, "oracle", "--max-weight", "9", "--cap", "4")
        assert code == 2 and "cap" in err

    def test_pipeline_gen_to_check(self, capsys, tmp_path):
        code, out, _ = run(capsys, "gen", "blowup", "--params", "2", "1", "2")
        p = tmp_path / "blowup.txt"
        p.write_text(out)
        code2, out2, _ = run(capsys, "check", str(p))
        assert code2 == 0 and "overall: PASS" in out2
