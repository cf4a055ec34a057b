import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from gstirling.cli import main

SCHEMA = json.loads(
    (Path(__file__).parent.parent / "docs" / "cli-output.schema.json").read_text()
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--format", "json")
    assert err == ""
    payload = json.loads(out)
    jsonschema.validate(payload, SCHEMA)
    return code, payload


class TestExitCodes:
    def test_matrix_ok(self, capsys):
        code, out, err = run_cli(capsys, "matrix", "--preset", "stirling2", "-n", "4")
        assert code == 0
        assert "S matrix" in out and err == ""

    def test_check_witness(self, capsys):
        code, out, _ = run_cli(capsys, "check", "-a", "0,1", "-e", "0,2")
        assert code == 2
        assert "NOT TNN" in out

    def test_check_passes(self, capsys):
        code, out, _ = run_cli(capsys, "check", "-a", "0,1,2", "-e", "0,1,1")
        assert code == 0
        assert "verdict: TNN" in out

    def test_usage_error_exits_one(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["matrix", "--method", "nonsense"])
        assert exc.value.code == 1

    def test_missing_command_exits_one(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 1

    def test_bad_rational(self, capsys):
        code, _, err = run_cli(capsys, "matrix", "-a", "0,zebra", "-e", "1,2")
        assert code == 1
        assert err.startswith("error:") and "entry 2" in err

    def test_conflicting_sources(self, capsys):
        code, _, err = run_cli(
            capsys, "matrix", "-a", "0", "-e", "1", "--preset", "lah", "-n", "1"
        )
        assert code == 1
        assert "exactly one" in err

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "matrix", "--file", "/no/such/file")
        assert code == 1
        assert err.startswith("error:")

    def test_check_needs_monotone_a(self, capsys):
        code, _, err = run_cli(capsys, "check", "-a", "1,0", "-e", "0,0")
        assert code == 1
        assert "exhaustive-only" in err

    def test_exhaustive_only_allows_any_a(self, capsys):
        code, out, _ = run_cli(
            capsys, "check", "-a", "1,0", "-e", "0,0", "--exhaustive-only"
        )
        assert code == 0
        code, out, _ = run_cli(
            capsys, "check", "-a", "1,0", "-e", "0,5", "--exhaustive-only"
        )
        assert code == 2
        assert "negative minor" in out

    def test_pivot_refused_at_nonzero_weight(self, capsys):
        code, _, err = run_cli(
            capsys, "network", "-a", "0,1", "-e", "5,7", "--pivot", "1,1"
        )
        assert code == 1
        assert "refusing to pivot" in err

    def test_certify_failure_is_witness(self, capsys):
        code, out, _ = run_cli(
            capsys, "network", "-a", "0,1", "-e", "0,2", "--certify"
        )
        assert code == 2
        assert "negative weight exposed" in out

    def test_chordal_bad_rgs(self, capsys):
        code, _, err = run_cli(capsys, "chordal", "--from-rgs", "1,0")
        assert code == 1

    def test_chordal_non_chordal_graph(self, capsys, tmp_path):
        path = tmp_path / "c4.graph"
        path.write_text("n 4\n1 2\n2 3\n3 4\n1 4\n")
        code, out, _ = run_cli(capsys, "chordal", "--file", str(path), "--find-peo")
        assert code == 2
        assert "not chordal" in out

    def test_chordal_bad_order_without_search(self, capsys, tmp_path):
        path = tmp_path / "star.graph"
        path.write_text("n 4\n1 4\n2 4\n3 4\n")
        code, out, _ = run_cli(capsys, "chordal", "--file", str(path))
        assert code == 2
        assert "not a perfect elimination order" in out
        # searching for an order rescues the same graph
        code, out, _ = run_cli(capsys, "chordal", "--file", str(path), "--find-peo")
        assert code == 0
        assert "order verified" in out

    def test_rook_bad_heights(self, capsys):
        code, _, err = run_cli(capsys, "rook", "-b", "2,1")
        assert code == 1
        assert "non-decreasing" in err

    def test_eulerian_no_witness(self, capsys):
        code, out, _ = run_cli(capsys, "eulerian", "-n", "5")
        assert code == 0
        assert "no negative minor found" in out


class TestDeterminism:
    CASES = [
        ("matrix", "--preset", "lah", "-n", "5", "--verify-all"),
        ("check", "-a", "0,1,2", "-e", "0,1,0", "--exhaustive"),
        ("network", "-a", "0,1,2", "-e", "0,1,2", "--certify", "--provenance"),
        ("chordal", "--from-rgs", "0,1,1,2", "--check-all", "--chromatic", "1,2,3"),
        ("rook", "-b", "1,2,2", "--gjw", "--check-tnn"),
        ("eulerian", "-n", "5"),
    ]

    @pytest.mark.parametrize("argv", CASES, ids=lambda c: c[0])
    @pytest.mark.parametrize("fmt", ["table", "json", "csv"])
    def test_identical_runs_identical_bytes(self, capsys, argv, fmt):
        first = run_cli(capsys, *argv, "--format", fmt)
        second = run_cli(capsys, *argv, "--format", fmt)
        assert first == second


class TestJsonPayloads:
    def test_matrix_verified_routes(self, capsys):
        code, payload = run_json(
            capsys, "matrix", "--preset", "binomial", "-n", "3", "--verify-all"
        )
        assert code == 0
        assert payload["verified"] == ["recurrence", "explicit", "symmetric", "network"]
        assert payload["matrix"][3] == ["1", "3", "3", "1"]

    def test_matrix_methods_agree(self, capsys):
        outputs = set()
        for method in ("recurrence", "explicit", "symmetric", "network"):
            # leading minus must be attached to the flag or argparse eats it
            code, payload = run_json(
                capsys, "matrix", "-a", "0,1/2,3", "-e-1,0.5,2",
                "--method", method,
            )
            assert code == 0
            outputs.add(json.dumps(payload["matrix"]))
        assert len(outputs) == 1

    def test_check_certified_witness(self, capsys):
        code, payload = run_json(capsys, "check", "-a", "0,1", "-e", "0,2")
        assert code == 2
        assert payload["mode"] == "certified"
        assert not payload["is_tnn"]
        assert payload["violation"] == {"index": 2, "level": 2}
        assert payload["entry_witness"] == {"row": 2, "col": 1, "value": "-1"}
        assert payload["certificate"] is None

    def test_check_certified_certificate(self, capsys):
        code, payload = run_json(
            capsys, "check", "-a", "0,1,2", "-e", "0,1,2", "--exhaustive"
        )
        assert code == 0
        cert = payload["certificate"]
        assert cert["pivots"] == [[1, 1], [2, 2], [3, 3]]
        assert cert["all_nonnegative"] is True
        assert payload["exhaustive"] == {"agrees": True, "minor_witness": None}

    def test_check_exhaustive_only(self, capsys):
        code, payload = run_json(
            capsys, "check", "-a", "1,0", "-e", "0,5", "--exhaustive-only"
        )
        assert code == 2
        assert payload["mode"] == "exhaustive-only"
        witness = payload["minor_witness"]
        assert witness is not None and witness["value"].startswith("-")

    def test_network_with_pivot_and_provenance(self, capsys):
        code, payload = run_json(
            capsys, "network", "-a", "0,1,2", "-e", "0,1,2",
            "--pivot", "1,1", "--provenance",
        )
        assert code == 0
        assert payload["applied_pivots"] == [[1, 1]]
        assert payload["result"] is not None
        assert payload["provenance"][1] == [[1, 1], [2, 2]]

    def test_network_certify(self, capsys):
        code, payload = run_json(
            capsys, "network", "-a", "0,1,2,3", "-e", "0,0,1,1", "--certify"
        )
        assert code == 0
        assert payload["certificate"]["all_nonnegative"] is True

    def test_chordal_full_checks(self, capsys):
        code, payload = run_json(
            capsys, "chordal", "--from-rgs", "0,1,1,2",
            "--check-all", "--chromatic", "1,2,3,4",
        )
        assert code == 0
        checks = payload["checks"]
        assert checks["tnn_witness"] is None
        assert checks["sign_violation"] is None
        assert all(r["ok"] for r in checks["chromatic"])
        assert payload["peo"]["e_sequence"] == [0, 1, 1, 2]

    def test_chordal_not_chordal(self, capsys, tmp_path):
        path = tmp_path / "c5.graph"
        path.write_text("n 5\n1 2\n2 3\n3 4\n4 5\n1 5\n")
        code, payload = run_json(
            capsys, "chordal", "--file", str(path), "--find-peo"
        )
        assert code == 2
        assert payload["found_order"] is None
        assert payload["peo"] is None and payload["matrix"] is None

    def test_chordal_bad_order_payload(self, capsys, tmp_path):
        path = tmp_path / "star.graph"
        path.write_text("n 4\n1 4\n2 4\n3 4\n")
        code, payload = run_json(capsys, "chordal", "--file", str(path))
        assert code == 2
        assert payload["peo"]["failure"] == {"index": 4, "pair": [1, 2]}
        assert payload["matrix"] is None

    def test_rook_checks(self, capsys):
        code, payload = run_json(
            capsys, "rook", "-b", "0,1,2", "--gjw", "--check-tnn"
        )
        assert code == 0
        assert payload["gjw"] == {"ok": True}
        assert payload["tnn"] == {"minor_witness": None}
        assert payload["e"] == ["0", "0", "0"]

    def test_eulerian_reports_minor_count(self, capsys):
        code, payload = run_json(capsys, "eulerian", "-n", "4")
        assert code == 0
        assert payload["witness"] is None
        assert payload["minors_checked"] > 0


class TestCsv:
    def test_matrix_triangle_triples(self, capsys):
        code, out, _ = run_cli(
            capsys, "matrix", "--preset", "stirling2", "-n", "3", "--format", "csv"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "m,k,value"
        assert len(lines) == 1 + 10  # 1 + 2 + 3 + 4 entries
        assert lines[1] == "0,0,1"
        assert "3,1,1" in lines and "3,2,3" in lines

    def test_network_csv_is_one_based(self, capsys):
        code, out, _ = run_cli(
            capsys, "network", "-a", "0,1", "-e", "5,7", "--format", "csv"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "m,k,value"
        assert lines[1] == "1,1,-5"
        assert lines[2] == "2,1,-7"
        assert lines[3] == "2,2,-4"


class TestFormatSelection:
    def test_env_variable_sets_default(self, capsys, monkeypatch):
        monkeypatch.setenv("GSTIRLING_FORMAT", "json")
        code, out, _ = run_cli(capsys, "eulerian", "-n", "3")
        assert code == 0
        json.loads(out)

    def test_flag_overrides_env(self, capsys, monkeypatch):
        monkeypatch.setenv("GSTIRLING_FORMAT", "json")
        code, out, _ = run_cli(capsys, "eulerian", "-n", "3", "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "m,k,value"

    def test_unknown_env_format_is_an_error(self, capsys, monkeypatch):
        monkeypatch.setenv("GSTIRLING_FORMAT", "yaml")
        code, _, err = run_cli(capsys, "eulerian", "-n", "3")
        assert code == 1
        assert "unknown format" in err


class TestFileInputs:
    def test_pair_file(self, capsys, tmp_path):
        path = tmp_path / "pair.txt"
        path.write_text("# a then e\n0, 1, 2\n0 1 1  # spaces work too\n")
        code, payload = run_json(capsys, "check", "--file", str(path))
        assert code == 0
        assert payload["a"] == ["0", "1", "2"]
        assert payload["e"] == ["0", "1", "1"]

    def test_pair_file_wrong_shape(self, capsys, tmp_path):
        path = tmp_path / "pair.txt"
        path.write_text("1,2\n")
        code, _, err = run_cli(capsys, "matrix", "--file", str(path))
        assert code == 1
        assert "two content lines" in err

    def test_board_file(self, capsys, tmp_path):
        path = tmp_path / "board.txt"
        path.write_text("# heights\n1\n2, 4\n")
        code, payload = run_json(capsys, "rook", "--file", str(path), "--gjw")
        assert code == 0
        assert payload["heights"] == [1, 2, 4]

    def test_size_disagreement(self, capsys):
        code, _, err = run_cli(capsys, "matrix", "-a", "0,1", "-e", "0,1", "-n", "3")
        assert code == 1
        assert "disagrees" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gstirling.cli", "matrix", "--preset", "lah", "-n", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "S matrix" in proc.stdout
