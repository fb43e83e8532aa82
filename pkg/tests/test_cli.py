"""
命令行端到端测试
"""

import json

import pytest

from lyat.cli import main


@pytest.fixture
def h1_file(tmp_path):
    path = tmp_path / "h1.json"
    assert main(["builtin", "heisenberg", "--n", "1", "--out", str(path)]) == 0
    return path


@pytest.fixture
def ext_file(tmp_path, h1_file):
    path = tmp_path / "ext.json"
    assert main(["extension", "central", str(h1_file), "--out", str(path)]) == 0
    return path


def _pair_file(tmp_path, kappa, psi):
    path = tmp_path / "pair.json"
    path.write_text(json.dumps({"phi": [[kappa]], "psi": psi}), encoding="utf-8")
    return path


class TestAlgebraCommands:

    def test_builtin_then_validate(self, h1_file, capsys):
        assert json.loads(h1_file.read_text(encoding="utf-8"))["dim"] == 3
        assert main(["validate", str(h1_file), "--format", "text"]) == 0
        assert "all axioms pass" in capsys.readouterr().out

    def test_validate_json_report(self, h1_file, capsys):
        assert main(["validate", str(h1_file), "--format", "json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert set(report) == {"command", "version", "inputs", "success", "result"}
        assert report["command"] == "validate"
        assert report["success"] is True
        assert len(report["inputs"]["algebra"]) == 64

    def test_info(self, h1_file, capsys):
        assert main(["info", str(h1_file), "--format", "json"]) == 0
        result = json.loads(capsys.readouterr().out)["result"]
        assert result["center_dim"] == 1
        assert result["lower_central_series"] == [3, 1, 0]
        assert result["nilpotency_index"] == 2

    def test_relations_text(self, h1_file, capsys):
        assert main(["relations", str(h1_file), "--format", "text"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 3
        assert all(line.endswith(" = 0") for line in lines)

    def test_prime_builtin(self, tmp_path):
        path = tmp_path / "h1_f3.json"
        assert main(["builtin", "heisenberg", "--n", "1", "--field", "prime", "--p", "3", "--out", str(path)]) == 0
        assert json.loads(path.read_text(encoding="utf-8"))["field"] == {"kind": "prime", "p": 3}


class TestInducibilityCommands:

    def test_identity_pair_is_inducible(self, tmp_path, ext_file, capsys):
        pair = _pair_file(tmp_path, "1", [["1", "0"], ["0", "1"]])
        assert main(["induce", str(ext_file), str(pair), "--format", "json"]) == 0
        result = json.loads(capsys.readouterr().out)["result"]
        assert result["inducible"] is True
        assert result["reason"] is None
        assert result["certificate"]["gamma"] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]

    def test_nontrivial_class_exits_one(self, tmp_path, ext_file, capsys):
        pair = _pair_file(tmp_path, "1", [["2", "0"], ["0", "2"]])
        assert main(["induce", str(ext_file), str(pair), "--format", "json"]) == 1
        report = json.loads(capsys.readouterr().out)
        assert report["success"] is False
        assert report["result"]["reason"] == "nontrivial_class"
        assert report["result"]["certificate"] is None

    def test_wells_and_compatible(self, tmp_path, ext_file, capsys):
        pair = _pair_file(tmp_path, "2", [["1", "0"], ["1", "2"]])
        assert main(["compatible", str(ext_file), str(pair), "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out)["result"] == {"compatible": True}
        assert main(["wells", str(ext_file), str(pair), "--format", "text"]) == 0
        assert "Wells 类为零: 是" in capsys.readouterr().out

    def test_singular_pair_is_input_error(self, tmp_path, ext_file, capsys):
        pair = _pair_file(tmp_path, "1", [["1", "1"], ["1", "1"]])
        assert main(["induce", str(ext_file), str(pair), "--format", "json"]) == 2
        result = json.loads(capsys.readouterr().out)["result"]
        assert result["error"] == "NotAnAutomorphismError"


class TestEnumerateCommand:

    def test_inducible_check_over_f3(self, tmp_path, capsys):
        alg = tmp_path / "h1_f3.json"
        ext = tmp_path / "ext_f3.json"
        assert main(["builtin", "heisenberg", "--n", "1", "--field", "prime", "--p", "3", "--out", str(alg)]) == 0
        assert main(["extension", "central", str(alg), "--out", str(ext)]) == 0
        assert main(["enumerate", str(ext), "--check", "inducible", "--p", "3", "--format", "json"]) == 0
        result = json.loads(capsys.readouterr().out)["result"]
        assert result["agree"] is True
        assert result["counts"] == {"pairs": 96, "compatible": 96, "inducible": 6}

    def test_prime_mismatch(self, ext_file):
        assert main(["enumerate", str(ext_file), "--check", "sequences", "--p", "3"]) == 2


class TestArgumentErrors:

    def test_missing_subcommand(self):
        assert main([]) == 2

    def test_non_prime_modulus(self):
        assert main(["builtin", "heisenberg", "--n", "1", "--field", "prime", "--p", "4"]) == 2

    def test_p_without_prime_field(self):
        assert main(["builtin", "heisenberg", "--n", "1", "--p", "3"]) == 2

    def test_extension_arity(self, h1_file):
        assert main(["extension", "build", str(h1_file)]) == 2

    def test_malformed_file(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text('{"field": {"kind": "rational"}, "dim": 2, "binary": [{"i": 0, "j": 5}]}', encoding="utf-8")
        assert main(["validate", str(path), "--format", "json"]) == 2
        result = json.loads(capsys.readouterr().out)["result"]
        assert result["error"] == "SchemaError"
        assert "binary[0].j" in result["message"]

    def test_missing_file(self, tmp_path):
        assert main(["validate", str(tmp_path / "absent.json")]) == 2

    def test_invalid_utf8_is_input_error(self, tmp_path, capsys):
        path = tmp_path / "latin1.json"
        path.write_bytes(b'{"dim": 1, "basis": ["\xff"]}')
        assert main(["validate", str(path), "--format", "json"]) == 2
        result = json.loads(capsys.readouterr().out)["result"]
        assert result["error"] == "SchemaError"
