"""
报告生成测试
"""

import json

from lyat import __version__
from lyat.report import ReportGenerator, records_table, report_generator


class TestBuild:

    def test_inputs_are_digested(self, tmp_path):
        path = tmp_path / "input.json"
        path.write_bytes(b"{}")
        report = report_generator.build("info", {"algebra": str(path)}, True, {})
        assert report["version"] == __version__
        # sha256("{}")
        assert report["inputs"]["algebra"] == "44136fa355b3678a1146ad16f7e8649e94fb4fc21fe77e8310c060f61caaff8a"

    def test_json_is_canonical(self):
        report = report_generator.build("crosscheck", {}, True, {"b": 1, "a": [1, 2]})
        text = report_generator.render(report, "json")
        assert text.endswith("\n")
        assert list(json.loads(text)) == sorted(json.loads(text))
        assert text == report_generator.render(report, "json")
        assert "time" not in text


class TestRender:

    def test_validate_template(self):
        result = {"dim": 3, "field": "QQ", "passed": True, "axioms": [{"name": "LY1", "passed": True}]}
        text = report_generator.render(report_generator.build("validate", {}, True, result), "text")
        assert "all axioms pass" in text
        assert "LY1: 通过" in text

    def test_failed_axiom_shows_witness(self):
        axiom = {"name": "LY6", "passed": False, "witness": ["e1", "e2", "e1", "e2", "e1"], "residual": ["1"]}
        result = {"dim": 3, "field": "QQ", "passed": False, "axioms": [axiom]}
        text = report_generator.render(report_generator.build("validate", {}, False, result), "text")
        assert "公理检验未通过" in text
        assert "见证 (e1, e2, e1, e2, e1)" in text

    def test_error_uses_generic_template(self):
        result = {"error": "SchemaError", "message": "dim: Field required"}
        text = report_generator.render(report_generator.build("induce", {}, False, result), "text")
        assert "结论: 不成立" in text
        assert "error: SchemaError" in text

    def test_unknown_command_falls_back(self):
        text = report_generator.render(report_generator.build("cohomology", {}, True, {"h_dim": 2}), "text")
        assert "h_dim: 2" in text

    def test_matrix_values_are_pretty(self):
        result = {"inducible": True, "reason": None, "certificate": {"gamma": [["1", "0"], ["0", "1"]], "lambda": [["0"]]}}
        text = report_generator.render(report_generator.build("induce", {}, True, result), "text")
        assert "γ: 1 0; 0 1" in text

    def test_missing_template_dir_entry(self, tmp_path):
        (tmp_path / "generic.txt.j2").write_text("{{ command }}", encoding="utf-8")
        generator = ReportGenerator(tmp_path)
        assert generator.render(generator.build("validate", {}, True, {}), "text") == "validate\n"


class TestRecordsTable:

    def test_empty(self):
        assert records_table([]) == "(空)"

    def test_columns(self):
        text = records_table([{"field": "QQ", "agreement": 100.0}], ["field", "agreement"])
        header, row = text.splitlines()
        assert header.split() == ["field", "agreement"]
        assert row.split() == ["QQ", "100.0"]
