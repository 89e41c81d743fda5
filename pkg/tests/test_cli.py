"""Command line contract: formats, batch mode, exit codes, and the
shipped report schema."""

import json
from importlib import resources

import jsonschema
import pytest

from braidfloer import __version__
from braidfloer.cli import main
from braidfloer.report import build_report, render_text

CALIBRATION = "d=3; s1 s2"


def schema():
    path = resources.files("braidfloer") / "report_schema.json"
    return json.loads(path.read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestSingleRun:
    def test_json_report(self, capsys):
        code, out, err = run(capsys, "--braid", CALIBRATION, "--format", "json")
        assert code == 0 and err == ""
        assert out.count("\n") == 1 and out.endswith("\n")
        report = json.loads(out)
        assert report["tool"] == {"name": "braidfloer", "version": __version__}
        assert report["d"] == 3
        assert report["transitive"] is True
        assert report["warning"] is None
        assert report["lefschetz"] == 2
        assert report["nielsen"]["bound"] == 2
        assert report["fiber_sum"]["summand_total"] == 8
        assert report["characteristic_numbers"] == {
            "chi": 48, "sigma": -32, "c2": 48, "c1_squared": 0}
        assert report["refined"] is None

    def test_json_is_compact_single_line(self, capsys):
        _, out, _ = run(capsys, "--braid", CALIBRATION, "--format", "json")
        report = json.loads(out)
        assert out == json.dumps(report, separators=(",", ":")) + "\n"

    def test_json_validates_against_shipped_schema(self, capsys):
        sch = schema()
        for word in (CALIBRATION, "d=2; s1", "d=4; s1 s3", "d=5; t1"):
            _, out, _ = run(capsys, "--braid", word, "--format", "json")
            jsonschema.validate(json.loads(out), sch)
        _, out, _ = run(capsys, "--braid", CALIBRATION, "--format", "json",
                        "--refine-depth", "2")
        jsonschema.validate(json.loads(out), sch)

    def test_text_format_matches_renderer(self, capsys):
        code, out, _ = run(capsys, "--braid", CALIBRATION)
        assert code == 0
        assert out == render_text(build_report(CALIBRATION))
        assert out.isascii()

    def test_text_is_the_default_format(self, capsys):
        _, default_out, _ = run(capsys, "--braid", CALIBRATION)
        _, text_out, _ = run(capsys, "--braid", CALIBRATION, "--format", "text")
        assert default_out == text_out

    def test_refine_depth_is_reported(self, capsys):
        _, out, _ = run(capsys, "--braid", CALIBRATION, "--format", "json",
                        "--refine-depth", "2")
        report = json.loads(out)
        assert report["refined"]["depth"] == 2
        assert len(report["refined"]["classes"]) == 2

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
        assert __version__ in capsys.readouterr().out


class TestNonTransitive:
    def test_partial_report_with_warning(self, capsys):
        code, out, err = run(capsys, "--braid", "d=4; s1 s3", "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["transitive"] is False
        assert "standard cycle" in report["warning"]
        assert report["lefschetz"] == 2
        for key in ("nielsen", "floer_bound", "fiber_sum", "pi1",
                    "characteristic_numbers", "anticanonical_tori",
                    "config", "refined"):
            assert report[key] is None

    def test_text_mentions_warning(self, capsys):
        _, out, _ = run(capsys, "--braid", "d=4; s1 s3")
        assert "warning:" in out


class TestBatch:
    WORDS = ["d=2; s1", "d=3; s1 s2", "d=4; s1 s3", "d=3; s2 s1 t1^-1"]

    def write_batch(self, tmp_path):
        lines = ["# calibration sweep", ""]
        lines += self.WORDS[:2]
        lines += ["   ", "# non-transitive below"]
        lines += self.WORDS[2:]
        f = tmp_path / "batch.txt"
        f.write_text("\n".join(lines) + "\n")
        return f

    def test_concatenates_single_runs(self, capsys, tmp_path):
        f = self.write_batch(tmp_path)
        for fmt in ("json", "text"):
            code, batch_out, err = run(capsys, "--batch", str(f),
                                       "--format", fmt)
            assert code == 0 and err == ""
            singles = []
            for w in self.WORDS:
                _, out, _ = run(capsys, "--braid", w, "--format", fmt)
                singles.append(out)
            assert batch_out == "".join(singles)

    def test_json_batch_one_line_per_braid(self, capsys, tmp_path):
        f = self.write_batch(tmp_path)
        _, out, _ = run(capsys, "--batch", str(f), "--format", "json")
        lines = out.splitlines()
        assert len(lines) == len(self.WORDS)
        sch = schema()
        for line in lines:
            jsonschema.validate(json.loads(line), sch)

    def test_determinism(self, capsys, tmp_path):
        f = self.write_batch(tmp_path)
        _, first, _ = run(capsys, "--batch", str(f), "--format", "json")
        _, second, _ = run(capsys, "--batch", str(f), "--format", "json")
        assert first.encode() == second.encode()

    def test_aborts_on_first_parse_error(self, capsys, tmp_path):
        f = tmp_path / "batch.txt"
        f.write_text("d=2; s1\nd=3; nope\nd=2; s1\n")
        code, out, err = run(capsys, "--batch", str(f), "--format", "json")
        assert code == 2
        assert len(out.splitlines()) == 1  # only the line before the error
        assert "nope" in err


class TestExitCodes:
    def test_parse_error_is_2(self, capsys):
        code, out, err = run(capsys, "--braid", "d=3; s9")
        assert code == 2 and out == ""
        assert "s9" in err

    def test_usage_errors_are_3(self, capsys):
        for argv in ([],
                     ["--braid", "d=2; s1", "--batch", "x"],
                     ["--braid", "d=2; s1", "--format", "yaml"],
                     ["--braid", "d=2; s1", "--refine-depth", "-1"],
                     ["--batch", "/nonexistent/path"],
                     ["--braid", "d=2; s1", "--config", "/nonexistent.json"]):
            with pytest.raises(SystemExit) as exc:
                main(argv)
            assert exc.value.code == 3
            capsys.readouterr()

    def test_invalid_config_json_is_3(self, capsys, tmp_path):
        bad = tmp_path / "cfg.json"
        bad.write_text("{not json")
        with pytest.raises(SystemExit) as exc:
            main(["--braid", "d=2; s1", "--config", str(bad)])
        assert exc.value.code == 3
        capsys.readouterr()

    def test_inconsistent_config_is_3(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({
            "pieces": [{"name": "A", "kind": "k3", "chi": 24, "sigma": -16,
                        "tori": {"T": 1}}],
            "pairings": [],
        }))
        code, out, err = run(capsys, "--braid", "d=2; s1",
                             "--config", str(cfg))
        assert code == 3
        assert "unpaired" in err


class TestConfigOption:
    def test_custom_configuration_flows_into_the_report(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({
            "pieces": [
                {"name": "M1", "kind": "mapping_torus", "chi": 0, "sigma": 0,
                 "tori": {"H1": "d"}},
                {"name": "M2", "kind": "four_torus", "chi": 0, "sigma": 0,
                 "tori": {"H1p": "d"}},
            ],
            "pairings": [["H1", "H1p"]],
        }))
        for d in (2, 5):
            word = "d=%d; " % d + " ".join(f"s{i}" for i in range(1, d))
            code, out, _ = run(capsys, "--braid", word, "--format", "json",
                               "--config", str(cfg))
            assert code == 0
            report = json.loads(out)
            assert report["characteristic_numbers"] == {
                "chi": 0, "sigma": 0, "c2": 0, "c1_squared": 0}
            assert report["config"]["pieces"][0]["tori"]["H1"] == d


class TestReportShape:
    EXPECTED_KEYS = ["tool", "config", "input", "d", "permutation",
                     "transitive", "warning", "lefschetz", "nielsen",
                     "floer_bound", "fiber_sum", "pi1",
                     "characteristic_numbers", "anticanonical_tori",
                     "statements", "refined"]

    def test_fixed_key_order(self):
        assert list(build_report(CALIBRATION)) == self.EXPECTED_KEYS
        assert list(build_report("d=4; s1 s3")) == self.EXPECTED_KEYS

    def test_input_is_normalized(self):
        report = build_report("d=3;   s1  s2^-1 s2 s2")
        assert report["input"] == "d=3; s1 s2"

    def test_statements_always_present(self):
        for word in (CALIBRATION, "d=4; s1 s3"):
            statements = build_report(word)["statements"]
            assert len(statements) == 4
            assert all(isinstance(s, str) and s for s in statements)

    def test_negative_refine_depth_rejected(self):
        with pytest.raises(ValueError):
            build_report(CALIBRATION, refine_depth=-1)
