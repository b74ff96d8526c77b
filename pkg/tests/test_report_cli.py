import csv
import io
import json

import pytest

from loghankel.cli import run_command
from loghankel.report import report_from_dict, report_to_dict, sig12, to_csv, to_json, to_text
from loghankel.verifier import SearchConfig, Status, verify_class

QUICK = ["--grid", "16", "--refine", "40", "--samples", "10", "--envelope-samples", "20"]


@pytest.fixture(scope="module")
def f4_report():
    cfg = SearchConfig(refine_iterations=40, consistency_samples=10, envelope_samples=20).with_grid(16)
    return verify_class("f4", cfg), cfg


class TestSerialization:
    def test_json_keys(self, f4_report):
        r, cfg = f4_report
        d = json.loads(to_json(r, cfg))
        assert {
            "class",
            "theoretical_bound",
            "observed_max",
            "argmax",
            "extremal_value",
            "consistency_residual",
            "envelope_violation",
            "eta",
            "status",
            "wall_time_s",
        } <= d.keys()
        assert set(d["argmax"]) == {"zeta1", "zeta2", "zeta3"}
        assert len(d["argmax"]["zeta2"]) == 2
        assert d["config"]["zeta1_steps"] == 16

    def test_round_trip(self, f4_report):
        r, cfg = f4_report
        back = report_from_dict(json.loads(to_json(r, cfg)))
        assert back.status is r.status and back.tag == r.tag
        for name in ("theoretical_bound", "observed_max", "extremal_value", "consistency_residual", "eta"):
            assert getattr(back, name) == sig12(getattr(r, name))
        assert back.argmax.zeta1 == sig12(r.argmax.zeta1)
        assert back.argmax.zeta2 == complex(sig12(r.argmax.zeta2.real), sig12(r.argmax.zeta2.imag))

    def test_twelve_significant_digits(self):
        assert sig12(0.1234567890123456) == 0.123456789012
        assert sig12(None) is None

    def test_csv(self, f4_report):
        r, cfg = f4_report
        text = to_csv([r, r], cfg)
        lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
        rows = list(csv.DictReader(io.StringIO("\n".join(lines))))
        assert len(rows) == 2
        assert rows[0]["class"] == "f4"
        assert float(rows[0]["observed_max"]) == sig12(r.observed_max)
        assert rows[0]["status"] == "PASS"

    def test_text(self, f4_report):
        r, cfg = f4_report
        first = to_text(r).splitlines()[0]
        assert first.startswith("f4: bound 0.18390899") and first.endswith("PASS")


class TestCli:
    def test_eta(self, capsys):
        assert run_command(["eta", "--class", "f1"]) == 0
        assert capsys.readouterr().out.startswith("0.030268")

    def test_eval_f2(self, capsys):
        assert run_command(["eval", "--class", "f2", "--zeta1", "0.5", "--zeta2", "0.5,0", "--zeta3", "1,0"]) == 0
        assert "-0.047526" in capsys.readouterr().out

    def test_eval_negative_complex(self, capsys):
        assert run_command(["eval", "--class", "f4", "--zeta1", "0.3", "--zeta2=-0.5,0.1", "--zeta3=0,-1"]) == 0

    def test_ymax(self, capsys):
        assert run_command(["ymax", "--a", "-0.1", "--b", "0.1", "--c", "0.5", "--oracle"]) == 0
        out = capsys.readouterr().out
        assert "1.10166666" in out and "AC<0:1+|A|" in out

    def test_extremal(self, capsys):
        assert run_command(["extremal", "--class", "ss"]) == 0
        assert "extremal 0.250000000000" in capsys.readouterr().out

    def test_verify_text(self, capsys):
        assert run_command(["verify", "--class", "ss", "--format", "text", *QUICK]) == 0
        out = capsys.readouterr().out
        assert "ss: bound 0.250000000000 observed 0.2" in out and "PASS" in out
        assert "zeta1_steps=16" in out  # defaults echoed in the header

    def test_verify_json_file(self, tmp_path, capsys):
        out = tmp_path / "ss.json"
        assert run_command(["verify", "--class", "f2", "--format", "json", "--out", str(out), *QUICK]) == 0
        d = json.loads(out.read_text())
        assert d["class"] == "f2" and d["status"] == "PASS"

    def test_seed_reproducible(self, tmp_path):
        paths = [tmp_path / "a.json", tmp_path / "b.json"]
        for p in paths:
            assert run_command(["verify", "--class", "f1", "--format", "json", "--seed", "7", "--out", str(p), *QUICK]) == 0
        a, b = (json.loads(p.read_text()) for p in paths)
        a.pop("wall_time_s"), b.pop("wall_time_s")
        assert a == b

    def test_all_writes_directory(self, tmp_path, capsys):
        assert run_command(["all", "--out", str(tmp_path), "--tol", "1e-2", *QUICK]) == 0
        assert {p.name for p in tmp_path.iterdir()} == {"report.json", "report.csv", "report.txt"}
        doc = json.loads((tmp_path / "report.json").read_text())
        assert [r["class"] for r in doc["reports"]] == ["f1", "f2", "f3", "f4", "ss"]
        assert "overall: PASS" in capsys.readouterr().out

    @pytest.mark.parametrize(
        "argv",
        [
            ["verify", "--class", "ss", "--bogus"],
            ["verify", "--class", "f9"],
            ["eval", "--class", "f1", "--zeta1", "0.5", "--zeta2", "a,b", "--zeta3", "0,0"],
            ["eval", "--class", "f1", "--zeta1", "2", "--zeta2", "0,0", "--zeta3", "0,0"],
            ["eta", "--class", "ss"],
            ["ymax", "--a", "1"],
            [],
        ],
    )
    def test_usage_errors(self, argv, capsys):
        assert run_command(argv) == 2

    def test_no_partial_report_on_error(self, tmp_path):
        out = tmp_path / "bad.json"
        assert run_command(["verify", "--class", "ss", "--order", "0", "--format", "json", "--out", str(out)]) == 2
        assert not out.exists()

    def test_all_invalid_order(self, tmp_path, capsys):
        assert run_command(["all", "--order", "0", "--out", str(tmp_path / "d")]) == 2
        assert not (tmp_path / "d").exists()
        assert capsys.readouterr().out.count("INPUT_ERROR") == 5

    def test_sharpness_gap_exit_code(self, capsys):
        # a 16-point grid with no polish cannot come within 1e-9 of the F3 bound
        assert run_command(["verify", "--class", "f3", "--grid", "16", "--refine", "0", "--tol", "1e-9",
                            "--samples", "5", "--envelope-samples", "5"]) == 1
        assert "SHARPNESS_GAP" in capsys.readouterr().out
