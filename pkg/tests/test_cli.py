"""End-to-end tests of the command-line interface."""

import json

import pytest

from screwsr.cli import main


def run(argv):
    return main(argv)


class TestControllability:
    def test_su2_grid(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        code = run(["controllability", "--group", "SU2", "--k", "1",
                    "--lambda-grid", "default", "--out", str(out)])
        assert code == 0
        doc = json.loads(out.read_text())
        assert doc["schema"] == "screwsr/1"
        rows = doc["reports"]
        assert len(rows) == 9
        non_controllable = [r for r in rows if not r["observed"]]
        assert len(non_controllable) == 2  # pitch +-1 on the compact pair

    def test_group_spelling_variants_identical(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run(["controllability", "--group", "SU:2", "--lambda-grid", "default",
             "--out", str(a)])
        run(["controllability", "--group", "SU2", "--lambda-grid", "default",
             "--out", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_octonion(self, tmp_path):
        out = tmp_path / "o.json"
        assert run(["controllability", "--octonion", "--lambda", "1",
                    "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["reports"][0]["dim_span"] == 28
        assert doc["reports"][0]["observed"]

    def test_space_form_flat_zero_pitch(self, tmp_path):
        out = tmp_path / "sf.json"
        assert run(["controllability", "--space-form", "--kappa", "0",
                    "--lambda", "0", "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert not doc["reports"][0]["observed"]

    def test_csv_format(self, tmp_path):
        out = tmp_path / "r.csv"
        run(["controllability", "--group", "SO3", "--k", "-1",
             "--lambda", "0.5", "--format", "csv", "--out", str(out)])
        text = out.read_text()
        assert "\r" not in text
        header, row = text.splitlines()[:2]
        assert header.startswith("family,n,k,lambda")
        assert row.startswith("SO,3,-1,0.5")

    def test_missing_system_is_usage_error(self, capsys):
        assert run(["controllability", "--lambda", "1"]) == 2

    def test_bad_group_is_usage_error(self, capsys):
        assert run(["controllability", "--group", "E8", "--lambda", "1"]) == 2


class TestGeodesic:
    def test_certified_run(self, tmp_path):
        out = tmp_path / "g.json"
        code = run(["geodesic", "--group", "SU:2", "--k", "0", "--lambda", "1",
                    "--seed", "3", "--samples", "21", "--out", str(out)])
        assert code == 0
        doc = json.loads(out.read_text())
        cert = doc["certification"]
        assert cert["horizontality_residual"] <= 1e-9
        assert cert["speed_deviation"] <= 1e-9
        assert len(doc["samples"]) == 21

    def test_determinism(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        args = ["geodesic", "--group", "SO:3", "--k", "1", "--lambda", "0.5",
                "--seed", "11", "--samples", "11"]
        run(args + ["--out", str(a)])
        run(args + ["--out", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_octonion_momentum_echo(self, tmp_path):
        out = tmp_path / "o.json"
        code = run(["geodesic", "--octonion", "--lambda", "1", "--seed", "5",
                    "--samples", "11", "--out", str(out)])
        assert code == 0
        doc = json.loads(out.read_text())
        assert doc["momentum"]["c"] == pytest.approx(2.0 / 3.0)
        assert doc["momentum"]["d"] == pytest.approx(-2.0 / 3.0)

    def test_space_form(self, tmp_path):
        out = tmp_path / "sf.json"
        code = run(["geodesic", "--space-form", "--kappa", "-1",
                    "--lambda", "0.5", "--samples", "11", "--out", str(out)])
        assert code == 0
        doc = json.loads(out.read_text())
        assert doc["certification"]["derivative_gap"] <= 1e-8

    def test_degenerate_pitch_is_precondition_error(self, capsys):
        assert run(["geodesic", "--group", "SU2", "--k", "1",
                    "--lambda", "1"]) == 2

    def test_csv_samples(self, tmp_path):
        out = tmp_path / "g.csv"
        run(["geodesic", "--group", "SO:3", "--k", "0", "--lambda", "1",
             "--samples", "6", "--format", "csv", "--out", str(out)])
        lines = out.read_text().splitlines()
        assert lines[0].startswith("t,m0,")
        assert len(lines) == 7


class TestVerifyAll:
    def test_passes_and_prints_lines(self, capsys, tmp_path):
        out = tmp_path / "v.json"
        code = run(["verify-all", "--out", str(out)])
        captured = capsys.readouterr().out
        assert code == 0
        assert "FAIL" not in captured
        assert captured.count("PASS") >= 50
        doc = json.loads(out.read_text())
        assert doc["failures"] == 0
        assert doc["schema"] == "screwsr/1"

    def test_unattainable_tolerance_fails(self, capsys):
        code = run(["verify-all", "--tol", "1e-18"])
        captured = capsys.readouterr().out
        assert code == 1
        assert "FAIL" in captured
