"""CLI behavior: flags, exit codes, report formats and round-trips."""

import csv
import io
import json

from conical_ab.cli import main
from conical_ab.reports import canonical_json, format_float


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestClassify:
    def test_five_rows_anticone(self, capsys):
        code, out = run_cli(capsys, "classify", "--alpha", "2", "--phi", "0",
                            "--m-range", "-2..2")
        assert code == 0
        body = json.loads(out)
        assert len(body["rows"]) == 5
        for row in body["rows"]:
            assert row["lambda_sq"] > 0.0
            assert row["delta_coefficient"] == -0.5
            assert row["source"] == "closed_form"

    def test_csv_and_json_values_identical(self, capsys):
        code, jout = run_cli(capsys, "classify", "--alpha", "2", "--m-range", "-2..2")
        assert code == 0
        code, cout = run_cli(capsys, "classify", "--alpha", "2", "--m-range", "-2..2",
                             "--format", "csv")
        assert code == 0
        jrows = json.loads(jout)["rows"]
        creader = csv.DictReader(io.StringIO(cout))
        for jrow, crow in zip(jrows, creader, strict=True):
            for key in ("lambda_sq", "delta_coefficient", "order_magnitude"):
                assert float(crow[key]) == jrow[key]


class TestRing:
    def test_half_flux_degenerate_pair(self, capsys):
        code, out = run_cli(capsys, "ring", "--alpha", "1", "--phi", "0.5",
                            "--mass", "1", "--radius", "1", "--m-range", "-1..0")
        assert code == 0
        rows = json.loads(out)["rows"]
        assert [r["energy"] for r in rows] == [0.125, 0.125]


class TestBound:
    def test_reality_gate_exit_code(self, capsys):
        code, out = run_cli(capsys, "bound", "--alpha", "1.5", "--m", "0")
        assert code == 3
        body = json.loads(out)
        assert body["rows"] == []
        assert any("|1 - alpha| >= 1" in d["message"] for d in body["diagnostics"])

    def test_both_modes_with_gap_diagnostic(self, capsys):
        code, out = run_cli(capsys, "bound", "--alpha", "2", "--m", "0")
        assert code == 0
        body = json.loads(out)
        sources = {row["source"] for row in body["rows"]}
        assert sources == {"numeric_root", "closed_form"}
        gaps = [d for d in body["diagnostics"] if d["kind"] == "closed_vs_numeric"]
        assert len(gaps) == 1 and abs(gaps[0]["relative_gap"]) < 1e-10

    def test_cone_closed_form_complex_diagnostic(self, capsys):
        code, out = run_cli(capsys, "bound", "--alpha", "0.6", "--m", "0")
        assert code == 0
        body = json.loads(out)
        assert [row["source"] for row in body["rows"]] == ["numeric_root"]
        complexes = [d for d in body["diagnostics"] if d["kind"] == "closed_form_complex"]
        assert len(complexes) == 1
        assert complexes[0]["value_im"] != 0.0

    def test_every_row_has_provenance(self, capsys):
        code, out = run_cli(capsys, "bound", "--alpha", "2", "--m-range", "-1..1")
        body = json.loads(out)
        assert body["rows"]
        assert all(r["source"] in {"numeric_root", "closed_form"} for r in body["rows"])


class TestOracle:
    def test_convergence_rows(self, capsys):
        code, out = run_cli(capsys, "oracle", "--alpha", "2", "--m", "0",
                            "--grid-n", "1500", "--a-values", "1.0,0.5")
        assert code == 0
        body = json.loads(out)
        assert len(body["rows"]) == 2
        for row in body["rows"]:
            assert row["source"] == "oracle_grid"
            assert abs(row["relative_gap"]) < 1e-3
        refine = [d for d in body["diagnostics"] if d["kind"] == "refinement"]
        assert refine and refine[0]["improves"] is True

    def test_no_bound_state_exit(self, capsys):
        code, out = run_cli(capsys, "oracle", "--alpha", "1.2", "--m", "3",
                            "--grid-n", "500")
        assert code == 3


class TestSweep:
    def test_alpha_series(self, capsys):
        code, out = run_cli(capsys, "sweep", "--sweep-param", "alpha",
                            "--sweep-start", "1.8", "--sweep-stop", "3.0",
                            "--sweep-count", "4", "--m", "0")
        assert code == 0
        rows = json.loads(out)["rows"]
        assert [r["value"] for r in rows] == [1.8, 2.2, 2.6, 3.0]
        assert all(r["energy"] < 0.0 for r in rows)

    def test_series_includes_unbound_values_as_null(self, capsys):
        code, out = run_cli(capsys, "sweep", "--sweep-param", "alpha",
                            "--sweep-start", "1.2", "--sweep-stop", "2.0",
                            "--sweep-count", "3", "--m", "0")
        assert code == 0
        rows = json.loads(out)["rows"]
        assert rows[0]["energy"] is None        # alpha = 1.2: no bound state
        assert rows[-1]["energy"] < 0.0          # alpha = 2.0: bound


class TestExitCodesAndIO:
    def test_invalid_config_exit_2(self, capsys):
        assert main(["bound", "--alpha", "2"]) == 2  # missing --m
        capsys.readouterr()

    def test_out_file(self, tmp_path, capsys):
        path = tmp_path / "report.json"
        code = main(["ring", "--alpha", "1", "--m-range", "0..2", "--out", str(path)])
        capsys.readouterr()
        assert code == 0
        body = json.loads(path.read_text())
        assert len(body["rows"]) == 3

    def test_json_round_trip_byte_identical(self, capsys):
        code, out = run_cli(capsys, "bound", "--alpha", "2", "--m", "0")
        assert code == 0
        text = out.strip()
        assert canonical_json(json.loads(text)) == text

    def test_float_formatting_17_digits(self):
        x = 0.1 + 0.2
        assert format_float(x) == f"{x:.17g}"
        assert float(format_float(x)) == x


class TestRemoteClient:
    def test_server_flag_round_trips_through_asgi(self, capsys, monkeypatch):
        from fastapi.testclient import TestClient

        from conical_ab import cli
        from conical_ab.service import app

        def fake_client(server):
            return TestClient(app)

        monkeypatch.setattr(cli, "_http_client", fake_client)
        code, remote_out = run_cli(
            capsys, "ring", "--alpha", "1", "--phi", "0.5", "--m-range", "-1..0",
            "--server", "http://service",
        )
        assert code == 0
        code, local_out = run_cli(
            capsys, "ring", "--alpha", "1", "--phi", "0.5", "--m-range", "-1..0",
        )
        assert code == 0
        assert json.loads(remote_out)["rows"] == json.loads(local_out)["rows"]
