"""End-to-end tests for the command-line interface."""

import io
import json

import pytest

from soig.cli import main

COLLINEAR = "0 0\n1 0\n3 0\n"


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_default_verifies(self, capsys):
        code, out, _ = run(["verify"], capsys)
        assert code == 0
        assert "overall: VERIFIED" in out
        assert "fact-8.1" in out

    def test_json_report_contains_expected_margin(self, capsys):
        code, out, _ = run(["verify", "--format", "json"], capsys)
        assert code == 0
        data = json.loads(out)
        assert data["overall"] == "verified"
        fact81 = next(c for c in data["claims"] if c["id"] == "fact-8.1")
        assert fact81["expected_margin_deg"] == 0.0015
        assert fact81["min_sum_deg"] == pytest.approx(360.002, abs=1e-3)

    def test_perturbed_threshold_exits_nonzero(self, capsys):
        code, out, _ = run(["verify", "--p", "1.410"], capsys)
        assert code == 1
        assert "overall: REFUSED" in out
        assert "fact-8.2" in out

    def test_dump_script_round_trips(self, tmp_path, capsys):
        code, out, _ = run(["verify", "--dump-script"], capsys)
        assert code == 0
        data = json.loads(out)
        assert data["format"] == "soig-proof-script"
        path = tmp_path / "script.json"
        path.write_text(out)
        code, out, _ = run(["verify", "--script", str(path)], capsys)
        assert code == 0

    def test_custom_script_with_missing_case(self, tmp_path, capsys):
        code, out, _ = run(["verify", "--dump-script"], capsys)
        data = json.loads(out)
        data["claims"] = [c for c in data["claims"] if c["id"] != "lemma-9.4"]
        path = tmp_path / "cut.json"
        path.write_text(json.dumps(data))
        code, out, _ = run(["verify", "--script", str(path)], capsys)
        assert code == 1
        assert "(11, 8)" in out

    def test_unreadable_script_is_io_error(self, capsys):
        code, _, err = run(["verify", "--script", "/no/such/file.json"], capsys)
        assert code == 3
        assert "file.json" in err

    def test_malformed_script_is_structural(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text('{"format": "soig-proof-script", "claims": [{"kind": "capacity"}]}')
        code, _, err = run(["verify", "--script", str(path)], capsys)
        assert code == 2
        assert "id" in err

    def test_determinism(self, tmp_path, capsys):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        assert main(["verify", "--format", "json", "--out", str(a)]) == 0
        assert main(["verify", "--format", "json", "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()


class TestSweep:
    def test_csv_rows(self, capsys):
        code, out, _ = run(
            ["sweep", "--from", "1.408", "--to", "1.410", "--step", "0.001"], capsys
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "p,overall,failing_claims,worst_margin_deg"
        assert len(lines) == 4
        verdicts = [line.split(",")[1] for line in lines[1:]]
        assert verdicts == ["refused", "verified", "refused"]

    def test_single_point(self, capsys):
        code, out, _ = run(
            ["sweep", "--from", "1.409", "--to", "1.409", "--step", "0.001"], capsys
        )
        assert code == 0
        assert "verified" in out

    def test_reversed_range_is_usage_error(self, capsys):
        code, _, err = run(
            ["sweep", "--from", "1.5", "--to", "1.4", "--step", "0.01"], capsys
        )
        assert code == 2
        assert "exceeds" in err

    def test_figure_rendered_next_to_output(self, tmp_path, capsys):
        out_csv = tmp_path / "sweep.csv"
        code = main(["sweep", "--from", "1.408", "--to", "1.410", "--step", "0.001",
                     "--out", str(out_csv)])
        assert code == 0
        assert out_csv.exists()
        assert (tmp_path / "sweep.png").exists()

    def test_no_figures_flag(self, tmp_path):
        out_csv = tmp_path / "sweep.csv"
        code = main(["sweep", "--from", "1.409", "--to", "1.409", "--step", "0.001",
                     "--out", str(out_csv), "--no-figures"])
        assert code == 0
        assert not (tmp_path / "sweep.png").exists()

    def test_determinism(self, tmp_path):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        args = ["sweep", "--from", "1.405", "--to", "1.412", "--step", "0.001"]
        assert main(args + ["--out", str(a), "--no-figures"]) == 0
        assert main(args + ["--out", str(b), "--no-figures"]) == 0
        assert a.read_bytes() == b.read_bytes()


class TestSig:
    def test_collinear_closed_and_open(self, tmp_path, capsys):
        points = tmp_path / "pts.txt"
        points.write_text(COLLINEAR)
        code, out, _ = run(["sig", "--input", str(points)], capsys)
        assert code == 0
        assert "# edge_count: 3" in out
        code, out, _ = run(["sig", "--input", str(points), "--open"], capsys)
        assert code == 0
        assert "# edge_count: 2" in out

    def test_stdin_input(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(COLLINEAR))
        code, out, _ = run(["sig"], capsys)
        assert code == 0
        assert "# edge_count: 3" in out

    def test_json_format(self, tmp_path, capsys):
        points = tmp_path / "pts.txt"
        points.write_text(COLLINEAR)
        code, out, _ = run(["sig", "--input", str(points), "--format", "json"], capsys)
        assert code == 0
        data = json.loads(out)
        assert data["edge_count"] == 3
        assert data["radii"] == [1.0, 1.0, 2.0]
        assert data["out_weights"] == [1.5, 1.5, 0.0]
        assert data["edge_bound_ok"] is True

    def test_parse_error_names_line(self, tmp_path, capsys):
        points = tmp_path / "bad.txt"
        points.write_text("0 0\noops\n")
        code, _, err = run(["sig", "--input", str(points)], capsys)
        assert code == 2
        assert "line 2" in err


class TestLatticeAndPipe:
    def test_lattice_points_pipe_into_sig(self, tmp_path, capsys):
        code, out, _ = run(["lattice", "--rows", "8", "--cols", "8"], capsys)
        assert code == 0
        points = tmp_path / "lattice.txt"
        points.write_text(out)
        code, out, _ = run(["sig", "--input", str(points), "--format", "json"], capsys)
        assert code == 0
        data = json.loads(out)
        degrees = data["degrees"]
        # The 8x8 patch already has an interior plateau at degree 18.
        assert max(degrees) == 18

    def test_lattice_report(self, capsys):
        code, out, _ = run(
            ["lattice", "--rows", "20", "--cols", "20", "--report"], capsys
        )
        assert code == 0
        data = json.loads(out)
        assert data["interior_degree_min"] == 18
        assert data["interior_degree_max"] == 18
        assert data["interior_edges_per_vertex"] == 9.0
        assert data["degree_histogram"]["18"] >= 256

    def test_minimal_lattice(self, capsys):
        code, out, _ = run(["lattice", "--rows", "1", "--cols", "2"], capsys)
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 2
        (x0, y0), (x1, y1) = (tuple(map(float, ln.split())) for ln in lines)
        assert (x0, y0) == (0.0, 0.0)
        assert x1 == pytest.approx(1.0) and y1 == 0.0


class TestExperiment:
    def test_seeded_run_passes_bounds(self, capsys):
        code, out, _ = run(
            ["experiment", "--trials", "50", "--n", "40", "--seed", "7"], capsys
        )
        assert code == 0
        assert out.count("PASS") == 3

    def test_determinism_across_runs(self, tmp_path):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        args = ["experiment", "--trials", "30", "--n", "30", "--seed", "7",
                "--format", "json", "--no-figures"]
        assert main(args + ["--out", str(a)]) == 0
        assert main(args + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_figure_rendered(self, tmp_path):
        out_json = tmp_path / "exp.json"
        code = main(["experiment", "--trials", "10", "--n", "20", "--seed", "1",
                     "--format", "json", "--out", str(out_json)])
        assert code == 0
        assert (tmp_path / "exp.png").exists()


class TestUsage:
    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_missing_required_flag(self, capsys):
        assert main(["sweep", "--from", "1.4"]) == 2
