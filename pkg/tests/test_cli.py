"""Tests for the command-line interface"""

import io
import json

import pandas as pd
import pytest
from typer.testing import CliRunner

from condquant import __version__
from condquant.cli import app
from condquant.core import format_rational, parse_rational
from condquant.output import POLYGON_POINT_COLUMNS, SCAN_COLUMNS, SEGMENT_POINT_COLUMNS, OutputRecord

runner = CliRunner()

QUARTER_HALF = ["--a", "0", "--b", "1", "--beta", "1/4,1/2"]


def run_json(*args: str) -> dict:
    result = runner.invoke(app, list(args))
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


class TestSegmentCommand:
    """Test the segment command"""

    def test_four_points(self):
        record = run_json("segment", *QUARTER_HALF, "--n", "4")
        assert record["schema_version"]
        assert record["command"] == "segment"
        points = record["results"]["points"]
        assert [p["exact"] for p in points] == ["1/12", "1/4", "1/2", "5/6"]
        assert all(p["float"] == float(parse_rational(p["exact"])) for p in points)
        assert record["results"]["allocation"] == [2, 2, 2]
        assert round(record["results"]["error"]["float"], 8) == 0.00651042
        assert record["results"]["error"]["exact"] == "5/768"

    def test_grid_minimal(self):
        record = run_json("segment", "--a", "0", "--b", "1", "--beta", "1/5,2/5,3/5,4/5,1", "--n", "5")
        assert [p["exact"] for p in record["results"]["points"]] == ["1/5", "2/5", "3/5", "4/5", "1/1"]
        assert record["results"]["error"]["exact"] == "2/375"

    def test_single_point(self):
        record = run_json("segment", "--a", "0", "--b", "1", "--beta", "1/2", "--n", "1")
        assert [p["exact"] for p in record["results"]["points"]] == ["1/2"]

    def test_json_round_trip(self):
        result = runner.invoke(app, ["segment", *QUARTER_HALF, "--n", "9"])
        record = OutputRecord.from_json(result.stdout)
        assert record.to_json() == result.stdout.strip()
        for p in record.results["points"]:
            assert format_rational(parse_rational(p["exact"])) == p["exact"]
            assert p["float"] == float(parse_rational(p["exact"]))

    def test_csv(self):
        result = runner.invoke(app, ["segment", *QUARTER_HALF, "--n", "4", "--format", "csv"])
        assert result.exit_code == 0
        frame = pd.read_csv(io.StringIO(result.stdout), dtype={"exact": str, "allocation": str, "error_exact": str})
        assert list(frame.columns) == SEGMENT_POINT_COLUMNS
        assert list(frame["index"]) == [1, 2, 3, 4]
        assert list(frame["exact"]) == ["1/12", "1/4", "1/2", "5/6"]
        assert set(frame["allocation"]) == {"2;2;2"}
        assert set(frame["error_exact"]) == {"5/768"}
        assert frame["error_float"].tolist() == pytest.approx([5 / 768] * 4, rel=1e-15)

    def test_parse_error(self):
        result = runner.invoke(app, ["segment", "--a", "0.5", "--b", "1", "--beta", "1", "--n", "1"])
        assert result.exit_code == 2
        assert "error:" in result.output

    def test_invalid_problem(self):
        result = runner.invoke(app, ["segment", "--a", "0", "--b", "1", "--beta", "3/2", "--n", "1"])
        assert result.exit_code == 2

    def test_infeasible(self):
        result = runner.invoke(app, ["segment", *QUARTER_HALF, "--n", "1"])
        assert result.exit_code == 3
        assert "minimal feasible n is 2" in result.output


class TestPolygonCommand:
    """Test the polygon command"""

    def test_square_eight(self):
        record = run_json("polygon", "--m", "4", "--n", "8")
        results = record["results"]
        assert len(results["points"]) == 8
        assert set(results["points"][0]) == {"x", "y"}
        assert abs(results["error"] - 1 / 24) <= 1e-12
        assert results["coefficient"] == pytest.approx(8 / 3)

    def test_triangle_seven(self):
        record = run_json("polygon", "--m", "3", "--n", "7")
        assert record["results"]["side_counts"] == [4, 3, 3]

    def test_pentagon_vertices(self):
        record = run_json("polygon", "--m", "5", "--n", "5")
        assert len(record["results"]["points"]) == 5

    def test_csv(self):
        result = runner.invoke(app, ["polygon", "--m", "3", "--n", "7", "--format", "csv"])
        assert result.exit_code == 0
        frame = pd.read_csv(io.StringIO(result.stdout), dtype={"side_counts": str})
        assert list(frame.columns) == POLYGON_POINT_COLUMNS
        assert len(frame) == 7
        assert set(frame["side_counts"]) == {"4;3;3"}
        assert frame["coefficient"].tolist() == pytest.approx([9 / 4] * 7, rel=1e-12)
        record = run_json("polygon", "--m", "3", "--n", "7")
        assert frame["error"].tolist() == pytest.approx([record["results"]["error"]] * 7, rel=1e-15)
        assert frame["x"].tolist() == pytest.approx([p["x"] for p in record["results"]["points"]], abs=1e-15)

    def test_infeasible(self):
        assert runner.invoke(app, ["polygon", "--m", "4", "--n", "3"]).exit_code == 3

    def test_too_few_sides(self):
        assert runner.invoke(app, ["polygon", "--m", "2", "--n", "3"]).exit_code == 2


class TestScanCommand:
    """Test the scan command"""

    def test_segment_scan(self, tmp_path):
        out = tmp_path / "scan.csv"
        result = runner.invoke(
            app, ["scan", "--target", "segment", *QUARTER_HALF, "--n-min", "2", "--n-max", "6", "--out", str(out)]
        )
        assert result.exit_code == 0, result.output
        assert out.read_text().splitlines()[0] == ",".join(SCAN_COLUMNS)
        frame = pd.read_csv(out, dtype={"k_alloc": str, "v_exact": str})
        assert list(frame["n"]) == [2, 3, 4, 5, 6]
        assert frame["k_alloc"][0] == "1;2;1"
        assert frame["v_exact"][0] == "37/768"
        assert [round(v, 8) for v in frame["v_float"][2:]] == [0.00651042, 0.00354745, 0.00257089]

    def test_polygon_scan(self, tmp_path):
        out = tmp_path / "poly.csv"
        result = runner.invoke(app, ["scan", "--target", "polygon", "--m", "4", "--n-max", "40", "--out", str(out)])
        assert result.exit_code == 0, result.output
        frame = pd.read_csv(out)
        assert list(frame.columns) == SCAN_COLUMNS
        assert frame["v_exact"].isna().all()
        lattice = frame[frame["n"] % 4 == 0]
        assert lattice["n2_v"].tolist() == pytest.approx([8 / 3] * len(lattice), rel=1e-12)

    def test_identical_runs(self, tmp_path):
        args = ["scan", "--target", "segment", *QUARTER_HALF, "--n-max", "50", "--out"]
        runner.invoke(app, [*args, str(tmp_path / "a.csv")])
        runner.invoke(app, [*args, str(tmp_path / "b.csv")])
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()

    def test_missing_problem_flags(self, tmp_path):
        result = runner.invoke(app, ["scan", "--target", "segment", "--n-max", "5", "--out", str(tmp_path / "x.csv")])
        assert result.exit_code == 2


class TestVerifyCommand:
    """Test the verify command"""

    def test_segment_passes(self):
        record = run_json("--threads", "4", "--log-level", "error", "verify", *QUARTER_HALF, "--n", "5", "--seeds", "20")
        results = record["results"]
        assert results["passed"] is True
        assert results["relative_gap"] < 1e-9
        assert results["closed_form_error"]["exact"] == "613/172800"
        assert results["oracles"]["exact_integration"]["exact"] == "613/172800"
        assert "grid" in results["oracles"]

    def test_minimal_n_has_zero_gap(self):
        record = run_json("verify", *QUARTER_HALF, "--n", "2")
        assert record["results"]["relative_gap"] == 0.0
        assert record["results"]["passed"] is True

    def test_polygon_passes(self):
        record = run_json("verify", "--target", "polygon", "--m", "3", "--n", "9", "--samples", "1000000")
        assert record["results"]["passed"] is True
        assert record["results"]["absolute_gap"] < 2e-5

    def test_failure_exit_code(self, tmp_path):
        config = tmp_path / "strict.json"
        config.write_text(json.dumps({"tolerance": {"polygon_abs": -1.0}}))
        result = runner.invoke(
            app,
            ["--config", str(config), "verify", "--target", "polygon", "--m", "4", "--n", "8", "--samples", "10000"],
        )
        assert result.exit_code == 4
        assert json.loads(result.stdout.split("verification failed")[0])["results"]["passed"] is False


class TestGlobalOptions:
    """Test options shared by every command"""

    def test_version(self):
        result = runner.invoke(app, ["--version"])
        assert result.exit_code == 0
        assert f"condquant {__version__}" in result.output

    def test_bad_log_level(self):
        result = runner.invoke(app, ["--log-level", "loud", "polygon", "--m", "4", "--n", "4"])
        assert result.exit_code == 2

    def test_invalid_config(self, tmp_path):
        config = tmp_path / "bad.json"
        config.write_text(json.dumps({"boundary": {"samples": 5}}))
        result = runner.invoke(app, ["--config", str(config), "polygon", "--m", "4", "--n", "4"])
        assert result.exit_code == 2
