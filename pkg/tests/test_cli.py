"""Tests for the depthkit command line, run in-process through ``main``."""

import contextlib
import io
import json
import math
from importlib import metadata as importlib_metadata
from pathlib import Path

import pandas as pd
import pytest
import yaml

from depthkit import RNG_ALGORITHM, __version__
from depthkit.cli.main import main
from depthkit.errors import EXIT_ACCEPTANCE, EXIT_DEGENERATE, EXIT_INPUT, EXIT_OK

SQUARE_WITH_CENTER = "x,y\n1,1\n1,-1\n-1,1\n-1,-1\n0,0\n"
QUICK_EXPERIMENT = [
    "--set",
    "n=40",
    "--set",
    "methods=['3mad','spatial']",
    "--replicates",
    "2",
    "--threads",
    "1",
]


@pytest.fixture
def square_csv(tmp_path: Path) -> Path:
    path = tmp_path / "square.csv"
    path.write_text(SQUARE_WITH_CENTER, encoding="utf-8")
    return path


def _stdout_frame(capsys: pytest.CaptureFixture[str]) -> pd.DataFrame:
    return pd.read_csv(io.StringIO(capsys.readouterr().out), comment="#")


def test_depth_writes_csv_to_stdout_and_logs_to_stderr(
    square_csv: Path,
    capsys: pytest.CaptureFixture[str],
) -> None:
    assert main(["depth", "-i", str(square_csv), "--metric", "l2"]) == EXIT_OK
    captured = capsys.readouterr()
    assert captured.out.splitlines()[0] == "index,phi,depth,rank"
    frame = pd.read_csv(io.StringIO(captured.out))
    assert frame["depth"].tolist() == pytest.approx([0.0, 0.0, 0.0, 0.0, 0.8])
    assert frame["rank"].tolist() == [2, 2, 2, 2, 1]
    assert "depth" in captured.err


def test_depth_scores_query_points(square_csv: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["depth", "-i", str(square_csv), "--query", "0,0;10,10"]) == EXIT_OK
    frame = _stdout_frame(capsys)
    assert frame["index"].tolist() == [0, 1]
    assert frame["depth"].tolist() == pytest.approx([0.8, 0.0])


def test_depth_runs_classical_methods(square_csv: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["depth", "-i", str(square_csv), "--method", "tukey"]) == EXIT_OK
    frame = _stdout_frame(capsys)
    assert list(frame.columns) == ["index", "depth", "rank"]
    assert frame["depth"].iloc[4] == frame["depth"].max()


@pytest.mark.integration
def test_depth_with_output_writes_reproducible_manifest(square_csv: Path, tmp_path: Path) -> None:
    out = tmp_path / "out" / "depth.csv"
    args = ["depth", "-i", str(square_csv), "-o", str(out), "--seed", "5"]
    assert main(args) == EXIT_OK
    manifest_path = tmp_path / "out" / "depth.manifest.json"
    first = manifest_path.read_bytes()
    manifest = json.loads(first)
    assert manifest["command"] == "depth"
    assert manifest["seed"] == 5  # noqa: PLR2004
    assert manifest["version"] == __version__
    assert manifest["rng"] == RNG_ALGORITHM
    assert len(manifest["inputs"]["input"]) == 64, "sha256 hex digest"  # noqa: PLR2004
    assert main(args) == EXIT_OK
    assert manifest_path.read_bytes() == first


def test_simulate_is_deterministic_and_honours_env_seed(
    monkeypatch: pytest.MonkeyPatch,
    capsys: pytest.CaptureFixture[str],
) -> None:
    base = ["simulate", "--spec", "preset:table1-elliptical", "--n", "15"]
    assert main([*base, "--seed", "3"]) == EXIT_OK
    flag = capsys.readouterr().out
    monkeypatch.setenv("DEPTHKIT_SEED", "3")
    assert main(base) == EXIT_OK
    env = capsys.readouterr().out
    assert main([*base, "--seed", "4"]) == EXIT_OK
    other = capsys.readouterr().out
    assert flag == env
    assert flag != other
    assert len(flag.splitlines()) == 16, "header plus 15 rows"  # noqa: PLR2004


def test_simulate_reads_yaml_generator_spec(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    spec = tmp_path / "spec.yaml"
    document = {
        "kind": "gaussian",
        "params": {"mean": [5, 5, 5], "cov": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]},
        "n": 8,
    }
    spec.write_text(yaml.safe_dump(document), encoding="utf-8")
    assert main(["simulate", "--spec", str(spec)]) == EXIT_OK
    frame = _stdout_frame(capsys)
    assert frame.shape == (8, 3)


@pytest.mark.integration
def test_simulate_manifest_records_the_generator_model(tmp_path: Path) -> None:
    out = tmp_path / "sample.csv"
    args = ["simulate", "--spec", "preset:boundary-skewed", "--n", "12", "--seed", "2", "-o", str(out)]
    assert main(args) == EXIT_OK
    manifest = json.loads((tmp_path / "sample.manifest.json").read_text(encoding="utf-8"))
    assert manifest["parameters"]["model"]["kind"] == "product"
    assert manifest["parameters"]["model"]["n"] == 12  # noqa: PLR2004
    assert len(pd.read_csv(out)) == 12  # noqa: PLR2004


def test_contour_writes_preamble_and_y_major_grid(square_csv: Path, capsys: pytest.CaptureFixture[str]) -> None:
    args = ["contour", "-i", str(square_csv), "--bounds", "-1,1,-2,2", "--res", "3,2"]
    assert main(args) == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "# field=scale metric=l2 method=3mad"
    frame = pd.read_csv(io.StringIO(out), comment="#")
    assert frame["x"].tolist() == [-1.0, 0.0, 1.0, -1.0, 0.0, 1.0]
    assert frame["y"].tolist() == [-2.0, -2.0, -2.0, 2.0, 2.0, 2.0]


def test_contour_rejects_non_planar_data(tmp_path: Path) -> None:
    path = tmp_path / "line.csv"
    path.write_text("1\n2\n3\n", encoding="utf-8")
    assert main(["contour", "-i", str(path)]) == EXIT_INPUT


def test_shells_assigns_every_observation(capsys: pytest.CaptureFixture[str]) -> None:
    args = ["shells", "--simulate", "preset:shells-mixture", "--levels", "0.25,0.5,0.75"]
    assert main(args) == EXIT_OK
    frame = _stdout_frame(capsys)
    assert set(frame["shell_index"]) <= {0, 1, 2, 3}
    assert frame["shell_index"].min() == 0


@pytest.mark.integration
def test_boundary_writes_directions_summary_and_manifest(tmp_path: Path) -> None:
    out = tmp_path / "boundary.csv"
    args = [
        "boundary",
        "--simulate",
        "preset:boundary-symmetric",
        "--center",
        "mean",
        "--fraction",
        "0.2",
        "-o",
        str(out),
    ]
    assert main(args) == EXIT_OK
    frame = pd.read_csv(out)
    assert list(frame.columns) == ["index", "angle", "u1", "u2", "weight"]
    summary = json.loads((tmp_path / "boundary.json").read_text(encoding="utf-8"))
    assert summary["shell_size"] == len(frame)
    assert sum(frame["weight"]) == pytest.approx(1.0)
    assert (tmp_path / "boundary.manifest.json").exists()


def test_boundary_accepts_explicit_center(square_csv: Path, capsys: pytest.CaptureFixture[str]) -> None:
    args = ["boundary", "-i", str(square_csv), "--center", "0,0", "--mmin", "4", "--fraction", "0.1"]
    assert main(args) == EXIT_OK
    frame = _stdout_frame(capsys)
    assert sorted(frame["index"].tolist()) == [0, 1, 2, 3]


def test_univariate_model_reports_slope(capsys: pytest.CaptureFixture[str]) -> None:
    args = ["univariate", "--model", "exponential:1", "--at", str(math.log(4.0))]
    assert main(args) == EXIT_OK
    frame = _stdout_frame(capsys)
    assert frame["g"].iloc[0] == pytest.approx(math.asinh(1.0), abs=1e-8)
    assert frame["g_derivative"].iloc[0] == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-8)


def test_univariate_sample_reports_g_and_depth(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = tmp_path / "values.csv"
    path.write_text("a,b\n1,0\n2,0\n3,0\n4,0\n5,0\n", encoding="utf-8")
    assert main(["univariate", "-i", str(path), "--at", "3,0"]) == EXIT_OK
    frame = _stdout_frame(capsys)
    assert frame["g"].tolist() == [1.0, 3.0]
    assert frame["depth"].tolist() == pytest.approx([0.4, 0.0])
    assert frame["sub_lower"].iloc[1] == pytest.approx(0.6)


def test_univariate_rejects_column_out_of_range(tmp_path: Path) -> None:
    path = tmp_path / "values.csv"
    path.write_text("1\n2\n3\n", encoding="utf-8")
    assert main(["univariate", "-i", str(path), "--column", "2", "--at", "0"]) == EXIT_INPUT


@pytest.mark.integration
def test_experiment_writes_every_artifact(tmp_path: Path) -> None:
    out = tmp_path / "exp"
    args = ["experiment", "--name", "table1-elliptical", "-o", str(out), *QUICK_EXPERIMENT, "--set", "acceptance.min=-1"]
    assert main(args) == EXIT_OK
    assert {p.name for p in out.iterdir()} == {
        "correlation.csv",
        "replicates.csv",
        "summary.json",
        "config.yaml",
        "manifest.json",
    }
    summary = json.loads((out / "summary.json").read_text(encoding="utf-8"))
    assert summary["passed"] is True
    assert yaml.safe_load((out / "config.yaml").read_text(encoding="utf-8"))["replicates"] == 2  # noqa: PLR2004
    assert pd.read_csv(out / "correlation.csv")["method"].tolist() == ["3mad", "spatial"]


@pytest.mark.integration
def test_experiment_missing_a_band_exits_with_acceptance_code(tmp_path: Path) -> None:
    out = tmp_path / "exp"
    args = ["experiment", "--name", "table1-elliptical", "-o", str(out), *QUICK_EXPERIMENT, "--set", "acceptance.min=1.5"]
    assert main(args) == EXIT_ACCEPTANCE
    summary = json.loads((out / "summary.json").read_text(encoding="utf-8"))
    assert summary["passed"] is False, "artifacts are written before the bands are enforced"


@pytest.mark.parametrize(
    "argv",
    [
        ["depth", "-i", "does-not-exist.csv"],
        ["depth", "--simulate", "preset:nosuch"],
        ["depth", "--simulate", "preset:table1-elliptical", "--metric", "l3"],
        ["depth", "--simulate", "preset:table1-elliptical", "--seed", "-2"],
        ["shells", "--simulate", "preset:table1-elliptical", "--levels", "0.5,0.25"],
        ["experiment", "--name", "table2", "-o", "x"],
        ["depth"],
    ],
    ids=["missing-file", "unknown-preset", "unknown-metric", "negative-seed", "levels", "unknown-experiment", "no-data"],
)
def test_bad_input_exits_with_input_code(argv: list[str]) -> None:
    assert main(argv) == EXIT_INPUT


def test_degenerate_covariance_exits_with_degeneracy_code(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = tmp_path / "line.csv"
    path.write_text("0,0\n1,1\n2,2\n3,3\n", encoding="utf-8")
    assert main(["depth", "-i", str(path), "--metric", "mahalanobis"]) == EXIT_DEGENERATE
    assert "use the l2 metric" in capsys.readouterr().err


def test_version_flag_reports_installed_version_and_rng(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["--version"]) == EXIT_OK
    assert RNG_ALGORITHM == "PCG64"
    assert capsys.readouterr().out.strip() == f"depthkit {__version__} (rng: PCG64)"
    with contextlib.suppress(importlib_metadata.PackageNotFoundError):
        assert __version__ == importlib_metadata.version("depthkit")
