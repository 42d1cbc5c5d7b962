import json

import pytest

from simplextune import ScoreKind, barycenter, macro_score
from simplextune import io
from simplextune.cli import run_cli

SYNTH_CONFIG = {
    "m": 3,
    "n": 400,
    "priors": [0.6, 0.3, 0.1],
    "concentration": 2.5,
    "seed": 21,
}


@pytest.fixture
def predictions_csv(tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps(SYNTH_CONFIG))
    out = tmp_path / "preds.csv"
    assert run_cli(["synth", "--config", str(config), "--out", str(out)]) == 0
    return out


def test_grid_info(capsys):
    assert run_cli(["grid-info", "-m", "3", "-k", "200"]) == 0
    assert capsys.readouterr().out.strip() == "20301"


def test_eval_near_barycenter_matches_macro(tmp_path, hand_data, capsys):
    path = tmp_path / "hand.csv"
    io.write_predictions(path, hand_data)
    code = run_cli(
        [
            "eval",
            "--input",
            str(path),
            "--tau",
            "0.3333333,0.3333333,0.3333334",
            "--metric",
            "f1",
        ]
    )
    assert code == 0
    result = json.loads(capsys.readouterr().out)
    parsed = io.parse_predictions(path)
    assert result["macro"] == macro_score(parsed, barycenter(3), ScoreKind.F1)
    assert result["macro"] == pytest.approx(11 / 18, rel=1e-9)


def test_tune_then_eval_reproduces_best_score(tmp_path, predictions_csv, capsys):
    out_dir = tmp_path / "tuned"
    code = run_cli(
        [
            "tune",
            "--input",
            str(predictions_csv),
            "--metric",
            "f1",
            "--sampler",
            "grid",
            "--resolution",
            "15",
            "--out",
            str(out_dir),
        ]
    )
    assert code == 0
    capsys.readouterr()
    report = io.read_report(out_dir / "report.json")
    assert report["tuning"]["delta"] >= 0.0
    assert (out_dir / "landscape.csv").exists()
    assert report["meta"]["sampler"] == "grid(k=15)"

    tau_arg = ",".join(repr(c) for c in report["tuning"]["best_threshold"])
    code = run_cli(
        ["eval", "--input", str(predictions_csv), "--tau", tau_arg, "--metric", "f1"]
    )
    assert code == 0
    result = json.loads(capsys.readouterr().out)
    assert result["macro"] == report["tuning"]["best_score"]


def test_tune_dirichlet_requires_seed(predictions_csv, tmp_path, capsys):
    code = run_cli(
        [
            "tune",
            "--input",
            str(predictions_csv),
            "--sampler",
            "dirichlet",
            "--samples",
            "50",
            "--out",
            str(tmp_path / "x"),
        ]
    )
    assert code == 1
    assert "seed" in capsys.readouterr().err


def test_roc_outputs(tmp_path, predictions_csv, capsys):
    out_dir = tmp_path / "rocout"
    code = run_cli(
        [
            "roc",
            "--input",
            str(predictions_csv),
            "--sampler",
            "dirichlet",
            "--samples",
            "100",
            "--seed",
            "5",
            "--out",
            str(out_dir),
        ]
    )
    assert code == 0
    report = io.read_report(out_dir / "report.json")
    assert report["meta"]["M"] == 101  # samples plus appended barycenter
    assert len(report["dfp"]["per_class"]) == 3
    assert 0.0 <= report["dfp"]["overall"] <= 2.0
    assert len(report["ovr_auc"]) == 3
    cloud_lines = (out_dir / "cloud.csv").read_text().strip().splitlines()
    assert cloud_lines[0] == "class,k,t0,t1,t2,fpr,tpr"
    assert len(cloud_lines) == 1 + 3 * 101
    assert (out_dir / "ovr_curves.csv").exists()


def test_repeat_runs_are_byte_identical(tmp_path, predictions_csv):
    args = [
        "tune",
        "--input",
        str(predictions_csv),
        "--sampler",
        "dirichlet",
        "--samples",
        "80",
        "--seed",
        "3",
        "--metric",
        "accuracy",
    ]
    a_dir = tmp_path / "a"
    b_dir = tmp_path / "b"
    assert run_cli(args + ["--out", str(a_dir)]) == 0
    assert run_cli(args + ["--out", str(b_dir), "--threads", "4"]) == 0
    assert (a_dir / "landscape.csv").read_bytes() == (b_dir / "landscape.csv").read_bytes()
    ra = json.loads((a_dir / "report.json").read_text())
    rb = json.loads((b_dir / "report.json").read_text())
    assert ra["tuning"] == rb["tuning"]


class TestExitCodes:
    def test_usage_error_is_one(self, capsys):
        assert run_cli(["tune", "--nope"]) == 1
        assert run_cli(["frobnicate"]) == 1
        assert "error: usage:" in capsys.readouterr().err

    def test_missing_file_is_two(self, capsys):
        code = run_cli(
            [
                "tune",
                "--input",
                "/does/not/exist.csv",
                "--resolution",
                "5",
                "--out",
                "/tmp/never",
            ]
        )
        assert code == 2
        assert "error: io:" in capsys.readouterr().err

    def test_validation_error_is_three(self, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text("p0,p1,label\n0.2,0.2,0\n")
        code = run_cli(
            ["tune", "--input", str(bad), "--resolution", "5", "--out", str(tmp_path)]
        )
        assert code == 3
        assert "error: validation:" in capsys.readouterr().err

    def test_tau_dimension_mismatch_is_three(self, tmp_path, hand_data, capsys):
        path = tmp_path / "hand.csv"
        io.write_predictions(path, hand_data)
        code = run_cli(["eval", "--input", str(path), "--tau", "0.5,0.5"])
        assert code == 3

    def test_bad_tau_string_is_three(self, tmp_path, hand_data, capsys):
        path = tmp_path / "hand.csv"
        io.write_predictions(path, hand_data)
        code = run_cli(["eval", "--input", str(path), "--tau", "a,b,c"])
        assert code == 3

    def test_bad_synth_config_is_three(self, tmp_path, capsys):
        config = tmp_path / "c.json"
        config.write_text(json.dumps({"m": 3}))
        code = run_cli(
            ["synth", "--config", str(config), "--out", str(tmp_path / "o.csv")]
        )
        assert code == 3
