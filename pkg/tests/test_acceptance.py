"""Acceptance suite: one test per release criterion, each printing its own
pass line (run with ``pytest -s`` to see them).

Every expected value is either checked against an independent brute-force
oracle from ``_reference`` or asserted at the tolerance fixed here.
"""

import json
import subprocess
import sys
import time
from fractions import Fraction

import numpy as np
import pytest

import _reference as ref
from simplextune import (
    LabeledPredictions,
    RocCloud,
    ScoreKind,
    SynthSpec,
    barycenter,
    classify_argmax,
    classify_natural,
    confusion_matrices,
    dfp,
    dirichlet_sample,
    generate,
    grid,
    macro_score,
    make_point,
    ovr_curve,
    roc_cloud,
    tune,
)
from simplextune import io
from simplextune.cli import run_cli

from conftest import HAND_LABELS, HAND_PREDICTIONS


def _report(name: str) -> None:
    print(f"ACCEPTANCE PASS: {name}")


def test_grid_cardinality():
    start = time.perf_counter()
    g = grid(3, 200)
    elapsed = time.perf_counter() - start
    assert len(g) == 20301, f"expected 20301 thresholds, got {len(g)}"
    assert elapsed < 1.0, f"grid generation took {elapsed:.3f}s"
    _report(f"grid cardinality (20301 thresholds in {elapsed * 1000:.0f} ms)")


def test_argmax_reduction():
    rng = np.random.default_rng(1001)
    per_m = 26_000
    total = mismatches = 0
    for m in (2, 3, 5, 10):
        center = barycenter(m)
        draws = rng.dirichlet(np.ones(m), size=per_m)
        for row in draws:
            z = make_point(tuple(row))
            if classify_natural(z, center) != classify_argmax(z):
                mismatches += 1
            total += 1
    assert total >= 100_000
    assert mismatches == 0, f"{mismatches} mismatches out of {total}"
    _report(f"argmax reduction ({total} draws, 0 mismatches)")


def test_properness():
    rng = np.random.default_rng(1002)
    per_m = 26_000
    total = mismatches = 0
    for m in (2, 3, 5, 10):
        zs = rng.dirichlet(np.ones(m), size=per_m)
        taus = rng.dirichlet(np.ones(m), size=per_m)
        for zrow, trow in zip(zs, taus):
            z = tuple(zrow)
            t = tuple(trow)
            diffs = sorted((zj - tj for zj, tj in zip(z, t)), reverse=True)
            total += 1
            if diffs[0] == diffs[1]:
                continue  # unique-maximum precondition (never hit in practice)
            members = ref.region_members(z, t)
            assigned = classify_natural(make_point(z), make_point(t))
            if members != [assigned.class_index] or assigned.tie:
                mismatches += 1
    assert total >= 100_000
    assert mismatches == 0, f"{mismatches} mismatches out of {total}"
    _report(f"properness ({total} (z, tau) pairs, 0 mismatches)")


def test_counting_identities():
    rng = np.random.default_rng(1003)
    datasets = 1000
    for _ in range(datasets):
        m = int(rng.integers(2, 7))
        n = int(rng.integers(1, 201))
        data = LabeledPredictions(
            rng.dirichlet(np.ones(m), size=n), rng.integers(0, m, size=n)
        )
        tau = make_point(tuple(rng.dirichlet(np.ones(m))))
        cms = confusion_matrices(data, tau)
        for j, c in enumerate(cms):
            assert c.tn + c.fp + c.fn + c.tp == n
            assert c.tp + c.fn == data.class_counts[j]
            assert c.fp + c.tn == n - data.class_counts[j]
        total_fn = sum(c.fn for c in cms)
        assert sum(c.fp for c in cms) == total_fn
        macro_exact = sum(Fraction(c.tp + c.tn, n) for c in cms) / m
        assert macro_exact == 1 - Fraction(2 * total_fn, m * n)
        macro_float = macro_score(data, tau, ScoreKind.ACCURACY)
        assert abs(macro_float - float(macro_exact)) <= 1e-12
    _report(f"counting identities ({datasets} random datasets)")


SYNTH_SUITE = [
    SynthSpec(3, 200, make_point((1 / 3, 1 / 3, 1 / 3)), 2.0, seed=1),
    SynthSpec(3, 500, make_point((0.9, 0.05, 0.05)), 3.0, seed=2),
    SynthSpec(2, 300, make_point((0.8, 0.2)), 1.5, seed=3),
    SynthSpec(4, 400, make_point((0.55, 0.25, 0.15, 0.05)), 2.5, seed=4),
    SynthSpec(5, 250, make_point((0.4, 0.3, 0.15, 0.1, 0.05)), 1.0, seed=5),
    SynthSpec(
        3,
        300,
        make_point((0.5, 0.3, 0.2)),
        4.0,
        seed=6,
        confusion_bias=((0.8, 0.1, 0.1), (0.2, 0.7, 0.1), (0.25, 0.25, 0.5)),
    ),
]


def test_tuning_dominance():
    checks = 0
    for spec in SYNTH_SUITE:
        data = generate(spec)
        for kind in (ScoreKind.F1, ScoreKind.ACCURACY):
            for thresholds in (grid(spec.m, 8), dirichlet_sample(spec.m, 150, seed=9)):
                report = tune(data, thresholds, kind)
                baseline = macro_score(data, barycenter(spec.m), kind)
                assert report.baseline_argmax_score == baseline
                assert report.best_score >= baseline, (
                    f"spec seed {spec.seed}: best {report.best_score} "
                    f"below baseline {baseline}"
                )
                checks += 1
    _report(f"tuning dominance ({checks} dataset/metric/sampler combinations)")


@pytest.mark.parametrize("workers", [1, 2, 8])
def test_oracle_equivalence(workers):
    hand = LabeledPredictions(HAND_PREDICTIONS, HAND_LABELS)
    synth = generate(SynthSpec(3, 50, make_point((0.5, 0.3, 0.2)), 2.0, seed=12))
    cases = [(hand, grid(3, 12)), (synth, grid(3, 20))]
    for data, thresholds in cases:
        report = tune(data, thresholds, ScoreKind.F1, threads=workers, chunk_size=32)
        taus = [tuple(row) for row in report.thresholds.array]
        best_idx, scores = ref.tune(data.predictions, data.labels, taus, "f1")
        assert list(report.macro_scores) == scores  # bit-for-bit
        assert report.best_index == best_idx
        assert report.best_threshold.components == taus[best_idx]

        cloud = roc_cloud(data, thresholds, threads=workers, chunk_size=32)
        expected = ref.cloud(
            data.predictions, data.labels, [tuple(r) for r in thresholds.array]
        )
        for k, rates in enumerate(expected):
            for j, (fpr_kj, tpr_kj) in enumerate(rates):
                assert cloud.fpr[k, j] == fpr_kj
                assert cloud.tpr[k, j] == tpr_kj
    _report(f"oracle equivalence (workers={workers}, bit-for-bit)")


def test_dfp_calibration():
    diag = np.concatenate([[0.0, 0.5, 1.0], np.linspace(0.005, 0.995, 199)])
    diagonal_cloud = RocCloud(
        fpr=np.column_stack([diag, diag]), tpr=np.column_stack([diag, diag])
    )
    for v in dfp(diagonal_cloud).per_class:
        assert abs(v - 1.0) <= 1e-12
    perfect = RocCloud(fpr=np.zeros((64, 3)), tpr=np.ones((64, 3)))
    assert dfp(perfect).per_class == (0.0, 0.0, 0.0)
    assert dfp(perfect).overall == 0.0
    worst = RocCloud(fpr=np.ones((1, 2)), tpr=np.zeros((1, 2)))
    assert dfp(worst).per_class == (2.0, 2.0)
    _report("DFP calibration (diagonal=1, ideal=0, worst corner=2)")


def test_auc_cross_check():
    rng = np.random.default_rng(1004)
    datasets = 0
    while datasets < 120:
        n = int(rng.integers(4, 60))
        if datasets % 2:
            scores = rng.random(n)  # continuous, ties almost impossible
        else:
            scores = rng.integers(0, 5, size=n) / 5.0  # heavy ties
        labels = rng.integers(0, 2, size=n)
        if labels.min() == labels.max():
            continue
        data = LabeledPredictions(np.column_stack([scores, 1 - scores]), labels)
        curve = ovr_curve(data, 0)
        expected = ref.auc_pair_count(
            [float(s) for s in scores], [lab == 0 for lab in labels]
        )
        assert abs(curve.auc - expected) <= 1e-12
        datasets += 1

    separable = LabeledPredictions(
        [(0.9, 0.1), (0.7, 0.3), (0.3, 0.7), (0.1, 0.9)], [0, 0, 1, 1]
    )
    assert ovr_curve(separable, 0).auc == 1.0
    constant = LabeledPredictions([(0.5, 0.5)] * 8, [0, 1] * 4)
    assert ovr_curve(constant, 0).auc == 0.5
    _report(f"AUC cross-check ({datasets} datasets incl. ties, tol 1e-12)")


IMBALANCE_SPEC = SynthSpec(
    m=3,
    n=10_000,
    priors=make_point((0.9, 0.05, 0.05)),
    concentration=3.0,
    seed=7,
)


def test_imbalance_benefit():
    tune_data = generate(IMBALANCE_SPEC)
    held_out = generate(
        SynthSpec(
            m=IMBALANCE_SPEC.m,
            n=IMBALANCE_SPEC.n,
            priors=IMBALANCE_SPEC.priors,
            concentration=IMBALANCE_SPEC.concentration,
            seed=IMBALANCE_SPEC.seed + 1,
        )
    )
    start = time.perf_counter()
    report = tune(tune_data, grid(3, 200), ScoreKind.F1)
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"tuning took {elapsed:.1f}s"

    tuned = macro_score(held_out, report.best_threshold, ScoreKind.F1)
    baseline = macro_score(held_out, barycenter(3), ScoreKind.F1)
    gain = tuned - baseline
    assert gain >= 0.01, f"held-out gain {gain:.4f} below 0.01"
    _report(
        f"imbalance benefit (held-out macro-F1 gain {gain:.4f} "
        f">= 0.01, tuning {elapsed:.1f}s)"
    )


def test_end_to_end_pipeline(tmp_path):
    config = {
        "m": 3,
        "n": 2000,
        "priors": [0.7, 0.2, 0.1],
        "concentration": 2.0,
        "seed": 31,
    }
    config_path = tmp_path / "config.json"
    config_path.write_text(json.dumps(config))
    preds_path = tmp_path / "preds.csv"
    assert run_cli(["synth", "--config", str(config_path), "--out", str(preds_path)]) == 0

    tune_dir = tmp_path / "tune"
    assert (
        run_cli(
            [
                "tune",
                "--input",
                str(preds_path),
                "--metric",
                "f1",
                "--sampler",
                "grid",
                "--resolution",
                "40",
                "--out",
                str(tune_dir),
            ]
        )
        == 0
    )
    tune_report = io.read_report(tune_dir / "report.json")
    assert tune_report["tuning"]["delta"] >= 0.0
    assert (tune_dir / "landscape.csv").exists()

    roc_dir = tmp_path / "roc"
    assert (
        run_cli(
            [
                "roc",
                "--input",
                str(preds_path),
                "--sampler",
                "dirichlet",
                "--samples",
                "400",
                "--seed",
                "8",
                "--out",
                str(roc_dir),
            ]
        )
        == 0
    )
    roc_report = io.read_report(roc_dir / "report.json")
    assert roc_report["dfp"] is not None
    assert (roc_dir / "cloud.csv").exists()
    assert (roc_dir / "ovr_curves.csv").exists()

    # eval at the reported best threshold reproduces the reported best score
    tau_arg = ",".join(repr(c) for c in tune_report["tuning"]["best_threshold"])
    proc = subprocess.run(
        [
            sys.executable,
            "-m",
            "simplextune.cli",
            "eval",
            "--input",
            str(preds_path),
            "--tau",
            tau_arg,
            "--metric",
            "f1",
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    evaluated = json.loads(proc.stdout)
    assert evaluated["macro"] == tune_report["tuning"]["best_score"]

    data = io.parse_predictions(preds_path)
    best = make_point(tune_report["tuning"]["best_threshold"])
    assert macro_score(data, best, ScoreKind.F1) == tune_report["tuning"]["best_score"]
    _report("end-to-end pipeline (synth -> tune -> roc -> eval consistent)")
