import csv
import json

import numpy as np
import pytest

from emgactions.cli import main
from emgactions.features.export import read_feature_csv
from emgactions.features.registry import build_registry
from emgactions.selection import reference_selection

ACTIONS = {1: "Bowing", 2: "Clapping"}


def write_recording(path, subject, action, trials=3, samples=40, channels=8):
    # class 2 carries 5x the amplitude, so the classes separate on variance
    rng = np.random.default_rng(subject * 10 + action)
    rows = rng.normal(0, 1.0, (trials * samples, channels))
    if action == 2:
        rows *= 5.0
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(" ".join(f"{v:.6f}" for v in row) + "\n")


@pytest.fixture(scope="module")
def workspace(tmp_path_factory):
    ws = tmp_path_factory.mktemp("cli")
    data = ws / "data"
    for subject in (1, 2):
        d = data / f"sub{subject}"
        d.mkdir(parents=True)
        for action, name in ACTIONS.items():
            write_recording(d / f"{name}.txt", subject, action)
    manifest = ws / "manifest.txt"
    manifest.write_text(
        "root = data\n"
        "trials = 3\n"
        "channels = 8\n"
        "entry = sub1/Bowing.txt 1 1\n"
        "entry = sub1/Clapping.txt 1 2\n"
        "entry = sub2/Bowing.txt 2 1\n"
        "entry = sub2/Clapping.txt 2 2\n"
    )
    config = ws / "run.cfg"
    config.write_text(
        "cv_folds = 3\n"
        "runs = 2\n"
        "sigma = 0.5\n"
        "sfs_folds = 2\n"
        "max_features = 2\n"
    )
    features_dir = ws / "features"
    assert main(["extract", "--manifest", str(manifest), "--out", str(features_dir)]) == 0
    return {
        "manifest": manifest,
        "data": data,
        "config": config,
        "features": features_dir / "features.csv",
        "registry_csv": features_dir / "registry.csv",
    }


def rows_of(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


class TestExtract:
    def test_outputs_match_dataset(self, workspace):
        X, y, subjects, trials, names = read_feature_csv(workspace["features"])
        assert X.shape == (12, 276)
        assert y.tolist() == [1, 1, 1, 2, 2, 2, 1, 1, 1, 2, 2, 2]
        assert subjects.tolist() == [1] * 6 + [2] * 6
        assert trials.tolist() == [1, 2, 3] * 4
        assert list(names) == list(build_registry().names())
        assert np.all(np.isfinite(X))

    def test_registry_csv(self, workspace):
        rows = rows_of(workspace["registry_csv"])
        assert rows[0] == ["index", "modality", "channel", "name"]
        assert len(rows) == 277
        assert rows[1] == ["1", "tds", "1", "tds_ch1_mean"]
        assert rows[33][1] == "ics"
        assert rows[33][2] == "3-4"

    def test_directory_scan(self, workspace, tmp_path):
        # pointing --manifest at the tree root scans it with 15 trials/file
        out = tmp_path / "scan"
        assert main(["extract", "--manifest", str(workspace["data"]), "--out", str(out)]) == 0
        X, y, subjects, _, _ = read_feature_csv(out / "features.csv")
        assert X.shape == (60, 276)
        assert subjects.tolist() == [1] * 30 + [2] * 30
        assert y.tolist() == ([1] * 15 + [2] * 15) * 2

    def test_rerun_is_byte_identical(self, workspace, tmp_path):
        out = tmp_path / "again"
        assert main(["extract", "--manifest", str(workspace["manifest"]), "--out", str(out)]) == 0
        assert (out / "features.csv").read_bytes() == workspace["features"].read_bytes()

    def test_missing_manifest(self, tmp_path, capsys):
        rc = main(["extract", "--manifest", str(tmp_path / "absent.txt"), "--out", str(tmp_path)])
        assert rc == 2
        assert "error:" in capsys.readouterr().err

    def test_manifest_required(self, tmp_path, capsys):
        assert main(["extract", "--out", str(tmp_path)]) == 2


class TestSelect:
    def test_writes_trace(self, workspace, tmp_path, capsys):
        out = tmp_path / "sel"
        rc = main([
            "select",
            "--config", str(workspace["config"]),
            "--features", str(workspace["features"]),
            "--out", str(out),
        ])
        assert rc == 0
        rows = rows_of(out / "selection.csv")
        assert rows[0] == ["step", "index", "name", "criterion"]
        body = rows[1:]
        assert 1 <= len(body) <= 2
        names = build_registry().names()
        scores = []
        for step, row in enumerate(body, start=1):
            assert int(row[0]) == step
            idx = int(row[1])
            assert 1 <= idx <= 276
            assert row[2] == names[idx - 1]
            scores.append(float(row[3]))
        assert scores == sorted(scores)
        assert scores[-1] > 0.9


class TestEval:
    def run_eval(self, workspace, out, extra=()):
        return main([
            "eval",
            "--config", str(workspace["config"]),
            "--features", str(workspace["features"]),
            "--out", str(out),
            *extra,
        ])

    def test_full_feature_set(self, workspace, tmp_path, capsys):
        out = tmp_path / "eval"
        assert self.run_eval(workspace, out) == 0
        printed = capsys.readouterr().out.splitlines()[0]
        report = json.loads((out / "report.json").read_text())
        assert printed == f"alpha={report['alpha']:.4f} kappa={report['kappa']:.4f}"
        assert report["alpha"] == 1.0
        assert report["kappa"] == 1.0
        assert report["runs"] == 2
        assert report["folds"] == 3
        assert report["selected"] == list(range(1, 277))
        assert len(report["alphas"]) == 2
        assert report["config"]["cv_folds"] == 3
        confusion = np.array(report["confusion"])
        assert confusion.sum() == 12 * 2
        rows = rows_of(out / "confusion.csv")
        assert rows[0] == ["label", "1", "2"]
        assert len(rows) == 3

    def test_reruns_byte_identical(self, workspace, tmp_path):
        out = tmp_path / "eval"
        assert self.run_eval(workspace, out) == 0
        first = (out / "report.json").read_bytes()
        assert self.run_eval(workspace, out) == 0
        assert (out / "report.json").read_bytes() == first

    def test_seed_override_recorded(self, workspace, tmp_path):
        out = tmp_path / "eval"
        assert self.run_eval(workspace, out, ("--seed", "7")) == 0
        report = json.loads((out / "report.json").read_text())
        assert report["base_seed"] == 7
        assert report["config"]["seed"] == 7

    def test_selected_list(self, workspace, tmp_path):
        out = tmp_path / "eval"
        assert self.run_eval(workspace, out, ("--selected", "5,6,7")) == 0
        report = json.loads((out / "report.json").read_text())
        assert report["selected"] == [5, 6, 7]

    def test_selected_reference(self, workspace, tmp_path):
        out = tmp_path / "eval"
        assert self.run_eval(workspace, out, ("--selected", "reference")) == 0
        report = json.loads((out / "report.json").read_text())
        assert report["selected"] == list(reference_selection(build_registry()))
        assert report["alpha"] == 1.0

    def test_selected_csv_file(self, workspace, tmp_path):
        sel = tmp_path / "subset.csv"
        sel.write_text("step,index\n1,2\n2,4\n")
        out = tmp_path / "eval"
        assert self.run_eval(workspace, out, ("--selected", str(sel))) == 0
        report = json.loads((out / "report.json").read_text())
        assert report["selected"] == [2, 4]

    def test_selected_plain_file(self, workspace, tmp_path):
        sel = tmp_path / "subset.txt"
        sel.write_text("3\n9\n")
        out = tmp_path / "eval"
        assert self.run_eval(workspace, out, ("--selected", str(sel))) == 0
        report = json.loads((out / "report.json").read_text())
        assert report["selected"] == [3, 9]

    def test_out_of_range_index(self, workspace, tmp_path, capsys):
        assert self.run_eval(workspace, tmp_path, ("--selected", "300")) == 2
        assert "300" in capsys.readouterr().err

    def test_unparseable_selected(self, workspace, tmp_path, capsys):
        assert self.run_eval(workspace, tmp_path, ("--selected", "1,x")) == 2

    def test_corrupt_features(self, workspace, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text("not,a,feature,file\n1,2\n")
        rc = main([
            "eval",
            "--config", str(workspace["config"]),
            "--features", str(bad),
            "--out", str(tmp_path),
        ])
        assert rc == 2
        assert "error:" in capsys.readouterr().err


class TestRelevance:
    def test_per_channel_rows(self, workspace, tmp_path):
        out = tmp_path / "rel"
        rc = main([
            "relevance",
            "--config", str(workspace["config"]),
            "--features", str(workspace["features"]),
            "--selected", "reference",
            "--out", str(out),
        ])
        assert rc == 0
        rows = rows_of(out / "relevance.csv")
        assert rows[0] == ["channel", "alpha", "kappa"]
        assert [r[0] for r in rows[1:]] == [str(c) for c in range(1, 9)]
        for row in rows[1:]:
            assert 0.0 <= float(row[1]) <= 1.0
            assert -1.0 <= float(row[2]) <= 1.0


class TestAblate:
    def test_group_rows(self, workspace, tmp_path):
        out = tmp_path / "abl"
        rc = main([
            "ablate",
            "--config", str(workspace["config"]),
            "--features", str(workspace["features"]),
            "--selected", "reference",
            "--out", str(out),
        ])
        assert rc == 0
        rows = rows_of(out / "ablation.csv")
        assert rows[0] == ["group", "alpha", "kappa", "delta_kappa"]
        assert [r[0] for r in rows[1:]] == ["baseline", "ics", "lmf"]
        assert rows[1][3] == ""
        for row in rows[2:]:
            float(row[3])  # parses


class TestConfig:
    def test_unknown_key(self, workspace, tmp_path, capsys):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("bogus = 3\n")
        rc = main([
            "eval",
            "--config", str(cfg),
            "--features", str(workspace["features"]),
            "--out", str(tmp_path),
        ])
        assert rc == 2
        assert "bogus" in capsys.readouterr().err

    def test_window_and_sigma_words(self, tmp_path):
        from emgactions.experiment import read_config

        cfg = tmp_path / "ok.cfg"
        cfg.write_text("window = full\nsigma = auto\nsigma_grid = 0.1, 0.5\npairs = 1-2; 3-4\n")
        parsed = read_config(str(cfg))
        assert parsed.window is None
        assert parsed.sigma is None
        assert parsed.sigma_grid == (0.1, 0.5)
        assert parsed.pairs == ((1, 2), (3, 4))
