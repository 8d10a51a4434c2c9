import json

import numpy as np
import pytest

from texsup import from_u8, load_image, save_image
from texsup.cli import main

from test_pipeline import make_corpus


@pytest.fixture
def sample_png(tmp_path, rng):
    arr = rng.integers(0, 256, size=(18, 18, 3), dtype=np.uint8)
    p = tmp_path / "in.png"
    save_image(from_u8(arr), p)
    return p


def test_diffuse_subcommand(tmp_path, sample_png):
    out = tmp_path / "out.png"
    rc = main(["diffuse", str(sample_png), "-o", str(out),
               "--method", "pm-exp", "--k", "20", "--iters", "5", "--lambda", "0.1"])
    assert rc == 0
    assert load_image(out).channels == 3


def test_blur_subcommand(tmp_path, sample_png):
    out = tmp_path / "b.png"
    assert main(["blur", str(sample_png), "-o", str(out), "--radius", "3"]) == 0
    assert out.is_file()


def test_bilateral_subcommand(tmp_path, sample_png):
    out = tmp_path / "bi.png"
    assert main(["bilateral", str(sample_png), "-o", str(out),
                 "--sigma-s", "1.5", "--sigma-r", "40"]) == 0
    assert out.is_file()


def test_cartoon_subcommand(tmp_path, sample_png):
    out = tmp_path / "c.png"
    assert main(["cartoon", str(sample_png), "-o", str(out),
                 "--passes", "1", "--sigma-s", "1.5"]) == 0
    assert out.is_file()


def test_augment_and_report(tmp_path, rng, capsys):
    make_corpus(tmp_path / "in", 6, rng)
    rc = main(["augment", "--in", str(tmp_path / "in"), "--out", str(tmp_path / "out"),
               "--policy", "mocov2", "--seed", "7", "--workers", "2"])
    assert rc == 0
    assert (tmp_path / "out" / "manifest.jsonl").is_file()
    capsys.readouterr()

    rc = main(["report", "--manifest", str(tmp_path / "out" / "manifest.jsonl")])
    assert rc == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["records"] == 6
    assert sum(summary["branch_histogram"].values()) == 6
    assert summary["metrics_by_branch"]


def test_augment_nonzero_exit_on_skip(tmp_path, rng):
    make_corpus(tmp_path / "in", 2, rng)
    (tmp_path / "in" / "bad.png").write_bytes(b"junk")
    rc = main(["augment", "--in", str(tmp_path / "in"), "--out", str(tmp_path / "out"),
               "--policy", "double", "--seed", "0"])
    assert rc == 1


def test_workers_env_default(tmp_path, rng, monkeypatch):
    monkeypatch.setenv("TEXSUP_WORKERS", "3")
    make_corpus(tmp_path / "in", 2, rng)
    rc = main(["augment", "--in", str(tmp_path / "in"), "--out", str(tmp_path / "out"),
               "--policy", "double"])
    assert rc == 0
