"""End-to-end checks of the Python bindings against small real inputs."""

import math
from pathlib import Path

import numpy as np
import pytest

import latchkit as lk

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="module")
def golden():
    return lk.load_pgm(str(DATA / "golden_image.pgm"))


def test_pgm_roundtrip(tmp_path):
    rng = np.random.default_rng(3)
    image = rng.integers(0, 256, size=(33, 47)).astype(np.float64)
    path = tmp_path / "im.pgm"
    lk.save_pgm(image, str(path))
    back = lk.load_pgm(str(path))
    assert back.dtype == np.float64
    assert back.shape == (33, 47)
    assert np.array_equal(back, image)


def test_detect_describe_match_self(golden):
    keypoints = lk.detect(golden, threshold=20.0)
    assert keypoints.ndim == 2 and keypoints.shape[1] == 4
    assert len(keypoints) > 0
    assert np.all((keypoints[:, 0] >= 0) & (keypoints[:, 0] < golden.shape[1]))
    assert np.all((keypoints[:, 1] >= 0) & (keypoints[:, 1] < golden.shape[0]))

    kept, desc = lk.describe(golden, keypoints)
    assert desc.dtype == np.uint8
    assert desc.shape == (len(kept), lk.descriptor_bytes)
    assert 0 < len(kept) <= len(keypoints)

    matches = lk.match(desc, desc)
    assert matches.shape == (len(desc), 4)
    assert np.array_equal(matches[:, 0], np.arange(len(desc)))
    assert np.all(matches[:, 2] == 0)
    # ties go to the smallest gallery index, so compare bytes, not indices
    assert np.array_equal(desc[matches[:, 1]], desc[matches[:, 0]])
    assert np.array_equal(lk.match(desc, desc, workers=2), matches)

    # bare (x, y) rows are accepted and get theta = 0
    upright, _ = lk.describe(golden, keypoints[:, :2])
    assert len(upright) == len(kept)
    assert np.all(upright[:, 2] == 0.0)


def test_hamming_agrees_with_numpy(golden):
    _, desc = lk.describe(golden, lk.detect(golden))
    a, b = desc[0], desc[1]
    assert lk.hamming(a, b) == int(np.unpackbits(a ^ b).sum())
    assert lk.hamming(a, a) == 0


def test_match_filters(golden):
    _, desc = lk.describe(golden, lk.detect(golden))
    rotated = lk.warp(golden, math.radians(25.0))
    _, desc2 = lk.describe(rotated, lk.detect(rotated))

    plain = lk.match(desc, desc2)
    filtered = lk.match(desc, desc2, ratio=0.8, cross_check=True, max_distance=200, workers=2)
    assert 0 < len(filtered) <= len(plain)
    nearest = {(p, g) for p, g, _, _ in plain}
    assert all((p, g) in nearest for p, g, _, _ in filtered)
    assert np.all(filtered[:, 2] <= 200)
    assert np.all(filtered[:, 2] < 0.8 * filtered[:, 3])


def test_evaluate_identity(golden):
    report = lk.evaluate(golden)
    assert report["keypoint_count"] > 0
    assert report["recall"] == 1.0
    assert report["precision"] == 1.0
    assert report["median_true_distance"] == 0.0
    assert report["median_random_distance"] > 50.0
    assert report["timings_us"]["describe"] >= 0


def test_evaluate_seeded_reproducibility(golden):
    first = lk.evaluate(golden, rotate=20.0, noise=3.0, seed=9)
    second = lk.evaluate(golden, rotate=20.0, noise=3.0, seed=9)
    for key in ("keypoint_count", "matched_count", "correct_count", "recall",
                "precision", "median_true_distance", "median_random_distance"):
        assert first[key] == second[key]
    assert first["recall"] > 0.2


def test_default_pattern_text_matches_builtin(golden):
    text = lk.default_pattern()
    assert text.startswith("LATCHPAT v1 T=512 K=8\n")
    keypoints = lk.detect(golden)
    _, implicit = lk.describe(golden, keypoints)
    _, explicit = lk.describe(golden, keypoints, pattern=text)
    assert np.array_equal(implicit, explicit)


def test_train_then_describe(golden, tmp_path):
    rng = np.random.default_rng(11)
    grid = np.zeros((1024, 1024))
    for point in range(32):
        patch = rng.integers(0, 256, size=(64, 64)).astype(np.float64)
        for view in range(2):
            cell = 2 * point + view
            row, col = (cell // 16) * 64, (cell % 16) * 64
            grid[row:row + 64, col:col + 64] = patch
    lk.save_pgm(grid, str(tmp_path / "patches0000.pgm"))
    (tmp_path / "info.txt").write_text(
        "".join(f"{p} 0\n" for p in range(32) for _ in range(2)))

    text = lk.train(str(tmp_path), candidates=300, bits=8, corr_threshold=1.0, seed=5)
    assert text.splitlines()[0] == "LATCHPAT v1 T=8 K=8"
    assert text == lk.train(str(tmp_path), candidates=300, bits=8, corr_threshold=1.0, seed=5)

    kept, desc = lk.describe(golden, lk.detect(golden), pattern=text)
    assert desc.shape == (len(kept), 1)


def test_errors():
    flat = np.zeros((128, 128))
    with pytest.raises(ValueError):
        lk.detect(np.zeros(16))
    with pytest.raises(RuntimeError):
        lk.match(np.zeros((2, 64), np.uint8), np.zeros((0, 64), np.uint8))
    with pytest.raises(RuntimeError):
        lk.describe(flat, np.array([[64.0, 64.0]]), pattern="not a pattern")
    with pytest.raises(RuntimeError):
        lk.hamming(np.zeros(64, np.uint8), np.zeros(32, np.uint8))
    empty = lk.match(np.zeros((0, 64), np.uint8), np.zeros((3, 64), np.uint8))
    assert empty.shape == (0, 4)
