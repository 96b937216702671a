"""RMSE, PSNR, SSIM, R^2, and the serialized report."""

import json
import math

import numpy as np
import pytest

from specden.metrics import MetricReport, compare, psnr, r_squared, rmse, ssim

from conftest import rand_image


# --------------------------------------------------------------------- rmse

def test_rmse_identity():
    rng = np.random.default_rng(41)
    a = rand_image(rng, 6, 6)
    assert rmse(a, a) == 0.0


def test_rmse_constant_offset():
    rng = np.random.default_rng(42)
    a = rand_image(rng, 10, 10, lo=0.0, hi=0.9)
    assert abs(rmse(a, a + 0.1) - 0.1) < 1e-12


def test_rmse_two_pixel_hand_value():
    a = np.array([[0.0, 0.0]])
    b = np.array([[0.3, 0.4]])
    assert abs(rmse(a, b) - math.sqrt(0.125)) < 1e-12


def test_rmse_is_a_metric():
    rng = np.random.default_rng(43)
    for _ in range(50):
        a, b, c = (rand_image(rng, 5, 7) for _ in range(3))
        assert rmse(a, b) >= 0.0
        assert rmse(a, b) == rmse(b, a)
        assert rmse(a, c) <= rmse(a, b) + rmse(b, c) + 1e-12
    a = rand_image(rng, 5, 7)
    assert rmse(a, a.copy()) == 0.0


def test_rmse_dimension_mismatch():
    with pytest.raises(ValueError):
        rmse(np.zeros((3, 3)), np.zeros((3, 4)))


# --------------------------------------------------------------------- psnr

def test_psnr_direct_formula():
    a = np.zeros((4, 4))
    b = np.full((4, 4), 0.1)
    assert abs(psnr(a, b) - 20.0) < 1e-9


def test_psnr_identical_is_infinite():
    a = np.full((4, 4), 0.3)
    assert math.isinf(psnr(a, a))


def test_psnr_chained_hand_value():
    a = np.array([[0.0, 0.0]])
    b = np.array([[0.3, 0.4]])
    assert abs(psnr(a, b) - 10 * math.log10(8)) < 1e-9   # ~9.0309 dB


def test_psnr_decreases_with_error():
    rng = np.random.default_rng(44)
    a = rand_image(rng, 8, 8, lo=0.0, hi=0.5)
    values = [psnr(a, np.clip(a + eps, 0, 1)) for eps in (0.01, 0.05, 0.1, 0.3)]
    assert all(x > y for x, y in zip(values, values[1:]))


def test_psnr_peak_offset():
    rng = np.random.default_rng(45)
    a, b = rand_image(rng, 6, 6), rand_image(rng, 6, 6)
    assert abs(psnr(a, b, peak=255.0) - psnr(a, b) - 20 * math.log10(255)) < 1e-9


def test_psnr_rejects_bad_peak():
    with pytest.raises(ValueError):
        psnr(np.zeros((3, 3)), np.zeros((3, 3)), peak=0.0)


# ---------------------------------------------------------------------- ssim

def test_ssim_identity():
    rng = np.random.default_rng(46)
    a = rand_image(rng, 16, 16)
    assert abs(ssim(a, a) - 1.0) < 1e-12


def test_ssim_constant_planes_pinned():
    # 0s vs 1s: zero variance leaves only the stabilizing constants,
    # C1/(1+C1); frozen from the first run
    value = ssim(np.zeros((8, 8)), np.ones((8, 8)))
    assert abs(value - 9.999000099990002e-05) < 1e-15
    c1 = 0.01**2
    assert abs(value - c1 / (1 + c1)) < 1e-15


def test_ssim_symmetry():
    rng = np.random.default_rng(47)
    for _ in range(20):
        a, b = rand_image(rng, 12, 9), rand_image(rng, 12, 9)
        assert abs(ssim(a, b) - ssim(b, a)) < 1e-12


def test_ssim_bounded():
    rng = np.random.default_rng(48)
    checker = np.indices((12, 12)).sum(axis=0) % 2.0
    pairs = [(rand_image(rng, 12, 12), rand_image(rng, 12, 12)) for _ in range(20)]
    pairs.append((checker, 1.0 - checker))   # anticorrelated -> negative SSIM
    for a, b in pairs:
        v = ssim(a, b)
        assert -1.0 <= v <= 1.0
    assert ssim(checker, 1.0 - checker) < 0.0


def test_ssim_size_requirements():
    with pytest.raises(ValueError):
        ssim(np.zeros((7, 12)), np.zeros((7, 12)))
    with pytest.raises(ValueError):
        ssim(np.zeros((8, 8)), np.zeros((8, 9)))


# ---------------------------------------------------------------------- r^2

def test_r_squared_identity():
    obs = np.array([0.1, 0.4, 0.9])
    assert r_squared(obs, obs) == 1.0


def test_r_squared_mean_predictor_is_zero():
    obs = np.array([1.0, 2.0, 3.0, 4.0])
    pred = np.full(4, obs.mean())
    assert abs(r_squared(pred, obs)) < 1e-12


def test_r_squared_hand_value():
    assert abs(r_squared([1.0, 2.0, 4.0], [1.0, 2.0, 3.0]) - 0.5) < 1e-12


def test_r_squared_at_most_one():
    rng = np.random.default_rng(49)
    for _ in range(100):
        obs = rng.random(20)
        pred = rng.random(20)
        v = r_squared(pred, obs)
        assert v <= 1.0
        assert v < 1.0 or np.array_equal(pred, obs)


def test_r_squared_validation():
    with pytest.raises(ValueError):
        r_squared([1.0, 2.0], [1.0, 2.0, 3.0])
    with pytest.raises(ValueError):
        r_squared([1.0], [1.0])
    with pytest.raises(ValueError):
        r_squared([1.0, 2.0], [3.0, 3.0])   # zero variance in obs


# ------------------------------------------------------------------- report

def test_report_json_round_trip():
    rng = np.random.default_rng(50)
    a, b = rand_image(rng, 16, 16), rand_image(rng, 16, 16)
    rep = compare(a, b)
    assert rep.rmse == rmse(a, b)
    assert rep.psnr == psnr(a, b)
    assert rep.ssim == ssim(a, b)
    line = rep.to_json()
    assert "\n" not in line
    data = json.loads(line)
    assert set(data) == {"rmse", "psnr_db", "ssim"}
    assert data["rmse"] == rep.rmse
    assert data["psnr_db"] == rep.psnr


def test_report_infinite_psnr_serializes_as_null():
    a = np.full((8, 8), 0.25)
    rep = compare(a, a)
    assert math.isinf(rep.psnr)
    data = json.loads(rep.to_json())
    assert data["psnr_db"] is None
    assert data["rmse"] == 0.0


def test_report_validation():
    with pytest.raises(ValueError):
        MetricReport(rmse=-0.1, psnr=10.0, ssim=0.5)
    with pytest.raises(ValueError):
        MetricReport(rmse=0.1, psnr=10.0, ssim=1.5)
    with pytest.raises(ValueError):
        MetricReport(rmse=0.0, psnr=10.0, ssim=0.5)   # psnr must be inf at rmse 0
