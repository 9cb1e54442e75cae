import numpy as np
import pytest

import lmm

M = lmm.DEFAULT_M


def random_image(seed, shape=(20, 24), lo=0.0, hi=255.0):
    return np.random.default_rng(seed).uniform(lo, hi, shape)


def test_lip_scalars():
    assert lmm.lip_add(100.0, 100.0) == pytest.approx(100 + 100 - 100 * 100 / M)
    assert lmm.lip_sub(lmm.lip_add(70.0, 30.0), 30.0) == pytest.approx(70.0)
    assert lmm.xi_inv(lmm.xi(123.0)) == pytest.approx(123.0)
    assert lmm.lip_add(50.0, lmm.lip_negate(50.0)) == pytest.approx(0.0, abs=1e-12)


def test_log_dilation_stays_below_M():
    f = random_image(1, lo=240.0, hi=255.9)
    b = lmm.half_sphere(3, 150.0, 20.0)
    assert lmm.log_dilate(f, b).max() <= M
    assert lmm.dilate(f, b).max() > M


def test_adjunction_and_filter_axioms():
    f = random_image(2)
    b = lmm.StructuringFunction([(-1, 0, 10.0), (0, 0, 40.0), (1, 1, 5.0)])
    opened = lmm.log_open(f, b)
    assert np.all(opened <= f + 1e-9)
    assert np.allclose(lmm.log_open(opened, b), opened, atol=1e-9)
    assert np.all(lmm.log_close(f, b) >= f - 1e-9)
    # rank k = 0 is the erosion
    assert np.array_equal(lmm.log_rank_min(f, b, 0), lmm.log_erode(f, b))


def test_asplund_invariant_under_lip_shift():
    f = random_image(3, (32, 32))
    b = lmm.gaussian_ring()
    base = lmm.asplund(f, b)
    for c in (-200.0, -50.0, 50.0, 200.0):
        assert np.max(np.abs(lmm.asplund(lmm.lip_add_constant(f, c), b) - base)) <= 1e-6


def test_vessel_pipeline_on_phantom():
    rgb, vessels, zoi = lmm.fundus_phantom(64, 1)
    assert rgb.shape == (64, 64, 3) and vessels.dtype == bool
    f = lmm.luminance(rgb)
    config = lmm.PipelineConfig()
    e = lmm.vesselness(f, config)
    mask = lmm.segment(e, zoi, config.threshold_fraction)
    assert mask.sum() == round(config.threshold_fraction * zoi.sum())
    assert lmm.auc(e, vessels, zoi) > 0.5
    shifted = lmm.vesselness(lmm.lip_add_constant(f, 120.0), config)
    assert np.max(np.abs(shifted - e)) <= 1e-6


def test_darkening_keeps_8bit_range():
    rgb, _, zoi = lmm.fundus_phantom(48, 2)
    dark = lmm.darken(rgb, zoi, 230.0)
    assert dark.shape == rgb.shape
    assert dark.min() >= 0 and dark.max() <= 255
    assert np.all(dark == np.floor(dark))


def test_errors_are_raised():
    b = lmm.disk(1)
    with pytest.raises(lmm.LmmError, match="rank"):
        lmm.log_rank_min(random_image(4), b, 99)
    with pytest.raises(lmm.LmmError):
        lmm.StructuringFunction([])
