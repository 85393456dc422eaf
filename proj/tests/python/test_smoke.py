# Copyright 2026 The twohop Authors
# SPDX-License-Identifier: Apache-2.0
import math

import pytest

import twohop


def test_version_and_defaults():
    assert twohop.version().startswith("v")
    cfg = twohop.resolve_config()
    assert cfg["lambda_b"] == pytest.approx(1e-6)
    assert cfg["bs_antenna_model"] == "omni_downtilt"
    assert "urban" in twohop.environment_names()
    assert twohop.validate_config() == []


def test_invalid_config_is_reported():
    bad = {"env": {"c1": 9.61, "c2": 0.16, "eta_los_db": 25.0, "eta_nlos_db": 1.0}}
    assert any("eta" in v for v in twohop.validate_config(bad))
    with pytest.raises(ValueError):
        twohop.simulated_coverage(bad, trials=10)
    with pytest.raises(ValueError):
        twohop.resolve_config({"no_such_key": 1})


def test_ratio_cdfs():
    assert twohop.cdf_t1(0.0, 1.0, 4.0, 2.0) == 0.0
    # Exponential fading: P(aX / (bY + I) <= t) = 1 - exp(-tI/a) a / (a + tb).
    t, a, b, i = 0.7, 1.0, 4.0, 2.0
    expected = 1.0 - math.exp(-t * i / a) * a / (a + t * b)
    assert twohop.cdf_t1(t, a, b, i) == pytest.approx(expected, abs=1e-12)
    assert twohop.cdf_t1_t3_joint(t, a, b, i, g=0.0, m=2) == pytest.approx(twohop.cdf_t2(t, a, b, i, m=2), abs=1e-12)


def test_engines_agree_roughly():
    sim = twohop.simulated_coverage(tau_db=[0.0], trials=2000, seed=3)
    ana = twohop.analytical_coverage(tau_db=[0.0], samples=128, tolerance=0.1, seed=3)
    assert [r["protocol"] for r in sim] == ["af", "df"]
    for s, a in zip(sim, ana):
        assert 0.0 <= a["p_cov"] <= 1.0
        assert abs(s["p_cov"] - a["p_cov"]) < 0.08
    assert sim[1]["p_cov"] >= sim[0]["p_cov"]


def test_simulation_is_deterministic():
    first = twohop.simulated_coverage(protocols=["df"], tau_db=[-5.0, 5.0], trials=300, seed=9)
    again = twohop.simulated_coverage(protocols=["df"], tau_db=[5.0, -5.0], trials=300, seed=9)
    assert first == again
    assert first[0]["p_cov"] >= first[1]["p_cov"]
