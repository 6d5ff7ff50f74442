import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genvietoris.trigsum import (
    coefficients,
    footnote_condition,
    positivity_scan,
    sigma,
    tau,
    vietoris_a,
)
from genvietoris.vietoris import c_central

F = Fraction


def test_coefficients():
    assert [vietoris_a(k) for k in range(8)] == [1, 1, F(1, 2), F(1, 2), F(3, 8), F(3, 8), F(5, 16), F(5, 16)]
    with pytest.raises(ValueError):
        vietoris_a(-1)


def test_alignment_with_central_sequence():
    for k in range(1, 40):
        assert vietoris_a(k) == c_central(k - 1)


def test_small_sums_by_hand():
    assert sigma(3, math.pi / 2) == pytest.approx(0.5, abs=1e-12)
    assert sigma(1, 1.0) == pytest.approx(math.sin(1.0), abs=1e-15)
    assert tau(1, math.pi / 3) == pytest.approx(1.5, abs=1e-15)
    assert tau(0, 2.0) == 1.0
    with pytest.raises(ValueError):
        sigma(0, 1.0)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 40), st.floats(0.01, math.pi - 0.01))
def test_sums_positive_off_grid(N, x):
    assert sigma(N, x) > 0
    assert tau(N, x) > 0


def test_footnote_condition():
    assert footnote_condition(60)


def test_scan_matches_pointwise_sums():
    r = positivity_scan(12, 60)
    assert r.verdict and r.grid_size == 60 and [m[0] for m in r.minima] == list(range(1, 13))
    xs = np.arange(1, 61) * math.pi / 61
    for N, x, ms, mt in r.minima:
        assert ms == pytest.approx(min(sigma(N, v) for v in xs), abs=1e-13)
        assert mt == pytest.approx(min(tau(N, v) for v in xs), abs=1e-13)
        assert ms == pytest.approx(sigma(N, x), abs=1e-13)
        assert 0 < x < math.pi


def test_scan_detects_negative_sums(monkeypatch):
    import genvietoris.trigsum as ts
    monkeypatch.setattr(ts, "coefficients", lambda N: np.array([1.0] + [-1.0] * N))
    assert not ts.positivity_scan(3, 20).verdict


def test_scan_arguments():
    with pytest.raises(ValueError):
        positivity_scan(0, 10)
    with pytest.raises(ValueError):
        positivity_scan(5, 1)


def test_report_formats():
    r = positivity_scan(3, 9)
    doc = r.to_dict()
    assert doc["kind"] == "scan-report" and doc["verdict"] is True and len(doc["minima"]) == 3
    assert r.to_csv().splitlines()[0] == "N,argmin_x,min_sigma,min_tau"
    assert r.to_text().splitlines()[-1] == "verdict: positive"
    assert r.to_json() == positivity_scan(3, 9).to_json()
    assert len(coefficients(5)) == 6
