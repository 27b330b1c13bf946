"""Seasonal reference curve: signed power, identities, and fitting."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import make_series
from hydrospline import (
    HarmonicSpec,
    IndexMap,
    compare_to_harmonic,
    dense_grid,
    fit_amplitude_offset,
    fit_natural_spline,
    harmonic_reference,
    sample_harmonic,
    signed_pow,
)

CBRT4 = 2.0 ** (2.0 / 3.0)  # (sin + cos) peak value 2^(1/2) raised to 4/3


@pytest.fixture(scope="module")
def spec():
    return HarmonicSpec(angular_coeff=8.0 * math.pi / 192.0, exponent=4.0 / 3.0)


def test_reference_at_zero(spec):
    assert harmonic_reference(0.0, spec) == 1.0


def test_reference_peaks_at_k6(spec):
    assert harmonic_reference(6.0, spec) == pytest.approx(CBRT4, abs=1e-12)
    assert harmonic_reference(30.0, spec) == pytest.approx(-CBRT4, abs=1e-12)


def test_reference_has_period_48(spec):
    for k in range(0, 193):
        now = harmonic_reference(float(k), spec)
        later = harmonic_reference(float(k) + 48.0, spec)
        assert abs(now - later) <= 1e-9


def test_reference_bounded_by_peak(spec):
    for i in range(1921):
        k = i * 0.1
        assert abs(harmonic_reference(k, spec)) <= CBRT4 + 1e-12


def test_amplitude_and_offset_shift(spec):
    scaled = HarmonicSpec(
        angular_coeff=spec.angular_coeff,
        exponent=spec.exponent,
        amplitude=2.5,
        offset=-1.0,
    )
    for k in (0.0, 3.7, 11.2, 100.0):
        assert harmonic_reference(k, scaled) == pytest.approx(
            -1.0 + 2.5 * harmonic_reference(k, spec), abs=1e-12
        )


@given(st.floats(min_value=-100.0, max_value=100.0, allow_nan=False))
def test_signed_pow_is_odd(u):
    assert signed_pow(-u, 4.0 / 3.0) == -signed_pow(u, 4.0 / 3.0)


def test_signed_pow_preserves_order():
    values = [signed_pow(u, 4.0 / 3.0) for u in (-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0)]
    assert values == sorted(values)
    assert signed_pow(0.0, 4.0 / 3.0) == 0.0
    assert signed_pow(-8.0, 1.0 / 3.0) == pytest.approx(-2.0, abs=1e-12)


def test_spec_rejects_nonpositive_parameters():
    with pytest.raises(ValueError):
        HarmonicSpec(angular_coeff=0.0, exponent=1.0)
    with pytest.raises(ValueError):
        HarmonicSpec(angular_coeff=1.0, exponent=-2.0)


def test_index_map_spanning():
    imap = IndexMap.spanning(0.0, 308.0)
    assert imap.index_at(0.0) == 0.0
    assert imap.index_at(308.0) == pytest.approx(192.0, abs=1e-12)
    assert imap.index_at(154.0) == pytest.approx(96.0, abs=1e-12)
    with pytest.raises(ValueError):
        IndexMap.spanning(5.0, 5.0)


def test_self_comparison_has_zero_residual(spec):
    imap = IndexMap(scale=0.5)
    grid = tuple(i * 0.25 for i in range(401))
    curve = sample_harmonic(spec, imap, grid)
    assert curve.source == "harmonic"
    result = compare_to_harmonic(curve, spec, imap)
    assert result.rmse <= 1e-12
    assert result.max_abs_dev <= 1e-12


def test_fit_recovers_known_scaling(spec):
    imap = IndexMap(scale=1.0)
    grid = tuple(float(i) for i in range(193))
    target = HarmonicSpec(
        angular_coeff=spec.angular_coeff,
        exponent=spec.exponent,
        amplitude=3.25,
        offset=7.5,
    )
    curve = sample_harmonic(target, imap, grid)
    fitted = fit_amplitude_offset(curve, spec, imap)
    assert fitted.amplitude == pytest.approx(3.25, abs=1e-9)
    assert fitted.offset == pytest.approx(7.5, abs=1e-9)
    assert fitted.angular_coeff == spec.angular_coeff
    assert fitted.exponent == spec.exponent


def test_fixture_oxygen_against_seasonal_reference(od_series, spec):
    model = fit_natural_spline(od_series)
    curve = dense_grid(model, 1000)
    imap = IndexMap.spanning(od_series.t[0], od_series.t[-1])
    fitted = fit_amplitude_offset(curve, spec, imap)
    assert fitted.amplitude == pytest.approx(-0.04856715001932358, abs=1e-9)
    assert fitted.offset == pytest.approx(8.325781819358705, abs=1e-9)
    result = compare_to_harmonic(curve, fitted, imap)
    assert result.rmse == pytest.approx(0.7864555645517676, abs=1e-9)
    assert result.max_abs_dev == pytest.approx(1.6571410599137568, abs=1e-9)
    assert result.argmax_t == pytest.approx(224.75675675675674, abs=1e-9)


def test_residual_argmax_reports_earliest_tie(spec):
    imap = IndexMap(scale=1.0)
    grid = (0.0, 48.0, 96.0)  # reference repeats, curve constant: equal deviations
    curve = sample_harmonic(spec, imap, grid)
    shifted = type(curve)(t=curve.t, y=tuple(v + 1.0 for v in curve.y), source="spline")
    result = compare_to_harmonic(shifted, spec, imap)
    assert result.max_abs_dev == pytest.approx(1.0, abs=1e-12)
    assert result.argmax_t == 0.0
