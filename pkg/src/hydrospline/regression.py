"""Polynomial trend fits, linear trend reports, and date-matched correlation.

Polynomials are fitted over a normalized axis u = (t - t_mid) / t_scale so
the design stays well conditioned up to degree 10; coefficients therefore
live in u-space and :func:`eval_poly` maps back from days.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegreeTooHigh,
    GridMismatch,
    InsufficientData,
    InsufficientPairs,
    ResolutionTooSmall,
    ZeroVariance,
)
from .linalg import LeastSquaresProblem, solve_least_squares
from .series import TimeSeries
from .splines import CurveSamples

MAX_DEGREE = 10

#: |total change| below this counts as no trend
FLAT_THRESHOLD = 0.01


@dataclass(frozen=True)
class PolyModel:
    """Polynomial sum c_j u^j over the normalized axis u = (t - t_mid) / t_scale."""

    degree: int
    coefficients: tuple[float, ...]
    t_mid: float
    t_scale: float
    rmse: float
    n_obs: int


@dataclass(frozen=True)
class TrendReport:
    """Linear trend summary: slope is in y-units per day and
    total_change = slope * span_days by construction."""

    slope: float
    total_change: float
    span_days: float
    direction: str  # "down" | "up" | "flat"


def fit_polynomial(series: TimeSeries, degree: int) -> PolyModel:
    """Least-squares polynomial of the given degree through the knots.

    Degrees 0..10 are supported and need at least degree + 1 knots.  The
    time axis is centered and scaled to [-1, 1] before building the design.
    """
    if not 0 <= degree <= MAX_DEGREE:
        raise DegreeTooHigh(f"degree must be in 0..{MAX_DEGREE}, got {degree}")
    n = len(series.knots)
    if n < degree + 1:
        raise InsufficientData(f"degree {degree} needs {degree + 1} knots, have {n}")
    t = np.asarray(series.t, dtype=float)
    y = np.asarray(series.y, dtype=float)
    t_mid = (t[0] + t[-1]) / 2.0
    half_span = (t[-1] - t[0]) / 2.0
    t_scale = half_span if half_span > 0 else 1.0
    u = (t - t_mid) / t_scale
    design = np.vander(u, degree + 1, increasing=True)
    coeffs = solve_least_squares(LeastSquaresProblem(design, y))
    residuals = y - design @ coeffs
    rmse = math.sqrt(float(residuals @ residuals) / n)
    return PolyModel(
        degree=degree,
        coefficients=tuple(float(c) for c in coeffs),
        t_mid=float(t_mid),
        t_scale=float(t_scale),
        rmse=rmse,
        n_obs=n,
    )


def eval_poly(model: PolyModel, t: float) -> float:
    """Horner evaluation; at t = t_mid this returns c_0 exactly."""
    u = (t - model.t_mid) / model.t_scale
    acc = 0.0
    for c in reversed(model.coefficients):
        acc = acc * u + c
    return acc


def poly_curve(model: PolyModel, t_start: float, t_end: float, resolution: int) -> CurveSamples:
    """Sample a fitted polynomial on a uniform grid."""
    if resolution < 2:
        raise ResolutionTooSmall(f"need at least 2 grid points, got {resolution}")
    grid = np.linspace(t_start, t_end, resolution)
    values = tuple(eval_poly(model, float(t)) for t in grid)
    return CurveSamples(t=tuple(float(t) for t in grid), y=values, source="regression")


def trend_report(series: TimeSeries, flat_threshold: float = FLAT_THRESHOLD) -> TrendReport:
    """Degree-1 fit summarized as slope, total change over the span, direction.

    ``direction`` is "flat" when |total_change| < flat_threshold, otherwise
    "down" or "up" by the sign of the slope.
    """
    if len(series.knots) < 2:
        raise InsufficientData("a trend needs at least 2 knots")
    model = fit_polynomial(series, 1)
    slope = model.coefficients[1] / model.t_scale
    span_days = series.span_days
    total_change = slope * span_days
    if abs(total_change) < flat_threshold:
        direction = "flat"
    elif slope < 0:
        direction = "down"
    else:
        direction = "up"
    return TrendReport(
        slope=slope, total_change=total_change, span_days=span_days, direction=direction
    )


def matched_pairs(a: TimeSeries, b: TimeSeries) -> list[tuple[float, float, float]]:
    """Value pairs whose knots fall on the same calendar day.

    Keys are day ordinals (epoch ordinal plus day offset), so two series
    with different epochs still match on the actual date.  Returns
    (ordinal, y_a, y_b) triples in date order.
    """
    base_a = float(a.epoch.toordinal())
    base_b = float(b.epoch.toordinal())
    by_day = {base_a + t: y for t, y in a.knots}
    pairs = []
    for t, y in b.knots:
        day = base_b + t
        if day in by_day:
            pairs.append((day, by_day[day], y))
    pairs.sort(key=lambda p: p[0])
    return pairs


def pearson(a: TimeSeries, b: TimeSeries) -> float:
    """Pearson product-moment correlation over date-matched pairs.

    Requires both series to come from the same station and at least three
    matched pairs; a constant side raises ZeroVariance.  The result is
    clamped to [-1, 1] against last-bit rounding.
    """
    if a.station != b.station:
        raise ValueError(f"series stations differ: {a.station!r} vs {b.station!r}")
    pairs = matched_pairs(a, b)
    if len(pairs) < 3:
        raise InsufficientPairs(f"need at least 3 matched pairs, have {len(pairs)}")
    xs = [p[1] for p in pairs]
    ys = [p[2] for p in pairs]
    if max(xs) == min(xs) or max(ys) == min(ys):
        raise ZeroVariance("correlation is undefined for a constant series")
    n = len(pairs)
    mean_x = math.fsum(xs) / n
    mean_y = math.fsum(ys) / n
    sxy = math.fsum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    sxx = math.fsum((x - mean_x) ** 2 for x in xs)
    syy = math.fsum((y - mean_y) ** 2 for y in ys)
    r = sxy / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


def rmse_between(curve_a: CurveSamples, curve_b: CurveSamples) -> float:
    """Root-mean-square difference of two curves on the same grid."""
    if curve_a.t != curve_b.t:
        raise GridMismatch("curves are sampled on different grids")
    diffs = [ya - yb for ya, yb in zip(curve_a.y, curve_b.y)]
    return math.sqrt(math.fsum(d * d for d in diffs) / len(diffs))
