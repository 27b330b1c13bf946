"""Cubic spline and barycentric Lagrange models over a day-count axis.

The interpolating spline is built in moment (second-derivative) form:
natural end conditions pin the end moments to zero, the interior moments
solve a tridiagonal system, and per-segment cubic coefficients are
recovered from the moments.  The smoothing variant penalizes integrated
squared curvature with weight ``lam`` and collapses to the interpolant at
``lam = 0`` and to the least-squares line as ``lam`` grows.
"""

import math
from bisect import bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Union

import numpy as np

from .errors import (
    DuplicateKnots,
    NegativeLambda,
    ResolutionTooSmall,
    TooFewKnots,
    UnsupportedOrder,
)
from .linalg import TridiagonalSystem, solve_banded_spd, solve_tridiagonal
from .series import TimeSeries

#: stationary points with |f''| at or below this are treated as flat and dropped
FLAT_CURVATURE_TOL = 1e-10

#: evaluation points this close to a knot (in days) return the knot value
KNOT_SNAP_TOL = 1e-12


@dataclass(frozen=True)
class SplineModel:
    """Piecewise cubic f(t) = a + b s + c s^2 + d s^3, s = t - t_i per segment.

    ``knots`` keeps the data the model was fitted to; for a smoothing fit
    the curve passes through fitted values, not through ``knots``.  Outside
    the knot span the model extends linearly with the boundary slope.
    """

    knots: tuple[tuple[float, float], ...]
    coefficients: tuple[tuple[float, float, float, float], ...]
    boundary: str = "natural"
    smoothing: float = 0.0

    @cached_property
    def _ts(self) -> tuple[float, ...]:
        return tuple(t for t, _ in self.knots)


@dataclass(frozen=True)
class LagrangeModel:
    """Single global interpolating polynomial in barycentric form."""

    knots: tuple[tuple[float, float], ...]
    weights: tuple[float, ...]

    @cached_property
    def _ts(self) -> tuple[float, ...]:
        return tuple(t for t, _ in self.knots)


@dataclass(frozen=True)
class CurveSamples:
    """A curve evaluated on a uniform grid, tagged with its source."""

    t: tuple[float, ...]
    y: tuple[float, ...]
    source: str

    def __post_init__(self) -> None:
        if not self.t or len(self.t) != len(self.y):
            raise ValueError("grid and values must be non-empty and equal length")
        if not all(map(math.isfinite, self.t)) or not all(map(math.isfinite, self.y)):
            raise ValueError("curve samples must be finite")
        steps = [b - a for a, b in zip(self.t, self.t[1:])]
        if steps:
            step = steps[0]
            if step <= 0 or any(
                abs(s - step) > 1e-9 * max(1.0, abs(step)) for s in steps
            ):
                raise ValueError("grid must be strictly increasing with uniform step")


class Extremum(NamedTuple):
    t: float
    y: float
    kind: str  # "max" | "min"


def _natural_moments(t: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Second derivatives at the knots under natural end conditions.

    Interior moments solve the tridiagonal system with rows
    h_{i-1}/6, (h_{i-1}+h_i)/3, h_i/6 against the divided second
    differences of y; the end moments are exactly zero.
    """
    n = t.size
    moments = np.zeros(n)
    if n > 2:
        h = np.diff(t)
        rhs = (y[2:] - y[1:-1]) / h[1:] - (y[1:-1] - y[:-2]) / h[:-1]
        system = TridiagonalSystem(
            lower=h[1:-1] / 6.0,
            diag=(h[:-1] + h[1:]) / 3.0,
            upper=h[1:-1] / 6.0,
            rhs=rhs,
        )
        moments[1:-1] = solve_tridiagonal(system)
    return moments


def _coefficients_from_moments(
    t: np.ndarray, values: np.ndarray, moments: np.ndarray
) -> tuple[tuple[float, float, float, float], ...]:
    h = np.diff(t)
    a = values[:-1]
    b = (values[1:] - values[:-1]) / h - h * (2.0 * moments[:-1] + moments[1:]) / 6.0
    c = moments[:-1] / 2.0
    d = (moments[1:] - moments[:-1]) / (6.0 * h)
    return tuple(
        (float(a[i]), float(b[i]), float(c[i]), float(d[i])) for i in range(h.size)
    )


def fit_natural_spline(series: TimeSeries) -> SplineModel:
    """Interpolating natural cubic spline through the series knots.

    Needs at least two knots; two knots give a straight segment.  The
    result is C2 across junctions with zero second derivative at both ends,
    so the curve continues linearly at the extremes.
    """
    if len(series.knots) < 2:
        raise TooFewKnots("an interpolating spline needs at least 2 knots")
    t = np.asarray(series.t, dtype=float)
    y = np.asarray(series.y, dtype=float)
    moments = _natural_moments(t, y)
    return SplineModel(
        knots=series.knots,
        coefficients=_coefficients_from_moments(t, y, moments),
        boundary="natural",
        smoothing=0.0,
    )


def fit_smoothing_spline(series: TimeSeries, lam: float) -> SplineModel:
    """Natural cubic smoothing spline minimizing misfit plus lam * curvature.

    Minimizes sum (y_i - f(t_i))^2 + lam * integral of f''(t)^2 over all
    natural cubic splines on the knots.  ``lam = 0`` reproduces the
    interpolating spline; as lam grows the fitted knot values approach the
    least-squares straight line.

    The stationarity conditions reduce to a pentadiagonal system in the
    interior moments gamma: (R + lam Q^T Q) gamma = Q^T y with fitted knot
    values y - lam Q gamma, where R is the moment matrix above and Q^T the
    divided second-difference operator.
    """
    if lam < 0:
        raise NegativeLambda(f"smoothing weight must be >= 0, got {lam}")
    n = len(series.knots)
    if lam == 0:
        return fit_natural_spline(series)
    if n < 3:
        raise TooFewKnots("a smoothing spline with lam > 0 needs at least 3 knots")
    t = np.asarray(series.t, dtype=float)
    y = np.asarray(series.y, dtype=float)
    h = np.diff(t)
    ih = 1.0 / h
    m = n - 2
    # lower band storage of R + lam Q^T Q (bandwidth 2)
    bands = np.zeros((3, m))
    bands[0] = (h[:-1] + h[1:]) / 3.0 + lam * (
        ih[:-1] ** 2 + (ih[:-1] + ih[1:]) ** 2 + ih[1:] ** 2
    )
    if m > 1:
        bands[1, : m - 1] = h[1:-1] / 6.0 - lam * ih[1:-1] * (
            ih[:-2] + 2.0 * ih[1:-1] + ih[2:]
        )
    if m > 2:
        bands[2, : m - 2] = lam * ih[1:-2] * ih[2:-1]
    rhs = (y[2:] - y[1:-1]) * ih[1:] - (y[1:-1] - y[:-2]) * ih[:-1]
    gamma = solve_banded_spd(bands, rhs)
    # fitted knot values: y - lam * Q gamma
    q_gamma = np.zeros(n)
    q_gamma[:m] += gamma * ih[:-1]
    q_gamma[1 : m + 1] -= gamma * (ih[:-1] + ih[1:])
    q_gamma[2 : m + 2] += gamma * ih[1:]
    fitted = y - lam * q_gamma
    moments = np.zeros(n)
    moments[1:-1] = gamma
    return SplineModel(
        knots=series.knots,
        coefficients=_coefficients_from_moments(t, fitted, moments),
        boundary="natural",
        smoothing=float(lam),
    )


def _segment_index(ts: tuple[float, ...], t: float) -> int:
    i = bisect_right(ts, t) - 1
    return min(max(i, 0), len(ts) - 2)


def eval_spline(model: SplineModel, t: float) -> float:
    """Evaluate the spline; outside the knot span it extends linearly."""
    ts = model._ts
    t0, tn = ts[0], ts[-1]
    if t < t0:
        a, b, _, _ = model.coefficients[0]
        return a + b * (t - t0)
    if t > tn:
        a, b, c, d = model.coefficients[-1]
        h = tn - ts[-2]
        value = ((d * h + c) * h + b) * h + a
        slope = (3.0 * d * h + 2.0 * c) * h + b
        return value + slope * (t - tn)
    i = _segment_index(ts, t)
    a, b, c, d = model.coefficients[i]
    s = t - ts[i]
    return ((d * s + c) * s + b) * s + a


def eval_spline_derivative(model: SplineModel, t: float, order: int) -> float:
    """First or second derivative of the spline at ``t``.

    The linear extension outside the knot span keeps the boundary slope and
    has zero curvature.  Raises UnsupportedOrder for orders outside {1, 2}.
    """
    if order not in (1, 2):
        raise UnsupportedOrder(f"derivative order must be 1 or 2, got {order}")
    ts = model._ts
    t0, tn = ts[0], ts[-1]
    if t < t0:
        return model.coefficients[0][1] if order == 1 else 0.0
    if t > tn:
        if order == 2:
            return 0.0
        _, b, c, d = model.coefficients[-1]
        h = tn - ts[-2]
        return (3.0 * d * h + 2.0 * c) * h + b
    i = _segment_index(ts, t)
    _, b, c, d = model.coefficients[i]
    s = t - ts[i]
    if order == 1:
        return (3.0 * d * s + 2.0 * c) * s + b
    return 6.0 * d * s + 2.0 * c


def fit_lagrange(series: TimeSeries) -> LagrangeModel:
    """Global interpolating polynomial with barycentric weights.

    w_i = 1 / prod_{j != i} (t_i - t_j); a single knot gets weight 1.
    Useful only for small knot counts: high degrees oscillate wildly
    between equispaced knots.
    """
    ts = series.t
    n = len(ts)
    if len(set(ts)) != n:
        raise DuplicateKnots("knot times must be pairwise distinct")
    weights = []
    for i in range(n):
        prod = 1.0
        for j in range(n):
            if j != i:
                prod *= ts[i] - ts[j]
        w = 1.0 / prod
        if not math.isfinite(w) or w == 0.0:
            raise ValueError("barycentric weights overflow for this knot layout")
        weights.append(w)
    return LagrangeModel(knots=series.knots, weights=tuple(weights))


def eval_lagrange(model: LagrangeModel, t: float) -> float:
    """Evaluate the barycentric second form; exact at (snapped) knots."""
    ts = model._ts
    for i, ti in enumerate(ts):
        if abs(t - ti) <= KNOT_SNAP_TOL:
            return model.knots[i][1]
    num = 0.0
    den = 0.0
    for (ti, yi), wi in zip(model.knots, model.weights):
        factor = wi / (t - ti)
        num += factor * yi
        den += factor
    return num / den


SplineOrLagrange = Union[SplineModel, LagrangeModel]


def dense_grid(model: SplineOrLagrange, resolution: int) -> CurveSamples:
    """Evaluate a model on a uniform grid of ``resolution`` points.

    The grid runs from the first to the last knot inclusive, so
    ``resolution = 2`` yields exactly the two endpoints.
    """
    if resolution < 2:
        raise ResolutionTooSmall(f"need at least 2 grid points, got {resolution}")
    ts = model._ts
    grid = np.linspace(ts[0], ts[-1], resolution)
    if isinstance(model, SplineModel):
        source = "smoothing" if model.smoothing > 0 else "spline"
        values = tuple(eval_spline(model, float(t)) for t in grid)
    else:
        source = "lagrange"
        values = tuple(eval_lagrange(model, float(t)) for t in grid)
    return CurveSamples(t=tuple(float(t) for t in grid), y=values, source=source)


def _stationary_points(b: float, c: float, d: float) -> list[float]:
    """Real roots of f'(s) = b + 2 c s + 3 d s^2, ascending."""
    qa, qb, qc = 3.0 * d, 2.0 * c, b
    if qa == 0.0:
        if qb == 0.0:
            return []
        return [-qc / qb]
    disc = qb * qb - 4.0 * qa * qc
    if disc < 0.0:
        return []
    if disc == 0.0:
        return [-qb / (2.0 * qa)]
    # split the quadratic formula to avoid cancellation between -qb and the root
    q = -(qb + math.copysign(math.sqrt(disc), qb)) / 2.0
    roots = sorted((q / qa, qc / q))
    return roots


def spline_extrema(model: SplineModel) -> list[Extremum]:
    """Interior local extrema of the piecewise cubic, sorted by t.

    Stationary points come from the closed-form roots of each segment's
    quadratic derivative, taken on the half-open segment so junction roots
    are counted once.  Points with |f''| <= FLAT_CURVATURE_TOL are treated
    as inflection-flat and dropped; the span endpoints are never reported.
    """
    ts = model._ts
    t_first, t_last = ts[0], ts[-1]
    found: list[Extremum] = []
    for i, (a, b, c, d) in enumerate(model.coefficients):
        h = ts[i + 1] - ts[i]
        snap = 1e-12 * max(1.0, abs(h))
        for s in _stationary_points(b, c, d):
            if s < -snap or s >= h:
                continue
            s = max(s, 0.0)
            t = ts[i] + s
            if not (t_first < t < t_last):
                continue
            curvature = 6.0 * d * s + 2.0 * c
            if abs(curvature) <= FLAT_CURVATURE_TOL:
                continue
            y = ((d * s + c) * s + b) * s + a
            kind = "max" if curvature < 0.0 else "min"
            found.append(Extremum(t=t, y=y, kind=kind))
    found.sort(key=lambda e: e.t)
    deduped: list[Extremum] = []
    for e in found:
        if deduped and abs(e.t - deduped[-1].t) <= 1e-9:
            continue
        deduped.append(e)
    return deduped
