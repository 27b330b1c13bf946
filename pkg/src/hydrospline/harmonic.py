"""Signed-power harmonic reference curve and residual comparison.

The reference is offset + amplitude * s(sin(w k) + cos(w k)) ** p taken with
a signed power, where k is a sample index obtained from the day axis via an
affine :class:`IndexMap`.  With the default coefficients the curve has
period 48 index units.
"""

import math
from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from .linalg import LeastSquaresProblem, solve_least_squares
from .splines import CurveSamples

#: default angular coefficient: one cycle every 48 index units
DEFAULT_ANGULAR_COEFF = 8.0 * math.pi / 192.0

DEFAULT_EXPONENT = 4.0 / 3.0


@dataclass(frozen=True)
class HarmonicSpec:
    """Parameters of the signed-power harmonic reference."""

    angular_coeff: float = DEFAULT_ANGULAR_COEFF
    exponent: float = DEFAULT_EXPONENT
    amplitude: float = 1.0
    offset: float = 0.0

    def __post_init__(self) -> None:
        if not self.angular_coeff > 0:
            raise ValueError("angular_coeff must be positive")
        if not self.exponent > 0:
            raise ValueError("exponent must be positive")


@dataclass(frozen=True)
class IndexMap:
    """Affine map from day offsets to sample indices: k = scale * t + offset."""

    scale: float
    offset: float = 0.0

    def index_at(self, t: float) -> float:
        return self.scale * t + self.offset

    @classmethod
    def spanning(cls, t_start: float, t_end: float, units: float = 192.0) -> "IndexMap":
        """Map [t_start, t_end] onto [0, units] (default 192 index units)."""
        span = t_end - t_start
        if span <= 0:
            raise ValueError("index map needs a positive span")
        scale = units / span
        return cls(scale=scale, offset=-scale * t_start)


class HarmonicResiduals(NamedTuple):
    rmse: float
    max_abs_dev: float
    argmax_t: float


def signed_pow(u: float, p: float) -> float:
    """sign(u) * |u| ** p: odd in u, real for negative bases, exact zero at zero."""
    return math.copysign(abs(u) ** p, u)


def harmonic_reference(k: float, spec: HarmonicSpec) -> float:
    """Reference value at sample index k."""
    base = math.sin(spec.angular_coeff * k) + math.cos(spec.angular_coeff * k)
    return spec.offset + spec.amplitude * signed_pow(base, spec.exponent)


def sample_harmonic(spec: HarmonicSpec, index_map: IndexMap, grid) -> CurveSamples:
    """Evaluate the harmonic on a day grid (uniform, as for other curves)."""
    ts = tuple(float(t) for t in grid)
    values = tuple(harmonic_reference(index_map.index_at(t), spec) for t in ts)
    return CurveSamples(t=ts, y=values, source="harmonic")


def fit_amplitude_offset(
    curve: CurveSamples, spec: HarmonicSpec, index_map: IndexMap
) -> HarmonicSpec:
    """Fit amplitude and offset to a curve by two-column least squares.

    The angular coefficient and exponent are kept; only the affine scaling
    of the unit-amplitude, zero-offset reference is re-estimated.
    """
    base = np.array(
        [
            signed_pow(
                math.sin(spec.angular_coeff * index_map.index_at(t))
                + math.cos(spec.angular_coeff * index_map.index_at(t)),
                spec.exponent,
            )
            for t in curve.t
        ]
    )
    design = np.column_stack([base, np.ones(base.size)])
    amplitude, offset = solve_least_squares(
        LeastSquaresProblem(design, np.asarray(curve.y, dtype=float))
    )
    return replace(spec, amplitude=float(amplitude), offset=float(offset))


def compare_to_harmonic(
    curve: CurveSamples, spec: HarmonicSpec, index_map: IndexMap
) -> HarmonicResiduals:
    """Residual statistics of a curve against the harmonic reference.

    Returns the rmse, the maximum absolute deviation, and the day offset
    where that maximum occurs (the earliest grid point on ties).
    """
    residuals = [
        y - harmonic_reference(index_map.index_at(t), spec)
        for t, y in zip(curve.t, curve.y)
    ]
    rmse = math.sqrt(math.fsum(r * r for r in residuals) / len(residuals))
    worst = 0
    for i, r in enumerate(residuals):
        if abs(r) > abs(residuals[worst]):
            worst = i
    return HarmonicResiduals(
        rmse=rmse, max_abs_dev=abs(residuals[worst]), argmax_t=curve.t[worst]
    )
