"""Spline, trend, and correlation analysis for irregular water-quality series."""

from .dataio import (
    Dataset,
    DatasetRow,
    dataset_series,
    gropeni_dataset,
    load_csv,
    parse_csv,
    serialize_csv,
)
from .errors import HydrosplineError
from .harmonic import (
    HarmonicResiduals,
    HarmonicSpec,
    IndexMap,
    compare_to_harmonic,
    fit_amplitude_offset,
    harmonic_reference,
    sample_harmonic,
    signed_pow,
)
from .linalg import (
    LeastSquaresProblem,
    TridiagonalSystem,
    solve_least_squares,
    solve_tridiagonal,
)
from .regression import (
    PolyModel,
    TrendReport,
    eval_poly,
    fit_polynomial,
    matched_pairs,
    pearson,
    poly_curve,
    rmse_between,
    trend_report,
)
from .series import (
    PARAMETER_UNITS,
    Sample,
    TimeSeries,
    build_series,
    format_date,
    parameter_unit,
    parse_date,
)
from .splines import (
    CurveSamples,
    Extremum,
    LagrangeModel,
    SplineModel,
    dense_grid,
    eval_lagrange,
    eval_spline,
    eval_spline_derivative,
    fit_lagrange,
    fit_natural_spline,
    fit_smoothing_spline,
    spline_extrema,
)
from .svgplot import PlotLayer, PlotSpec, curve_layer, marker_layer, render_svg

__version__ = "0.1.0"

__all__ = [
    "Dataset",
    "DatasetRow",
    "dataset_series",
    "gropeni_dataset",
    "load_csv",
    "parse_csv",
    "serialize_csv",
    "HydrosplineError",
    "HarmonicResiduals",
    "HarmonicSpec",
    "IndexMap",
    "compare_to_harmonic",
    "fit_amplitude_offset",
    "harmonic_reference",
    "sample_harmonic",
    "signed_pow",
    "LeastSquaresProblem",
    "TridiagonalSystem",
    "solve_least_squares",
    "solve_tridiagonal",
    "PolyModel",
    "TrendReport",
    "eval_poly",
    "fit_polynomial",
    "matched_pairs",
    "pearson",
    "poly_curve",
    "rmse_between",
    "trend_report",
    "PARAMETER_UNITS",
    "Sample",
    "TimeSeries",
    "build_series",
    "format_date",
    "parameter_unit",
    "parse_date",
    "CurveSamples",
    "Extremum",
    "LagrangeModel",
    "SplineModel",
    "dense_grid",
    "eval_lagrange",
    "eval_spline",
    "eval_spline_derivative",
    "fit_lagrange",
    "fit_natural_spline",
    "fit_smoothing_spline",
    "spline_extrema",
    "PlotLayer",
    "PlotSpec",
    "curve_layer",
    "marker_layer",
    "render_svg",
    "__version__",
]
