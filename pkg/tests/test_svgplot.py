"""SVG rendering: structure, determinism, and formatting."""

import re

import pytest

from hydrospline import (
    PlotSpec,
    curve_layer,
    dense_grid,
    fit_natural_spline,
    marker_layer,
    render_svg,
)
from hydrospline.errors import EmptyPlot
from hydrospline.svgplot import _fmt


@pytest.fixture()
def spec(od_series):
    model = fit_natural_spline(od_series)
    grid = dense_grid(model, 200)
    return PlotSpec(
        width=800,
        height=500,
        layers=(
            curve_layer(grid, "#1f77b4", label="spline"),
            marker_layer(od_series.knots, "#000000", label="samples"),
        ),
        title="Dunare-Gropeni OD",
        x_label="days",
        y_label="OD [mg/l]",
    )


def test_one_polyline_per_curve_and_one_circle_per_marker(spec):
    svg = render_svg(spec)
    assert svg.count("<polyline") == 1
    assert svg.count("<circle") == 11
    assert svg.startswith("<svg")
    assert svg.rstrip().endswith("</svg>")


def test_header_carries_dimensions(spec):
    svg = render_svg(spec)
    assert 'width="800"' in svg
    assert 'height="500"' in svg
    assert 'viewBox="0 0 800 500"' in svg


def test_labels_and_title_present(spec):
    svg = render_svg(spec)
    assert "Dunare-Gropeni OD" in svg
    assert "OD [mg/l]" in svg
    assert "spline" in svg and "samples" in svg


def test_rendering_is_deterministic(spec):
    assert render_svg(spec) == render_svg(spec)


def test_constant_curve_renders_flat_line():
    from hydrospline.splines import CurveSamples

    flat = CurveSamples(t=(0.0, 1.0, 2.0, 3.0), y=(5.0, 5.0, 5.0, 5.0), source="spline")
    spec = PlotSpec(width=100, height=80, layers=(curve_layer(flat, "red"),))
    svg = render_svg(spec)
    match = re.search(r'points="([^"]+)"', svg)
    ys = {pair.split(",")[1] for pair in match.group(1).split()}
    assert len(ys) == 1  # degenerate y-span pads to a visible centered line


def test_larger_values_map_to_smaller_y():
    from hydrospline.splines import CurveSamples

    rising = CurveSamples(t=(0.0, 1.0), y=(0.0, 10.0), source="spline")
    spec = PlotSpec(width=100, height=100, layers=(curve_layer(rising, "red"),))
    svg = render_svg(spec)
    match = re.search(r'points="([^"]+)"', svg)
    pairs = [tuple(map(float, pair.split(","))) for pair in match.group(1).split()]
    assert pairs[0][1] > pairs[1][1]


def test_coordinates_use_four_decimals(spec):
    svg = render_svg(spec)
    for pair in re.search(r'points="([^"]+)"', svg).group(1).split():
        x, y = pair.split(",")
        assert re.fullmatch(r"-?\d+\.\d{4}", x)
        assert re.fullmatch(r"-?\d+\.\d{4}", y)
    assert "-0.0000" not in svg


def test_negative_zero_is_normalized():
    assert _fmt(-0.00003) == "0.0000"
    assert _fmt(-0.3) == "-0.3000"


def test_empty_plot_rejected():
    spec = PlotSpec(width=100, height=100, layers=())
    with pytest.raises(EmptyPlot):
        render_svg(spec)
    spec = PlotSpec(width=100, height=100, layers=(marker_layer((), "red"),))
    with pytest.raises(EmptyPlot):
        render_svg(spec)


def test_dimensions_validated():
    with pytest.raises(ValueError):
        PlotSpec(width=0, height=100, layers=())
    with pytest.raises(ValueError):
        PlotSpec(width=100, height=-5, layers=())


def test_text_is_escaped():
    from hydrospline.splines import CurveSamples

    flat = CurveSamples(t=(0.0, 1.0), y=(0.0, 1.0), source="spline")
    spec = PlotSpec(
        width=100,
        height=100,
        layers=(curve_layer(flat, "red"),),
        title="a < b & c",
    )
    svg = render_svg(spec)
    assert "a &lt; b &amp; c" in svg
