import pytest

from msel import ParameterError, render_alpha_svg
from msel.plotting import PALETTE, _nice_ticks


def test_svg_has_canvas_and_axes():
    svg = render_alpha_svg({"dcsel": [(0, 0.5), (1, 0.6), (2, 0.55)]})
    assert svg.startswith("<svg")
    assert svg.rstrip().endswith("</svg>")
    assert 'width="640"' in svg and 'height="400"' in svg
    assert "<polyline" in svg


def test_one_polyline_per_multi_point_series():
    svg = render_alpha_svg({
        "a": [(0, 0.1), (1, 0.2)],
        "b": [(0, 0.3), (1, 0.4), (2, 0.5)],
    })
    assert svg.count("<polyline") == 2
    assert "a" in svg and "b" in svg


def test_single_point_series_becomes_marker():
    svg = render_alpha_svg({"only": [(3, 0.25)]})
    assert "<polyline" not in svg
    assert "<circle" in svg


def test_series_colors_follow_sorted_name_order():
    svg = render_alpha_svg({
        "zeta": [(0, 0.1), (1, 0.2)],
        "alpha": [(0, 0.3), (1, 0.4)],
    })
    # "alpha" sorts first and takes the first palette slot
    assert svg.index(PALETTE[0]) < svg.index(PALETTE[1])
    first_poly = svg[svg.index("<polyline"):]
    assert PALETTE[0] in first_poly[:first_poly.index(">")]


def test_render_is_deterministic():
    series = {"x": [(0, 0.5), (1, 0.9)], "y": [(0, 0.2)]}
    assert render_alpha_svg(series) == render_alpha_svg(series)


def test_empty_series_rejected():
    with pytest.raises(ParameterError):
        render_alpha_svg({})
    with pytest.raises(ParameterError):
        render_alpha_svg({"hollow": []})


def test_flat_series_still_renders():
    svg = render_alpha_svg({"flat": [(0, 0.4), (1, 0.4), (2, 0.4)]})
    assert "<polyline" in svg


def test_nice_ticks_cover_range_at_round_pitch():
    ticks = _nice_ticks(0.0, 1.0)
    assert ticks[0] <= 0.0 + 1e-12
    assert ticks[-1] >= 1.0 - 1e-12
    steps = {round(b - a, 10) for a, b in zip(ticks, ticks[1:])}
    assert len(steps) == 1
    step = steps.pop()
    mant = step / (10 ** len(str(int(1 / step))))
    assert step in (0.1, 0.2, 0.25, 0.5, 1.0) or mant in (1, 2, 5)


def test_nice_ticks_degenerate_span():
    ticks = _nice_ticks(0.3, 0.3)
    assert len(ticks) >= 2
    assert ticks[0] >= 0.3 - 1e-9
