"""Static SVG rendering of per-step objective curves.

Output is deliberately plain: fixed canvas, fixed palette, coordinates
rounded to two decimals, no timestamps or randomness, so an SVG written
twice from the same data is byte-identical and safe to snapshot in tests.
"""

from __future__ import annotations

import math

from .errors import ParameterError

CANVAS_W = 640
CANVAS_H = 400
MARGIN_L = 60
MARGIN_R = 150
MARGIN_T = 20
MARGIN_B = 40

PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b")


def _nice_ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    """Round tick positions covering [lo, hi], at a 1/2/5 power-of-ten pitch."""
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / max(count - 1, 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 5.0, 10.0):
        if mult * mag >= raw:
            step = mult * mag
            break
    first = math.ceil(lo / step) * step
    ticks = []
    t = first
    while t <= hi + step * 1e-9:
        ticks.append(round(t, 10))
        t += step
    return ticks


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render_alpha_svg(series: dict[str, list[tuple[float, float]]]) -> str:
    """Render one objective-vs-step curve per named series.

    Series with at least two points become polylines; single-point series
    become circle markers. Colors follow sorted series order over a fixed
    palette. Raises when there is nothing to draw.
    """
    names = sorted(series)
    points = [pt for name in names for pt in series[name]]
    if not points:
        raise ParameterError("nothing to plot: every series is empty")

    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi == x_lo:
        x_lo -= 0.5
        x_hi += 0.5
    if y_hi == y_lo:
        y_lo -= 0.05
        y_hi += 0.05
    pad = (y_hi - y_lo) * 0.05
    y_lo -= pad
    y_hi += pad

    plot_w = CANVAS_W - MARGIN_L - MARGIN_R
    plot_h = CANVAS_H - MARGIN_T - MARGIN_B

    def px(x: float) -> float:
        return MARGIN_L + (x - x_lo) / (x_hi - x_lo) * plot_w

    def py(y: float) -> float:
        return MARGIN_T + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h

    out: list[str] = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS_W}" height="{CANVAS_H}" '
        f'viewBox="0 0 {CANVAS_W} {CANVAS_H}">'
    )
    out.append(f'<rect width="{CANVAS_W}" height="{CANVAS_H}" fill="white"/>')

    ax_b = MARGIN_T + plot_h
    ax_r = MARGIN_L + plot_w
    out.append(
        f'<line x1="{MARGIN_L}" y1="{ax_b}" x2="{ax_r}" y2="{ax_b}" stroke="black"/>'
    )
    out.append(
        f'<line x1="{MARGIN_L}" y1="{MARGIN_T}" x2="{MARGIN_L}" y2="{ax_b}" stroke="black"/>'
    )

    for t in _nice_ticks(x_lo, x_hi):
        x = px(t)
        out.append(f'<line x1="{_fmt(x)}" y1="{ax_b}" x2="{_fmt(x)}" y2="{ax_b + 5}" stroke="black"/>')
        out.append(
            f'<text x="{_fmt(x)}" y="{ax_b + 18}" font-size="11" text-anchor="middle" '
            f'font-family="sans-serif">{t:g}</text>'
        )
    for t in _nice_ticks(y_lo, y_hi):
        y = py(t)
        out.append(f'<line x1="{MARGIN_L - 5}" y1="{_fmt(y)}" x2="{MARGIN_L}" y2="{_fmt(y)}" stroke="black"/>')
        out.append(
            f'<text x="{MARGIN_L - 8}" y="{_fmt(y + 4)}" font-size="11" text-anchor="end" '
            f'font-family="sans-serif">{t:g}</text>'
        )
    out.append(
        f'<text x="{MARGIN_L + plot_w / 2:.0f}" y="{CANVAS_H - 6}" font-size="12" '
        f'text-anchor="middle" font-family="sans-serif">step</text>'
    )
    out.append(
        f'<text x="14" y="{MARGIN_T + plot_h / 2:.0f}" font-size="12" text-anchor="middle" '
        f'font-family="sans-serif" transform="rotate(-90 14 {MARGIN_T + plot_h / 2:.0f})">alpha</text>'
    )

    for i, name in enumerate(names):
        color = PALETTE[i % len(PALETTE)]
        pts = sorted(series[name])
        if not pts:
            continue
        if len(pts) == 1:
            x, y = pts[0]
            out.append(f'<circle cx="{_fmt(px(x))}" cy="{_fmt(py(y))}" r="4" fill="{color}"/>')
        else:
            coords = " ".join(f"{_fmt(px(x))},{_fmt(py(y))}" for x, y in pts)
            out.append(f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="2"/>')
        ly = MARGIN_T + 10 + i * 18
        lx = MARGIN_L + plot_w + 12
        out.append(f'<rect x="{lx}" y="{ly - 8}" width="12" height="12" fill="{color}"/>')
        out.append(
            f'<text x="{lx + 18}" y="{ly + 2}" font-size="12" font-family="sans-serif">{name}</text>'
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"
