"""Standalone SVG line charts from benchmark summaries.

Hand-built SVG 1.1, no external resources, byte-deterministic for equal
input. Both axes are log10: the benchmark sizes span several decades and
so do the elapsed times.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .bench import SummaryRow

_WIDTH = 860
_HEIGHT = 540
_MARGIN_LEFT = 90
_MARGIN_RIGHT = 220
_MARGIN_TOP = 60
_MARGIN_BOTTOM = 70

_PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#17becf",
)


def _log_scale(values: list[float], lo_px: float, hi_px: float):
    logs = [math.log10(max(v, 1.0)) for v in values]
    lo, hi = min(logs), max(logs)
    if hi - lo < 1e-12:
        lo -= 0.5
        hi += 0.5

    def to_px(v: float) -> float:
        t = (math.log10(max(v, 1.0)) - lo) / (hi - lo)
        return lo_px + t * (hi_px - lo_px)

    return to_px, lo, hi


def _decade_ticks(lo_log: float, hi_log: float) -> list[int]:
    return list(range(math.ceil(lo_log - 1e-9), math.floor(hi_log + 1e-9) + 1))


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def render_line_chart(rows: list[SummaryRow], case: str) -> str:
    """Render one polyline per algorithm: x = size, y = median_ns, log-log.

    Raises ValueError when the summary has no rows for the case.
    """
    data = [r for r in rows if r.case == case]
    if not data:
        raise ValueError(f"no summary rows for case {case!r}")

    series: dict[str, list[tuple[int, int]]] = {}
    for row in data:
        series.setdefault(row.algorithm, []).append((row.size, row.median_ns))
    for points in series.values():
        points.sort()

    x0, x1 = _MARGIN_LEFT, _WIDTH - _MARGIN_RIGHT
    y0, y1 = _HEIGHT - _MARGIN_BOTTOM, _MARGIN_TOP
    sizes = [float(s) for pts in series.values() for s, _ in pts]
    medians = [float(m) for pts in series.values() for _, m in pts]
    x_px, x_lo, x_hi = _log_scale(sizes, x0, x1)
    y_px, y_lo, y_hi = _log_scale(medians, y0, y1)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect x="0" y="0" width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<text x="{_WIDTH // 2}" y="30" font-family="sans-serif" font-size="18" '
        f'text-anchor="middle">Elapsed time by input size, {escape(case)} case '
        f'(median of trials)</text>',
        # axes
        f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black"/>',
        f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black"/>',
        f'<text x="{(x0 + x1) // 2}" y="{_HEIGHT - 20}" font-family="sans-serif" '
        f'font-size="13" text-anchor="middle">input size (log scale)</text>',
        f'<text x="24" y="{(y0 + y1) // 2}" font-family="sans-serif" font-size="13" '
        f'text-anchor="middle" transform="rotate(-90 24 {(y0 + y1) // 2})">'
        f'median elapsed ns (log scale)</text>',
    ]

    for exp in _decade_ticks(x_lo, x_hi):
        px = x_px(10.0**exp)
        parts.append(
            f'<line x1="{_fmt(px)}" y1="{y0}" x2="{_fmt(px)}" y2="{y0 + 5}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{_fmt(px)}" y="{y0 + 22}" font-family="sans-serif" font-size="12" '
            f'text-anchor="middle">1e{exp}</text>'
        )
    for exp in _decade_ticks(y_lo, y_hi):
        py = y_px(10.0**exp)
        parts.append(
            f'<line x1="{x0 - 5}" y1="{_fmt(py)}" x2="{x0}" y2="{_fmt(py)}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{x0 - 10}" y="{_fmt(py + 4)}" font-family="sans-serif" font-size="12" '
            f'text-anchor="end">1e{exp}</text>'
        )

    legend_x = x1 + 20
    legend_y = y1 + 10
    for index, (alg, points) in enumerate(series.items()):
        color = _PALETTE[index % len(_PALETTE)]
        coords = " ".join(f"{_fmt(x_px(s))},{_fmt(y_px(m))}" for s, m in points)
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="2" points="{coords}"/>'
        )
        for s, m in points:
            parts.append(
                f'<circle cx="{_fmt(x_px(s))}" cy="{_fmt(y_px(m))}" r="3" fill="{color}"/>'
            )
        ly = legend_y + index * 22
        parts.append(
            f'<line x1="{legend_x}" y1="{ly}" x2="{legend_x + 26}" y2="{ly}" '
            f'stroke="{color}" stroke-width="3"/>'
        )
        parts.append(
            f'<text x="{legend_x + 34}" y="{ly + 4}" font-family="sans-serif" '
            f'font-size="13" class="legend">{escape(alg)}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_chart(rows: list[SummaryRow], case: str, destination) -> None:
    svg = render_line_chart(rows, case)
    with open(destination, "w", encoding="utf-8", newline="") as fh:
        fh.write(svg)
