"""Minimal deterministic SVG chart canvas.

Hand-rolled on purpose: output bytes must be identical for identical input,
so there are no timestamps, no hashed ids, and every coordinate is printed
with a fixed format.  Only the chart types the reports need are provided.
"""

from __future__ import annotations

import math

__all__ = ["Canvas"]

WIDTH = 640
HEIGHT = 400
MARGIN_LEFT = 62
MARGIN_RIGHT = 16
MARGIN_TOP = 34
MARGIN_BOTTOM = 44

AXIS_STYLE = 'stroke="#444444" stroke-width="1"'
GRID_STYLE = 'stroke="#dddddd" stroke-width="0.5"'
TEXT_STYLE = 'font-family="monospace" font-size="11" fill="#222222"'


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _nice_ticks(lo: float, hi: float, target: int = 5):
    """Round tick positions covering [lo, hi]."""
    if hi <= lo:
        hi = lo + 1.0
    span = hi - lo
    raw = span / target
    mag = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 2.5, 5.0, 10.0):
        if raw <= mult * mag:
            step = mult * mag
            break
    first = math.ceil(lo / step) * step
    ticks = []
    t = first
    while t <= hi + 1e-12 * span:
        ticks.append(0.0 if abs(t) < step * 1e-9 else t)
        t += step
    return ticks


def _label(v: float) -> str:
    if v == 0:
        return "0"
    if abs(v) >= 1e4 or abs(v) < 1e-3:
        return f"{v:.1e}"
    return f"{v:.4g}"


class Canvas:
    """One chart: fixed pixel frame, data-space scales, element helpers."""

    def __init__(self, title: str, x_range, y_range, x_labels=None):
        self.title = title
        self.x_lo, self.x_hi = float(x_range[0]), float(x_range[1])
        self.y_lo, self.y_hi = float(y_range[0]), float(y_range[1])
        if self.x_hi <= self.x_lo:
            self.x_hi = self.x_lo + 1.0
        if self.y_hi <= self.y_lo:
            self.y_hi = self.y_lo + 1.0
        self.x_labels = x_labels
        self.parts = []

    # data space -> pixel space
    def px(self, x: float) -> float:
        frac = (x - self.x_lo) / (self.x_hi - self.x_lo)
        return MARGIN_LEFT + frac * (WIDTH - MARGIN_LEFT - MARGIN_RIGHT)

    def py(self, y: float) -> float:
        frac = (y - self.y_lo) / (self.y_hi - self.y_lo)
        return HEIGHT - MARGIN_BOTTOM - frac * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM)

    def polyline(self, xs, ys, color: str = "#1f77b4", width: float = 1.0) -> None:
        pts = " ".join(f"{_fmt(self.px(x))},{_fmt(self.py(y))}" for x, y in zip(xs, ys))
        self.parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="{width}" points="{pts}"/>')

    def circles(self, xs, ys, r: float = 1.6, color: str = "#1f77b4") -> None:
        for x, y in zip(xs, ys):
            self.parts.append(
                f'<circle cx="{_fmt(self.px(x))}" cy="{_fmt(self.py(y))}" r="{r}" fill="{color}"/>')

    def vline_segment(self, x, y0, y1, color: str = "#1f77b4", width: float = 1.5) -> None:
        self.parts.append(
            f'<line x1="{_fmt(self.px(x))}" y1="{_fmt(self.py(y0))}" '
            f'x2="{_fmt(self.px(x))}" y2="{_fmt(self.py(y1))}" '
            f'stroke="{color}" stroke-width="{width}"/>')

    def hline(self, y, color: str = "#888888", dashed: bool = False) -> None:
        dash = ' stroke-dasharray="4 3"' if dashed else ""
        self.parts.append(
            f'<line x1="{_fmt(self.px(self.x_lo))}" y1="{_fmt(self.py(y))}" '
            f'x2="{_fmt(self.px(self.x_hi))}" y2="{_fmt(self.py(y))}" '
            f'stroke="{color}" stroke-width="1"{dash}/>')

    def bar(self, x0, x1, y, color: str = "#9ecae1") -> None:
        left, right = self.px(x0), self.px(x1)
        top, base = self.py(y), self.py(max(self.y_lo, 0.0))
        if base < top:
            top, base = base, top
        self.parts.append(
            f'<rect x="{_fmt(left)}" y="{_fmt(top)}" width="{_fmt(right - left)}" '
            f'height="{_fmt(base - top)}" fill="{color}" stroke="#6baed6" stroke-width="0.5"/>')

    def note(self, text: str) -> None:
        self.parts.append(
            f'<text x="{WIDTH / 2:.1f}" y="{HEIGHT / 2:.1f}" text-anchor="middle" '
            f'{TEXT_STYLE}>{text}</text>')

    def _frame(self) -> list:
        left, right = MARGIN_LEFT, WIDTH - MARGIN_RIGHT
        top, bottom = MARGIN_TOP, HEIGHT - MARGIN_BOTTOM
        parts = [
            f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
            f'<text x="{WIDTH / 2:.1f}" y="20" text-anchor="middle" {TEXT_STYLE}>{self.title}</text>',
        ]
        for t in _nice_ticks(self.y_lo, self.y_hi):
            y = self.py(t)
            parts.append(f'<line x1="{left}" y1="{_fmt(y)}" x2="{right}" y2="{_fmt(y)}" {GRID_STYLE}/>')
            parts.append(
                f'<text x="{left - 6}" y="{_fmt(y + 3.5)}" text-anchor="end" {TEXT_STYLE}>{_label(t)}</text>')
        if self.x_labels:
            for frac, text in self.x_labels:
                x = left + frac * (right - left)
                parts.append(
                    f'<text x="{_fmt(x)}" y="{bottom + 16}" text-anchor="middle" {TEXT_STYLE}>{text}</text>')
        else:
            for t in _nice_ticks(self.x_lo, self.x_hi):
                x = self.px(t)
                parts.append(
                    f'<text x="{_fmt(x)}" y="{bottom + 16}" text-anchor="middle" {TEXT_STYLE}>{_label(t)}</text>')
        parts.append(f'<line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}" {AXIS_STYLE}/>')
        parts.append(f'<line x1="{left}" y1="{top}" x2="{left}" y2="{bottom}" {AXIS_STYLE}/>')
        return parts

    def render(self) -> bytes:
        body = "\n".join(self._frame() + self.parts)
        svg = (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
            f'viewBox="0 0 {WIDTH} {HEIGHT}">\n{body}\n</svg>\n'
        )
        return svg.encode("utf-8")
