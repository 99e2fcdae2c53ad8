"""Standalone SVG rendering of Gershgorin discs, eigenvalues and the origin.

Pure string generation with fixed-precision coordinates, so output bytes are
a function of the input values alone.
"""

from __future__ import annotations

import numpy as np

VIEW = 800
PAD_FRACTION = 0.10

_DISC_STYLE = 'fill="#4878a8" fill-opacity="0.12" stroke="#4878a8" stroke-width="1.5"'
_EIG_STYLE = 'stroke="#b04048" stroke-width="2"'
_ORIGIN_STYLE = 'stroke="#202020" stroke-width="1.5"'


def _fmt(v: float) -> str:
    return f"{v:.4f}"


def render_gershgorin(discs, eigenvalues, size: int = VIEW) -> str:
    """SVG document with one circle per disc, an x-cross per eigenvalue and a
    plus-cross at the origin, framed to fit everything with 10% padding."""
    eigenvalues = np.asarray(eigenvalues, dtype=complex)
    xs = [0.0] + [d.center - d.radius for d in discs] + [d.center + d.radius for d in discs]
    ys = [0.0] + [-d.radius for d in discs] + [d.radius for d in discs]
    xs += list(eigenvalues.real)
    ys += list(eigenvalues.imag)

    x_mid = (max(xs) + min(xs)) / 2.0
    y_mid = (max(ys) + min(ys)) / 2.0
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    span *= 1.0 + 2.0 * PAD_FRACTION
    scale = size / span

    def to_px(x, y):
        return ((x - x_mid) * scale + size / 2.0,
                size / 2.0 - (y - y_mid) * scale)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="#ffffff"/>',
    ]
    for d in discs:
        cx, cy = to_px(d.center, 0.0)
        parts.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(d.radius * scale)}" '
            f'{_DISC_STYLE}/>')
    ox, oy = to_px(0.0, 0.0)
    arm = size * 0.015
    parts.append(f'<line x1="{_fmt(ox - arm)}" y1="{_fmt(oy)}" '
                 f'x2="{_fmt(ox + arm)}" y2="{_fmt(oy)}" {_ORIGIN_STYLE}/>')
    parts.append(f'<line x1="{_fmt(ox)}" y1="{_fmt(oy - arm)}" '
                 f'x2="{_fmt(ox)}" y2="{_fmt(oy + arm)}" {_ORIGIN_STYLE}/>')
    for lam in eigenvalues:
        px, py = to_px(lam.real, lam.imag)
        parts.append(f'<line x1="{_fmt(px - arm)}" y1="{_fmt(py - arm)}" '
                     f'x2="{_fmt(px + arm)}" y2="{_fmt(py + arm)}" {_EIG_STYLE}/>')
        parts.append(f'<line x1="{_fmt(px - arm)}" y1="{_fmt(py + arm)}" '
                     f'x2="{_fmt(px + arm)}" y2="{_fmt(py - arm)}" {_EIG_STYLE}/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
