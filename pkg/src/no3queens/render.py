"""Board rendering: ascii text and standalone SVG.

Both renderers draw row n at the top so the output matches the usual
orientation with (1, 1) in the lower left corner.
"""

from __future__ import annotations

from .geometry import Placement

_SVG_CELL = 40
_SVG_MARGIN = 24
_LIGHT = "#f0d9b5"
_DARK = "#b58863"


def render_ascii(placement: Placement) -> str:
    n = placement.n
    occupied = placement.queens
    rows = []
    for y in range(n, 0, -1):
        rows.append("".join("Q" if (x, y) in occupied else "." for x in range(1, n + 1)))
    return "\n".join(rows)


def render_svg(placement: Placement) -> str:
    n = placement.n
    occupied = placement.queens
    size = n * _SVG_CELL + 2 * _SVG_MARGIN
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            # Row y = n lands at the top of the picture.
            px = _SVG_MARGIN + (x - 1) * _SVG_CELL
            py = _SVG_MARGIN + (n - y) * _SVG_CELL
            fill = _LIGHT if (x + y) % 2 == 0 else _DARK
            parts.append(
                f'<rect x="{px}" y="{py}" width="{_SVG_CELL}" height="{_SVG_CELL}" '
                f'fill="{fill}"/>')
    for x, y in sorted(occupied):
        cx = _SVG_MARGIN + (x - 1) * _SVG_CELL + _SVG_CELL // 2
        cy = _SVG_MARGIN + (n - y) * _SVG_CELL + _SVG_CELL // 2
        parts.append(
            f'<text x="{cx}" y="{cy}" font-size="{int(_SVG_CELL * 0.72)}" '
            f'text-anchor="middle" dominant-baseline="central">&#9819;</text>')
    # Coordinate labels along the left and bottom edges.
    for y in range(1, n + 1):
        ly = _SVG_MARGIN + (n - y) * _SVG_CELL + _SVG_CELL // 2
        parts.append(
            f'<text x="{_SVG_MARGIN // 2}" y="{ly}" font-size="12" '
            f'text-anchor="middle" dominant-baseline="central">{y}</text>')
    for x in range(1, n + 1):
        lx = _SVG_MARGIN + (x - 1) * _SVG_CELL + _SVG_CELL // 2
        parts.append(
            f'<text x="{lx}" y="{size - _SVG_MARGIN // 2}" font-size="12" '
            f'text-anchor="middle" dominant-baseline="central">{x}</text>')
    parts.append("</svg>")
    return "\n".join(parts)


def render_board(placement: Placement, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(placement)
    if fmt == "svg":
        return render_svg(placement)
    raise ValueError(f"unknown render format {fmt!r}")
