"""SVG rendering of wall atlases.

Coordinates are the single place the library writes decimal approximations;
they are produced by integer long division to 20 significant digits, never
by floating point.  Everything semantic in the picture (tick labels, cell
tooltips) stays in exact "p/q" notation.  Cell colors are assigned by the
lexicographic rank of the distinct ideal divisors, so the same atlas always
renders byte-identically.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .rationals import format_point, format_rational
from .walls import WallAtlas

__all__ = ["decimal_approx", "render_atlas_svg"]


def decimal_approx(value: Fraction, significant: int = 20) -> str:
    """Decimal expansion of an exact rational, truncated to the given number
    of significant digits, computed with integer arithmetic only."""
    value = Fraction(value)
    if value == 0:
        return "0"
    sign = "-" if value < 0 else ""
    numerator, denominator = abs(value.numerator), value.denominator
    integer_part, remainder = divmod(numerator, denominator)
    digits = str(integer_part)
    significant_seen = len(digits) if integer_part > 0 else 0
    if remainder == 0:
        return sign + digits
    fraction_digits = []
    while remainder and significant_seen < significant:
        remainder *= 10
        digit, remainder = divmod(remainder, denominator)
        fraction_digits.append(str(digit))
        if significant_seen or digit:
            significant_seen += 1
    tail = "".join(fraction_digits).rstrip("0")
    return sign + digits + ("." + tail if tail else "")


_WIDTH = 720
_MARGIN = 60


def _palette(count: int) -> list[str]:
    return [
        f"hsl({(360 * rank) // max(count, 1)}, 62%, 82%)"
        for rank in range(count)
    ]


def render_atlas_svg(
    atlas: WallAtlas, lct_ticks: Sequence[Fraction] = ()
) -> str:
    """Filled constancy cells, stroked facets, exact tick labels."""
    bx, by = atlas.box
    height = _WIDTH  # logical square viewport; axes scale independently

    def x_pix(x: Fraction) -> str:
        return decimal_approx(_MARGIN + Fraction(x, bx) * _WIDTH)

    def y_pix(y: Fraction) -> str:
        return decimal_approx(_MARGIN + (1 - Fraction(y, by)) * height)

    divisors = sorted(set(atlas.cell_divisors))
    colors = _palette(len(divisors))
    color_of = {divisor: colors[rank] for rank, divisor in enumerate(divisors)}

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{_WIDTH + 2 * _MARGIN}" height="{height + 2 * _MARGIN}" '
        f'viewBox="0 0 {_WIDTH + 2 * _MARGIN} {height + 2 * _MARGIN}">',
        f'<rect x="{_MARGIN}" y="{_MARGIN}" width="{_WIDTH}" '
        f'height="{height}" fill="white" stroke="none"/>',
    ]

    faces = atlas.arrangement.faces
    for cell, divisor in zip(atlas.cells, atlas.cell_divisors):
        fill = color_of[divisor]
        label = ",".join(str(c) for c in divisor)
        for face_index in cell:
            face = faces[face_index]
            points = " ".join(
                f"{x_pix(atlas.arrangement.vertices[v][0])},"
                f"{y_pix(atlas.arrangement.vertices[v][1])}"
                for v in face.loop
            )
            parts.append(
                f'<polygon points="{points}" fill="{fill}" stroke="none">'
                f"<title>D = {label}</title></polygon>"
            )

    for facet in atlas.facets:
        (x0, y0), (x1, y1) = facet.endpoints
        label = "; ".join(
            f"component {j + 1} level {level}" for j, level in facet.sources
        )
        parts.append(
            f'<line x1="{x_pix(x0)}" y1="{y_pix(y0)}" '
            f'x2="{x_pix(x1)}" y2="{y_pix(y1)}" '
            f'stroke="#222222" stroke-width="1.4">'
            f"<title>{label}; m = {facet.mult}</title></line>"
        )

    parts.append(
        f'<rect x="{_MARGIN}" y="{_MARGIN}" width="{_WIDTH}" '
        f'height="{height}" fill="none" stroke="black" stroke-width="1"/>'
    )

    for axis, tick in enumerate(lct_ticks):
        if axis == 0 and 0 <= tick <= bx:
            x = x_pix(tick)
            bottom = decimal_approx(Fraction(_MARGIN + height))
            parts.append(
                f'<line x1="{x}" y1="{bottom}" x2="{x}" '
                f'y2="{decimal_approx(Fraction(_MARGIN + height + 10))}" '
                f'stroke="crimson" stroke-width="2"/>'
            )
            parts.append(
                f'<text x="{x}" '
                f'y="{decimal_approx(Fraction(_MARGIN + height + 28))}" '
                f'text-anchor="middle" font-size="13" fill="crimson">'
                f"{format_rational(tick)}</text>"
            )
        elif axis == 1 and 0 <= tick <= by:
            y = y_pix(tick)
            parts.append(
                f'<line x1="{decimal_approx(Fraction(_MARGIN - 10))}" '
                f'y1="{y}" x2="{decimal_approx(Fraction(_MARGIN))}" y2="{y}" '
                f'stroke="crimson" stroke-width="2"/>'
            )
            parts.append(
                f'<text x="{decimal_approx(Fraction(_MARGIN - 14))}" y="{y}" '
                f'text-anchor="end" font-size="13" fill="crimson">'
                f"{format_rational(tick)}</text>"
            )

    origin_label = format_point((Fraction(0), Fraction(0)))
    corner_label = format_point((bx, by))
    parts.append(
        f'<text x="{x_pix(Fraction(0))}" '
        f'y="{decimal_approx(Fraction(_MARGIN + height + 44))}" '
        f'font-size="12" fill="#555555">({origin_label})</text>'
    )
    parts.append(
        f'<text x="{x_pix(bx)}" y="{decimal_approx(Fraction(_MARGIN - 12))}" '
        f'text-anchor="end" font-size="12" fill="#555555">'
        f"({corner_label})</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
