"""SVG box diagrams for two-species, two-reaction networks."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .geometry import box_geometry
from .network import Network

GRID = 40
MARGIN = 40


def box_diagram_svg(net: Network) -> str:
    """Render reactants, the box they span, its diagonal and both reaction arrows.

    Stoichiometric units map to a 40 px grid with the origin at the lower left.

    Raises:
        ValueError: unless the network has two species and two reactions.
    """
    if net.s != 2 or net.r != 2:
        raise ValueError("box diagrams need two species and two reactions")
    first, second = net.reactions
    pts = [c.coeffs for rx in net.reactions for c in (rx.reactant, rx.product)]
    max_x = max(p[0] for p in pts) + 1
    max_y = max(p[1] for p in pts) + 1
    width = max_x * GRID + 2 * MARGIN
    height = max_y * GRID + 2 * MARGIN

    def sx(x: int) -> int:
        return MARGIN + x * GRID

    def sy(y: int) -> int:
        # Flip so larger counts sit higher on the page.
        return height - MARGIN - y * GRID

    geo = box_geometry(first, second, 0, 1)
    y1, y2 = first.reactant.coeffs, second.reactant.coeffs
    x_lo, x_hi = sorted((y1[0], y2[0]))
    y_lo, y_hi = sorted((y1[1], y2[1]))
    a, b = net.species
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        "<defs>",
        '<marker id="head" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="8" markerHeight="8" orient="auto">',
        '<path d="M0,0 L10,5 L0,10 z" fill="#222"/>',
        "</marker>",
        "</defs>",
        f"<title>{escape(str(net))}</title>",
        '<g class="grid" stroke="#ddd" stroke-width="1">',
    ]
    for x in range(max_x + 1):
        out.append(f'<line x1="{sx(x)}" y1="{sy(0)}" x2="{sx(x)}" y2="{sy(max_y)}"/>')
    for y in range(max_y + 1):
        out.append(f'<line x1="{sx(0)}" y1="{sy(y)}" x2="{sx(max_x)}" y2="{sy(y)}"/>')
    out.append("</g>")
    out.append(
        f'<text x="{sx(max_x)}" y="{sy(0) + 24}" font-size="14" text-anchor="end">{escape(a)}</text>'
        f'<text x="{sx(0) - 24}" y="{sy(max_y)}" font-size="14">{escape(b)}</text>'
    )
    out.append(
        f'<rect class="box" x="{sx(x_lo)}" y="{sy(y_hi)}" width="{(x_hi - x_lo) * GRID}" '
        f'height="{(y_hi - y_lo) * GRID}" fill="#f3f0e0" stroke="#999" stroke-dasharray="4 3"/>'
    )
    out.append(
        f'<line class="reactant-diagonal" x1="{sx(y1[0])}" y1="{sy(y1[1])}" x2="{sx(y2[0])}" y2="{sy(y2[1])}" '
        'stroke="#b04020" stroke-width="2"/>'
    )
    for rx in net.reactions:
        (p0, q0), (p1, q1) = rx.reactant.coeffs, rx.product.coeffs
        out.append(
            f'<line class="reaction-arrow" x1="{sx(p0)}" y1="{sy(q0)}" x2="{sx(p1)}" y2="{sy(q1)}" '
            'stroke="#222" stroke-width="2" marker-end="url(#head)"/>'
        )
    for rx in net.reactions:
        p0, q0 = rx.reactant.coeffs
        out.append(f'<circle class="reactant" cx="{sx(p0)}" cy="{sy(q0)}" r="4" fill="#b04020"/>')
    caption = f"form {geo.form.value}"
    if geo.alpha is not None:
        caption += f", diagonal slope {geo.alpha}"
    out.append(f'<text x="{MARGIN}" y="{MARGIN - 14}" font-size="13">{escape(caption)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
