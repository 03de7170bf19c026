"""Arc-and-tie diagrams as plain text or SVG.

Points sit on a horizontal line.  Arcs of the base partition are drawn
above it, ties between base blocks as dashed arcs labelled with the chain
level that introduces them, and optional auxiliary comb arcs (I_2, I_3, ...)
below the line.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .bijections import TiedDiagram
from .partition import SetPartition, comb_partition, standard_arcs

STEP = 40
MARGIN = 30


def tie_endpoints(base: SetPartition, i: int, j: int) -> tuple[int, int]:
    """Points joined by the tie between 1-based blocks i < j."""
    left, right = base.blocks[i - 1], base.blocks[j - 1]
    before = [x for x in left if x < right[0]]
    return (before[-1] if before else left[-1]), right[0]


def render_text(diagram: TiedDiagram) -> str:
    base = diagram.base
    n = base.n
    width = 4

    def row(cells):
        return "".join(c.rjust(width) for c in cells).rstrip()

    lines = [row(str(x) for x in range(1, n + 1))]
    for k, block in enumerate(base.blocks, start=1):
        cells = [""] * n
        for x in range(block[0], block[-1] + 1):
            cells[x - 1] = "o" if x in block else "---"
        lines.append(row(cells) + f"    B{k}")
    for i, j, level in diagram.ties:
        a, b = tie_endpoints(base, i, j)
        cells = [""] * n
        for x in range(a, b + 1):
            cells[x - 1] = "+" if x in (a, b) else "..."
        lines.append(row(cells) + f"    tie B{i}-B{j} level {level}")
    return "\n".join(lines)


def _x(point: int) -> float:
    return MARGIN + (point - 1) * STEP


def _arc(a: int, b: int, above: bool, **attrs) -> str:
    r = (_x(b) - _x(a)) / 2
    sweep = 1 if above else 0
    extra = "".join(f' {k.rstrip("_").replace("_", "-")}="{v}"' for k, v in attrs.items())
    return (
        f'<path d="M {_x(a):g} {{y}} A {r:g} {r:g} 0 0 {sweep} {_x(b):g} {{y}}" '
        f'fill="none"{extra}/>'
    )


def render_svg(diagram: TiedDiagram, comb: int = 0) -> str:
    """SVG document; ``comb`` = m draws I_2..I_m below the line (needs m | n)."""
    base = diagram.base
    n = base.n
    span = max((b - a for a, b in ((arc.left, arc.right) for arc in standard_arcs(base))), default=1)
    for i, j, _ in diagram.ties:
        a, b = tie_endpoints(base, i, j)
        span = max(span, b - a)
    height_up = span * STEP / 2 + MARGIN
    height_down = (STEP * comb / 2 + MARGIN) if comb > 1 else MARGIN
    y = height_up
    width = 2 * MARGIN + max(n - 1, 0) * STEP
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" '
        f'height="{height_up + height_down:g}" viewBox="0 0 {width:g} {height_up + height_down:g}">',
        f'<line x1="{MARGIN / 2:g}" y1="{y:g}" x2="{width - MARGIN / 2:g}" y2="{y:g}" stroke="#999"/>',
    ]
    for arc in standard_arcs(base):
        out.append(_arc(arc.left, arc.right, True, stroke="black", stroke_width=2).format(y=y))
    for i, j, level in diagram.ties:
        a, b = tie_endpoints(base, i, j)
        out.append(
            _arc(a, b, True, stroke="#c03", stroke_dasharray="4 3", class_="tie").format(y=y)
        )
        out.append(
            f'<text x="{(_x(a) + _x(b)) / 2:g}" y="{y - (_x(b) - _x(a)) / 2 - 4:g}" '
            f'font-size="11" text-anchor="middle" fill="#c03">{level}</text>'
        )
    if comb > 1:
        for r in range(2, comb + 1):
            for block in comb_partition(n, comb, r).blocks:
                for a, b in zip(block, block[1:]):
                    out.append(
                        _arc(a, b, False, stroke="#36c", class_=f"comb{r}").format(
                            y=y + (r - 2) * 4
                        )
                    )
    for x in range(1, n + 1):
        out.append(f'<circle cx="{_x(x):g}" cy="{y:g}" r="3"/>')
        out.append(
            f'<text x="{_x(x):g}" y="{y + 16 + (comb * 4 if comb > 1 else 0):g}" font-size="10" '
            f'text-anchor="middle">{escape(str(x))}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
