"""Static SVG pictures of graphs, witness-line families, and plans.

Rendering is the one place floating point is allowed: geometry is exact
until the final pixel mapping, and nothing downstream consumes the output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .dirplan import DirectionPlan, Line, direction_witness_lines, verify_plan
from .ecc import compute_ecc, witness_heights
from .geom import Direction, PlaneGraph, Scalar

PALETTE = ("#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400", "#16a085")


@dataclass(frozen=True)
class RenderSpec:
    width: int = 640
    height: int = 480
    margin: float = 0.12  # fraction of the data extent padded on each side
    show_vertices: bool = True
    show_edges: bool = True
    show_triple_points: bool = True
    palette: tuple[str, ...] = PALETTE

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("render dimensions must be positive")


def level_line(a: int, b: int, h: Scalar) -> Line:
    """Canonical line triple for a*x + b*y = h with integer ray (a, b)."""
    c = Fraction(h)
    an, bn, cn = a * c.denominator, b * c.denominator, c.numerator
    g = gcd(gcd(abs(an), abs(bn)), abs(cn))
    an, bn, cn = an // g, bn // g, cn // g
    if an < 0 or (an == 0 and bn < 0):
        an, bn, cn = -an, -bn, -cn
    return (an, bn, cn)


def _clip_line(line: Line, box) -> tuple[tuple[float, float], tuple[float, float]] | None:
    """Segment of a*x + b*y = c inside the box, or None if it misses."""
    a, b, c = line
    x0, y0, x1, y1 = box[0], box[1], box[2], box[3]
    pts = []
    if b != 0:
        for x in (x0, x1):
            y = (c - a * x) / b
            if y0 - 1e-9 <= y <= y1 + 1e-9:
                pts.append((x, y))
    if a != 0:
        for y in (y0, y1):
            x = (c - b * y) / a
            if x0 - 1e-9 <= x <= x1 + 1e-9:
                pts.append((x, y))
    uniq = []
    for p in pts:
        if all(abs(p[0] - q[0]) > 1e-9 or abs(p[1] - q[1]) > 1e-9 for q in uniq):
            uniq.append(p)
    if len(uniq) < 2:
        return None
    uniq.sort()
    return uniq[0], uniq[-1]


def render_svg(
    g: PlaneGraph,
    spec: RenderSpec = RenderSpec(),
    directions: tuple[Direction, ...] = (),
    plan: DirectionPlan | None = None,
) -> str:
    """SVG drawing of the graph, optionally overlaying the witness lines of
    chosen directions and/or a full plan arrangement with its triple
    points marked."""
    palette = spec.palette or PALETTE
    families: list[tuple[str, list[Line]]] = []
    for s in directions:
        ray = s.canonical()
        a, b = int(ray.dx), int(ray.dy)
        lines = [
            level_line(a, b, h) for h in witness_heights(compute_ecc(g, ray))
        ]
        families.append((palette[len(families) % len(palette)], lines))
    triple_points = []
    if plan is not None:
        seen = set()
        for triple in plan.triples:
            for s in triple:
                ray = s.canonical()
                if ray in seen:
                    continue
                seen.add(ray)
                lines = sorted(direction_witness_lines(g, ray))
                families.append((palette[len(families) % len(palette)], lines))
        if spec.show_triple_points:
            triple_points = list(verify_plan(g, plan).triple_points)

    xs = [float(p.x) for p in g.vertices]
    ys = [float(p.y) for p in g.vertices]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    pad_x = (x1 - x0 or 1.0) * spec.margin
    pad_y = (y1 - y0 or 1.0) * spec.margin
    box = (x0 - pad_x, y0 - pad_y, x1 + pad_x, y1 + pad_y)
    sx = spec.width / (box[2] - box[0])
    sy = spec.height / (box[3] - box[1])

    def pix(x: float, y: float) -> tuple[float, float]:
        return ((x - box[0]) * sx, (box[3] - y) * sy)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
        f'<rect width="{spec.width}" height="{spec.height}" fill="white"/>',
    ]
    for color, lines in families:
        for line in lines:
            seg = _clip_line(line, box)
            if seg is None:
                continue
            (ax, ay), (bx, by) = pix(*seg[0]), pix(*seg[1])
            out.append(
                f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}" '
                f'stroke="{color}" stroke-width="1" opacity="0.7"/>'
            )
    if spec.show_edges:
        for i, j in g.edges:
            ax, ay = pix(float(g.vertices[i].x), float(g.vertices[i].y))
            bx, by = pix(float(g.vertices[j].x), float(g.vertices[j].y))
            out.append(
                f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}" '
                f'stroke="black" stroke-width="2"/>'
            )
    if spec.show_vertices:
        for p in g.vertices:
            cx, cy = pix(float(p.x), float(p.y))
            out.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="4" fill="black"/>')
    for p in triple_points:
        cx, cy = pix(float(p.x), float(p.y))
        out.append(
            f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="7" fill="none" '
            f'stroke="#e67e22" stroke-width="2"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
